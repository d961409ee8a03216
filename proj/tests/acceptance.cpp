// Acceptance gate: one line per criterion.  Every comparison is exact; a
// criterion passes only with residual exactly zero (plus the stated time
// budgets on the two heavyweight runs).

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"

using namespace quadlat;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass,
            const std::string& detail = "") {
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << number << ". " << name;
  if (!detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << std::endl;
  if (!pass) ++failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string time_detail(double dt, double budget) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << dt << "s, budget " << budget << "s";
  return os.str();
}

RacahParams benchmark_params() {
  return RacahParams{Rational(2), Rational(3), Rational(1), Rational(1, 2)};
}

// 1. Three independent recurrence routes coincide through degree 8.
void criterion_routes() {
  const auto t0 = Clock::now();
  const RacahParams rp = benchmark_params();
  const BochnerData bd = racah_bochner(rp);
  const RecurrenceCoeffs closed = ttrr_coeffs(bd, 8);
  const RecurrenceCoeffs solved = jacobi_from_family(solve_family(bd, 9));
  const RecurrenceCoeffs series = jacobi_from_family(racah_family(rp, 9));
  const bool sizes = closed.beta.size() == 9 && closed.gamma.size() == 8;
  const bool equal = sizes && closed == solved && closed == series;
  const double dt = seconds_since(t0);
  report(1,
         "closed-form, solver, and series-oracle recurrences coincide "
         "through degree 8",
         equal && dt < 5.0, time_detail(dt, 5.0));
}

// 2. Every characterization check is exactly zero at size 12 on the
//    benchmark family and on random admissible data; perturbing a2 by one
//    breaks the equation check and the quadratic characterization.
void criterion_checks() {
  const auto t0 = Clock::now();
  bool pass = true;
  std::string detail;

  const auto run_all = [&](const CheckContext& ctx, const char* label) {
    for (const CheckKind kind : all_check_kinds()) {
      const CheckReport rep = check_identity(ctx, kind);
      if (!rep.pass || rep.residual_max != 0 || rep.valid_rows <= 0) {
        pass = false;
        detail = std::string(label) + ": " + rep.kind + " residual " +
                 to_string(rep.residual_max);
      }
    }
  };

  run_all(make_check_context(racah_bochner(benchmark_params()), 12, 8), "racah");

  support::Sampler sampler;
  const BochnerData random_data = sampler.admissible_data(8);
  run_all(make_check_context(random_data, 12, 8), "random");

  BochnerData off = random_data;
  off.a2 += 1;
  const CheckContext control =
      make_check_context(off, solve_family(random_data, 8), 12);
  if (check_identity(control, CheckKind::bochner).pass) {
    pass = false;
    detail = "negative control slipped through the equation check";
  }
  if (check_identity(control, CheckKind::newchar).pass) {
    pass = false;
    detail = "negative control slipped through the quadratic characterization";
  }

  const double dt = seconds_since(t0);
  if (dt >= 10.0) pass = false;
  report(2,
         "all 13 characterization checks are exactly zero at size 12 "
         "(benchmark + random data), and the a2+1 control fails where it must",
         pass, detail.empty() ? time_detail(dt, 10.0) : detail);
}

// 3. Operator product rules on random pairs across random lattices.
void criterion_rules() {
  IdentityRunConfig cfg;
  cfg.seed = support::env_seed();
  cfg.trials = 100;
  cfg.max_degree = 6;
  cfg.lattices = 10;
  const auto reports = run_identity_suite(cfg);
  bool pass = reports.size() == 5;
  for (const auto& rep : reports)
    if (!rep.pass || rep.residual_max != 0 || rep.trials != 100 || rep.points < 300)
      pass = false;
  report(3,
         "product rules a-e hold exactly: 100 random pairs, degree <= 6, "
         "10 random lattices",
         pass);
}

// 4. Recurrence coefficients agree along independent formula routes.
void criterion_cross() {
  support::Sampler sampler;
  bool pass = true;
  for (int rep = 0; rep < 50 && pass; ++rep) {
    const BochnerData bd = sampler.admissible_data(7);
    const CheckReport r = ttrr_cross_check(bd, 6);
    if (!r.pass || r.residual_max != 0) pass = false;
  }
  report(4,
         "beta/gamma cross-formula equality on 50 random admissible data "
         "sets through degree 6",
         pass);
}

// 5. The auxiliary-polynomial lemma holds end to end on the benchmark.
void criterion_un() {
  const BochnerData bd = racah_bochner(benchmark_params());
  bool pass = true;
  for (int n = 1; n <= 6; ++n) {
    const CheckReport r = verify_un(bd, n);
    if (!r.pass || r.residual_max != 0) pass = false;
  }
  report(5, "auxiliary polynomial collapses to t_n P_{n-1} for n = 1..6", pass);
}

// 6. Growing the truncation never changes entries inside the valid region.
void criterion_stability() {
  const BochnerData bd = racah_bochner(benchmark_params());
  const CheckContext small_ctx = make_check_context(bd, 12, 8);
  const CheckContext large_ctx = make_check_context(bd, 16, 8);
  bool pass = true;
  for (const CheckKind kind : all_check_kinds()) {
    const auto small_sides = check_sides(small_ctx, kind);
    const auto large_sides = check_sides(large_ctx, kind);
    if (small_sides.size() != large_sides.size()) {
      pass = false;
      continue;
    }
    for (std::size_t s = 0; s < small_sides.size(); ++s) {
      for (const bool left : {true, false}) {
        const TruncatedMatrix& ms = left ? small_sides[s].lhs : small_sides[s].rhs;
        const TruncatedMatrix& ml = left ? large_sides[s].lhs : large_sides[s].rhs;
        if (ms.valid_rows() <= 0 || ml.valid_rows() < ms.valid_rows()) pass = false;
        const int rows = std::min(ms.valid_rows(), ml.valid_rows());
        for (int i = 0; i < rows; ++i)
          for (int j = 0; j < ms.size(); ++j)
            if (ms.at(i, j) != ml.at(i, j)) pass = false;
      }
    }
  }
  report(6, "size-12 and size-16 truncations agree entry-for-entry on valid rows",
         pass);
}

// 7. The frozen eigenvalue: symmetric data has lambda_2 = -10.
void criterion_lambda() {
  const RacahParams rp{Rational(1), Rational(1), Rational(1), Rational(1)};
  const Rational l2 = lambda_n(racah_bochner(rp), 2);
  report(7, "lambda_2 = -10 for alpha = beta = 1", l2 == Rational(-10),
         "got " + to_string(l2));
}

}  // namespace

int main() {
  criterion_routes();
  criterion_checks();
  criterion_rules();
  criterion_cross();
  criterion_un();
  criterion_stability();
  criterion_lambda();
  if (failures == 0) {
    std::cout << "acceptance: all 7 criteria passed" << std::endl;
    return 0;
  }
  std::cout << "acceptance: " << failures << " criteria FAILED" << std::endl;
  return 1;
}
