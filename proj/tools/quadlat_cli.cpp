// quadlat: exact computations with classical orthogonal polynomial families
// on quadratic lattices.
//
// Subcommands:
//   ttrr         beta/gamma/lambda recurrence table from equation data
//   expand       one family member in the theta and mu-monomial bases
//   verify       matrix characterization checks on exact truncations
//   racah-check  closed forms vs. equation solver vs. series oracle
//   identities   randomized operator product-rule verification
//
// Exit codes: 0 success, 1 a verification failed, 2 usage/input error.

#include <unistd.h>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "quadlat/quadlat.hpp"

using namespace quadlat;
using nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------------------
// Output formatting
// ---------------------------------------------------------------------------

enum class Format { table, json, csv };

Format resolve_format(const std::string& flag, bool csv_allowed) {
  Format f;
  if (flag.empty())
    f = isatty(fileno(stdout)) ? Format::table : Format::json;
  else if (flag == "table")
    f = Format::table;
  else if (flag == "json")
    f = Format::json;
  else if (flag == "csv")
    f = Format::csv;
  else
    throw ParseError("unknown format: " + flag);
  if (f == Format::csv && !csv_allowed)
    throw ParseError("csv output is only available for the beta/gamma tables");
  return f;
}

std::string with_decimal(const Rational& r, int decimal) {
  if (decimal < 0) return to_string(r);
  return to_string(r) + " (~" + to_decimal(r, decimal) + ")";
}

void print_table(const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) std::cout << "  ";
      std::cout << cells[c];
      if (c + 1 < cells.size())
        std::cout << std::string(width[c] - cells[c].size(), ' ');
    }
    std::cout << "\n";
  };
  line(header);
  std::vector<std::string> rule;
  for (std::size_t c = 0; c < header.size(); ++c)
    rule.push_back(std::string(width[c], '-'));
  line(rule);
  for (const auto& row : rows) line(row);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void print_csv(const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  auto line = [](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) std::cout << ",";
      std::cout << csv_escape(cells[c]);
    }
    std::cout << "\n";
  };
  line(header);
  for (const auto& row : rows) line(row);
}

ordered_json lattice_json(const LatticeParams& lp) {
  ordered_json j;
  j["c2"] = to_string(lp.c2);
  j["c3"] = to_string(lp.c3);
  return j;
}

// ---------------------------------------------------------------------------
// Problem sources: --config PATH, or inline --c2/--c3 (+ --a0..--b1)
// ---------------------------------------------------------------------------

struct SourceFlags {
  std::string config_path;
  std::string c2 = "0", c3 = "0";
  std::string a0, a1, a2, b0, b1;
  bool lattice_flag_seen = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON problem description");
    cmd->add_option("--c2", c2, "lattice coefficient c2 (default 0)");
    cmd->add_option("--c3", c3, "lattice coefficient c3 (default 0)");
    cmd->add_option("--a0", a0, "coefficient of mu^2 in phi");
    cmd->add_option("--a1", a1, "coefficient of mu in phi");
    cmd->add_option("--a2", a2, "constant term of phi");
    cmd->add_option("--b0", b0, "coefficient of mu in psi");
    cmd->add_option("--b1", b1, "constant term of psi");
    source_cmd = cmd;
  }

  CustomInput resolve() const {
    const bool any_inline =
        source_cmd->count("--c2") || source_cmd->count("--c3") ||
        source_cmd->count("--a0") || source_cmd->count("--a1") ||
        source_cmd->count("--a2") || source_cmd->count("--b0") ||
        source_cmd->count("--b1");
    if (!config_path.empty()) {
      if (any_inline)
        throw ParseError("give either --config or inline coefficients, not both");
      return load_custom(config_path);
    }
    CustomInput input;
    input.lattice.c2 = parse_rational(c2);
    input.lattice.c3 = parse_rational(c3);
    const int given = static_cast<int>(source_cmd->count("--a0")) +
                      static_cast<int>(source_cmd->count("--a1")) +
                      static_cast<int>(source_cmd->count("--a2")) +
                      static_cast<int>(source_cmd->count("--b0")) +
                      static_cast<int>(source_cmd->count("--b1"));
    if (given == 5) {
      BochnerData bd;
      bd.lattice = input.lattice;
      bd.a0 = parse_rational(a0);
      bd.a1 = parse_rational(a1);
      bd.a2 = parse_rational(a2);
      bd.b0 = parse_rational(b0);
      bd.b1 = parse_rational(b1);
      input.data = bd;
    } else if (given != 0) {
      throw ParseError("equation data needs all five of --a0 --a1 --a2 --b0 --b1");
    }
    return input;
  }

 private:
  CLI::App* source_cmd = nullptr;
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* s = std::getenv("QUADLAT_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0') return v;
  }
  return 12345;
}

// ---------------------------------------------------------------------------
// Recurrence tables (shared by ttrr and racah-check)
// ---------------------------------------------------------------------------

struct RecurrenceTable {
  LatticeParams lattice;
  int nmax = 0;
  RecurrenceCoeffs rec;
  std::vector<Rational> lambda;
};

void emit_recurrence(const RecurrenceTable& table, Format format, int decimal,
                     ordered_json extra_front, ordered_json extra_back) {
  if (format == Format::json) {
    ordered_json j = std::move(extra_front);
    j["lattice"] = lattice_json(table.lattice);
    j["nmax"] = table.nmax;
    ordered_json beta = ordered_json::array(), gamma = ordered_json::array(),
                 lambda = ordered_json::array();
    for (int n = 0; n <= table.nmax; ++n) {
      beta.push_back(to_string(table.rec.beta_at(n)));
      if (n == 0)
        gamma.push_back(nullptr);
      else
        gamma.push_back(to_string(table.rec.gamma_at(n)));
      lambda.push_back(to_string(table.lambda[static_cast<std::size_t>(n)]));
    }
    j["beta"] = std::move(beta);
    j["gamma"] = std::move(gamma);
    j["lambda"] = std::move(lambda);
    if (decimal >= 0) {
      ordered_json bd = ordered_json::array(), gd = ordered_json::array(),
                   ld = ordered_json::array();
      for (int n = 0; n <= table.nmax; ++n) {
        bd.push_back(to_decimal(table.rec.beta_at(n), decimal));
        if (n == 0)
          gd.push_back(nullptr);
        else
          gd.push_back(to_decimal(table.rec.gamma_at(n), decimal));
        ld.push_back(to_decimal(table.lambda[static_cast<std::size_t>(n)], decimal));
      }
      j["beta_decimal"] = std::move(bd);
      j["gamma_decimal"] = std::move(gd);
      j["lambda_decimal"] = std::move(ld);
    }
    for (auto& [key, value] : extra_back.items()) j[key] = value;
    std::cout << j.dump(2) << "\n";
    return;
  }

  std::vector<std::string> header = {"n", "beta", "gamma", "lambda"};
  std::vector<std::vector<std::string>> rows;
  for (int n = 0; n <= table.nmax; ++n) {
    std::vector<std::string> row;
    row.push_back(std::to_string(n));
    if (format == Format::csv && decimal >= 0) {
      row.push_back(to_string(table.rec.beta_at(n)));
      row.push_back(n == 0 ? "" : to_string(table.rec.gamma_at(n)));
      row.push_back(to_string(table.lambda[static_cast<std::size_t>(n)]));
      row.push_back(to_decimal(table.rec.beta_at(n), decimal));
      row.push_back(n == 0 ? "" : to_decimal(table.rec.gamma_at(n), decimal));
      row.push_back(to_decimal(table.lambda[static_cast<std::size_t>(n)], decimal));
    } else if (format == Format::csv) {
      row.push_back(to_string(table.rec.beta_at(n)));
      row.push_back(n == 0 ? "" : to_string(table.rec.gamma_at(n)));
      row.push_back(to_string(table.lambda[static_cast<std::size_t>(n)]));
    } else {
      row.push_back(with_decimal(table.rec.beta_at(n), decimal));
      row.push_back(n == 0 ? "" : with_decimal(table.rec.gamma_at(n), decimal));
      row.push_back(with_decimal(table.lambda[static_cast<std::size_t>(n)], decimal));
    }
    rows.push_back(std::move(row));
  }
  if (format == Format::csv) {
    if (decimal >= 0) {
      header.push_back("beta_decimal");
      header.push_back("gamma_decimal");
      header.push_back("lambda_decimal");
    }
    print_csv(header, rows);
  } else {
    std::cout << "lattice: c2 = " << to_string(table.lattice.c2)
              << ", c3 = " << to_string(table.lattice.c3) << "\n";
    print_table(header, rows);
  }
}

// ---------------------------------------------------------------------------
// ttrr
// ---------------------------------------------------------------------------

int run_ttrr(const SourceFlags& source, int nmax, const std::string& format_flag,
             int decimal) {
  const Format format = resolve_format(format_flag, true);
  if (nmax < 0) throw ParseError("--nmax must be nonnegative");
  const CustomInput input = source.resolve();
  if (!input.data)
    throw MissingInput("ttrr needs equation data (inline flags or \"bochner\" in the config)");
  RecurrenceTable table;
  table.lattice = input.lattice;
  table.nmax = nmax;
  table.rec = ttrr_coeffs(*input.data, nmax);
  for (int n = 0; n <= nmax; ++n) table.lambda.push_back(lambda_n(*input.data, n));
  emit_recurrence(table, format, decimal, ordered_json::object(), ordered_json::object());
  return 0;
}

// ---------------------------------------------------------------------------
// expand
// ---------------------------------------------------------------------------

int run_expand(const SourceFlags& source, int n, const std::string& format_flag,
               int decimal) {
  const Format format = resolve_format(format_flag, false);
  if (n < 0) throw ParseError("--n must be nonnegative");
  const CustomInput input = source.resolve();
  ThetaPoly p = ThetaPoly::zero(input.lattice);
  if (input.data) {
    p = solve_pn(*input.data, n);
  } else if (input.family) {
    if (n > input.family->max_degree())
      throw MissingInput("config family stops at degree " +
                         std::to_string(input.family->max_degree()));
    p = input.family->at(n);
  } else {
    throw MissingInput("expand needs equation data or a family");
  }
  const MuPoly q = theta_to_mu(p);

  if (format == Format::json) {
    ordered_json j;
    j["n"] = n;
    j["lattice"] = lattice_json(input.lattice);
    ordered_json theta = ordered_json::array(), mu = ordered_json::array();
    for (int k = 0; k <= n; ++k) {
      theta.push_back(to_string(p.coeff(k)));
      mu.push_back(to_string(q.coeff(k)));
    }
    j["theta"] = std::move(theta);
    j["mu"] = std::move(mu);
    if (decimal >= 0) {
      ordered_json td = ordered_json::array(), md = ordered_json::array();
      for (int k = 0; k <= n; ++k) {
        td.push_back(to_decimal(p.coeff(k), decimal));
        md.push_back(to_decimal(q.coeff(k), decimal));
      }
      j["theta_decimal"] = std::move(td);
      j["mu_decimal"] = std::move(md);
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << "P_" << n << " on lattice: c2 = " << to_string(input.lattice.c2)
            << ", c3 = " << to_string(input.lattice.c3) << "\n";
  std::vector<std::vector<std::string>> rows;
  for (int k = 0; k <= n; ++k)
    rows.push_back({std::to_string(k), with_decimal(p.coeff(k), decimal),
                    with_decimal(q.coeff(k), decimal)});
  print_table({"k", "theta-basis", "mu-basis"}, rows);
  return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

std::vector<CheckKind> expand_check_tokens(const std::string& tokens) {
  std::vector<CheckKind> out;
  auto push_unique = [&](CheckKind kind) {
    for (CheckKind have : out)
      if (have == kind) return;
    out.push_back(kind);
  };
  std::size_t start = 0;
  while (start <= tokens.size()) {
    const std::size_t comma = tokens.find(',', start);
    const std::string tok = tokens.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    start = comma == std::string::npos ? tokens.size() + 1 : comma + 1;
    if (tok.empty()) continue;
    if (tok == "geronimus") {
      push_unique(CheckKind::geronimus_noo);
      push_unique(CheckKind::geronimus_gern);
    } else if (tok == "tricomi") {
      push_unique(CheckKind::tricomi_main);
      push_unique(CheckKind::tricomi_uw);
      push_unique(CheckKind::tricomi_wu);
    } else if (tok == "aux") {
      push_unique(CheckKind::aux_LU);
      push_unique(CheckKind::aux_UM);
      push_unique(CheckKind::aux_DtildeD);
      push_unique(CheckKind::aux_commutator);
    } else if (auto kind = check_kind_from_name(tok)) {
      push_unique(*kind);
    } else {
      throw ParseError("unknown check selector: " + tok);
    }
  }
  return out;
}

bool check_needs_family(CheckKind kind) {
  return kind != CheckKind::aux_DtildeD && kind != CheckKind::aux_commutator;
}

bool check_needs_data(CheckKind kind) {
  return kind == CheckKind::tricomi_main || kind == CheckKind::tricomi_uw ||
         kind == CheckKind::tricomi_wu || kind == CheckKind::bochner;
}

int run_verify(const SourceFlags& source, const std::string& checks_flag, int size,
               std::optional<int> nmax_flag, const std::string& format_flag,
               int decimal) {
  const Format format = resolve_format(format_flag, false);
  if (size < 1) throw ParseError("--size must be positive");
  if (nmax_flag && *nmax_flag < 0) throw ParseError("--nmax must be nonnegative");
  const CustomInput input = source.resolve();

  CheckContext ctx;
  ctx.lattice = input.lattice;
  ctx.size = size;
  ctx.data = input.data;
  std::optional<int> nmax;

  if (input.family) {
    PolyFamily fam = *input.family;
    if (nmax_flag) {
      if (*nmax_flag > fam.max_degree())
        throw TruncationTooSmall("config family stops at degree " +
                                 std::to_string(fam.max_degree()));
      fam.members.erase(fam.members.begin() + (*nmax_flag + 1), fam.members.end());
    }
    nmax = fam.max_degree();
    ctx.family = std::move(fam);
  } else if (input.data) {
    nmax = nmax_flag ? *nmax_flag : size - 4;
    if (*nmax < 0) throw ParseError("--nmax must be nonnegative");
  }

  if (nmax && size < *nmax + 4)
    throw TruncationTooSmall("size " + std::to_string(size) +
                             " is too small for degree " + std::to_string(*nmax) +
                             ": need size >= nmax + 4");
  if (input.data && !ctx.family) ctx.family = solve_family(*input.data, *nmax);

  std::vector<CheckKind> kinds;
  if (checks_flag.empty()) {
    for (CheckKind kind : all_check_kinds()) {
      if (check_needs_family(kind) && !ctx.family) continue;
      if (check_needs_data(kind) && !ctx.data) continue;
      kinds.push_back(kind);
    }
  } else {
    kinds = expand_check_tokens(checks_flag);
  }
  if (kinds.empty()) throw ParseError("no checks selected");

  std::vector<CheckReport> reports;
  for (CheckKind kind : kinds) reports.push_back(check_identity(ctx, kind));
  const bool all_pass = [&] {
    for (const auto& rep : reports)
      if (!rep.pass) return false;
    return true;
  }();

  if (format == Format::json) {
    ordered_json j;
    j["lattice"] = lattice_json(ctx.lattice);
    j["size"] = size;
    if (nmax)
      j["nmax"] = *nmax;
    else
      j["nmax"] = nullptr;
    ordered_json arr = ordered_json::array();
    for (const auto& rep : reports) arr.push_back(to_json(rep, ValueFormat{}));
    j["checks"] = std::move(arr);
    j["all_pass"] = all_pass;
    std::cout << j.dump(2) << "\n";
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const auto& rep : reports) {
      std::string witness = "-";
      if (rep.witness)
        witness = "(" + std::to_string((*rep.witness)[0]) + "," +
                  std::to_string((*rep.witness)[1]) + ")";
      rows.push_back({rep.kind, rep.pass ? "pass" : "FAIL",
                      std::to_string(rep.valid_rows),
                      with_decimal(rep.residual_max, decimal), witness});
    }
    std::cout << "size " << size << ", lattice: c2 = " << to_string(ctx.lattice.c2)
              << ", c3 = " << to_string(ctx.lattice.c3) << "\n";
    print_table({"check", "result", "valid_rows", "residual_max", "witness"}, rows);
  }
  return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// racah-check
// ---------------------------------------------------------------------------

int run_racah_check(const std::string& alpha, const std::string& beta,
                    const std::string& gamma, const std::string& delta, int nmax,
                    const std::string& format_flag, int decimal) {
  const Format format = resolve_format(format_flag, true);
  if (nmax < 1) throw ParseError("--nmax must be at least 1");
  RacahParams rp{parse_rational(alpha), parse_rational(beta), parse_rational(gamma),
                 parse_rational(delta)};
  const BochnerData bd = racah_bochner(rp);

  const RecurrenceCoeffs closed = ttrr_coeffs(bd, nmax);
  const RecurrenceCoeffs solved = jacobi_from_family(solve_family(bd, nmax + 1));
  const RecurrenceCoeffs series = jacobi_from_family(racah_family(rp, nmax + 1));
  const bool agree = closed == solved && closed == series;

  RecurrenceTable table;
  table.lattice = bd.lattice;
  table.nmax = nmax;
  table.rec = closed;
  for (int n = 0; n <= nmax; ++n) table.lambda.push_back(lambda_n(bd, n));

  if (format == Format::json) {
    ordered_json front;
    front["alpha"] = to_string(rp.alpha);
    front["beta_param"] = to_string(rp.beta);
    front["gamma_param"] = to_string(rp.gamma);
    front["delta"] = to_string(rp.delta);
    ordered_json back;
    back["routes_agree"] = agree;
    emit_recurrence(table, format, decimal, std::move(front), std::move(back));
  } else {
    emit_recurrence(table, format, decimal, ordered_json::object(), ordered_json::object());
    if (format == Format::table)
      std::cout << "routes (closed forms / equation solver / series oracle): "
                << (agree ? "agree" : "DISAGREE") << "\n";
  }
  return agree ? 0 : 1;
}

// ---------------------------------------------------------------------------
// identities
// ---------------------------------------------------------------------------

int run_identities(int trials, int max_degree, int lattices,
                   const std::optional<std::uint64_t>& seed_flag,
                   const std::string& format_flag) {
  const Format format = resolve_format(format_flag, false);
  IdentityRunConfig cfg;
  cfg.seed = resolve_seed(seed_flag);
  cfg.trials = trials;
  cfg.max_degree = max_degree;
  cfg.lattices = lattices;
  const std::vector<IdentityReport> reports = run_identity_suite(cfg);
  const bool all_pass = [&] {
    for (const auto& rep : reports)
      if (!rep.pass) return false;
    return true;
  }();

  if (format == Format::json) {
    ordered_json j;
    j["seed"] = cfg.seed;
    j["trials"] = cfg.trials;
    j["max_degree"] = cfg.max_degree;
    j["lattices"] = cfg.lattices;
    ordered_json arr = ordered_json::array();
    const ValueFormat fmt{};
    for (const auto& rep : reports) arr.push_back(to_json(rep, fmt));
    j["rules"] = std::move(arr);
    j["all_pass"] = all_pass;
    std::cout << j.dump(2) << "\n";
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const auto& rep : reports)
      rows.push_back({rep.rule, rep.pass ? "pass" : "FAIL", std::to_string(rep.trials),
                      std::to_string(rep.points), to_string(rep.residual_max)});
    std::cout << "seed " << cfg.seed << "\n";
    print_table({"rule", "result", "trials", "points", "residual_max"}, rows);
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact classical orthogonal polynomial computations on quadratic lattices"};
  app.require_subcommand(1);

  std::function<int()> action;

  // ttrr
  auto* ttrr = app.add_subcommand("ttrr", "three-term recurrence table");
  SourceFlags ttrr_source;
  ttrr_source.attach(ttrr);
  int ttrr_nmax = 8;
  std::string ttrr_format;
  int ttrr_decimal = -1;
  ttrr->add_option("--nmax", ttrr_nmax, "highest degree (default 8)");
  ttrr->add_option("--format", ttrr_format, "table|json|csv");
  ttrr->add_option("--decimal", ttrr_decimal, "append k-digit decimal approximations");
  ttrr->callback([&] {
    action = [&] { return run_ttrr(ttrr_source, ttrr_nmax, ttrr_format, ttrr_decimal); };
  });

  // expand
  auto* expand = app.add_subcommand("expand", "family member in both bases");
  SourceFlags expand_source;
  expand_source.attach(expand);
  int expand_n = 0;
  std::string expand_format;
  int expand_decimal = -1;
  expand->add_option("--n", expand_n, "degree to expand")->required();
  expand->add_option("--format", expand_format, "table|json");
  expand->add_option("--decimal", expand_decimal, "append k-digit decimal approximations");
  expand->callback([&] {
    action = [&] { return run_expand(expand_source, expand_n, expand_format, expand_decimal); };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "matrix characterization checks");
  SourceFlags verify_source;
  verify_source.attach(verify);
  std::string verify_checks;
  int verify_size = 12;
  std::optional<int> verify_nmax;
  std::string verify_format;
  int verify_decimal = -1;
  verify->add_option("--checks", verify_checks,
                     "comma-separated: lemma1,hahn,geronimus,newchar,tricomi,bochner,aux "
                     "or exact check names (default: every runnable check)");
  verify->add_option("--size", verify_size, "truncation size N (default 12)");
  verify->add_option("--nmax", verify_nmax, "family degree (default N-4)");
  verify->add_option("--format", verify_format, "table|json");
  verify->add_option("--decimal", verify_decimal, "append k-digit decimal approximations");
  verify->callback([&] {
    action = [&] {
      return run_verify(verify_source, verify_checks, verify_size, verify_nmax,
                        verify_format, verify_decimal);
    };
  });

  // racah-check
  auto* racah = app.add_subcommand("racah-check",
                                   "closed forms vs. solver vs. series oracle");
  std::string r_alpha, r_beta, r_gamma, r_delta;
  int racah_nmax = 8;
  std::string racah_format;
  int racah_decimal = -1;
  racah->add_option("--alpha", r_alpha, "Racah alpha")->required();
  racah->add_option("--beta", r_beta, "Racah beta")->required();
  racah->add_option("--gamma", r_gamma, "Racah gamma")->required();
  racah->add_option("--delta", r_delta, "Racah delta")->required();
  racah->add_option("--nmax", racah_nmax, "highest degree (default 8)");
  racah->add_option("--format", racah_format, "table|json|csv");
  racah->add_option("--decimal", racah_decimal, "append k-digit decimal approximations");
  racah->callback([&] {
    action = [&] {
      return run_racah_check(r_alpha, r_beta, r_gamma, r_delta, racah_nmax, racah_format,
                             racah_decimal);
    };
  });

  // identities
  auto* identities = app.add_subcommand("identities", "operator product-rule property run");
  int id_trials = 100;
  int id_max_degree = 6;
  int id_lattices = 10;
  std::optional<std::uint64_t> id_seed;
  std::string id_format;
  identities->add_option("--trials", id_trials, "random pairs to draw (default 100)");
  identities->add_option("--max-degree", id_max_degree, "degree bound (default 6)");
  identities->add_option("--lattices", id_lattices, "distinct lattices (default 10)");
  identities->add_option("--seed", id_seed, "RNG seed (default: QUADLAT_SEED or 12345)");
  identities->add_option("--format", id_format, "table|json");
  identities->callback([&] {
    action = [&] {
      return run_identities(id_trials, id_max_degree, id_lattices, id_seed, id_format);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
