#pragma once

// JSON serialization helpers shared by the command-line tool.  Values are
// emitted as exact "p/q" strings by default; a non-negative digit count
// switches to fixed-point decimal rendering.

#include <string>

#include <json.hpp>

#include "quadlat/bochner.hpp"
#include "quadlat/identities.hpp"
#include "quadlat/report.hpp"

namespace quadlat {

struct ValueFormat {
  int decimal_digits = -1;  // negative: exact p/q

  std::string operator()(const Rational& r) const {
    return decimal_digits < 0 ? to_string(r) : to_decimal(r, decimal_digits);
  }
};

inline nlohmann::ordered_json to_json(const CheckReport& rep, const ValueFormat& fmt) {
  nlohmann::ordered_json j;
  j["kind"] = rep.kind;
  j["size"] = rep.size;
  j["valid_rows"] = rep.valid_rows;
  j["pass"] = rep.pass;
  j["residual_max"] = fmt(rep.residual_max);
  if (rep.witness)
    j["witness"] = {(*rep.witness)[0], (*rep.witness)[1]};
  else
    j["witness"] = nullptr;
  return j;
}

inline nlohmann::ordered_json to_json(const IdentityReport& rep, const ValueFormat& fmt) {
  nlohmann::ordered_json j;
  j["rule"] = rep.rule;
  j["trials"] = rep.trials;
  j["points"] = rep.points;
  j["pass"] = rep.pass;
  j["residual_max"] = fmt(rep.residual_max);
  return j;
}

/// One row per degree: {"n": k, "beta": "...", "gamma": "..."|null}.
inline nlohmann::ordered_json ttrr_rows_json(const RecurrenceCoeffs& rec,
                                             const ValueFormat& fmt) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t n = 0; n < rec.beta.size(); ++n) {
    nlohmann::ordered_json row;
    row["n"] = n;
    row["beta"] = fmt(rec.beta[n]);
    if (n >= 1 && n - 1 < rec.gamma.size())
      row["gamma"] = fmt(rec.gamma[n - 1]);
    else
      row["gamma"] = nullptr;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace quadlat
