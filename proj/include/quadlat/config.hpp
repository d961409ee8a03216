#pragma once

// JSON input for user-supplied problems.  Values are exact: rationals are
// written as "p/q" strings (or plain JSON integers); floats are rejected.
//
// Shape:
//   {
//     "lattice": {"c2": "1/2", "c3": 0},
//     "bochner": {"a0": -1, "a1": "3/2", "a2": 0, "b0": -4, "b1": 0},
//     "family":  [["1"], ["0", "1"], ["1/4", "0", "1"]]
//   }
// "bochner" and "family" are each optional and may appear together; the
// degree-one and degree-zero coefficients of the second equation polynomial
// may also sit in a nested object under "psi" (alias "tau").

#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "quadlat/bochner.hpp"
#include "quadlat/family.hpp"

namespace quadlat {

struct CustomInput {
  LatticeParams lattice;
  std::optional<BochnerData> data;
  std::optional<PolyFamily> family;
};

namespace detail {

inline Rational json_rational(const nlohmann::json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  throw ParseError(where + ": expected an integer or a \"p/q\" string");
}

inline const nlohmann::json& json_field(const nlohmann::json& obj,
                                        const std::string& key,
                                        const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing \"" + key + "\"");
  return *it;
}

inline void reject_unknown_keys(const nlohmann::json& obj,
                                const std::vector<std::string>& allowed,
                                const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const std::string& k : allowed)
      if (it.key() == k) known = true;
    if (!known) throw ParseError(where + ": unknown key \"" + it.key() + "\"");
  }
}

inline BochnerData parse_bochner(const nlohmann::json& j, const LatticeParams& lp) {
  if (!j.is_object()) throw ParseError("\"bochner\": expected an object");
  reject_unknown_keys(j, {"a0", "a1", "a2", "b0", "b1", "psi", "tau"}, "\"bochner\"");
  BochnerData bd;
  bd.lattice = lp;
  bd.a0 = json_rational(json_field(j, "a0", "\"bochner\""), "\"bochner\".a0");
  bd.a1 = json_rational(json_field(j, "a1", "\"bochner\""), "\"bochner\".a1");
  bd.a2 = json_rational(json_field(j, "a2", "\"bochner\""), "\"bochner\".a2");

  const nlohmann::json* nested = nullptr;
  for (const char* key : {"psi", "tau"})
    if (j.contains(key)) {
      if (nested) throw ParseError("\"bochner\": give \"psi\" or \"tau\", not both");
      nested = &j.at(key);
    }
  if (nested) {
    if (j.contains("b0") || j.contains("b1"))
      throw ParseError("\"bochner\": flat b0/b1 conflict with the nested object");
    if (!nested->is_object()) throw ParseError("\"bochner\".psi: expected an object");
    reject_unknown_keys(*nested, {"b0", "b1"}, "\"bochner\".psi");
    bd.b0 = json_rational(json_field(*nested, "b0", "\"bochner\".psi"), "\"bochner\".psi.b0");
    bd.b1 = json_rational(json_field(*nested, "b1", "\"bochner\".psi"), "\"bochner\".psi.b1");
  } else {
    bd.b0 = json_rational(json_field(j, "b0", "\"bochner\""), "\"bochner\".b0");
    bd.b1 = json_rational(json_field(j, "b1", "\"bochner\""), "\"bochner\".b1");
  }
  return bd;
}

inline PolyFamily parse_family(const nlohmann::json& j, const LatticeParams& lp) {
  if (!j.is_array() || j.empty())
    throw ParseError("\"family\": expected a non-empty array of coefficient rows");
  std::vector<ThetaPoly> members;
  for (std::size_t n = 0; n < j.size(); ++n) {
    const nlohmann::json& row = j[n];
    const std::string where = "\"family\"[" + std::to_string(n) + "]";
    if (!row.is_array()) throw ParseError(where + ": expected an array");
    std::vector<Rational> coeffs;
    for (std::size_t k = 0; k < row.size(); ++k)
      coeffs.push_back(json_rational(row[k], where + "[" + std::to_string(k) + "]"));
    members.emplace_back(lp, std::move(coeffs));
  }
  return make_family(lp, std::move(members));
}

}  // namespace detail

inline CustomInput parse_custom(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("config: expected a JSON object");
  detail::reject_unknown_keys(j, {"lattice", "bochner", "family"}, "config");

  const nlohmann::json& lat = detail::json_field(j, "lattice", "config");
  if (!lat.is_object()) throw ParseError("\"lattice\": expected an object");
  detail::reject_unknown_keys(lat, {"c2", "c3"}, "\"lattice\"");
  CustomInput input;
  input.lattice.c2 = detail::json_rational(detail::json_field(lat, "c2", "\"lattice\""),
                                           "\"lattice\".c2");
  input.lattice.c3 = detail::json_rational(detail::json_field(lat, "c3", "\"lattice\""),
                                           "\"lattice\".c3");

  if (j.contains("bochner")) input.data = detail::parse_bochner(j.at("bochner"), input.lattice);
  if (j.contains("family")) input.family = detail::parse_family(j.at("family"), input.lattice);
  return input;
}

inline CustomInput load_custom(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MissingInput("cannot open config file: " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  return parse_custom(j);
}

}  // namespace quadlat
