#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "eulerbern/identities/closed_forms.hpp"
#include "eulerbern/rational.hpp"

namespace eulerbern {

using closed_form::Variant;

inline std::string to_string(Variant v) {
  return v == Variant::corrected ? "corrected" : "as-printed";
}

inline Variant parse_variant(const std::string& text) {
  if (text == "corrected") return Variant::corrected;
  if (text == "as-printed") return Variant::as_printed;
  throw std::invalid_argument("unknown variant '" + text + "'");
}

/// A named parameter: a scalar (k, n, ...) or a list (n_1..n_s, m_0..m_n).
struct Param {
  std::string name;
  std::vector<std::int64_t> values;
  bool is_list = false;

  static Param scalar(std::string name, std::int64_t value) { return {std::move(name), {value}, false}; }
  static Param list(std::string name, std::vector<std::int64_t> values) {
    return {std::move(name), std::move(values), true};
  }

  friend bool operator==(const Param&, const Param&) = default;
};

/// One instance of an identity: both sides at one parameter tuple.
/// lhs/rhs are empty when the expression is undefined there (an as-printed
/// form reaching a negative Euler index). equal holds iff both are defined
/// and coincide.
struct IdentityReport {
  std::string suite;
  std::string check;
  std::vector<Param> params;
  std::size_t degree = 0;
  std::optional<Rational> lhs;
  std::optional<Rational> rhs;
  bool equal = false;
  Variant variant = Variant::corrected;

  friend bool operator==(const IdentityReport&, const IdentityReport&) = default;

  /// "k=1 n=[2,3]"
  std::string params_string() const {
    std::string out;
    for (const auto& p : params) {
      if (!out.empty()) out += ' ';
      out += p.name + '=';
      if (p.is_list) {
        out += '[';
        for (std::size_t i = 0; i < p.values.size(); ++i) {
          if (i) out += ',';
          out += std::to_string(p.values[i]);
        }
        out += ']';
      } else {
        out += std::to_string(p.values.front());
      }
    }
    return out;
  }
};

inline IdentityReport make_report(std::string suite, std::string check, std::vector<Param> params,
                                  std::size_t degree, Variant variant, std::optional<Rational> lhs,
                                  std::optional<Rational> rhs) {
  const bool equal = lhs && rhs && *lhs == *rhs;
  return {std::move(suite), std::move(check), std::move(params), degree,
          std::move(lhs),   std::move(rhs),   equal,             variant};
}

using json = nlohmann::ordered_json;

inline json to_json(const IdentityReport& r) {
  json params = json::object();
  for (const auto& p : r.params) {
    if (p.is_list) {
      params[p.name] = p.values;
    } else {
      params[p.name] = p.values.front();
    }
  }
  auto side = [](const std::optional<Rational>& v) { return v ? json(v->to_string()) : json(nullptr); };
  return json{{"suite", r.suite},       {"check", r.check},       {"params", params},
              {"degree", r.degree},     {"lhs", side(r.lhs)},     {"rhs", side(r.rhs)},
              {"equal", r.equal},       {"variant", to_string(r.variant)}};
}

inline IdentityReport report_from_json(const json& j) {
  IdentityReport r;
  r.suite = j.at("suite").get<std::string>();
  r.check = j.at("check").get<std::string>();
  for (const auto& [name, value] : j.at("params").items()) {
    if (value.is_array()) {
      r.params.push_back(Param::list(name, value.get<std::vector<std::int64_t>>()));
    } else {
      r.params.push_back(Param::scalar(name, value.get<std::int64_t>()));
    }
  }
  r.degree = j.at("degree").get<std::size_t>();
  auto side = [](const json& v) -> std::optional<Rational> {
    if (v.is_null()) return std::nullopt;
    return Rational::parse(v.get<std::string>());
  };
  r.lhs = side(j.at("lhs"));
  r.rhs = side(j.at("rhs"));
  r.equal = j.at("equal").get<bool>();
  r.variant = parse_variant(j.at("variant").get<std::string>());
  return r;
}

}  // namespace eulerbern
