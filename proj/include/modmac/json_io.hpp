/* Copyright 2026 The modmac Authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#ifndef MODMAC_JSON_IO_HPP
#define MODMAC_JSON_IO_HPP

// Lossless JSON forms of every public value.
//
//   partition      [3,1]                      (the empty partition is [])
//   scalar         {"num": [[r,...],...], "den": [[r,...],...]}
//                  outer index = power of q, inner = coefficients over 1, xi, ..., xi^{phi(m)-1},
//                  each r a string "a/b"
//   ring element   {"m":2, "basis":"p"|"q"|"q_reduced", "terms":[{"partition":[3,1],"coeff":scalar}]}
//   X0 matrix      {"m":2, "n":3, "order":[[3],[2,1]], "entries":[[scalar,...],...]}
//   Q_lambda       {"m":2, "lambda":[2,1], "eigenvalue":scalar, "q_coeffs":[terms], "p_form":ring element}

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "modmac/macdonald.hpp"
#include "modmac/symfunc.hpp"
#include "modmac/vertex_operator.hpp"

namespace modmac::io {

using nlohmann::json;

inline json to_json(const Partition& p) { return json(p.parts()); }

inline Partition partition_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("partition JSON must be an array");
  return Partition(j.get<std::vector<int>>());
}

inline json to_json(const Cyc& c, int m) {
  json arr = json::array();
  for (const auto& r : c.coeffs(m)) arr.push_back(rational_to_string(r));
  return arr;
}

inline Cyc cyc_from_json(const json& j, int m) {
  std::vector<Rational> v;
  for (const auto& r : j) v.push_back(parse_rational(r.get<std::string>()));
  if (static_cast<int>(v.size()) != CyclotomicField::get(m).degree())
    throw std::invalid_argument("cyclotomic coefficient vector has wrong length for m = " + std::to_string(m));
  return Cyc::from_coeffs(m, std::move(v));
}

inline json to_json(const CycPolynomial& p, int m) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_json(c, m));
  return arr;
}

inline json to_json(const CycRat& x, int m) {
  return json{{"num", to_json(x.num(), m)}, {"den", to_json(x.den(), m)}};
}

inline CycRat scalar_from_json(const json& j, int m) {
  auto poly = [m](const json& a) {
    std::vector<Cyc> v;
    for (const auto& c : a) v.push_back(cyc_from_json(c, m));
    return CycPolynomial(std::move(v));
  };
  return CycRat(poly(j.at("num")), poly(j.at("den")));
}

inline json terms_to_json(const std::map<Partition, CycRat>& terms, int m) {
  json arr = json::array();
  // reverse-lexicographic, matching enumeration order
  for (auto it = terms.rbegin(); it != terms.rend(); ++it)
    arr.push_back(json{{"partition", to_json(it->first)}, {"coeff", to_json(it->second, m)}});
  return arr;
}

inline json to_json(const PExpr& f) {
  return json{{"m", f.m()}, {"basis", "p"}, {"terms", terms_to_json(f.terms(), f.m())}};
}

inline json to_json(const QExpr& f) {
  return json{{"m", f.m()},
              {"basis", f.flavor() == QExpr::Flavor::reduced ? "q_reduced" : "q"},
              {"terms", terms_to_json(f.terms(), f.m())}};
}

inline PExpr pexpr_from_json(const json& j) {
  if (j.at("basis") != "p") throw std::invalid_argument("expected a p-basis ring element");
  const int m = j.at("m").get<int>();
  PExpr f(m);
  for (const auto& t : j.at("terms")) f.add_term(partition_from_json(t.at("partition")), scalar_from_json(t.at("coeff"), m));
  return f;
}

inline QExpr qexpr_from_json(const json& j) {
  const auto basis = j.at("basis").get<std::string>();
  if (basis != "q" && basis != "q_reduced") throw std::invalid_argument("expected a q-basis ring element");
  const int m = j.at("m").get<int>();
  QExpr f(m, basis == "q" ? QExpr::Flavor::plain : QExpr::Flavor::reduced);
  for (const auto& t : j.at("terms")) f.add_term(partition_from_json(t.at("partition")), scalar_from_json(t.at("coeff"), m));
  return f;
}

inline json to_json(const X0Matrix& x) {
  json order = json::array();
  for (const auto& p : x.order) order.push_back(to_json(p));
  json rows = json::array();
  for (const auto& row : x.entries) {
    json r = json::array();
    for (const auto& e : row) r.push_back(to_json(e, x.m));
    rows.push_back(std::move(r));
  }
  return json{{"m", x.m}, {"n", x.n}, {"order", std::move(order)}, {"entries", std::move(rows)}};
}

inline json to_json(const ModularMacdonald& q, int m) {
  return json{{"m", m},
              {"lambda", to_json(q.lambda)},
              {"eigenvalue", to_json(q.eigenvalue, m)},
              {"q_coeffs", terms_to_json(q.q_coeffs.terms(), m)},
              {"p_form", to_json(q.p_form)}};
}

inline json matrix_to_json(const Matrix<CycRat>& a, int m) {
  json rows = json::array();
  for (const auto& row : a) {
    json r = json::array();
    for (const auto& e : row) r.push_back(to_json(e, m));
    rows.push_back(std::move(r));
  }
  return rows;
}

/// CSV with a header row of partitions; cells are canonical human-readable scalars.
inline std::string matrix_to_csv(const std::vector<Partition>& order, const Matrix<CycRat>& a) {
  auto quote = [](const std::string& s) { return "\"" + s + "\""; };
  std::ostringstream out;
  out << quote("row\\col");
  for (const auto& p : order) out << "," << quote(p.to_string());
  out << "\n";
  for (std::size_t i = 0; i < a.size(); ++i) {
    out << quote(order[i].to_string());
    for (const auto& e : a[i]) out << "," << quote(e.to_string());
    out << "\n";
  }
  return out.str();
}

}  // namespace modmac::io

#endif  // MODMAC_JSON_IO_HPP
