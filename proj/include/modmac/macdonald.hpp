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
#ifndef MODMAC_MACDONALD_HPP
#define MODMAC_MACDONALD_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "modmac/errors.hpp"
#include "modmac/partition.hpp"
#include "modmac/symfunc.hpp"
#include "modmac/vertex_operator.hpp"

namespace modmac {

/**
 * @brief A modular Macdonald function Q_lambda.
 *
 * Q_lambda = sum_{mu >= lambda, mu in P_m} C_{lambda mu} q_mu with C_{lambda lambda} = 1,
 * and X_0 Q_lambda = eigenvalue * Q_lambda.
 */
struct ModularMacdonald {
  Partition lambda;
  QExpr q_coeffs{2, QExpr::Flavor::reduced};
  PExpr p_form{2};
  CycRat eigenvalue;
};

/**
 * Solves for Q_lambda by the triangular recursion
 * C_{lambda nu} = sum_{nu > mu >= lambda} C_{lambda mu} c'_{mu nu} / (c_{lambda lambda} - c_{nu nu}),
 * visiting nu from lambda upward through the dominance linear extension.
 * `x0` may carry a precomputed matrix for degree |lambda|.
 */
inline ModularMacdonald solve_q(const Partition& lambda, const ModularRing& ring,
                                const X0Matrix* x0 = nullptr) {
  const int m = ring.m();
  if (!lambda.is_reduced(m))
    throw std::invalid_argument("solve_q: " + lambda.to_string() + " is not m-reduced for m = " +
                                std::to_string(m));
  ModularMacdonald out{lambda, QExpr(m, QExpr::Flavor::reduced), PExpr(m), eigenvalue_c(lambda, ring.mode())};
  if (lambda.empty()) {
    out.q_coeffs.add_term(lambda, CycRat(1));
    out.p_form = PExpr::one(m);
    return out;
  }
  std::optional<X0Matrix> own;
  if (!x0 || x0->n != lambda.weight() || x0->m != m) {
    own = x0_matrix(lambda.weight(), ring);
    x0 = &*own;
  }
  const std::size_t self = x0->index_of(lambda);
  std::vector<CycRat> c(x0->order.size());
  c[self] = CycRat(1);
  for (std::size_t pos = self; pos-- > 0;) {
    const Partition& nu = x0->order[pos];
    if (!dominates(nu, lambda)) continue;
    CycRat sum;
    for (std::size_t mu = pos + 1; mu <= self; ++mu)
      if (!is_zero(c[mu]) && !is_zero(x0->entries[pos][mu])) sum += c[mu] * x0->entries[pos][mu];
    if (is_zero(sum)) continue;
    const CycRat gap = out.eigenvalue - eigenvalue_c(nu, ring.mode());
    if (is_zero(gap))
      throw EigenvalueCollisionAtEvaluation("eigenvalues of " + lambda.to_string() + " and " +
                                            nu.to_string() + " coincide");
    c[pos] = sum / gap;
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (is_zero(c[i])) continue;
    out.q_coeffs.add_term(x0->order[i], c[i]);
    out.p_form += c[i] * ring.qprod_to_p(x0->order[i]);
  }
  const PExpr lhs = x0_apply_diff(out.p_form, ring);
  if (!(lhs == out.eigenvalue * out.p_form))
    throw TheoremViolation("Q" + lambda.to_string() + " is not an X0 eigenvector (" + ring.mode().key() + ")");
  return out;
}

/// One Q_lambda per lambda in P_m(n), in dominance-linear-extension order.
inline std::vector<ModularMacdonald> all_q(int n, const ModularRing& ring) {
  if (n < 1) throw std::invalid_argument("all_q: n must be positive");
  const X0Matrix x0 = x0_matrix(n, ring);
  std::vector<ModularMacdonald> out;
  for (const auto& lambda : x0.order) out.push_back(solve_q(lambda, ring, &x0));
  return out;
}

/// Gram matrix <Q_lambda, Q_mu> over P_m(n); off-diagonal entries must vanish.
inline Matrix<CycRat> gram(const std::vector<ModularMacdonald>& qs, const ModularRing& ring) {
  Matrix<CycRat> g(qs.size(), std::vector<CycRat>(qs.size()));
  for (std::size_t i = 0; i < qs.size(); ++i)
    for (std::size_t j = i; j < qs.size(); ++j) {
      g[i][j] = ring.scalar_product(qs[i].p_form, qs[j].p_form);
      g[j][i] = g[i][j];
      if (i != j && !is_zero(g[i][j]))
        throw TheoremViolation("<Q" + qs[i].lambda.to_string() + ", Q" + qs[j].lambda.to_string() +
                               "> = " + g[i][j].to_string() + " is not zero (" + ring.mode().key() + ")");
    }
  return g;
}

inline Matrix<CycRat> gram(int n, const ModularRing& ring) { return gram(all_q(n, ring), ring); }

/**
 * Substitutes q = 0 into the power-sum coefficients of a symbolically computed
 * Q_lambda. The eigen-solve itself is never run at q = 0, where the
 * eigenvalues collapse to powers of xi and collide.
 */
inline PExpr specialize_q0(const ModularMacdonald& q, const ModularRing& ring) {
  if (!ring.mode().is_symbolic())
    throw std::invalid_argument("specialize_q0 needs coefficients computed in symbolic mode");
  PExpr out(ring.m());
  for (const auto& [rho, c] : q.p_form.terms()) {
    try {
      out.add_term(rho, CycRat(evaluate(c, Cyc(0))));
    } catch (const PoleAtSpecialization& e) {
      throw PoleAtSpecialization("Q" + q.lambda.to_string() + ", coefficient of p" + rho.to_string() +
                                 ": " + e.what());
    }
  }
  return out;
}

namespace detail {

/// Classical q_n of Schur Q-functions: coefficients of exp(2 sum_{r odd} p_r z^r / r).
inline PExpr classical_q(int n) {
  PExpr r(2);
  if (n < 0) return r;
  for (const auto& rho : regular_partitions(n, 2)) {
    Rational c(1, z_of(rho));
    c *= Rational(mpz_class(1) << rho.length());
    r.add_term(rho, CycRat(c));
  }
  return r;
}

/// Q_(a,b) = q_a q_b + 2 sum_{i=1}^b (-1)^i q_{a+i} q_{b-i}; Q_(a,0) = q_a.
inline PExpr classical_two_row(int a, int b) {
  PExpr r = classical_q(a) * classical_q(b);
  for (int i = 1; i <= b; ++i)
    r += CycRat(i % 2 ? -2 : 2) * (classical_q(a + i) * classical_q(b - i));
  return r;
}

inline PExpr pfaffian(const std::vector<int>& idx, const std::vector<int>& parts) {
  if (idx.empty()) return PExpr::one(2);
  PExpr out(2);
  for (std::size_t j = 1; j < idx.size(); ++j) {
    std::vector<int> rest;
    for (std::size_t k = 1; k < idx.size(); ++k)
      if (k != j) rest.push_back(idx[k]);
    const PExpr entry = classical_two_row(parts[static_cast<std::size_t>(idx[0])],
                                          parts[static_cast<std::size_t>(idx[j])]);
    const PExpr term = entry * pfaffian(rest, parts);
    if (j % 2) out += term;
    else out -= term;
  }
  return out;
}

}  // namespace detail

/**
 * Schur Q-function Q_lambda in the power-sum basis (m = 2), from the classical
 * q-series, the two-row formula, and the Pfaffian of two-row functions.
 * Independent of the vertex-operator construction.
 */
inline PExpr schur_q_oracle(const Partition& lambda) {
  if (!lambda.is_strict()) throw std::invalid_argument("schur_q_oracle: " + lambda.to_string() + " is not strict");
  std::vector<int> parts = lambda.parts();
  if (parts.size() % 2) parts.push_back(0);
  std::vector<int> idx(parts.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  return detail::pfaffian(idx, parts);
}

}  // namespace modmac

#endif  // MODMAC_MACDONALD_HPP
