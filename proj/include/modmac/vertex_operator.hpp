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
#ifndef MODMAC_VERTEX_OPERATOR_HPP
#define MODMAC_VERTEX_OPERATOR_HPP

#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "modmac/errors.hpp"
#include "modmac/linalg.hpp"
#include "modmac/newton.hpp"
#include "modmac/partition.hpp"
#include "modmac/symfunc.hpp"

namespace modmac {

/**
 * X_0 q_lambda = sum_{i_1..i_s >= 0} R_{i_1+...+i_s} a_{i_1} q_{lambda_1-i_1} ... a_{i_s} q_{lambda_s-i_s},
 * with a_0 = 1 and a_k = 1 - xi for k >= 1.
 */
inline PExpr x0_apply_series(const Partition& lambda, const ModularRing& ring) {
  const CycRat one_minus_xi(Cyc(1) - ring.mode().xi());
  return raising_sum(
      lambda, 0, [&](int i) { return i == 0 ? CycRat(1) : one_minus_xi; },
      [&](int n) -> const PExpr& { return ring.r_to_p(n); },
      [&](int n) -> const PExpr& { return ring.q_to_p(n); }, ring.m());
}

/// Coefficient of the differential monomial prod_i d/dp_{rho_i} in S_k, |rho| = k:
/// prod_i (q^{rho_i} - 1) c^{-rho_i} / m(rho)!.
inline CycRat annihilation_coefficient(const Partition& rho, const ModularRing& ring) {
  const CycRat q = ring.mode().q();
  CycRat r(Rational(1, mult_factorial(rho)));
  for (int part : rho.parts()) r *= (q.pow(part) - CycRat(1)) * CycRat(ring.mode().c0().pow(-part));
  return r;
}

/// prod_i m_i(lambda)! / (m_i(lambda) - m_i(rho))!: the scalar in (prod_i d/dp_{rho_i}) p_lambda.
inline std::int64_t derivative_multiplicity(const Partition& lambda, const Partition& rho) {
  const auto ml = lambda.multiplicities();
  const auto mr = rho.multiplicities();
  std::int64_t r = 1;
  for (std::size_t i = 1; i < mr.size(); ++i)
    for (int k = 0; k < mr[i]; ++k) r *= ml[i] - k;
  return r;
}

/**
 * X_0 f as the constant term of the normally ordered vertex operator:
 * sum_k R_k S_k(f), where S_k = sum_{rho in P^(m)(k)} annihilation_coefficient(rho) prod d/dp_{rho_i}.
 * Degree preserving; f must be homogeneous.
 */
inline PExpr x0_apply_diff(const PExpr& f, const ModularRing& ring) {
  if (f.m() != ring.m()) throw std::invalid_argument("x0_apply_diff: modulus mismatch");
  if (f.zero()) return f;
  if (!f.degree()) throw std::invalid_argument("x0_apply_diff: input is not homogeneous");
  std::map<int, PExpr> by_k;  // S_k(f)
  std::map<Partition, CycRat> coeff_cache;
  for (const auto& [lambda, v] : f.terms()) {
    for (const auto& rho : sub_multisets(lambda)) {
      auto it = coeff_cache.find(rho);
      if (it == coeff_cache.end()) it = coeff_cache.emplace(rho, annihilation_coefficient(rho, ring)).first;
      const CycRat c = it->second * CycRat(static_cast<long>(derivative_multiplicity(lambda, rho))) * v;
      auto [slot, inserted] = by_k.try_emplace(rho.weight(), ring.m());
      slot->second.add_term(partition_subtract(lambda, rho), c);
    }
  }
  PExpr out(ring.m());
  for (const auto& [k, s] : by_k) out += ring.r_to_p(k) * s;
  return out;
}

/// f_lambda(q) = sum_i (q^{lambda_i} - 1) xi^{i-1}.
inline CycRat f_main(const Partition& lambda, const ParamMode& mode) {
  const CycRat q = mode.q();
  CycRat acc;
  for (std::size_t i = 0; i < lambda.parts().size(); ++i)
    acc += (q.pow(lambda.parts()[i]) - CycRat(1)) * CycRat(mode.xi(static_cast<int>(i)));
  return acc;
}

/// c_{lambda lambda} = 1 + (1 - xi) f_lambda(q).
inline CycRat eigenvalue_c(const Partition& lambda, const ParamMode& mode) {
  return CycRat(1) + CycRat(Cyc(1) - mode.xi()) * f_main(lambda, mode);
}

/// Predicted equality of eigenvalues: m_i(lambda) = m_i(mu) mod m for every i.
inline bool eigen_collision(const Partition& lambda, const Partition& mu, int m) {
  const int top = std::max(lambda.largest(), mu.largest());
  for (int i = 1; i <= top; ++i)
    if ((lambda.mult(i) - mu.mult(i)) % m != 0) return false;
  return true;
}

/**
 * X_0 q_lambda in the plain q-basis through the generalized Newton identity:
 * sum over subsequences lambda_J of (1 - xi)^{|J|} sum_mu d_{lambda_J mu} q_{mu ∪ (lambda \ lambda_J)},
 * with d_n = q^n - 1.
 */
inline QExpr x0_apply_newton(const Partition& lambda, const ParamMode& mode) {
  QExpr out(mode.m(), QExpr::Flavor::plain);
  const DSeq d = q_power_dseq(mode);
  const CycRat one_minus_xi(Cyc(1) - mode.xi());
  const auto& parts = lambda.parts();
  const std::size_t s = parts.size();
  std::map<Partition, std::map<Partition, CycRat>> d_cache;
  for (std::size_t mask = 0; mask < (std::size_t{1} << s); ++mask) {
    std::vector<int> chosen, rest;
    for (std::size_t j = 0; j < s; ++j) (mask >> j & 1 ? chosen : rest).push_back(parts[j]);
    const Partition sub(chosen), remainder(rest);
    if (sub.empty()) {
      out.add_term(lambda, CycRat(1));
      continue;
    }
    auto [it, inserted] = d_cache.try_emplace(sub);
    if (inserted)
      for (const auto& mu : all_partitions(sub.weight())) {
        CycRat c = d_lambda_mu(sub, mu, d);
        if (!is_zero(c)) it->second.emplace(mu, std::move(c));
      }
    const CycRat scale = one_minus_xi.pow(sub.length());
    for (const auto& [mu, c] : it->second) out.add_term(partition_union(mu, remainder), scale * c);
  }
  return out;
}

/**
 * @brief Matrix of X_0 on the basis {q_lambda : lambda in P_m(n)}.
 *
 * `order` is the dominance linear extension; entries[row][col] is the
 * coefficient of q_{order[row]} in X_0 q_{order[col]}, so the matrix is
 * upper triangular.
 */
struct X0Matrix {
  int m = 0;
  int n = 0;
  ParamMode mode = ParamMode::symbolic(2);
  std::vector<Partition> order;
  Matrix<CycRat> entries;

  [[nodiscard]] std::size_t index_of(const Partition& p) const {
    for (std::size_t i = 0; i < order.size(); ++i)
      if (order[i] == p) return i;
    throw std::out_of_range("partition " + p.to_string() + " not in X0 matrix order");
  }
};

/// In eval mode: every pair of distinct eigenvalues on P_m(n) must stay distinct at (q0, c0).
inline void check_eval_separation(const std::vector<Partition>& basis, const ParamMode& mode) {
  if (mode.is_symbolic()) return;
  std::vector<CycRat> ev;
  for (const auto& p : basis) ev.push_back(eigenvalue_c(p, mode));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (eigen_collision(basis[i], basis[j], mode.m())) continue;
      if (ev[i] == ev[j])
        throw EigenvalueCollisionAtEvaluation("eigenvalues of " + basis[i].to_string() + " and " +
                                              basis[j].to_string() + " coincide at q0 = " +
                                              mode.q0().to_string());
    }
}

inline X0Matrix x0_matrix(int n, const ModularRing& ring) {
  if (n < 1) throw std::invalid_argument("x0_matrix: n must be positive");
  X0Matrix x;
  x.m = ring.m();
  x.n = n;
  x.mode = ring.mode();
  x.order = dominance_linear_extension(reduced_partitions(n, ring.m()));
  check_eval_separation(x.order, ring.mode());
  const std::size_t dim = x.order.size();
  x.entries.assign(dim, std::vector<CycRat>(dim));
  for (std::size_t col = 0; col < dim; ++col) {
    const QExpr image = ring.p_to_q_reduced(x0_apply_series(x.order[col], ring));
    for (const auto& [nu, c] : image.terms()) x.entries[x.index_of(nu)][col] = c;
  }
  for (std::size_t col = 0; col < dim; ++col) {
    for (std::size_t row = 0; row < dim; ++row) {
      if (is_zero(x.entries[row][col])) continue;
      if (!dominates(x.order[row], x.order[col]))
        throw TheoremViolation("X0 is not raising: q" + x.order[row].to_string() + " appears in X0 q" +
                               x.order[col].to_string() + " with coefficient " +
                               x.entries[row][col].to_string() + " (" + ring.mode().key() + ")");
    }
    const CycRat expected = eigenvalue_c(x.order[col], ring.mode());
    if (!(x.entries[col][col] == expected))
      throw TheoremViolation("X0 diagonal at " + x.order[col].to_string() + " is " +
                             x.entries[col][col].to_string() + ", expected " + expected.to_string() +
                             " (" + ring.mode().key() + ")");
  }
  return x;
}

}  // namespace modmac

#endif  // MODMAC_VERTEX_OPERATOR_HPP
