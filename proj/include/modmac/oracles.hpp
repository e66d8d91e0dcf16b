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
#ifndef MODMAC_ORACLES_HPP
#define MODMAC_ORACLES_HPP

// Brute-force reference computations. Nothing here calls the closed forms it
// is used to check: generating series are expanded as truncated exponentials
// sum_j A^j / j!, and operator exponentials are applied term by term.

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "modmac/partition.hpp"
#include "modmac/symfunc.hpp"

namespace modmac::oracle {

/// Truncated power series in z with ring coefficients; index = power of z.
using Series = std::vector<PExpr>;

inline Series series_multiply(const Series& a, const Series& b, int degree, int m) {
  Series r(static_cast<std::size_t>(degree) + 1, PExpr(m));
  for (int i = 0; i <= degree && i < static_cast<int>(a.size()); ++i) {
    if (a[static_cast<std::size_t>(i)].zero()) continue;
    for (int j = 0; i + j <= degree && j < static_cast<int>(b.size()); ++j)
      r[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
  }
  return r;
}

/// exp(sum_{k >= 1} z^k coeff(k) p_k) truncated at z^degree, as sum_j A^j / j!.
inline Series exp_linear_series(const std::function<CycRat(int)>& coeff, int degree, int m) {
  Series a(static_cast<std::size_t>(degree) + 1, PExpr(m));
  for (int k = 1; k <= degree; ++k)
    if (k % m != 0) a[static_cast<std::size_t>(k)] = PExpr::power_sum(m, Partition{k}, coeff(k));
  Series result(static_cast<std::size_t>(degree) + 1, PExpr(m));
  result[0] = PExpr::one(m);
  Series power = result;  // A^0
  for (int j = 1; j <= degree; ++j) {
    power = series_multiply(power, a, degree, m);
    const CycRat inv_fact(Rational(1, factorial(j)));
    for (int d = 0; d <= degree; ++d)
      result[static_cast<std::size_t>(d)] += inv_fact * power[static_cast<std::size_t>(d)];
  }
  return result;
}

/// q_0..q_degree from exp(sum_{m !| k} z^k p_k / (k eps_k)).
inline Series q_series(const ModularRing& ring, int degree) {
  return exp_linear_series(
      [&](int k) { return CycRat(Rational(1, k)) / ring.eps(k); }, degree, ring.m());
}

/// R_0..R_degree from exp(sum_{m !| k} z^k p_k (1 - xi^k) c^k / k).
inline Series r_series(const ModularRing& ring, int degree) {
  const auto& mode = ring.mode();
  return exp_linear_series(
      [&](int k) { return CycRat((Cyc(1) - mode.xi(k)) * mode.c0().pow(k) * Cyc(Rational(1, k))); },
      degree, ring.m());
}

/// Graded pieces of exp(sum_{m !| n} w^n a_n d/dp_n) f, indexed by the power of w.
inline std::map<int, PExpr> exp_derivation(const std::function<CycRat(int)>& a, const PExpr& f) {
  const int m = f.m();
  std::map<int, PExpr> result{{0, f}};
  std::map<int, PExpr> power{{0, f}};  // A^j f / j!
  for (int j = 1; !power.empty(); ++j) {
    std::map<int, PExpr> next;
    for (const auto& [w, g] : power) {
      int top = 0;
      for (const auto& [k, v] : g.terms()) top = std::max(top, k.largest());
      for (int n = 1; n <= top; ++n) {
        if (n % m == 0) continue;
        PExpr dg = d_dp(n, g);
        if (dg.zero()) continue;
        dg = (a(n) * CycRat(Rational(1, j))) * dg;
        auto [it, inserted] = next.try_emplace(w + n, dg);
        if (!inserted) it->second += dg;
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.zero(); });
    for (const auto& [w, g] : next) {
      auto [it, inserted] = result.try_emplace(w, g);
      if (!inserted) it->second += g;
    }
    power = std::move(next);
  }
  return result;
}

/**
 * X_0 f straight from the vertex operator: the z^0 part of
 * exp(sum z^n (1-xi^n) c^n p_n / n) exp(sum z^{-n} (1-xi^n) eps_n d/dp_n) f,
 * with both exponentials expanded by brute force.
 */
inline PExpr x0_apply_exponential(const PExpr& f, const ModularRing& ring) {
  if (f.zero()) return f;
  const auto& mode = ring.mode();
  const auto ann = exp_derivation(
      [&](int n) { return CycRat(Cyc(1) - mode.xi(n)) * ring.eps(n); }, f);
  int top = 0;
  for (const auto& [k, g] : ann) top = std::max(top, k);
  const Series r = r_series(ring, top);
  PExpr out(ring.m());
  for (const auto& [k, g] : ann) out += r[static_cast<std::size_t>(k)] * g;
  return out;
}

/// |P^(m)(n)| and |P_m(n)| by filtering every partition of n.
inline std::pair<std::size_t, std::size_t> count_by_filter(int n, int m) {
  std::size_t regular = 0, reduced = 0;
  for (const auto& p : all_partitions(n)) {
    bool reg = true, red = true;
    for (int part : p.parts())
      if (part % m == 0) reg = false;
    for (int i = 1; i <= p.largest(); ++i)
      if (p.mult(i) >= m) red = false;
    regular += reg;
    reduced += red;
  }
  return {regular, reduced};
}

}  // namespace modmac::oracle

#endif  // MODMAC_ORACLES_HPP
