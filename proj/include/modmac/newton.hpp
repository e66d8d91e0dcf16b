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
#ifndef MODMAC_NEWTON_HPP
#define MODMAC_NEWTON_HPP

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "modmac/errors.hpp"
#include "modmac/partition.hpp"
#include "modmac/ratfun.hpp"
#include "modmac/symfunc.hpp"

namespace modmac {

/// A coefficient sequence n -> d_n (n >= 1) for the generalized Newton identity.
using DSeq = std::function<CycRat(int)>;

/// d_n = q^n - 1, the instance satisfied by the creation series R_n.
inline DSeq q_power_dseq(const ParamMode& mode) {
  return [q = mode.q()](int n) { return q.pow(n) - CycRat(1); };
}

/// N_l(lambda, nu) through k_1 (k_2 - 1) ... (k_t - (t-1)) / m(nu)!, k_i = #{j : lambda_j > nu_i}.
inline std::int64_t nl_closed_positions(const Partition& lambda, const Partition& nu) {
  std::int64_t prod = 1;
  for (int i = 0; i < nu.length(); ++i) {
    int k = 0;
    for (int part : lambda.parts())
      if (part > nu.parts()[static_cast<std::size_t>(i)]) ++k;
    const std::int64_t factor = k - i;
    if (factor <= 0) return 0;
    prod *= factor;
  }
  const std::int64_t mf = mult_factorial(nu);
  if (prod % mf != 0)
    throw TheoremViolation("N_l closed form not divisible: lambda=" + lambda.to_string() +
                           " nu=" + nu.to_string());
  return prod / mf;
}

/**
 * N_l(lambda, nu) through the multiplicity form
 * m(nu)! N_l = prod_{i >= 1, 1 <= k <= m_i(nu)} (1 - k + sum_{j > i} (m_j(lambda) - m_j(nu))).
 */
inline std::int64_t nl_closed(const Partition& lambda, const Partition& nu) {
  const auto ml = lambda.multiplicities();
  const auto mn = nu.multiplicities();
  auto at = [](const std::vector<int>& v, int i) {
    return i < static_cast<int>(v.size()) ? v[static_cast<std::size_t>(i)] : 0;
  };
  const int top = std::max(lambda.largest(), nu.largest());
  std::int64_t prod = 1;
  bool nonpositive = false;
  for (int i = 1; i <= nu.largest(); ++i) {
    int tail = 0;
    for (int j = i + 1; j <= top; ++j) tail += at(ml, j) - at(mn, j);
    for (int k = 1; k <= at(mn, i); ++k) {
      const std::int64_t factor = 1 - k + tail;
      if (factor <= 0) nonpositive = true;
      prod *= factor;
    }
  }
  if (nonpositive || prod <= 0) return 0;
  const std::int64_t mf = mult_factorial(nu);
  if (prod % mf != 0)
    throw TheoremViolation("N_l product not divisible by m(nu)!: lambda=" + lambda.to_string() +
                           " nu=" + nu.to_string());
  return prod / mf;
}

/// Direct count of tuples 1 <= i_j <= lambda_j whose positive values lambda_j - i_j form nu.
inline std::int64_t nl_brute(const Partition& lambda, const Partition& nu) {
  const auto& parts = lambda.parts();
  std::vector<int> idx(parts.size(), 1);
  std::int64_t count = 0;
  while (true) {
    std::vector<int> vals;
    for (std::size_t j = 0; j < parts.size(); ++j) vals.push_back(parts[j] - idx[j]);
    if (Partition::from_unsorted(vals) == nu) ++count;
    std::size_t j = 0;
    while (j < parts.size() && idx[j] == parts[j]) idx[j++] = 1;
    if (j == parts.size()) break;
    ++idx[j];
  }
  return count;
}

/// d_mu = (-1)^{l-1} (l-1)!/m(mu)! sum_k m_k(mu) d_k, so that R_n = sum_{mu |- n} d_mu q_mu.
inline CycRat d_mu(const Partition& mu, const DSeq& d) {
  if (mu.empty()) throw std::invalid_argument("d_mu is undefined for the empty partition");
  const int l = mu.length();
  CycRat sum;
  const auto mult = mu.multiplicities();
  for (std::size_t k = 1; k < mult.size(); ++k)
    if (mult[k]) sum += CycRat(mult[k]) * d(static_cast<int>(k));
  Rational scale(factorial(l - 1), mult_factorial(mu));
  if ((l - 1) % 2) scale = -scale;
  return CycRat(scale) * sum;
}

/// All nu with nu ⊂' mu (multiplicity-wise sub-multisets), including () and mu.
inline std::vector<Partition> sub_multisets(const Partition& mu) {
  const auto mult = mu.multiplicities();
  std::vector<Partition> out;
  std::vector<int> cur(mult.size(), 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == mult.size()) {
      out.push_back(Partition::from_multiplicities(cur));
      return;
    }
    for (int k = 0; k <= mult[i]; ++k) {
      cur[i] = k;
      self(self, i + 1);
    }
    cur[i] = 0;
  };
  rec(rec, 1);
  return out;
}

/// d_{lambda mu} = sum_{nu ⊂' mu, nu != mu} N_l(lambda, nu) d_{mu \ nu}.
inline CycRat d_lambda_mu(const Partition& lambda, const Partition& mu, const DSeq& d) {
  if (lambda.weight() != mu.weight())
    throw std::invalid_argument("d_lambda_mu: weights differ (" + lambda.to_string() + ", " +
                                mu.to_string() + ")");
  if (lambda.empty()) throw std::invalid_argument("d_lambda_mu: lambda must be nonempty");
  CycRat acc;
  for (const auto& nu : sub_multisets(mu)) {
    if (nu == mu) continue;
    const std::int64_t n = nl_closed(lambda, nu);
    if (n == 0) continue;
    acc += CycRat(static_cast<long>(n)) * d_mu(partition_subtract(mu, nu), d);
  }
  return acc;
}

/// Sequence of ring elements indexed by n >= 0.
using SeqAccessor = std::function<const PExpr&(int)>;

/**
 * sum_{i_1..i_s in [lo, lambda_j]} R_{i_1+...+i_s} w(i_1) q_{lambda_1 - i_1} ... w(i_s) q_{lambda_s - i_s},
 * accumulated part by part over the running index sum. With lo = 1 and w = 1
 * this is the left side of the generalized Newton identity.
 */
inline PExpr raising_sum(const Partition& lambda, int lo, const std::function<CycRat(int)>& weight,
                         const SeqAccessor& r_seq, const SeqAccessor& q_seq, int m) {
  std::map<int, PExpr> acc;
  acc.emplace(0, PExpr::one(m));
  for (int part : lambda.parts()) {
    std::map<int, PExpr> next;
    for (const auto& [total, f] : acc) {
      for (int i = lo; i <= part; ++i) {
        const CycRat w = weight(i);
        if (is_zero(w)) continue;
        PExpr term = f * q_seq(part - i);
        if (!(w == CycRat(1))) term = w * term;
        auto [it, inserted] = next.try_emplace(total + i, term);
        if (!inserted) it->second += term;
      }
    }
    acc = std::move(next);
  }
  PExpr out(m);
  for (const auto& [total, f] : acc) out += r_seq(total) * f;
  return out;
}

/// Left side of the generalized Newton identity for the creation series R_n of `ring`.
inline PExpr newton_lhs(const Partition& lambda, const ModularRing& ring) {
  if (lambda.empty()) throw std::invalid_argument("newton_lhs: lambda must be nonempty");
  return raising_sum(
      lambda, 1, [](int) { return CycRat(1); }, [&](int n) -> const PExpr& { return ring.r_to_p(n); },
      [&](int n) -> const PExpr& { return ring.q_to_p(n); }, ring.m());
}

/// Right side sum_{mu |- |lambda|} d_{lambda mu} q_mu, over all mu (not only mu >= lambda).
inline PExpr newton_rhs(const Partition& lambda, const DSeq& d, const ModularRing& ring) {
  PExpr out(ring.m());
  for (const auto& mu : all_partitions(lambda.weight())) {
    const CycRat c = d_lambda_mu(lambda, mu, d);
    if (!is_zero(c)) out += c * ring.qprod_to_p(mu);
  }
  return out;
}

/**
 * R_n rebuilt from an arbitrary d-sequence by R_n = d_n q_n - sum_{0<i<n} R_i q_{n-i}, R_0 = 1.
 * Caches the sequence it has produced so far.
 */
class RecursiveR {
 public:
  RecursiveR(DSeq d, const ModularRing& ring) : d_(std::move(d)), ring_(ring) {
    seq_.push_back(PExpr::one(ring.m()));
  }

  const PExpr& operator()(int n) {
    if (n < 0) return ring_.zero();
    while (static_cast<int>(seq_.size()) <= n) {
      const int k = static_cast<int>(seq_.size());
      PExpr r = d_(k) * ring_.q_to_p(k);
      for (int i = 1; i < k; ++i) r -= seq_[static_cast<std::size_t>(i)] * ring_.q_to_p(k - i);
      seq_.push_back(std::move(r));
    }
    return seq_[static_cast<std::size_t>(n)];
  }

 private:
  DSeq d_;
  const ModularRing& ring_;
  std::deque<PExpr> seq_;  // deque: references stay valid while growing
};

}  // namespace modmac

#endif  // MODMAC_NEWTON_HPP
