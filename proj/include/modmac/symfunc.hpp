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
#ifndef MODMAC_SYMFUNC_HPP
#define MODMAC_SYMFUNC_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "modmac/errors.hpp"
#include "modmac/linalg.hpp"
#include "modmac/params.hpp"
#include "modmac/partition.hpp"
#include "modmac/ratfun.hpp"

namespace modmac {

/**
 * @brief Element of the modular ring in the power-sum basis.
 *
 * A finitely supported map from m-regular partitions to coefficients; zero
 * coefficients are never stored. The empty partition is the unit p_() = 1.
 */
class PExpr {
 public:
  using map_type = std::map<Partition, CycRat>;

  explicit PExpr(int m) : m_(m) {
    if (m < 2) throw std::invalid_argument("modulus m must be at least 2");
  }

  static PExpr one(int m) { return power_sum(m, Partition{}); }

  /// c * p_lambda
  static PExpr power_sum(int m, const Partition& lambda, const CycRat& c = CycRat(1)) {
    PExpr r(m);
    r.add_term(lambda, c);
    return r;
  }

  [[nodiscard]] int m() const noexcept { return m_; }
  [[nodiscard]] const map_type& terms() const noexcept { return terms_; }
  [[nodiscard]] bool zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }

  [[nodiscard]] CycRat coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? CycRat() : it->second;
  }

  /// Common weight of all terms; nullopt when zero or inhomogeneous.
  [[nodiscard]] std::optional<int> degree() const {
    if (terms_.empty()) return std::nullopt;
    const int d = terms_.begin()->first.weight();
    for (const auto& [k, v] : terms_)
      if (k.weight() != d) return std::nullopt;
    return d;
  }

  [[nodiscard]] PExpr homogeneous_part(int n) const {
    PExpr r(m_);
    for (const auto& [k, v] : terms_)
      if (k.weight() == n) r.terms_.emplace(k, v);
    return r;
  }

  void add_term(const Partition& lambda, const CycRat& c) {
    if (!lambda.is_regular(m_))
      throw std::invalid_argument("p" + lambda.to_string() + " is not in the modular ring for m = " +
                                  std::to_string(m_));
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  PExpr& operator+=(const PExpr& o) {
    check_same(o);
    for (const auto& [k, v] : o.terms_) add_unchecked(k, v);
    return *this;
  }
  PExpr& operator-=(const PExpr& o) {
    check_same(o);
    for (const auto& [k, v] : o.terms_) add_unchecked(k, -v);
    return *this;
  }
  PExpr operator-() const {
    PExpr r = *this;
    for (auto& [k, v] : r.terms_) v = -v;
    return r;
  }
  friend PExpr operator+(PExpr a, const PExpr& b) { return a += b; }
  friend PExpr operator-(PExpr a, const PExpr& b) { return a -= b; }

  friend PExpr operator*(const CycRat& s, const PExpr& f) {
    PExpr r(f.m_);
    if (is_zero(s)) return r;
    for (const auto& [k, v] : f.terms_) r.terms_.emplace_hint(r.terms_.end(), k, s * v);
    return r;
  }
  friend PExpr operator*(const PExpr& f, const CycRat& s) { return s * f; }

  /// p_lambda p_mu = p_{lambda union mu}, extended bilinearly.
  friend PExpr operator*(const PExpr& a, const PExpr& b) {
    a.check_same(b);
    PExpr r(a.m_);
    for (const auto& [ka, va] : a.terms_)
      for (const auto& [kb, vb] : b.terms_) r.add_unchecked(partition_union(ka, kb), va * vb);
    return r;
  }
  PExpr& operator*=(const PExpr& o) { return *this = *this * o; }

  friend bool operator==(const PExpr& a, const PExpr& b) { return a.m_ == b.m_ && a.terms_ == b.terms_; }

  [[nodiscard]] std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!s.empty()) s += " + ";
      s += "[" + it->second.to_string() + "]*p" + it->first.to_string();
    }
    return s;
  }

 private:
  void check_same(const PExpr& o) const {
    if (o.m_ != m_)
      throw std::invalid_argument("mixed moduli " + std::to_string(m_) + " and " + std::to_string(o.m_));
  }
  void add_unchecked(const Partition& k, const CycRat& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  int m_;
  map_type terms_;
};

inline PExpr p_multiply(const PExpr& f, const PExpr& g) { return f * g; }

/// Formal partial derivative d/dp_n, treating the p_k as free generators.
inline PExpr d_dp(int n, const PExpr& f) {
  if (n <= 0 || n % f.m() == 0)
    throw std::invalid_argument("d_dp: p_" + std::to_string(n) + " is not a generator for m = " +
                                std::to_string(f.m()));
  PExpr r(f.m());
  const Partition single{n};
  for (const auto& [k, v] : f.terms()) {
    const int mult = k.mult(n);
    if (mult == 0) continue;
    r.add_term(partition_subtract(k, single), CycRat(mult) * v);
  }
  return r;
}

/**
 * @brief Coordinates of a ring element in a q_lambda basis.
 *
 * `plain` allows any partition as key (the q_lambda are then a spanning set,
 * not a basis); `reduced` restricts keys to m-reduced partitions.
 */
class QExpr {
 public:
  enum class Flavor { plain, reduced };
  using map_type = std::map<Partition, CycRat>;

  QExpr(int m, Flavor flavor) : m_(m), flavor_(flavor) {}

  [[nodiscard]] int m() const noexcept { return m_; }
  [[nodiscard]] Flavor flavor() const noexcept { return flavor_; }
  [[nodiscard]] const map_type& terms() const noexcept { return terms_; }
  [[nodiscard]] bool zero() const noexcept { return terms_.empty(); }

  [[nodiscard]] CycRat coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? CycRat() : it->second;
  }

  void add_term(const Partition& lambda, const CycRat& c) {
    if (flavor_ == Flavor::reduced && !lambda.is_reduced(m_))
      throw std::invalid_argument("q" + lambda.to_string() + " is not m-reduced for m = " +
                                  std::to_string(m_));
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  friend bool operator==(const QExpr& a, const QExpr& b) {
    return a.m_ == b.m_ && a.flavor_ == b.flavor_ && a.terms_ == b.terms_;
  }

 private:
  int m_;
  Flavor flavor_;
  map_type terms_;
};

namespace detail {

using RationalPExpr = std::map<Partition, Rational>;

/// sum_{lambda in P^(m)(n)} p_lambda / z_lambda: q_n with every eps set to 1.
inline RationalPExpr unit_q(int n, int m) {
  RationalPExpr r;
  for (const auto& lam : regular_partitions(n, m)) r.emplace(lam, Rational(1, z_of(lam)));
  return r;
}

inline RationalPExpr multiply(const RationalPExpr& a, const RationalPExpr& b) {
  RationalPExpr r;
  for (const auto& [ka, va] : a)
    for (const auto& [kb, vb] : b) {
      auto& slot = r[partition_union(ka, kb)];
      slot += va * vb;
    }
  return r;
}

/**
 * The coefficient of p_rho in q_mu is a_{rho,mu} / eps_rho with a rational
 * a_{rho,mu} independent of every parameter, so the change of basis between
 * {p_rho : rho in P^(m)(n)} and {q_mu : mu in P_m(n)} reduces to inverting the
 * rational matrix a. Shared by every ParamMode with the same m.
 */
struct ReducedBasisChange {
  std::vector<Partition> rows;  // P^(m)(n), reverse-lex
  std::vector<Partition> cols;  // P_m(n), dominance linear extension
  std::map<Partition, std::size_t> row_index;
  Matrix<Rational> inverse;  // cols x rows
};

inline const ReducedBasisChange& reduced_basis_change(int m, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<ReducedBasisChange>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{m, n}];
  if (slot) return *slot;
  auto bc = std::make_unique<ReducedBasisChange>();
  bc->rows = regular_partitions(n, m);
  bc->cols = dominance_linear_extension(reduced_partitions(n, m));
  if (bc->rows.size() != bc->cols.size())
    throw TheoremViolation("regular and reduced partition counts differ at n = " + std::to_string(n));
  for (std::size_t i = 0; i < bc->rows.size(); ++i) bc->row_index[bc->rows[i]] = i;
  const std::size_t dim = bc->rows.size();
  std::map<int, RationalPExpr> qs;
  Matrix<Rational> a(dim, std::vector<Rational>(dim, Rational(0)));
  for (std::size_t j = 0; j < dim; ++j) {
    RationalPExpr col{{Partition{}, Rational(1)}};
    for (int part : bc->cols[j].parts()) {
      auto it = qs.find(part);
      if (it == qs.end()) it = qs.emplace(part, unit_q(part, m)).first;
      col = multiply(col, it->second);
    }
    for (const auto& [k, v] : col)
      if (!is_zero(v)) a[bc->row_index.at(k)][j] = v;
  }
  auto inv = invert(std::move(a));
  if (!inv)
    throw TheoremViolation("q_mu over m-reduced mu is not a basis in degree " + std::to_string(n) +
                           " for m = " + std::to_string(m) + " (singular change of basis)");
  bc->inverse = std::move(*inv);
  slot = std::move(bc);
  return *slot;
}

}  // namespace detail

/**
 * @brief The modular ring for one parameter choice, with its memoized generators.
 *
 * Caches eps_n, q_n, R_n and q_lambda products. Cached values are never
 * modified once inserted, and references to them stay valid for the ring's
 * lifetime. Safe for concurrent use.
 */
class ModularRing {
 public:
  explicit ModularRing(ParamMode mode) : mode_(std::move(mode)) {}

  ModularRing(const ModularRing&) = delete;
  ModularRing& operator=(const ModularRing&) = delete;

  [[nodiscard]] const ParamMode& mode() const noexcept { return mode_; }
  [[nodiscard]] int m() const noexcept { return mode_.m(); }

  [[nodiscard]] CycRat eps(int n) const {
    std::lock_guard lock(mu_);
    auto it = eps_.find(n);
    if (it == eps_.end()) it = eps_.emplace(n, epsilon(n, mode_)).first;
    return it->second;
  }

  [[nodiscard]] CycRat eps_of(const Partition& lambda) const {
    CycRat r(1);
    for (int part : lambda.parts()) r *= eps(part);
    return r;
  }

  /// q_n = sum over m-regular lambda of n of p_lambda / (z_lambda eps_lambda); 1 at n = 0, 0 below.
  [[nodiscard]] const PExpr& q_to_p(int n) const {
    if (n < 0) return zero_;
    {
      std::lock_guard lock(mu_);
      if (auto it = q_.find(n); it != q_.end()) return it->second;
    }
    PExpr r(m());
    for (const auto& lam : regular_partitions(n, m()))
      r.add_term(lam, (CycRat(Rational(1, z_of(lam))) / eps_of(lam)));
    std::lock_guard lock(mu_);
    return q_.emplace(n, std::move(r)).first->second;
  }

  /// q_lambda = q_{lambda_1} q_{lambda_2} ...
  [[nodiscard]] const PExpr& qprod_to_p(const Partition& lambda) const {
    {
      std::lock_guard lock(mu_);
      if (auto it = qprod_.find(lambda); it != qprod_.end()) return it->second;
    }
    PExpr r = PExpr::one(m());
    if (!lambda.empty()) {
      const Partition tail(std::vector<int>(lambda.parts().begin() + 1, lambda.parts().end()));
      r = q_to_p(lambda.parts().front()) * qprod_to_p(tail);
    }
    std::lock_guard lock(mu_);
    return qprod_.emplace(lambda, std::move(r)).first->second;
  }

  /// R_n = c^n sum_{rho in P^(m)(n)} prod_i (1 - xi^{rho_i}) p_rho / z_rho.
  [[nodiscard]] const PExpr& r_to_p(int n) const {
    if (n < 0) return zero_;
    {
      std::lock_guard lock(mu_);
      if (auto it = r_.find(n); it != r_.end()) return it->second;
    }
    PExpr r(m());
    const Cyc cn = mode_.c0().pow(n);
    for (const auto& rho : regular_partitions(n, m())) {
      Cyc coeff = cn * Cyc(Rational(1, z_of(rho)));
      for (int part : rho.parts()) coeff *= Cyc(1) - mode_.xi(part);
      r.add_term(rho, CycRat(coeff));
    }
    std::lock_guard lock(mu_);
    return r_.emplace(n, std::move(r)).first->second;
  }

  /// <p_lambda, p_mu> = delta z_lambda eps_lambda, extended bilinearly.
  [[nodiscard]] CycRat scalar_product(const PExpr& f, const PExpr& g) const {
    check_modulus(f);
    check_modulus(g);
    CycRat acc;
    const auto& small = f.size() <= g.size() ? f : g;
    const auto& large = f.size() <= g.size() ? g : f;
    for (const auto& [k, v] : small.terms()) {
      auto it = large.terms().find(k);
      if (it == large.terms().end()) continue;
      acc += v * it->second * CycRat(Rational(z_of(k))) * eps_of(k);
    }
    return acc;
  }

  /**
   * Coordinates of a homogeneous f in the basis {q_mu : mu in P_m(n)}.
   * The expansion is unique; a singular system is reported as a TheoremViolation.
   */
  [[nodiscard]] QExpr p_to_q_reduced(const PExpr& f) const {
    check_modulus(f);
    QExpr out(m(), QExpr::Flavor::reduced);
    if (f.zero()) return out;
    const auto deg = f.degree();
    if (!deg) throw std::invalid_argument("p_to_q_reduced: input is not homogeneous");
    const auto& bc = detail::reduced_basis_change(m(), *deg);
    std::vector<std::pair<std::size_t, CycRat>> scaled;
    for (const auto& [k, v] : f.terms()) scaled.emplace_back(bc.row_index.at(k), v * eps_of(k));
    for (std::size_t j = 0; j < bc.cols.size(); ++j) {
      CycRat acc;
      for (const auto& [row, v] : scaled) {
        const Rational& a = bc.inverse[j][row];
        if (!is_zero(a)) acc += CycRat(a) * v;
      }
      out.add_term(bc.cols[j], acc);
    }
    return out;
  }

  /// Image in the power-sum basis of a q-coordinate vector (either flavor).
  [[nodiscard]] PExpr q_to_p(const QExpr& x) const {
    PExpr r(m());
    for (const auto& [k, v] : x.terms()) r += v * qprod_to_p(k);
    return r;
  }

  /// Total accessor for q_n as used in sums: q_n = 0 for n < 0.
  [[nodiscard]] const PExpr& zero() const noexcept { return zero_; }

 private:
  void check_modulus(const PExpr& f) const {
    if (f.m() != m())
      throw std::invalid_argument("element has modulus " + std::to_string(f.m()) + ", ring has " +
                                  std::to_string(m()));
  }

  ParamMode mode_;
  PExpr zero_{mode_.m()};
  mutable std::mutex mu_;
  mutable std::map<int, CycRat> eps_;
  mutable std::map<int, PExpr> q_;
  mutable std::map<int, PExpr> r_;
  mutable std::map<Partition, PExpr> qprod_;
};

/**
 * @brief The degree-km part of prod_{i=1}^m Y(xi^i z), which vanishes identically.
 *
 * `relation` records it as a formal combination of q_nu (plain flavor): the
 * coefficient of q_nu sums xi^{sum_i i n_i} over compositions (n_1..n_m) of km
 * that sort to nu. `p_image` is the same coefficient computed by multiplying
 * the twisted q-series in the power-sum basis.
 */
struct ModularRelation {
  int k = 0;
  QExpr relation;
  PExpr p_image;
  bool holds = false;
};

inline ModularRelation modular_relation_check(int k, const ModularRing& ring) {
  const int m = ring.m();
  if (k < 1) throw std::invalid_argument("modular_relation_check: k must be positive");
  const int n = k * m;
  ModularRelation out{k, QExpr(m, QExpr::Flavor::plain), PExpr(m), false};

  // series product in the power-sum basis, truncated at degree n
  std::vector<PExpr> acc(static_cast<std::size_t>(n) + 1, PExpr(m));
  acc[0] = PExpr::one(m);
  for (int i = 1; i <= m; ++i) {
    std::vector<PExpr> next(static_cast<std::size_t>(n) + 1, PExpr(m));
    for (int a = 0; a <= n; ++a) {
      if (acc[static_cast<std::size_t>(a)].zero()) continue;
      for (int b = 0; a + b <= n; ++b) {
        const CycRat twist(Cyc::xi(m, i * b));
        next[static_cast<std::size_t>(a + b)] += twist * (acc[static_cast<std::size_t>(a)] * ring.q_to_p(b));
      }
    }
    acc = std::move(next);
  }
  out.p_image = acc[static_cast<std::size_t>(n)];

  // the same coefficient as a formal q-combination
  std::vector<int> comp(static_cast<std::size_t>(m), 0);
  auto rec = [&](auto&& self, int idx, int remaining) -> void {
    if (idx == m - 1) {
      comp[static_cast<std::size_t>(idx)] = remaining;
      long twist = 0;
      for (int i = 0; i < m; ++i) twist += static_cast<long>(i + 1) * comp[static_cast<std::size_t>(i)];
      out.relation.add_term(Partition::from_unsorted(comp),
                            CycRat(Cyc::xi(m, static_cast<int>(twist % m))));
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      comp[static_cast<std::size_t>(idx)] = v;
      self(self, idx + 1, remaining - v);
    }
  };
  rec(rec, 0, n);
  out.holds = out.p_image.zero() && ring.q_to_p(out.relation).zero();
  return out;
}

}  // namespace modmac

#endif  // MODMAC_SYMFUNC_HPP
