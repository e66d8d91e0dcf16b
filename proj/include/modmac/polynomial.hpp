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
#ifndef MODMAC_POLYNOMIAL_HPP
#define MODMAC_POLYNOMIAL_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "modmac/rational.hpp"

namespace modmac {

/**
 * @brief Dense univariate polynomial over a field K.
 *
 * Coefficients are stored lowest degree first with no trailing zeros, so the
 * zero polynomial is the empty vector and equality is coefficient-wise.
 *
 * K must be constructible from `int`, support `+ - * /`, `==`, and
 * `is_zero(const K&)` found by ADL or overload.
 */
template <class K>
class Polynomial {
 public:
  using coefficient_type = K;

  Polynomial() = default;
  Polynomial(K c) {  // NOLINT(google-explicit-constructor)
    if (!is_zero(c)) c_.push_back(std::move(c));
  }
  explicit Polynomial(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

  /// c * x^k
  static Polynomial monomial(K c, std::size_t k) {
    if (is_zero(c)) return {};
    std::vector<K> v(k + 1, K(0));
    v[k] = std::move(c);
    return Polynomial(std::move(v));
  }

  [[nodiscard]] bool zero() const noexcept { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  [[nodiscard]] int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] const std::vector<K>& coeffs() const noexcept { return c_; }
  [[nodiscard]] K coeff(std::size_t k) const { return k < c_.size() ? c_[k] : K(0); }
  [[nodiscard]] const K& lead() const { return c_.back(); }
  [[nodiscard]] bool is_constant() const noexcept { return c_.size() <= 1; }
  [[nodiscard]] bool is_one() const { return c_.size() == 1 && c_[0] == K(1); }

  [[nodiscard]] K operator()(const K& x) const {
    K acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.zero() || b.zero()) return {};
    std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const K& s) const {
    if (is_zero(s)) return {};
    Polynomial r = *this;
    for (auto& x : r.c_) x = x * s;
    r.trim();
    return r;
  }

  /// Euclidean division; returns {quotient, remainder}.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial{}, a};
    std::vector<K> rem = a.c_;
    std::vector<K> quo(a.c_.size() - b.c_.size() + 1, K(0));
    const K inv_lead = K(1) / b.lead();
    const bool unit_lead = b.lead() == K(1);
    for (std::size_t k = quo.size(); k-- > 0;) {
      const K& top = rem[k + b.c_.size() - 1];
      if (is_zero(top)) continue;
      K f = top;
      if (!unit_lead) f = f * inv_lead;
      for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= f * b.c_[j];
      quo[k] = std::move(f);
    }
    rem.resize(b.c_.size() - 1);
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
  }
  friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }
  friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

  [[nodiscard]] Polynomial monic() const {
    if (zero() || lead() == K(1)) return *this;
    return scaled(K(1) / lead());
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<K> c_;
};

/// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
template <class K>
Polynomial<K> gcd(Polynomial<K> a, Polynomial<K> b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  b = b.monic();
  while (!b.zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

/// Extended Euclid: returns {g, s, t} with s*a + t*b = g, g monic.
template <class K>
struct XgcdResult {
  Polynomial<K> g, s, t;
};

template <class K>
XgcdResult<K> xgcd(const Polynomial<K>& a, const Polynomial<K>& b) {
  Polynomial<K> r0 = a, r1 = b;
  Polynomial<K> s0(K(1)), s1, t0, t1(K(1));
  while (!r1.zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    auto s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    auto t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.zero()) return {r0, s0, t0};
  const K inv = K(1) / r0.lead();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

}  // namespace modmac

#endif  // MODMAC_POLYNOMIAL_HPP
