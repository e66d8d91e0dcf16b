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
#ifndef MODMAC_CYCLOTOMIC_HPP
#define MODMAC_CYCLOTOMIC_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "modmac/polynomial.hpp"
#include "modmac/rational.hpp"

namespace modmac {

using RationalPolynomial = Polynomial<Rational>;

/// The m-th cyclotomic polynomial, by dividing x^m - 1 by Phi_d for every proper divisor d.
inline RationalPolynomial cyclotomic_polynomial(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
  RationalPolynomial p = RationalPolynomial::monomial(Rational(1), static_cast<std::size_t>(m)) -
                         RationalPolynomial(Rational(1));
  for (int d = 1; d < m; ++d)
    if (m % d == 0) p = p / cyclotomic_polynomial(d);
  return p;
}

/**
 * Arithmetic context for Q(xi_m) = Q[x]/Phi_m(x). One instance per conductor,
 * created on first use and immutable afterwards.
 */
class CyclotomicField {
 public:
  static const CyclotomicField& get(int m) {
    if (m < 2) throw std::invalid_argument("cyclotomic conductor must be at least 2");
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CyclotomicField>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[m];
    if (!slot) slot.reset(new CyclotomicField(m));
    return *slot;
  }

  [[nodiscard]] int conductor() const noexcept { return m_; }
  [[nodiscard]] int degree() const noexcept { return phi_; }
  [[nodiscard]] const RationalPolynomial& modulus() const noexcept { return modulus_; }

  /// Reduces a coefficient vector (any length) modulo Phi_m in place.
  void reduce(std::vector<Rational>& v) const {
    const auto& f = modulus_.coeffs();
    for (std::size_t k = v.size(); k-- > static_cast<std::size_t>(phi_);) {
      if (is_zero(v[k])) continue;
      const Rational top = v[k];
      for (int j = 0; j < phi_; ++j) v[k - phi_ + j] -= top * f[static_cast<std::size_t>(j)];
      v[k] = 0;
    }
    if (v.size() > static_cast<std::size_t>(phi_)) v.resize(static_cast<std::size_t>(phi_));
    while (!v.empty() && is_zero(v.back())) v.pop_back();
  }

 private:
  explicit CyclotomicField(int m)
      : m_(m), modulus_(cyclotomic_polynomial(m)), phi_(modulus_.degree()) {}

  int m_;
  RationalPolynomial modulus_;
  int phi_;
};

/**
 * @brief Element of the cyclotomic field Q(xi_m), in the power basis 1, xi, ..., xi^{phi(m)-1}.
 *
 * Pure rationals carry no field and combine with elements of any conductor.
 * Trailing zero coefficients are trimmed, so equality is coefficient-wise.
 */
class Cyc {
 public:
  Cyc() = default;
  Cyc(int v) : Cyc(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Cyc(long v) : Cyc(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Cyc(Rational v) {                  // NOLINT(google-explicit-constructor)
    v.canonicalize();  // mpq_class(a, b) does not reduce
    if (!is_zero(v)) c_.push_back(std::move(v));
  }

  /// xi_m^k for any integer k.
  static Cyc xi(int m, int k = 1) {
    const auto& f = CyclotomicField::get(m);
    k %= m;
    if (k < 0) k += m;
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1, Rational(0));
    v[static_cast<std::size_t>(k)] = 1;
    return Cyc(&f, std::move(v));
  }

  static Cyc from_coeffs(int m, std::vector<Rational> coeffs) {
    for (auto& c : coeffs) c.canonicalize();
    return Cyc(&CyclotomicField::get(m), std::move(coeffs));
  }

  /// Conductor, or 0 for a pure rational with no field attached.
  [[nodiscard]] int conductor() const noexcept { return field_ ? field_->conductor() : 0; }
  [[nodiscard]] bool is_rational() const noexcept { return c_.size() <= 1; }
  [[nodiscard]] Rational rational_part() const { return c_.empty() ? Rational(0) : c_[0]; }
  [[nodiscard]] const std::vector<Rational>& trimmed_coeffs() const noexcept { return c_; }

  /// Coefficient vector padded to phi(m).
  [[nodiscard]] std::vector<Rational> coeffs(int m) const {
    const int phi = CyclotomicField::get(m).degree();
    std::vector<Rational> v = c_;
    if (field_ && field_->conductor() != m && !is_rational())
      throw std::invalid_argument("cyclotomic element has conductor " +
                                  std::to_string(field_->conductor()) + ", not " + std::to_string(m));
    v.resize(static_cast<std::size_t>(phi), Rational(0));
    return v;
  }

  friend bool is_zero(const Cyc& a) noexcept { return a.c_.empty(); }

  Cyc& operator+=(const Cyc& o) {
    field_ = join(field_, o.field_);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Cyc& operator-=(const Cyc& o) {
    field_ = join(field_, o.field_);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Cyc operator-() const {
    Cyc r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }

  friend Cyc operator*(const Cyc& a, const Cyc& b) {
    const CyclotomicField* f = join(a.field_, b.field_);
    if (a.c_.empty() || b.c_.empty()) return Cyc(f, {});
    if (a.c_.size() == 1) return b.scaled(a.c_[0], f);
    if (b.c_.size() == 1) return a.scaled(b.c_[0], f);
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Cyc(f, std::move(r));
  }
  Cyc& operator*=(const Cyc& o) { return *this = *this * o; }

  [[nodiscard]] Cyc inverse() const {
    if (c_.empty()) throw std::domain_error("cyclotomic division by zero");
    if (c_.size() == 1) {
      Cyc r = *this;
      r.c_[0] = 1 / r.c_[0];
      return r;
    }
    // s*a + t*Phi = 1 in Q[x]
    auto res = xgcd(RationalPolynomial(c_), field_->modulus());
    return Cyc(field_, res.s.coeffs());
  }

  friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inverse(); }
  Cyc& operator/=(const Cyc& o) { return *this = *this / o; }

  [[nodiscard]] Cyc pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyc result(Rational(1)), base = *this;
    result.field_ = field_;
    while (e) {
      if (e & 1) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  friend bool operator==(const Cyc& a, const Cyc& b) { return a.c_ == b.c_; }

  /// Human-readable form, e.g. "1/2 - 3*xi^2"; terms in increasing power.
  [[nodiscard]] std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (is_zero(c_[i])) continue;
      Rational v = c_[i];
      if (!s.empty()) {
        s += sgn(v) < 0 ? " - " : " + ";
        v = abs(v);
      }
      std::string coeff = rational_display(v);
      if (i == 0) {
        s += coeff;
        continue;
      }
      if (coeff == "-1") s += "-";
      else if (coeff != "1") s += coeff + "*";
      s += i == 1 ? "xi" : "xi^" + std::to_string(i);
    }
    return s;
  }

 private:
  Cyc(const CyclotomicField* f, std::vector<Rational> v) : field_(f), c_(std::move(v)) {
    if (field_) field_->reduce(c_);
    trim();
  }

  static const CyclotomicField* join(const CyclotomicField* a, const CyclotomicField* b) {
    if (!a) return b;
    if (!b || a == b) return a;
    throw std::invalid_argument("mixed cyclotomic conductors " + std::to_string(a->conductor()) +
                                " and " + std::to_string(b->conductor()));
  }

  Cyc scaled(const Rational& s, const CyclotomicField* f) const {
    Cyc r = *this;
    r.field_ = f;
    for (auto& x : r.c_) x *= s;
    r.trim();
    return r;
  }

  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }

  const CyclotomicField* field_ = nullptr;
  std::vector<Rational> c_;
};

/**
 * Parses a cyclotomic literal: a sum of terms, each a rational, "xi", "xi^k",
 * or "r*xi^k" (k may be negative). Examples: "3", "1/2", "xi^2", "1 - 2*xi".
 */
inline Cyc parse_cyc(std::string_view text, int m) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s += ch;
  if (s.empty()) throw std::invalid_argument("empty scalar literal");
  Cyc total;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && !(s[end] == '-' && end > pos && s[end - 1] != '^')) ++end;
    const std::string term = s.substr(pos, end - pos);
    if (term.empty()) throw std::invalid_argument("bad scalar literal '" + std::string(text) + "'");
    Rational coeff(1);
    std::string rest = term;
    if (auto star = term.find('*'); star != std::string::npos) {
      coeff = parse_rational(term.substr(0, star));
      rest = term.substr(star + 1);
    } else if (term.rfind("xi", 0) != 0) {
      coeff = parse_rational(term);
      rest.clear();
    }
    Cyc value(coeff * sign);
    if (!rest.empty()) {
      if (rest.rfind("xi", 0) != 0) throw std::invalid_argument("bad scalar term '" + term + "'");
      int k = 1;
      if (rest.size() > 2) {
        if (rest[2] != '^') throw std::invalid_argument("bad scalar term '" + term + "'");
        try {
          std::size_t used = 0;
          k = std::stoi(rest.substr(3), &used);
          if (used != rest.size() - 3) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
          throw std::invalid_argument("bad exponent in '" + term + "'");
        }
      }
      value = value * Cyc::xi(m, k);
    }
    total += value;
    pos = end;
  }
  if (total.conductor() == 0 && m >= 2) total = total * Cyc::xi(m, 0);
  return total;
}

}  // namespace modmac

#endif  // MODMAC_CYCLOTOMIC_HPP
