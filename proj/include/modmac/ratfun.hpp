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
#ifndef MODMAC_RATFUN_HPP
#define MODMAC_RATFUN_HPP

#include <stdexcept>
#include <string>
#include <utility>

#include "modmac/cyclotomic.hpp"
#include "modmac/errors.hpp"
#include "modmac/polynomial.hpp"

namespace modmac {

using CycPolynomial = Polynomial<Cyc>;

/**
 * @brief Rational function in q over Q(xi_m).
 *
 * Always canonical: gcd(num, den) = 1 and den monic, so two equal values have
 * identical representations.
 */
class CycRat {
 public:
  CycRat() = default;
  CycRat(int v) : num_(Cyc(v)) {}                // NOLINT(google-explicit-constructor)
  CycRat(long v) : num_(Cyc(v)) {}               // NOLINT(google-explicit-constructor)
  CycRat(Rational v) : num_(Cyc(std::move(v))) {}  // NOLINT(google-explicit-constructor)
  CycRat(Cyc v) : num_(std::move(v)) {}          // NOLINT(google-explicit-constructor)
  CycRat(CycPolynomial num) : num_(std::move(num)) {}  // NOLINT(google-explicit-constructor)

  CycRat(CycPolynomial num, CycPolynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.zero()) throw std::domain_error("rational function with zero denominator");
    canonicalize();
  }

  /// The indeterminate q.
  static CycRat q() { return CycRat(CycPolynomial::monomial(Cyc(1), 1)); }

  [[nodiscard]] const CycPolynomial& num() const noexcept { return num_; }
  [[nodiscard]] const CycPolynomial& den() const noexcept { return den_; }
  [[nodiscard]] bool is_polynomial() const noexcept { return den_.is_one(); }
  [[nodiscard]] bool is_constant() const noexcept { return den_.is_one() && num_.is_constant(); }
  [[nodiscard]] Cyc constant_value() const { return num_.coeff(0); }

  friend bool is_zero(const CycRat& a) noexcept { return a.num_.zero(); }

  friend CycRat operator+(const CycRat& a, const CycRat& b) {
    if (a.num_.zero()) return b;
    if (b.num_.zero()) return a;
    if (a.den_ == b.den_) {
      if (a.den_.is_one()) return CycRat(a.num_ + b.num_, raw_tag{});
      return CycRat(a.num_ + b.num_, a.den_);
    }
    if (a.den_.is_one()) return CycRat(a.num_ * b.den_ + b.num_, b.den_, raw_tag{});
    if (b.den_.is_one()) return CycRat(b.num_ * a.den_ + a.num_, a.den_, raw_tag{});
    // a/b + c/d with g = gcd(b, d): (a*(d/g) + c*(b/g)) / (b*(d/g)), then cancel against g only.
    const auto g = gcd(a.den_, b.den_);
    const auto bg = a.den_ / g;
    const auto dg = b.den_ / g;
    auto n = a.num_ * dg + b.num_ * bg;
    auto d = a.den_ * dg;
    if (g.is_one()) return CycRat(std::move(n), std::move(d), raw_tag{});
    return CycRat(std::move(n), std::move(d));
  }
  friend CycRat operator-(const CycRat& a, const CycRat& b) { return a + (-b); }
  CycRat operator-() const {
    CycRat r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend CycRat operator*(const CycRat& a, const CycRat& b) {
    if (a.num_.zero() || b.num_.zero()) return {};
    if (a.den_.is_one() && b.den_.is_one()) return CycRat(a.num_ * b.num_, raw_tag{});
    if (a.num_.is_constant() && a.den_.is_one()) return b.scaled(a.num_.lead());
    if (b.num_.is_constant() && b.den_.is_one()) return a.scaled(b.num_.lead());
    // cross-cancel so the product stays canonical
    const auto g1 = gcd(a.num_, b.den_);
    const auto g2 = gcd(b.num_, a.den_);
    auto n = (a.num_ / g1) * (b.num_ / g2);
    auto d = (a.den_ / g2) * (b.den_ / g1);
    return CycRat(std::move(n), std::move(d), raw_tag{});
  }

  [[nodiscard]] CycRat inverse() const {
    if (num_.zero()) throw std::domain_error("rational function division by zero");
    return CycRat(den_, num_, raw_tag{});
  }
  friend CycRat operator/(const CycRat& a, const CycRat& b) { return a * b.inverse(); }

  CycRat& operator+=(const CycRat& o) { return *this = *this + o; }
  CycRat& operator-=(const CycRat& o) { return *this = *this - o; }
  CycRat& operator*=(const CycRat& o) { return *this = *this * o; }
  CycRat& operator/=(const CycRat& o) { return *this = *this / o; }

  [[nodiscard]] CycRat pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycRat result(1), base = *this;
    while (e) {
      if (e & 1) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  friend bool operator==(const CycRat& a, const CycRat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Re-normalizes; a no-op on values produced by this class.
  [[nodiscard]] CycRat canonicalized() const { return CycRat(num_, den_); }

  /// Human-readable, e.g. "(q^2 - 1)/(q + 1)". Not a parse format.
  [[nodiscard]] std::string to_string() const {
    auto poly = [](const CycPolynomial& p) {
      if (p.zero()) return std::string("0");
      std::string s;
      for (int k = p.degree(); k >= 0; --k) {
        const Cyc& c = p.coeffs()[static_cast<std::size_t>(k)];
        if (is_zero(c)) continue;
        std::string cs = c.to_string();
        const bool compound = cs.find(' ') != std::string::npos;
        if (!s.empty()) {
          if (!compound && cs.front() == '-') {
            s += " - ";
            cs.erase(0, 1);
          } else {
            s += " + ";
          }
        }
        if (k == 0) {
          s += compound && !s.empty() ? "(" + cs + ")" : cs;
          continue;
        }
        if (compound) s += "(" + cs + ")*";
        else if (cs == "-1") s += "-";
        else if (cs != "1") s += cs + "*";
        s += k == 1 ? "q" : "q^" + std::to_string(k);
      }
      return s;
    };
    if (den_.is_one()) return poly(num_);
    return "(" + poly(num_) + ")/(" + poly(den_) + ")";
  }

 private:
  struct raw_tag {};
  CycRat(CycPolynomial num, raw_tag) : num_(std::move(num)) {}
  /// num/den already coprime; only the denominator needs to become monic.
  CycRat(CycPolynomial num, CycPolynomial den, raw_tag) : num_(std::move(num)), den_(std::move(den)) {
    normalize_den();
  }

  CycRat scaled(const Cyc& s) const {
    CycRat r = *this;
    r.num_ = r.num_.scaled(s);
    return r;
  }

  void normalize_den() {
    if (num_.zero()) {
      den_ = CycPolynomial(Cyc(1));
      return;
    }
    if (den_.lead() == Cyc(1)) return;
    const Cyc inv = den_.lead().inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }

  void canonicalize() {
    if (num_.zero()) {
      den_ = CycPolynomial(Cyc(1));
      return;
    }
    if (!den_.is_constant()) {
      const auto g = gcd(num_, den_);
      if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
      }
    }
    normalize_den();
  }

  CycPolynomial num_;
  CycPolynomial den_{Cyc(1)};
};

/// Exact substitution q -> q0. Throws PoleAtSpecialization if the denominator vanishes.
inline Cyc evaluate(const CycRat& a, const Cyc& q0) {
  const Cyc d = a.den()(q0);
  if (is_zero(d))
    throw PoleAtSpecialization("denominator " + a.to_string() + " vanishes at q = " + q0.to_string());
  return a.num()(q0) / d;
}

}  // namespace modmac

#endif  // MODMAC_RATFUN_HPP
