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
#ifndef MODMAC_PARAMS_HPP
#define MODMAC_PARAMS_HPP

#include <stdexcept>
#include <string>

#include "modmac/cyclotomic.hpp"
#include "modmac/ratfun.hpp"

namespace modmac {

/**
 * @brief How the parameters q and c enter the coefficient field.
 *
 * Symbolic mode keeps q formal and fixes c = xi_m^{-1}. Eval mode substitutes
 * nonzero cyclotomic numbers q0 and c0, so every scalar is a constant.
 */
class ParamMode {
 public:
  enum class Kind { symbolic, eval };

  static ParamMode symbolic(int m) {
    ParamMode p(m, Kind::symbolic);
    p.c0_ = Cyc::xi(m, -1);
    return p;
  }

  static ParamMode eval(int m, Cyc q0, Cyc c0) {
    ParamMode p(m, Kind::eval);
    if (is_zero(q0) || is_zero(c0)) throw std::invalid_argument("eval mode needs nonzero q0 and c0");
    (void)q0.coeffs(m);  // rejects a foreign conductor
    (void)c0.coeffs(m);
    p.q0_ = std::move(q0);
    p.c0_ = std::move(c0);
    return p;
  }

  /// Eval mode with the default c0 = xi_m^{-1}.
  static ParamMode eval(int m, Cyc q0) { return eval(m, std::move(q0), Cyc::xi(m, -1)); }

  [[nodiscard]] int m() const noexcept { return m_; }
  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  [[nodiscard]] bool is_symbolic() const noexcept { return kind_ == Kind::symbolic; }
  [[nodiscard]] const Cyc& q0() const { return q0_; }
  [[nodiscard]] const Cyc& c0() const { return c0_; }

  /// The parameter q as a field element: formal q, or the constant q0.
  [[nodiscard]] CycRat q() const { return is_symbolic() ? CycRat::q() : CycRat(q0_); }
  [[nodiscard]] CycRat c() const { return CycRat(c0_); }
  [[nodiscard]] Cyc xi(int k = 1) const { return Cyc::xi(m_, k); }

  /// Stable textual key, used to identify caches and in reports.
  [[nodiscard]] std::string key() const {
    std::string s = "m=" + std::to_string(m_);
    if (is_symbolic()) return s + ";symbolic";
    return s + ";q0=" + q0_.to_string() + ";c0=" + c0_.to_string();
  }

  friend bool operator==(const ParamMode& a, const ParamMode& b) {
    return a.m_ == b.m_ && a.kind_ == b.kind_ && a.q0_ == b.q0_ && a.c0_ == b.c0_;
  }

 private:
  ParamMode(int m, Kind k) : m_(m), kind_(k) {
    if (m < 2) throw std::invalid_argument("modulus m must be at least 2");
  }

  int m_;
  Kind kind_;
  Cyc q0_;
  Cyc c0_;
};

/// eps_n = (q^n - 1) / ((1 - xi^n) c^n), for m not dividing n.
inline CycRat epsilon(int n, const ParamMode& mode) {
  const int m = mode.m();
  if (n <= 0) throw std::invalid_argument("epsilon: n must be positive");
  if (n % m == 0)
    throw std::invalid_argument("epsilon: n = " + std::to_string(n) + " is divisible by m = " +
                                std::to_string(m));
  const CycRat qn_minus_1 = mode.q().pow(n) - CycRat(1);
  if (is_zero(qn_minus_1))
    throw std::domain_error("epsilon: q0^" + std::to_string(n) +
                            " = 1 makes eps_n vanish; the scalar product degenerates");
  const Cyc denom = (Cyc(1) - mode.xi(n)) * mode.c0().pow(n);
  return qn_minus_1 / CycRat(denom);
}

/// eps_lambda = prod_i eps_{lambda_i}; 1 for the empty partition.
template <class PartitionT>
CycRat epsilon_of(const PartitionT& p, const ParamMode& mode) {
  CycRat r(1);
  for (int part : p.parts()) r *= epsilon(part, mode);
  return r;
}

}  // namespace modmac

#endif  // MODMAC_PARAMS_HPP
