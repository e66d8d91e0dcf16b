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
#ifndef MODMAC_RATIONAL_HPP
#define MODMAC_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace modmac {

using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

/// Always "a/b" with b >= 1, including integers ("3/1").
inline std::string rational_to_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

/// "3" for integers, "a/b" otherwise.
inline std::string rational_display(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_str();
}

/// Accepts "a", "-a" and "a/b".
inline Rational parse_rational(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational r;
  std::string str(s);
  if (str.front() == '+') str.erase(0, 1);
  if (r.set_str(str, 10) != 0) throw std::invalid_argument("bad rational literal '" + std::string(s) + "'");
  if (sgn(r.get_den()) == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
  r.canonicalize();
  return r;
}

}  // namespace modmac

#endif  // MODMAC_RATIONAL_HPP
