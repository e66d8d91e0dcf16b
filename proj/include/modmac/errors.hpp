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
#ifndef MODMAC_ERRORS_HPP
#define MODMAC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace modmac {

/// Substituting a value for q hit a zero of a denominator.
class PoleAtSpecialization : public std::domain_error {
 public:
  explicit PoleAtSpecialization(const std::string& what)
      : std::domain_error("PoleAtSpecialization: " + what) {}
};

/// Two eigenvalues that differ symbolically coincide at the chosen evaluation point.
class EigenvalueCollisionAtEvaluation : public std::domain_error {
 public:
  explicit EigenvalueCollisionAtEvaluation(const std::string& what)
      : std::domain_error("EigenvalueCollisionAtEvaluation: " + what +
                          "; choose a different q0") {}
};

/// A proven identity failed to hold. Always an implementation bug, never bad input.
class TheoremViolation : public std::logic_error {
 public:
  explicit TheoremViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace modmac

#endif  // MODMAC_ERRORS_HPP
