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

// Acceptance sweep: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "modmac/selfcheck.hpp"

using namespace modmac;
using verify::CheckResult;

namespace {

struct Tally {
  int total = 0;
  int failed = 0;
  std::string first_failure;

  void add(const CheckResult& r) {
    ++total;
    if (r.ok) return;
    if (failed++ == 0) first_failure = r.to_json().dump();
  }
};

ParamMode eval_at_2(int m) { return ParamMode::eval(m, Cyc(2) * Cyc::xi(m, 0)); }

std::vector<Partition> up_to(int max_n) { return verify::detail::partitions_up_to(max_n); }

void criterion_1(Tally& t) {
  for (int m = 2; m <= 5; ++m)
    for (int n = 0; n <= 25; ++n) t.add(verify::check_equinumerosity(n, m));
}

void criterion_2(Tally& t) {
  for (int m : {2, 3}) {
    const ModularRing sym(ParamMode::symbolic(m));
    const ModularRing ev(eval_at_2(m));
    for (const auto& lam : up_to(8)) {
      t.add(verify::check_newton_instance(lam, sym));
      for (std::uint64_t s = 0; s < 20; ++s) t.add(verify::check_newton_random(lam, ev, 1000 * m + s));
    }
  }
}

void criterion_3(Tally& t) {
  for (const auto& lam : up_to(9)) t.add(verify::check_nl(lam));
}

void criterion_4(Tally& t) {
  for (int m : {2, 3}) {
    const ModularRing sym(ParamMode::symbolic(m));
    for (int n = 1; n <= 10; ++n) t.add(verify::check_r_expansion(n, sym));
  }
}

void criterion_5(Tally& t) {
  for (int m : {2, 3}) {
    const ModularRing sym(ParamMode::symbolic(m));
    for (int n = 1; n <= 10; ++n) t.add(verify::check_convolution(n, sym));
  }
}

void criterion_6(Tally& t) {
  for (int m : {2, 3, 4}) {
    const ModularRing sym(ParamMode::symbolic(m));
    for (int k = 1; k * m <= 12; ++k) t.add(verify::check_modular_relation(k, sym));
  }
}

void criterion_7(Tally& t) {
  for (auto [m, top] : {std::pair{2, 8}, std::pair{3, 6}}) {
    const ModularRing sym(ParamMode::symbolic(m));
    for (const auto& lam : up_to(top)) t.add(verify::check_x0_agreement(lam, sym, true));
  }
}

void criterion_8(Tally& t) {
  for (auto [m, top] : {std::pair{2, 8}, std::pair{3, 6}}) {
    const ModularRing sym(ParamMode::symbolic(m));
    for (int n = 1; n <= top; ++n) t.add(verify::check_x0_matrix(n, sym));
    for (const auto& lam : up_to(top)) t.add(verify::check_x0_newton(lam, sym));
  }
}

void criterion_9(Tally& t) {
  for (int m : {2, 3}) {
    const ModularRing sym(ParamMode::symbolic(m));
    const ModularRing ev(eval_at_2(m));
    for (int n = 1; n <= 6; ++n) t.add(verify::check_self_adjoint(n, sym));
    for (int n = 1; n <= 8; ++n) t.add(verify::check_self_adjoint(n, ev));
  }
}

void criterion_10(Tally& t) {
  for (int m : {2, 3, 4, 5}) {
    for (int n = 1; n <= 10; ++n) t.add(verify::check_eigen_separation(n, m));
    t.add(verify::check_collision_predicate(m, 500, 17 + static_cast<std::uint64_t>(m)));
  }
}

void criterion_11(Tally& t) {
  for (int m : {2, 3}) {
    const ModularRing sym(ParamMode::symbolic(m));
    const ModularRing ev(eval_at_2(m));
    for (int n = 1; n <= 5; ++n) t.add(verify::check_macdonald(n, sym));
    for (int n = 1; n <= 8; ++n) t.add(verify::check_macdonald(n, ev));
  }
}

void criterion_12(Tally& t) {
  const ModularRing sym(ParamMode::symbolic(2));
  for (const auto& lam : up_to(8))
    if (lam.is_strict()) t.add(verify::check_schur_q(lam, sym));
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Tally&)>>> criteria{
      {"equinumerosity |P^(m)(n)| = |P_m(n)|, m in 2..5, n <= 25", criterion_1},
      {"generalized Newton identity, |lambda| <= 8, m in {2,3}, q^n-1 and 20 random d", criterion_2},
      {"N_l closed forms agree with brute force, |lambda| <= 9", criterion_3},
      {"R_n = sum d_mu q_mu, n <= 10, m in {2,3}", criterion_4},
      {"sum R_i q_{n-i} = (q^n-1) q_n, n <= 10, m in {2,3}", criterion_5},
      {"modular relation, km <= 12, m in {2,3,4}", criterion_6},
      {"X0 series form = differential form = exponential expansion, |lambda| <= 8 (m=2), <= 6 (m=3)", criterion_7},
      {"X0 triangular with eigenvalue diagonal, n <= 8 (m=2), <= 6 (m=3)", criterion_8},
      {"X0 self-adjoint, symbolic n <= 6, q0=2 n <= 8", criterion_9},
      {"eigenvalue separation n <= 10 and collision predicate on 500 pairs", criterion_10},
      {"Q basis unitriangular, eigenvectors, orthogonal; symbolic n <= 5, q0=2 n <= 8", criterion_11},
      {"Q_lambda at q=0 equals Schur Q, strict |lambda| <= 8", criterion_12},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    criteria[i].second(t);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = t.failed == 0 && t.total > 0;
    failures += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << " (" << t.total
              << " checks, " << t.failed << " failed, " << std::fixed << std::setprecision(1) << secs << " s)\n";
    if (!ok && !t.first_failure.empty()) std::cout << "     first failure: " << t.first_failure << "\n";
    std::cout.flush();
  }
  return failures == 0 ? 0 : 1;
}
