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

#include <gtest/gtest.h>

#include <stdexcept>

#include "modmac/macdonald.hpp"
#include "modmac/selfcheck.hpp"

using namespace modmac;

namespace {

const CycRat q = CycRat::q();
const CycRat one(1);

}  // namespace

TEST(SolveQ, OneDimensionalDegrees) {
  for (int m : {2, 3, 4}) {
    const ModularRing ring(ParamMode::symbolic(m));
    const auto q1 = solve_q({1}, ring);
    EXPECT_EQ(q1.p_form, ring.q_to_p(1));
    EXPECT_EQ(q1.eigenvalue, one + CycRat(Cyc(1) - Cyc::xi(m)) * (q - one));
  }
  const ModularRing r2(ParamMode::symbolic(2));
  EXPECT_EQ(solve_q({2}, r2).p_form, r2.q_to_p(2));
}

TEST(SolveQ, TwoOne) {
  const ModularRing ring(ParamMode::symbolic(2));
  const auto q21 = solve_q({2, 1}, ring);
  EXPECT_EQ(q21.q_coeffs.coeff({2, 1}), one);
  EXPECT_EQ(q21.q_coeffs.terms().size(), 2u);
  EXPECT_FALSE(is_zero(q21.q_coeffs.coeff({3})));
  EXPECT_EQ(x0_apply_diff(q21.p_form, ring), q21.eigenvalue * q21.p_form);
  EXPECT_THROW(solve_q({1, 1}, ring), std::invalid_argument);
}

TEST(SolveQ, EmptyPartition) {
  const ModularRing ring(ParamMode::symbolic(3));
  EXPECT_EQ(solve_q({}, ring).p_form, PExpr::one(3));
}

TEST(AllQ, Shapes) {
  EXPECT_EQ(all_q(3, ModularRing(ParamMode::symbolic(2))).size(), 2u);
  const auto q3 = all_q(2, ModularRing(ParamMode::symbolic(3)));
  ASSERT_EQ(q3.size(), 2u);
  EXPECT_EQ(q3[0].lambda, Partition({2}));
  EXPECT_EQ(q3[1].lambda, Partition({1, 1}));
  EXPECT_EQ(all_q(1, ModularRing(ParamMode::symbolic(2))).size(), 1u);
}

TEST(Gram, Examples) {
  const ModularRing ring(ParamMode::symbolic(2));
  const auto g1 = gram(1, ring);
  EXPECT_EQ(g1[0][0], CycRat(2) / (one - q));
  const auto g3 = gram(3, ring);
  EXPECT_TRUE(is_zero(g3[0][1]));
  EXPECT_TRUE(is_zero(g3[1][0]));
  for (int m : {2, 3, 4}) {
    const auto g = gram(2, ModularRing(ParamMode::symbolic(m)));
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j) EXPECT_EQ(is_zero(g[i][j]), i != j);
  }
}

TEST(Macdonald, FullCheck) {
  for (int m : {2, 3, 4}) {
    const ModularRing sym(ParamMode::symbolic(m));
    const ModularRing ev(ParamMode::eval(m, Cyc(3)));
    for (int n = 1; n <= 4; ++n) {
      EXPECT_TRUE(verify::check_macdonald(n, sym).ok) << m << " " << n;
      EXPECT_TRUE(verify::check_macdonald(n, ev).ok) << m << " " << n;
    }
    for (const auto& lam : reduced_partitions(4, m)) EXPECT_TRUE(verify::check_uniqueness(lam, ev, 3).ok);
  }
}

TEST(Macdonald, EvalMatchesSpecializedSymbolic) {
  const ModularRing sym(ParamMode::symbolic(3));
  const ModularRing ev(ParamMode::eval(3, Cyc(2)));
  for (const auto& lam : reduced_partitions(4, 3)) {
    const auto a = solve_q(lam, sym);
    const auto b = solve_q(lam, ev);
    for (const auto& [mu, c] : a.q_coeffs.terms()) EXPECT_EQ(CycRat(evaluate(c, Cyc(2))), b.q_coeffs.coeff(mu));
  }
}

TEST(Specialize, Examples) {
  const ModularRing r2(ParamMode::symbolic(2));
  EXPECT_EQ(specialize_q0(solve_q({1}, r2), r2), PExpr::power_sum(2, {1}, CycRat(2)));
  EXPECT_EQ(specialize_q0(solve_q({2}, r2), r2), PExpr::power_sum(2, {1, 1}, CycRat(2)));
  const ModularRing r3(ParamMode::symbolic(3));
  EXPECT_EQ(specialize_q0(solve_q({1}, r3), r3), PExpr::power_sum(3, {1}, CycRat(Cyc(1) - Cyc::xi(3, -1))));
  const ModularRing ev(ParamMode::eval(2, Cyc(3)));
  EXPECT_THROW(specialize_q0(solve_q({1}, ev), ev), std::invalid_argument);
}

TEST(SchurQ, Oracle) {
  EXPECT_EQ(schur_q_oracle({1}), PExpr::power_sum(2, {1}, CycRat(2)));
  EXPECT_EQ(schur_q_oracle({2, 1}), detail::classical_q(2) * detail::classical_q(1) - CycRat(2) * detail::classical_q(3));
  EXPECT_EQ(schur_q_oracle({4}), detail::classical_q(4));
  EXPECT_EQ(schur_q_oracle({}), PExpr::one(2));
  EXPECT_THROW(schur_q_oracle({2, 2}), std::invalid_argument);
}

TEST(SchurQ, Specialization) {
  const ModularRing ring(ParamMode::symbolic(2));
  for (int n = 1; n <= 6; ++n)
    for (const auto& lam : reduced_partitions(n, 2)) EXPECT_TRUE(verify::check_schur_q(lam, ring).ok) << lam.to_string();
}
