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

#include "modmac/oracles.hpp"
#include "modmac/selfcheck.hpp"
#include "modmac/vertex_operator.hpp"

using namespace modmac;

namespace {

const CycRat q = CycRat::q();
const CycRat one(1);

}  // namespace

TEST(X0Series, Examples) {
  for (int m : {2, 3, 5}) {
    const ModularRing ring(ParamMode::symbolic(m));
    EXPECT_EQ(x0_apply_series({}, ring), PExpr::one(m));
    const CycRat c1 = one + CycRat(Cyc(1) - Cyc::xi(m)) * (q - one);
    EXPECT_EQ(x0_apply_series({1}, ring), c1 * ring.q_to_p(1));
  }
  const ModularRing r2(ParamMode::symbolic(2));
  EXPECT_EQ(x0_apply_series({1}, r2), (CycRat(2) * q - one) * r2.q_to_p(1));
}

TEST(X0Diff, Examples) {
  const ModularRing ring(ParamMode::symbolic(2));
  EXPECT_EQ(x0_apply_diff(PExpr::one(2), ring), PExpr::one(2));
  EXPECT_EQ(x0_apply_diff(ring.q_to_p(1), ring), (CycRat(2) * q - one) * ring.q_to_p(1));
  const CycRat e1 = ring.eps(1);
  EXPECT_EQ(x0_apply_diff(PExpr::power_sum(2, {1, 1}), ring), (e1 * e1) * x0_apply_series({1, 1}, ring));
  EXPECT_THROW(x0_apply_diff(PExpr::power_sum(2, {1}) + PExpr::power_sum(2, {1, 1}), ring), std::invalid_argument);
}

TEST(X0, RoutesAgree) {
  for (int m : {2, 3, 4}) {
    const ModularRing ring(ParamMode::symbolic(m));
    for (int n = 1; n <= 4; ++n)
      for (const auto& lam : all_partitions(n)) {
        EXPECT_TRUE(verify::check_x0_agreement(lam, ring, true).ok) << lam.to_string();
        EXPECT_TRUE(verify::check_x0_newton(lam, ring).ok) << lam.to_string();
      }
  }
}

TEST(X0, CustomCParameter) {
  // c is a free parameter; the structural statements hold for other values too
  const ModularRing ring(ParamMode::eval(3, Cyc(2), Cyc(Rational(1, 3))));
  for (int n = 1; n <= 4; ++n) {
    EXPECT_TRUE(verify::check_x0_matrix(n, ring).ok);
    EXPECT_TRUE(verify::check_self_adjoint(n, ring).ok);
  }
}

TEST(Eigenvalue, Examples) {
  const auto m2 = ParamMode::symbolic(2);
  EXPECT_EQ(eigenvalue_c({}, m2), one);
  EXPECT_EQ(eigenvalue_c({2, 1}, m2), CycRat(2) * q * q - CycRat(2) * q + one);
  EXPECT_EQ(eigenvalue_c({2, 2}, m2), one);
  EXPECT_EQ(eigenvalue_c({1, 1, 1, 1}, m2), one);
  EXPECT_EQ(f_main({1}, ParamMode::symbolic(3)), q - one);
  EXPECT_TRUE(is_zero(f_main({1, 1}, m2)));
  EXPECT_EQ(f_main({2, 1}, m2), (q * q - one) - (q - one));
}

TEST(Eigenvalue, Collision) {
  EXPECT_TRUE(eigen_collision({2, 2}, {1, 1, 1, 1}, 2));
  EXPECT_FALSE(eigen_collision({3, 1}, {4}, 2));
  EXPECT_FALSE(eigenvalue_c({3, 1}, ParamMode::symbolic(2)) == eigenvalue_c({4}, ParamMode::symbolic(2)));
  EXPECT_TRUE(eigen_collision({3, 2, 1}, {3, 2, 1}, 3));
  for (int m : {2, 3}) EXPECT_TRUE(verify::check_collision_predicate(m, 200, 5).ok);
}

TEST(X0Matrix, SmallCase) {
  const ModularRing ring(ParamMode::symbolic(2));
  const X0Matrix x = x0_matrix(3, ring);
  ASSERT_EQ(x.order, (std::vector<Partition>{{3}, {2, 1}}));
  EXPECT_EQ(x.entries[0][0], CycRat(2) * q.pow(3) - one);
  EXPECT_EQ(x.entries[1][1], CycRat(2) * q * q - CycRat(2) * q + one);
  EXPECT_TRUE(is_zero(x.entries[1][0]));
  EXPECT_THROW(x0_matrix(0, ring), std::invalid_argument);
}

TEST(X0Matrix, EvalCollisionIsReported) {
  // c_(4) - c_(3,1) = 2(q - 1)(q^3 + 1) vanishes at q0 = -1
  const ModularRing ring(ParamMode::eval(2, Cyc(-1)));
  EXPECT_NO_THROW(x0_matrix(3, ring));
  EXPECT_THROW(x0_matrix(4, ring), EigenvalueCollisionAtEvaluation);
}

TEST(SelfAdjoint, Symbolic) {
  for (int m : {2, 3})
    for (int n = 1; n <= 4; ++n) EXPECT_TRUE(verify::check_self_adjoint(n, ModularRing(ParamMode::symbolic(m))).ok);
}
