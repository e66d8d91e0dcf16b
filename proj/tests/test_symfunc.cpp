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

#include "modmac/linalg.hpp"
#include "modmac/oracles.hpp"
#include "modmac/selfcheck.hpp"
#include "modmac/symfunc.hpp"

using namespace modmac;

namespace {

PExpr p(int m, const Partition& lambda, const CycRat& c = CycRat(1)) { return PExpr::power_sum(m, lambda, c); }

}  // namespace

TEST(PExpr, Multiplication) {
  EXPECT_EQ(p(3, {1}) * p(3, {2, 1}), p(3, {2, 1, 1}));
  EXPECT_EQ((p(3, {1}) + p(3, {2})) * p(3, {1}), p(3, {1, 1}) + p(3, {2, 1}));
  const PExpr f = p(3, {2, 1}, CycRat(Cyc::xi(3))) + p(3, {1});
  EXPECT_EQ(PExpr::one(3) * f, f);
  EXPECT_THROW(p(2, {1}) * p(3, {1}), std::invalid_argument);
  EXPECT_THROW(p(2, {2}), std::invalid_argument);
}

TEST(PExpr, DegreeAndParts) {
  const PExpr f = p(3, {2, 1}) + p(3, {1});
  EXPECT_FALSE(f.degree().has_value());
  EXPECT_EQ(f.homogeneous_part(1), p(3, {1}));
  EXPECT_EQ(p(3, {2, 1}).degree(), 3);
  EXPECT_TRUE((f - f).zero());
}

TEST(PExpr, Derivative) {
  EXPECT_EQ(d_dp(1, p(2, {1, 1})), p(2, {1}, CycRat(2)));
  EXPECT_TRUE(d_dp(3, p(2, {1, 1})).zero());
  EXPECT_EQ(d_dp(1, p(2, {3, 1, 1})), p(2, {3, 1}, CycRat(2)));
  EXPECT_THROW(d_dp(2, p(2, {1})), std::invalid_argument);
}

TEST(ModularRing, QToP) {
  for (int m : {2, 3}) {
    const ModularRing ring(ParamMode::symbolic(m));
    const CycRat e1 = ring.eps(1);
    EXPECT_EQ(ring.q_to_p(0), PExpr::one(m));
    PExpr expected = p(m, {1, 1}, CycRat(1) / (CycRat(2) * e1 * e1));
    if (m == 3) expected += p(3, {2}, CycRat(1) / (CycRat(2) * ring.eps(2)));
    EXPECT_EQ(ring.q_to_p(2), expected);
    EXPECT_EQ(ring.qprod_to_p({}), PExpr::one(m));
    EXPECT_EQ(ring.qprod_to_p({1, 1}), p(m, {1, 1}, CycRat(1) / (e1 * e1)));
    EXPECT_EQ(ring.q_to_p(-1), PExpr(m));
  }
}

TEST(ModularRing, RToP) {
  const ModularRing ring(ParamMode::symbolic(2));
  EXPECT_EQ(ring.r_to_p(0), PExpr::one(2));
  EXPECT_EQ(ring.r_to_p(1), p(2, {1}, CycRat(-2)));
  EXPECT_EQ(ring.r_to_p(2), p(2, {1, 1}, CycRat(2)));
}

TEST(ModularRing, ScalarProduct) {
  const ModularRing ring(ParamMode::symbolic(2));
  const CycRat q = CycRat::q();
  EXPECT_EQ(ring.scalar_product(p(2, {1}), p(2, {1})), (CycRat(1) - q) / CycRat(2));
  EXPECT_TRUE(is_zero(ring.scalar_product(p(2, {1}), p(2, {3}))));
  for (int m : {2, 3, 4}) {
    const ModularRing r(ParamMode::symbolic(m));
    EXPECT_EQ(r.scalar_product(r.q_to_p(1), r.q_to_p(1)), r.eps(1).inverse());
  }
}

TEST(ModularRing, ReducedBasisChange) {
  const ModularRing ring(ParamMode::symbolic(2));
  const QExpr a = ring.p_to_q_reduced(ring.qprod_to_p({3, 1}));
  EXPECT_EQ(a.terms().size(), 1u);
  EXPECT_EQ(a.coeff({3, 1}), CycRat(1));
  const QExpr b = ring.p_to_q_reduced(p(2, {1}));
  EXPECT_EQ(b.coeff({1}), ring.eps(1));
  const QExpr c = ring.p_to_q_reduced(ring.qprod_to_p({1, 1}));
  EXPECT_EQ(c.terms().size(), 1u);
  EXPECT_EQ(c.coeff({2}), CycRat(2));
}

TEST(ModularRing, ReducedBasisChangeAgreesWithGenericSolve) {
  // independent route: solve the CycRat linear system over the p-basis directly
  for (int m : {2, 3}) {
    const ModularRing ring(ParamMode::symbolic(m));
    for (int n = 1; n <= 5; ++n) {
      const auto reduced = reduced_partitions(n, m);
      const auto regular = regular_partitions(n, m);
      Matrix<CycRat> a(regular.size(), std::vector<CycRat>(reduced.size()));
      for (std::size_t j = 0; j < reduced.size(); ++j)
        for (std::size_t i = 0; i < regular.size(); ++i) a[i][j] = ring.qprod_to_p(reduced[j]).coeff(regular[i]);
      for (const auto& lam : all_partitions(n)) {
        const PExpr f = ring.qprod_to_p(lam);
        std::vector<CycRat> rhs;
        for (const auto& rho : regular) rhs.push_back(f.coeff(rho));
        const auto x = solve(a, rhs);
        ASSERT_TRUE(x.has_value());
        const QExpr fast = ring.p_to_q_reduced(f);
        for (std::size_t j = 0; j < reduced.size(); ++j) EXPECT_EQ((*x)[j], fast.coeff(reduced[j]));
      }
    }
  }
}

TEST(ModularRing, EvalModeAgreesWithSpecializedSymbolic) {
  const ModularRing sym(ParamMode::symbolic(3));
  const ModularRing ev(ParamMode::eval(3, Cyc(2)));
  for (const auto& lam : all_partitions(4)) {
    const PExpr a = sym.qprod_to_p(lam);
    const PExpr b = ev.qprod_to_p(lam);
    for (const auto& [rho, c] : a.terms()) EXPECT_EQ(CycRat(evaluate(c, Cyc(2))), b.coeff(rho));
  }
}

TEST(ModularRelation, SmallCases) {
  const ModularRing r2(ParamMode::symbolic(2));
  const auto rel = modular_relation_check(1, r2);
  EXPECT_TRUE(rel.holds);
  EXPECT_EQ(r2.qprod_to_p({1, 1}), CycRat(2) * r2.q_to_p(2));
  EXPECT_TRUE(modular_relation_check(2, r2).holds);
  const ModularRing r3(ParamMode::symbolic(3));
  const auto rel3 = modular_relation_check(1, r3);
  EXPECT_TRUE(rel3.holds);
  EXPECT_EQ(rel3.relation.coeff({3}), CycRat(3));
  EXPECT_EQ(rel3.relation.coeff({1, 1, 1}), CycRat(1));
}

TEST(Generating, ClosedFormsMatchExponentials) {
  for (int m : {2, 3, 4}) {
    const ModularRing ring(ParamMode::symbolic(m));
    const auto qs = oracle::q_series(ring, 8);
    const auto rs = oracle::r_series(ring, 8);
    for (int n = 0; n <= 8; ++n) {
      EXPECT_EQ(qs[n], ring.q_to_p(n)) << "m=" << m << " n=" << n;
      EXPECT_EQ(rs[n], ring.r_to_p(n)) << "m=" << m << " n=" << n;
    }
  }
}

TEST(Identities, SelfcheckHelpers) {
  for (int m : {2, 3}) {
    const ModularRing ring(ParamMode::symbolic(m));
    for (int n = 1; n <= 7; ++n) {
      if (n % m) {
        EXPECT_TRUE(verify::check_log_inversion(n, ring).ok);
        EXPECT_TRUE(verify::check_h_adjoint(n, ring.q_to_p(2), ring.qprod_to_p({n + 1, 1}), ring).ok);
      }
      for (const auto& lam : all_partitions(n)) EXPECT_TRUE(verify::check_basis_triangularity(lam, ring).ok);
    }
  }
}

TEST(Linalg, InvertAndSolve) {
  Matrix<Rational> a{{2, 1}, {1, 1}};
  const auto inv = invert(a);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ((*inv)[0][0], Rational(1));
  EXPECT_EQ((*inv)[0][1], Rational(-1));
  EXPECT_EQ((*inv)[1][1], Rational(2));
  Matrix<Rational> s{{1, 2}, {2, 4}};
  EXPECT_FALSE(invert(s).has_value());
}
