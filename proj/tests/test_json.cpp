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

#include <random>

#include "modmac/json_io.hpp"

using namespace modmac;

TEST(Json, PartitionRoundTrip) {
  for (const auto& p : all_partitions(6)) EXPECT_EQ(io::partition_from_json(io::to_json(p)), p);
  EXPECT_EQ(io::to_json(Partition{}).dump(), "[]");
  EXPECT_THROW(io::partition_from_json(nlohmann::json::parse("[1,2]")), std::invalid_argument);
}

TEST(Json, ScalarLayout) {
  const CycRat x = (CycRat::q() - CycRat(1)) / CycRat(Cyc(2) * Cyc::xi(3));
  const auto j = io::to_json(x, 3);
  EXPECT_EQ(j["den"].size(), 1u);
  EXPECT_EQ(j["num"][0].size(), 2u);  // phi(3) coefficients
  EXPECT_EQ(j["num"][1][0].get<std::string>().find('/') != std::string::npos, true);
  EXPECT_EQ(io::scalar_from_json(j, 3), x);
}

TEST(Json, RingElementRoundTrip) {
  for (int m : {2, 3, 5}) {
    const ModularRing ring(ParamMode::symbolic(m));
    for (int n = 0; n <= 4; ++n)
      for (const auto& lam : all_partitions(n)) {
        const PExpr& f = ring.qprod_to_p(lam);
        EXPECT_EQ(io::pexpr_from_json(nlohmann::json::parse(io::to_json(f).dump())), f);
        const QExpr g = ring.p_to_q_reduced(f);
        const QExpr back = io::qexpr_from_json(io::to_json(g));
        EXPECT_EQ(ring.q_to_p(back), f);
      }
  }
}

TEST(Json, TermsInReverseLexOrder) {
  const ModularRing ring(ParamMode::symbolic(2));
  const auto j = io::to_json(ring.q_to_p(5));
  std::vector<Partition> seen;
  for (const auto& t : j["terms"]) seen.push_back(io::partition_from_json(t["partition"]));
  for (std::size_t i = 1; i < seen.size(); ++i) EXPECT_GT(seen[i - 1], seen[i]);
}

TEST(Json, MacdonaldAndMatrixShapes) {
  const ModularRing ring(ParamMode::symbolic(2));
  const auto jq = io::to_json(solve_q({2, 1}, ring), 2);
  EXPECT_EQ(jq["lambda"], nlohmann::json::parse("[2,1]"));
  EXPECT_EQ(jq["p_form"]["basis"], "p");
  const auto jx = io::to_json(x0_matrix(3, ring));
  EXPECT_EQ(jx["order"], nlohmann::json::parse("[[3],[2,1]]"));
  EXPECT_EQ(jx["entries"].size(), 2u);
  const X0Matrix x = x0_matrix(3, ring);
  const std::string csv = io::matrix_to_csv(x.order, x.entries);
  EXPECT_NE(csv.find("\"2*q^3 - 1\""), std::string::npos);
}

TEST(Json, RejectsBadInput) {
  EXPECT_THROW(io::cyc_from_json(nlohmann::json::parse(R"(["1/1"])"), 3), std::invalid_argument);
  EXPECT_THROW(io::pexpr_from_json(nlohmann::json::parse(R"({"m":2,"basis":"q","terms":[]})")), std::invalid_argument);
}
