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
#ifndef MODMAC_SELFCHECK_HPP
#define MODMAC_SELFCHECK_HPP

// Exact identity checks shared by the CLI `selfcheck` command and the test
// suites. Each check compares two independently computed sides and reports
// the residual on failure.

#include <cstdint>
#include <exception>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "modmac/json_io.hpp"
#include "modmac/macdonald.hpp"
#include "modmac/newton.hpp"
#include "modmac/oracles.hpp"
#include "modmac/symfunc.hpp"
#include "modmac/vertex_operator.hpp"

namespace modmac::verify {

struct CheckResult {
  std::string identity;
  int m = 0;
  std::optional<Partition> lambda;
  std::optional<int> n;
  bool ok = false;
  std::string message;
  std::optional<PExpr> delta;

  [[nodiscard]] nlohmann::json to_json() const {
    nlohmann::json j{{"identity", identity}, {"m", m}, {"status", ok ? "ok" : "fail"}};
    if (lambda) j["lambda"] = io::to_json(*lambda);
    if (n) j["n"] = *n;
    if (!message.empty()) j["message"] = message;
    j["delta"] = delta ? io::to_json(*delta) : nlohmann::json(nullptr);
    return j;
  }
};

namespace detail {

inline CheckResult make(std::string identity, int m, std::optional<Partition> lambda, std::optional<int> n) {
  CheckResult r;
  r.identity = std::move(identity);
  r.m = m;
  r.lambda = std::move(lambda);
  r.n = n;
  return r;
}

/// Records lhs - rhs; ok iff zero.
inline void compare(CheckResult& r, const PExpr& lhs, const PExpr& rhs) {
  PExpr diff = lhs - rhs;
  r.ok = diff.zero();
  if (!r.ok) r.delta = std::move(diff);
}

/// Runs `body`, converting any exception into a failed result.
template <class F>
CheckResult guarded(CheckResult r, F&& body) {
  try {
    body(r);
  } catch (const std::exception& e) {
    r.ok = false;
    r.message = e.what();
  }
  return r;
}

inline std::vector<Partition> partitions_up_to(int max_n, int min_n = 1) {
  std::vector<Partition> out;
  for (int n = min_n; n <= max_n; ++n)
    for (auto& p : all_partitions(n)) out.push_back(std::move(p));
  return out;
}

}  // namespace detail

// ---- partitions -------------------------------------------------------------

inline CheckResult check_equinumerosity(int n, int m) {
  return detail::guarded(detail::make("equinumerosity", m, std::nullopt, n), [&](CheckResult& r) {
    const auto counts = count_check(n, m);
    const auto [reg, red] = oracle::count_by_filter(n, m);
    r.ok = counts.equal && counts.regular_count == reg && counts.reduced_count == red;
    if (!r.ok)
      r.message = "regular " + std::to_string(counts.regular_count) + "/" + std::to_string(reg) + ", reduced " +
                  std::to_string(counts.reduced_count) + "/" + std::to_string(red);
  });
}

// ---- newton -----------------------------------------------------------------

/// N_l(lambda, nu) by both closed forms against the direct count, for every nu with |nu| <= |lambda|.
inline CheckResult check_nl(const Partition& lambda) {
  return detail::guarded(detail::make("nl_count", 0, lambda, std::nullopt), [&](CheckResult& r) {
    r.ok = true;
    for (int k = 0; k <= lambda.weight() && r.ok; ++k)
      for (const auto& nu : all_partitions(k)) {
        const auto brute = nl_brute(lambda, nu);
        const auto a = nl_closed(lambda, nu);
        const auto b = nl_closed_positions(lambda, nu);
        if (a != brute || b != brute) {
          r.ok = false;
          r.message = "nu=" + nu.to_string() + ": brute " + std::to_string(brute) + ", multiplicity form " +
                      std::to_string(a) + ", position form " + std::to_string(b);
          break;
        }
      }
  });
}

/**
 * Generalized Newton identity for lambda with the given R-sequence and d-sequence:
 * brute-force left side equals sum_mu d_{lambda mu} q_mu, d_{lambda mu} vanishes
 * unless mu >= lambda, and d_{lambda lambda} = (-1)^{s-1} d_{lambda_s}.
 */
inline CheckResult check_newton(const Partition& lambda, const ModularRing& ring, const DSeq& d,
                                const SeqAccessor& r_seq, const std::string& label = "traisesq") {
  return detail::guarded(detail::make(label, ring.m(), lambda, std::nullopt), [&](CheckResult& r) {
    const PExpr lhs = raising_sum(
        lambda, 1, [](int) { return CycRat(1); }, r_seq,
        [&](int n) -> const PExpr& { return ring.q_to_p(n); }, ring.m());
    PExpr rhs(ring.m());
    for (const auto& mu : all_partitions(lambda.weight())) {
      const CycRat c = d_lambda_mu(lambda, mu, d);
      if (is_zero(c)) continue;
      if (!dominates(mu, lambda)) {
        r.ok = false;
        r.message = "d_{lambda mu} nonzero for mu=" + mu.to_string() + " not dominating lambda";
        return;
      }
      rhs += c * ring.qprod_to_p(mu);
    }
    const CycRat lead = d_lambda_mu(lambda, lambda, d);
    CycRat expected = d(lambda.parts().back());
    if (lambda.length() % 2 == 0) expected = -expected;
    if (!(lead == expected)) {
      r.ok = false;
      r.message = "leading coefficient " + lead.to_string() + " != " + expected.to_string();
      return;
    }
    detail::compare(r, lhs, rhs);
  });
}

/// Newton identity for the creation series R_n (d_n = q^n - 1).
inline CheckResult check_newton_instance(const Partition& lambda, const ModularRing& ring) {
  return check_newton(lambda, ring, q_power_dseq(ring.mode()),
                      [&](int n) -> const PExpr& { return ring.r_to_p(n); });
}

/// Random rational d-sequence with numerators/denominators in [-9, 9] \ {0}, from `seed`.
inline DSeq random_dseq(std::uint64_t seed) {
  auto values = std::make_shared<std::map<int, CycRat>>();
  return [values, seed](int n) {
    auto it = values->find(n);
    if (it != values->end()) return it->second;
    std::mt19937_64 gen(seed * 1000003ULL + static_cast<std::uint64_t>(n));
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    int a = num(gen);
    if (a == 0) a = 1;
    CycRat v(Rational(a, den(gen)));
    values->emplace(n, v);
    return v;
  };
}

inline CheckResult check_newton_random(const Partition& lambda, const ModularRing& ring, std::uint64_t seed) {
  const DSeq d = random_dseq(seed);
  RecursiveR rec(d, ring);
  auto res = check_newton(lambda, ring, d, [&](int n) -> const PExpr& { return rec(n); },
                          "traisesq_random");
  if (!res.ok) res.message += (res.message.empty() ? "" : "; ") + std::string("seed ") + std::to_string(seed);
  return res;
}

/// R_n = sum_{mu |- n} d_mu q_mu, and the closed form of R_n against its generating series.
inline CheckResult check_r_expansion(int n, const ModularRing& ring) {
  return detail::guarded(detail::make("r_expansion", ring.m(), std::nullopt, n), [&](CheckResult& r) {
    const DSeq d = q_power_dseq(ring.mode());
    PExpr rhs(ring.m());
    for (const auto& mu : all_partitions(n)) rhs += d_mu(mu, d) * ring.qprod_to_p(mu);
    detail::compare(r, ring.r_to_p(n), rhs);
    if (!r.ok) return;
    detail::compare(r, ring.r_to_p(n), oracle::r_series(ring, n)[static_cast<std::size_t>(n)]);
    if (!r.ok) r.message = "closed form of R_n disagrees with its exponential series";
  });
}

// ---- symfunc ----------------------------------------------------------------

/// q_n closed form against the truncated exponential generating series.
inline CheckResult check_generating_function(int n, const ModularRing& ring) {
  return detail::guarded(detail::make("generating_function", ring.m(), std::nullopt, n), [&](CheckResult& r) {
    detail::compare(r, ring.q_to_p(n), oracle::q_series(ring, n)[static_cast<std::size_t>(n)]);
  });
}

/// sum_{i >= 1} R_i q_{n-i} = (q^n - 1) q_n.
inline CheckResult check_convolution(int n, const ModularRing& ring) {
  return detail::guarded(detail::make("convolution", ring.m(), std::nullopt, n), [&](CheckResult& r) {
    PExpr lhs(ring.m());
    for (int i = 1; i <= n; ++i) lhs += ring.r_to_p(i) * ring.q_to_p(n - i);
    detail::compare(r, lhs, (ring.mode().q().pow(n) - CycRat(1)) * ring.q_to_p(n));
  });
}

/// p_n = sum_{lambda |- n} n eps_n (-1)^{l-1} (l-1)!/m(lambda)! q_lambda, for m !| n.
inline CheckResult check_log_inversion(int n, const ModularRing& ring) {
  return detail::guarded(detail::make("q_to_p_logarithm", ring.m(), std::nullopt, n), [&](CheckResult& r) {
    PExpr sum(ring.m());
    for (const auto& lam : all_partitions(n)) {
      Rational c(factorial(lam.length() - 1), mult_factorial(lam));
      if ((lam.length() - 1) % 2) c = -c;
      sum += CycRat(c) * ring.qprod_to_p(lam);
    }
    sum = (CycRat(n) * ring.eps(n)) * sum;
    detail::compare(r, sum, PExpr::power_sum(ring.m(), Partition{n}));
  });
}

/// Degree-km coefficient of prod_i Y(xi^i z) vanishes, with the extreme coefficients m and (-1)^{(m+1)k}.
inline CheckResult check_modular_relation(int k, const ModularRing& ring) {
  return detail::guarded(detail::make("modular_relation", ring.m(), std::nullopt, k * ring.m()), [&](CheckResult& r) {
    const int m = ring.m();
    const auto rel = modular_relation_check(k, ring);
    const CycRat top = rel.relation.coeff(Partition{k * m});
    const CycRat bottom = rel.relation.coeff(Partition(std::vector<int>(static_cast<std::size_t>(m), k)));
    const CycRat expected_bottom((m + 1) * k % 2 ? -1 : 1);
    r.ok = rel.holds && top == CycRat(m) && bottom == expected_bottom;
    if (!rel.holds) r.delta = rel.p_image;
    if (!(top == CycRat(m))) r.message = "coefficient of q_(km) is " + top.to_string();
    if (!(bottom == expected_bottom)) r.message = "coefficient of q_(k^m) is " + bottom.to_string();
  });
}

/// p_to_q_reduced(q_lambda) is supported on reduced mu >= lambda, with coefficient 1 at a reduced lambda.
inline CheckResult check_basis_triangularity(const Partition& lambda, const ModularRing& ring) {
  return detail::guarded(detail::make("basis_triangularity", ring.m(), lambda, std::nullopt), [&](CheckResult& r) {
    const QExpr x = ring.p_to_q_reduced(ring.qprod_to_p(lambda));
    r.ok = true;
    for (const auto& [mu, c] : x.terms())
      if (!dominates(mu, lambda)) {
        r.ok = false;
        r.message = "q" + mu.to_string() + " appears but does not dominate";
      }
    if (lambda.is_reduced(ring.m()) && !(x.coeff(lambda) == CycRat(1))) {
      r.ok = false;
      r.message = "coefficient at lambda is " + x.coeff(lambda).to_string();
    }
    if (r.ok) detail::compare(r, ring.q_to_p(x), ring.qprod_to_p(lambda));
  });
}

/// <p_n f, g> = <f, n eps_n d/dp_n g> on a pair of elements.
inline CheckResult check_h_adjoint(int n, const PExpr& f, const PExpr& g, const ModularRing& ring) {
  return detail::guarded(detail::make("h_adjoint", ring.m(), std::nullopt, n), [&](CheckResult& r) {
    const CycRat lhs = ring.scalar_product(PExpr::power_sum(ring.m(), Partition{n}) * f, g);
    const CycRat rhs = ring.scalar_product(f, (CycRat(n) * ring.eps(n)) * d_dp(n, g));
    r.ok = lhs == rhs;
    if (!r.ok) r.message = lhs.to_string() + " != " + rhs.to_string();
  });
}

// ---- operator ---------------------------------------------------------------

/// X_0 q_lambda by the index-sum series, the normally ordered differential form and the raw exponentials.
inline CheckResult check_x0_agreement(const Partition& lambda, const ModularRing& ring, bool with_exponential) {
  return detail::guarded(detail::make("x0_agreement", ring.m(), lambda, std::nullopt), [&](CheckResult& r) {
    const PExpr series = x0_apply_series(lambda, ring);
    const PExpr& q = ring.qprod_to_p(lambda);
    detail::compare(r, series, x0_apply_diff(q, ring));
    if (r.ok && with_exponential) {
      detail::compare(r, series, oracle::x0_apply_exponential(q, ring));
      if (!r.ok) r.message = "disagrees with the exponential expansion";
    }
  });
}

/// X_0 q_lambda through the Newton expansion: raising, leading coefficient c_{lambda lambda}, same p-image.
inline CheckResult check_x0_newton(const Partition& lambda, const ModularRing& ring) {
  return detail::guarded(detail::make("x0_leading", ring.m(), lambda, std::nullopt), [&](CheckResult& r) {
    const QExpr x = x0_apply_newton(lambda, ring.mode());
    for (const auto& [mu, c] : x.terms())
      if (!dominates(mu, lambda)) {
        r.ok = false;
        r.message = "term q" + mu.to_string() + " does not dominate";
        return;
      }
    const CycRat expected = eigenvalue_c(lambda, ring.mode());
    if (!(x.coeff(lambda) == expected)) {
      r.ok = false;
      r.message = "leading coefficient " + x.coeff(lambda).to_string() + " != " + expected.to_string();
      return;
    }
    detail::compare(r, ring.q_to_p(x), x0_apply_series(lambda, ring));
  });
}

/// X0Matrix construction: dominance-upper-triangular with c_{lambda lambda} on the diagonal.
inline CheckResult check_x0_matrix(int n, const ModularRing& ring) {
  return detail::guarded(detail::make("x0_triangular", ring.m(), std::nullopt, n), [&](CheckResult& r) {
    const X0Matrix x = x0_matrix(n, ring);  // asserts internally
    r.ok = true;
    for (std::size_t i = 0; i < x.order.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j)
        if (!is_zero(x.entries[i][j])) r.ok = false;
      if (!(x.entries[i][i] == eigenvalue_c(x.order[i], ring.mode()))) r.ok = false;
    }
  });
}

/// <X_0 q_lambda, q_mu> = <q_lambda, X_0 q_mu> for all lambda, mu in P_m(n).
inline CheckResult check_self_adjoint(int n, const ModularRing& ring) {
  return detail::guarded(detail::make("self_adjoint", ring.m(), std::nullopt, n), [&](CheckResult& r) {
    const auto basis = reduced_partitions(n, ring.m());
    std::vector<PExpr> images;
    for (const auto& lam : basis) images.push_back(x0_apply_diff(ring.qprod_to_p(lam), ring));
    r.ok = true;
    for (std::size_t i = 0; i < basis.size() && r.ok; ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        const CycRat a = ring.scalar_product(images[i], ring.qprod_to_p(basis[j]));
        const CycRat b = ring.scalar_product(ring.qprod_to_p(basis[i]), images[j]);
        if (!(a == b)) {
          r.ok = false;
          r.message = "<X0 q" + basis[i].to_string() + ", q" + basis[j].to_string() + "> = " + a.to_string() +
                      " but <q, X0 q> = " + b.to_string();
          break;
        }
      }
  });
}

/// Eigenvalues on P_m(n) are pairwise distinct as polynomials in q.
inline CheckResult check_eigen_separation(int n, int m) {
  return detail::guarded(detail::make("eigen_separation", m, std::nullopt, n), [&](CheckResult& r) {
    const auto mode = ParamMode::symbolic(m);
    const auto basis = reduced_partitions(n, m);
    std::vector<CycRat> ev;
    for (const auto& p : basis) ev.push_back(eigenvalue_c(p, mode));
    r.ok = true;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j)
        if (ev[i] == ev[j] || eigen_collision(basis[i], basis[j], m)) {
          r.ok = false;
          r.message = basis[i].to_string() + " and " + basis[j].to_string() + " share an eigenvalue";
        }
  });
}

/**
 * eigen_collision agrees with symbolic equality of eigenvalues on `pairs` random
 * same-weight pairs of arbitrary partitions plus the family (1^k 2^{m+l}) vs (1^{k+2m} 2^l).
 */
inline CheckResult check_collision_predicate(int m, int pairs, std::uint64_t seed, int max_weight = 12) {
  return detail::guarded(detail::make("eigen_collision", m, std::nullopt, std::nullopt), [&](CheckResult& r) {
    const auto mode = ParamMode::symbolic(m);
    std::mt19937_64 gen(seed);
    std::vector<std::pair<Partition, Partition>> cases;
    for (int k = 0; k <= 2; ++k)
      for (int l = 0; l <= 2; ++l) {
        std::vector<int> a(static_cast<std::size_t>(m + l), 2), b(static_cast<std::size_t>(l), 2);
        a.insert(a.end(), static_cast<std::size_t>(k), 1);
        b.insert(b.end(), static_cast<std::size_t>(k + 2 * m), 1);
        cases.emplace_back(Partition(a), Partition(b));
      }
    std::vector<std::vector<Partition>> by_weight;
    for (int w = 0; w <= max_weight; ++w) by_weight.push_back(all_partitions(w));
    std::uniform_int_distribution<int> weight(1, max_weight);
    int family = 0;
    while (static_cast<int>(cases.size()) < pairs) {
      const auto& pool = by_weight[static_cast<std::size_t>(weight(gen))];
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      const Partition& a = pool[pick(gen)];
      // every fourth pair is forced to collide by shifting multiplicities by m
      if (++family % 4 == 0 && a.length() > 0) {
        std::vector<int> parts = a.parts();
        parts.insert(parts.end(), static_cast<std::size_t>(m), parts.back());
        auto mults = Partition(parts).multiplicities();
        cases.emplace_back(a, Partition::from_multiplicities(mults));
        continue;
      }
      cases.emplace_back(a, pool[pick(gen)]);
    }
    r.ok = true;
    int collisions = 0;
    for (const auto& [a, b] : cases) {
      const bool predicted = eigen_collision(a, b, m);
      const bool actual = eigenvalue_c(a, mode) == eigenvalue_c(b, mode);
      collisions += actual;
      if (predicted != actual) {
        r.ok = false;
        r.message = a.to_string() + " vs " + b.to_string() + ": predicate " + (predicted ? "true" : "false") +
                    ", eigenvalues " + (actual ? "equal" : "differ");
        return;
      }
    }
    r.message = std::to_string(cases.size()) + " pairs, " + std::to_string(collisions) + " collisions";
  });
}

// ---- macdonald --------------------------------------------------------------

/// all_q(n): unitriangular, eigenvectors under both X_0 implementations, diagonal Gram matrix.
inline CheckResult check_macdonald(int n, const ModularRing& ring) {
  return detail::guarded(detail::make("macdonald", ring.m(), std::nullopt, n), [&](CheckResult& r) {
    const auto qs = all_q(n, ring);
    r.ok = true;
    for (const auto& q : qs) {
      if (!(q.q_coeffs.coeff(q.lambda) == CycRat(1))) r.ok = false;
      for (const auto& [mu, c] : q.q_coeffs.terms())
        if (!dominates(mu, q.lambda) || !mu.is_reduced(ring.m())) r.ok = false;
      if (!r.ok) {
        r.message = "Q" + q.lambda.to_string() + " is not unitriangular";
        return;
      }
      PExpr via_series(ring.m());
      for (const auto& [mu, c] : q.q_coeffs.terms()) via_series += c * x0_apply_series(mu, ring);
      detail::compare(r, via_series, q.eigenvalue * q.p_form);
      if (!r.ok) {
        r.lambda = q.lambda;
        r.message = "not an eigenvector of the series form of X0";
        return;
      }
      detail::compare(r, x0_apply_diff(q.p_form, ring), q.eigenvalue * q.p_form);
      if (!r.ok) {
        r.lambda = q.lambda;
        r.message = "not an eigenvector of the differential form of X0";
        return;
      }
    }
    (void)gram(qs, ring);  // throws on a nonzero off-diagonal entry
  });
}

/// Perturbing one C_{lambda nu}, nu > lambda, destroys the eigenvector property.
inline CheckResult check_uniqueness(const Partition& lambda, const ModularRing& ring, std::uint64_t seed) {
  return detail::guarded(detail::make("uniqueness", ring.m(), lambda, std::nullopt), [&](CheckResult& r) {
    const auto q = solve_q(lambda, ring);
    std::vector<Partition> above;
    for (const auto& mu : reduced_partitions(lambda.weight(), ring.m()))
      if (mu != lambda && dominates(mu, lambda)) above.push_back(mu);
    r.ok = true;
    if (above.empty()) return;
    std::mt19937_64 gen(seed);
    const Partition& nu = above[std::uniform_int_distribution<std::size_t>(0, above.size() - 1)(gen)];
    const CycRat bump(Rational(std::uniform_int_distribution<int>(1, 9)(gen), 7));
    const PExpr perturbed = q.p_form + bump * ring.qprod_to_p(nu);
    r.ok = !(x0_apply_diff(perturbed, ring) == q.eigenvalue * perturbed);
    if (!r.ok) r.message = "perturbing C at " + nu.to_string() + " kept the eigenvector property";
  });
}

/// m = 2: Q_lambda at q = 0 equals the classical Schur Q-function.
inline CheckResult check_schur_q(const Partition& lambda, const ModularRing& ring) {
  return detail::guarded(detail::make("schur_q", ring.m(), lambda, std::nullopt), [&](CheckResult& r) {
    detail::compare(r, specialize_q0(solve_q(lambda, ring), ring), schur_q_oracle(lambda));
  });
}

// ---- suite ------------------------------------------------------------------

struct SuiteOptions {
  int m = 2;
  int max_n = 6;
  std::uint64_t seed = 1;
  int random_dseqs = 3;
  Cyc q0 = Cyc(2);
};

/// The selfcheck sweep for one modulus, every degree up to max_n.
inline std::vector<CheckResult> run_suite(const SuiteOptions& opt) {
  const int m = opt.m;
  std::vector<CheckResult> out;
  const ModularRing sym(ParamMode::symbolic(m));
  const ModularRing ev(ParamMode::eval(m, opt.q0 * Cyc::xi(m, 0)));
  for (int n = 0; n <= std::max(opt.max_n, 12); ++n) out.push_back(check_equinumerosity(n, m));
  const auto lambdas = detail::partitions_up_to(opt.max_n);
  for (const auto& lam : lambdas) out.push_back(check_nl(lam));
  for (int n = 1; n <= opt.max_n; ++n) {
    out.push_back(check_generating_function(n, sym));
    out.push_back(check_r_expansion(n, sym));
    out.push_back(check_convolution(n, sym));
    if (n % m) out.push_back(check_log_inversion(n, sym));
  }
  for (int n = 1; n <= std::min(opt.max_n, 4); ++n) {
    if (n % m == 0) continue;
    for (int j = 1; j + n <= opt.max_n; ++j) {
      const PExpr& g = sym.qprod_to_p(Partition{j + n});
      out.push_back(check_h_adjoint(n, sym.q_to_p(j), g, sym));
      out.push_back(check_h_adjoint(n, ev.q_to_p(j), ev.q_to_p(j + n), ev));
    }
  }
  for (int k = 1; k * m <= std::max(opt.max_n, m); ++k) out.push_back(check_modular_relation(k, sym));
  for (const auto& lam : lambdas) {
    out.push_back(check_newton_instance(lam, sym));
    for (int s = 0; s < opt.random_dseqs; ++s)
      out.push_back(check_newton_random(lam, ev, opt.seed * 7919 + static_cast<std::uint64_t>(s)));
    out.push_back(check_basis_triangularity(lam, sym));
    out.push_back(check_x0_agreement(lam, sym, true));
    out.push_back(check_x0_newton(lam, sym));
  }
  for (int n = 1; n <= opt.max_n; ++n) {
    out.push_back(check_x0_matrix(n, sym));
    out.push_back(check_self_adjoint(n, sym));
    out.push_back(check_self_adjoint(n, ev));
    out.push_back(check_eigen_separation(n, m));
    out.push_back(check_macdonald(n, sym));
    out.push_back(check_macdonald(n, ev));
  }
  out.push_back(check_collision_predicate(m, 500, opt.seed));
  for (const auto& lam : lambdas)
    if (lam.is_reduced(m) && lam.weight() >= 2) out.push_back(check_uniqueness(lam, ev, opt.seed));
  if (m == 2)
    for (const auto& lam : lambdas)
      if (lam.is_strict()) out.push_back(check_schur_q(lam, sym));
  return out;
}

}  // namespace modmac::verify

#endif  // MODMAC_SELFCHECK_HPP
