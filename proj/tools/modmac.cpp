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

// modmac: command-line front end. Exit status 0 on success, 1 when a
// verification fails, 2 on a usage error.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "modmac/json_io.hpp"
#include "modmac/macdonald.hpp"
#include "modmac/newton.hpp"
#include "modmac/selfcheck.hpp"

namespace {

using nlohmann::json;
using namespace modmac;

constexpr int kVerificationFailure = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int m = 2;
  std::optional<int> n;
  std::string lambda;
  std::string cls = "all";
  std::string mode = "symbolic";
  std::string q0;
  std::string c0;
  std::string out = "json";
  bool out_given = false;
  std::uint64_t seed = 1;
  int max_n = 6;
};

Partition parse_lambda(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--lambda: '" + text + "' is not a comma-separated list of integers");
    }
  }
  try {
    return Partition(parts);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--lambda: ") + e.what());
  }
}

Partition require_lambda(const RunConfig& cfg) {
  if (cfg.lambda.empty()) throw UsageError("--lambda is required");
  return parse_lambda(cfg.lambda);
}

int require_n(const RunConfig& cfg) {
  if (!cfg.n) throw UsageError("--n is required");
  if (*cfg.n < 0) throw UsageError("--n must be non-negative");
  return *cfg.n;
}

ParamMode make_mode(const RunConfig& cfg) {
  if (cfg.mode == "symbolic") {
    if (!cfg.q0.empty() || !cfg.c0.empty()) throw UsageError("--q0/--c0 only apply to --mode eval");
    return ParamMode::symbolic(cfg.m);
  }
  if (cfg.q0.empty()) throw UsageError("--q0 is required with --mode eval");
  Cyc q0, c0;
  try {
    q0 = parse_cyc(cfg.q0, cfg.m);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--q0: ") + e.what());
  }
  try {
    if (!cfg.c0.empty()) c0 = parse_cyc(cfg.c0, cfg.m);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--c0: ") + e.what());
  }
  try {
    return cfg.c0.empty() ? ParamMode::eval(cfg.m, q0) : ParamMode::eval(cfg.m, q0, c0);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--q0/--c0: ") + e.what());
  }
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void require_json(const RunConfig& cfg, const char* cmd) {
  if (cfg.out != "json") throw UsageError(std::string("--out: ") + cmd + " only supports json");
}

int cmd_partitions(const RunConfig& cfg) {
  const int n = require_n(cfg);
  const PartitionClass cls = cfg.cls == "m-regular"   ? PartitionClass::m_regular
                             : cfg.cls == "m-reduced" ? PartitionClass::m_reduced
                                                      : PartitionClass::all;
  const auto ps = enumerate(n, cls, cfg.m);
  if (cfg.out == "csv") {
    for (const auto& p : ps) {
      for (std::size_t i = 0; i < p.parts().size(); ++i) std::cout << (i ? "," : "") << p.parts()[i];
      std::cout << "\n";
    }
    return 0;
  }
  json arr = json::array();
  for (const auto& p : ps) arr.push_back(io::to_json(p));
  std::cout << arr.dump() << "\n";
  return 0;
}

int cmd_qexpand(const RunConfig& cfg) {
  require_json(cfg, "qexpand");
  const ModularRing ring(make_mode(cfg));
  const Partition lam = cfg.lambda.empty() ? Partition{require_n(cfg)} : parse_lambda(cfg.lambda);
  emit(json{{"lambda", io::to_json(lam)}, {"p_form", io::to_json(ring.qprod_to_p(lam))}});
  return 0;
}

json checks_json(const std::vector<verify::CheckResult>& rs, bool& ok) {
  json arr = json::array();
  for (const auto& r : rs) {
    ok = ok && r.ok;
    arr.push_back(r.to_json());
  }
  return arr;
}

int cmd_newton_verify(const RunConfig& cfg) {
  require_json(cfg, "newton-verify");
  const Partition lam = require_lambda(cfg);
  const ModularRing ring(make_mode(cfg));
  const DSeq d = q_power_dseq(ring.mode());
  json coeffs = json::array();
  for (const auto& mu : dominance_linear_extension(all_partitions(lam.weight()))) {
    const CycRat c = d_lambda_mu(lam, mu, d);
    if (!is_zero(c)) coeffs.push_back(json{{"mu", io::to_json(mu)}, {"d", io::to_json(c, cfg.m)}});
  }
  std::vector<verify::CheckResult> rs{verify::check_newton_instance(lam, ring)};
  const ModularRing ev(ParamMode::eval(cfg.m, Cyc(2) * Cyc::xi(cfg.m, 0)));
  for (int s = 0; s < 20; ++s)
    rs.push_back(verify::check_newton_random(lam, ev, cfg.seed * 7919 + static_cast<std::uint64_t>(s)));
  bool ok = true;
  json checks = checks_json(rs, ok);
  emit(json{{"m", cfg.m},
            {"lambda", io::to_json(lam)},
            {"lhs", io::to_json(newton_lhs(lam, ring))},
            {"d_lambda_mu", std::move(coeffs)},
            {"checks", std::move(checks)}});
  return ok ? 0 : kVerificationFailure;
}

int cmd_x0_matrix(const RunConfig& cfg) {
  const ModularRing ring(make_mode(cfg));
  const X0Matrix x = x0_matrix(require_n(cfg), ring);
  if (cfg.out == "csv") std::cout << io::matrix_to_csv(x.order, x.entries);
  else emit(io::to_json(x));
  return 0;
}

int cmd_x0_apply(const RunConfig& cfg) {
  require_json(cfg, "x0-apply");
  const Partition lam = require_lambda(cfg);
  const ModularRing ring(make_mode(cfg));
  const PExpr image = x0_apply_series(lam, ring);
  const QExpr plain = x0_apply_newton(lam, ring.mode());
  const bool agree = image == x0_apply_diff(ring.qprod_to_p(lam), ring) && image == ring.q_to_p(plain);
  emit(json{{"lambda", io::to_json(lam)},
            {"p_form", io::to_json(image)},
            {"q_form", io::to_json(plain)},
            {"eigenvalue", io::to_json(eigenvalue_c(lam, ring.mode()), cfg.m)},
            {"status", agree ? "ok" : "fail"}});
  return agree ? 0 : kVerificationFailure;
}

int cmd_macdonald(const RunConfig& cfg) {
  require_json(cfg, "macdonald");
  const ModularRing ring(make_mode(cfg));
  if (!cfg.lambda.empty()) {
    const Partition lam = parse_lambda(cfg.lambda);
    if (!lam.is_reduced(cfg.m)) throw UsageError("--lambda: " + lam.to_string() + " is not m-reduced");
    emit(io::to_json(solve_q(lam, ring), cfg.m));
    return 0;
  }
  json arr = json::array();
  for (const auto& q : all_q(require_n(cfg), ring)) arr.push_back(io::to_json(q, cfg.m));
  emit(arr);
  return 0;
}

int cmd_gram(const RunConfig& cfg) {
  const ModularRing ring(make_mode(cfg));
  const int n = require_n(cfg);
  const auto qs = all_q(n, ring);
  const auto g = gram(qs, ring);
  std::vector<Partition> order;
  for (const auto& q : qs) order.push_back(q.lambda);
  if (cfg.out == "csv") {
    std::cout << io::matrix_to_csv(order, g);
    return 0;
  }
  json ord = json::array();
  for (const auto& p : order) ord.push_back(io::to_json(p));
  emit(json{{"m", cfg.m}, {"n", n}, {"order", std::move(ord)}, {"entries", io::matrix_to_json(g, cfg.m)}});
  return 0;
}

int cmd_specialize(const RunConfig& cfg) {
  require_json(cfg, "specialize");
  const Partition lam = require_lambda(cfg);
  if (cfg.mode != "symbolic") throw UsageError("--mode: specialize needs symbolic mode");
  if (!lam.is_reduced(cfg.m)) throw UsageError("--lambda: " + lam.to_string() + " is not m-reduced");
  const ModularRing ring(make_mode(cfg));
  const PExpr s = specialize_q0(solve_q(lam, ring), ring);
  json j{{"m", cfg.m}, {"lambda", io::to_json(lam)}, {"q0", "0"}, {"p_form", io::to_json(s)}};
  if (cfg.m == 2 && lam.is_strict()) {
    const bool same = s == schur_q_oracle(lam);
    j["schur_q"] = same ? "equal" : "different";
    emit(j);
    return same ? 0 : kVerificationFailure;
  }
  emit(j);
  return 0;
}

int cmd_selfcheck(const RunConfig& cfg) {
  if (cfg.max_n < 1) throw UsageError("--max-n must be positive");
  verify::SuiteOptions opt;
  opt.m = cfg.m;
  opt.max_n = cfg.max_n;
  opt.seed = cfg.seed;
  const auto results = verify::run_suite(opt);
  bool ok = true;
  if (cfg.out_given && cfg.out == "json") {
    json arr = checks_json(results, ok);
    emit(arr);
    return ok ? 0 : kVerificationFailure;
  }
  // text table, identities in first-run order
  std::vector<std::string> names;
  std::map<std::string, std::pair<int, int>> tally;
  for (const auto& r : results) {
    if (!tally.count(r.identity)) names.push_back(r.identity);
    auto& [pass, total] = tally[r.identity];
    ++total;
    pass += r.ok;
    ok = ok && r.ok;
  }
  std::cout << std::left << std::setw(24) << "identity" << std::setw(10) << "passed" << "status\n";
  for (const auto& name : names) {
    const auto [pass, total] = tally[name];
    std::cout << std::setw(24) << name << std::setw(10) << (std::to_string(pass) + "/" + std::to_string(total))
              << (pass == total ? "ok" : "FAIL") << "\n";
  }
  for (const auto& r : results)
    if (!r.ok) std::cout << r.to_json().dump() << "\n";
  return ok ? 0 : kVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact modular Macdonald functions and their identities"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--m", cfg.m, "modulus m >= 2")->check(CLI::Range(2, 64));
    sub->add_option("--out", cfg.out, "output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--mode", cfg.mode, "parameter mode")->check(CLI::IsMember({"symbolic", "eval"}));
    sub->add_option("--q0", cfg.q0, "value of q in eval mode (rational or cyclotomic literal)");
    sub->add_option("--c0", cfg.c0, "value of c in eval mode (default xi^-1)");
    sub->add_option("--seed", cfg.seed, "seed for randomized sweeps");
  };

  std::map<std::string, std::function<int(const RunConfig&)>> handlers{
      {"partitions", cmd_partitions}, {"qexpand", cmd_qexpand},       {"newton-verify", cmd_newton_verify},
      {"x0-matrix", cmd_x0_matrix},   {"x0-apply", cmd_x0_apply},     {"macdonald", cmd_macdonald},
      {"gram", cmd_gram},             {"specialize", cmd_specialize}, {"selfcheck", cmd_selfcheck}};
  const std::map<std::string, std::string> help{
      {"partitions", "enumerate partitions of n"},
      {"qexpand", "expand q_lambda (or q_n) in power sums"},
      {"newton-verify", "check the generalized Newton identity for lambda"},
      {"x0-matrix", "matrix of X0 on the q-basis of degree n"},
      {"x0-apply", "apply X0 to q_lambda"},
      {"macdonald", "solve for Q_lambda (or all Q of degree n)"},
      {"gram", "Gram matrix of the Q basis of degree n"},
      {"specialize", "Q_lambda at q = 0"},
      {"selfcheck", "run the identity suite"}};
  for (const auto& [name, fn] : handlers) {
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    add_common(sub);
    if (name != "selfcheck") {
      sub->add_option("--n", cfg.n, "degree");
      sub->add_option("--lambda", cfg.lambda, "partition, e.g. 2,1");
    }
    if (name == "partitions")
      sub->add_option("--class", cfg.cls, "partition class")->check(CLI::IsMember({"all", "m-regular", "m-reduced"}));
    if (name == "selfcheck") sub->add_option("--max-n", cfg.max_n, "largest degree checked");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    for (const auto* sub : app.get_subcommands()) {
      cfg.out_given = sub->count("--out") > 0;
      return handlers.at(sub->get_name())(cfg);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const TheoremViolation& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kVerificationFailure;
  } catch (const PoleAtSpecialization& e) {
    std::cerr << "usage error: --q0: " << e.what() << "\n";
    return kUsageError;
  } catch (const EigenvalueCollisionAtEvaluation& e) {
    std::cerr << "usage error: --q0: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: --q0: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
