/* gknap_main.cpp -- command line front end: solve, oracle, reduce, bench */

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gknap/automaton.hpp"
#include "gknap/instance.hpp"

using nlohmann::ordered_json;

namespace {

int decision_exit(gknap::Decision d) {
  switch (d) {
    case gknap::Decision::Yes: return 0;
    case gknap::Decision::No: return 1;
    default: return 2;
  }
}

bool factor_witness_kind(const std::string& pk) {
  return pk == "SMP" || pk == "BSMP";
}

ordered_json witness_json(const std::string& pk, const gknap::SolveResult& res) {
  if (pk == "BGWP") {
    if (res.report.decision != gknap::Decision::Yes) return nullptr;
    return ordered_json(res.bgwp_factors);
  }
  if (pk == "WP" || !res.report.witness) return nullptr;
  if (factor_witness_kind(pk)) return ordered_json(res.report.witness->factors);
  return ordered_json(res.report.witness->exponents);
}

ordered_json stats_json(const gknap::SolveStats& s, bool timing) {
  return ordered_json{{"states", s.states},
                      {"edges", s.edges},
                      {"rounds", s.rounds},
                      {"millis", timing ? s.millis : 0.0}};
}

ordered_json report_json(const std::string& pk, const gknap::SolveResult& res,
                         bool timing) {
  const gknap::SolverReport& rep = res.report;
  ordered_json j;
  j["decision"] = gknap::to_string(rep.decision);
  j["witness"] = witness_json(pk, res);
  j["cost"] = rep.cost ? ordered_json(rep.cost->str()) : ordered_json(nullptr);
  j["stats"] = stats_json(rep.stats, timing);
  j["bound_used"] =
      rep.bound_used ? ordered_json(*rep.bound_used) : ordered_json(nullptr);
  j["bound_relative"] = rep.bound_relative;
  j["verified"] = rep.verified;
  return j;
}

int run_solve(const std::string& path, const gknap::SolveRequest& req,
              const std::string& dump_path, bool timing) {
  gknap::InstanceFile inst = gknap::load_instance(path);
  gknap::SolveResult res = gknap::dispatch_solve(inst, req);
  if (!dump_path.empty()) {
    if (!res.report.graph) {
      std::cerr << "no graph to dump: this (group, problem) pair is not "
                   "solved by saturation\n";
      return 3;
    }
    std::ofstream out(dump_path);
    if (!out) {
      std::cerr << "cannot write graph dump to '" << dump_path << "'\n";
      return 3;
    }
    out << gknap::to_dump_string(*res.report.graph, res.alphabet);
  }
  std::cout << report_json(inst.problem.kind, res, timing).dump(2) << "\n";
  return decision_exit(res.report.decision);
}

int run_oracle(const std::string& path, const gknap::OracleCaps& caps,
               bool timing) {
  gknap::InstanceFile inst = gknap::load_instance(path);
  gknap::OracleResult res = gknap::dispatch_oracle(inst, caps);
  ordered_json j;
  j["decision"] = gknap::to_string(res.decision);
  if (res.decision != gknap::Decision::Yes)
    j["witness"] = nullptr;
  else if (inst.problem.kind == "BGWP")
    j["witness"] = ordered_json(res.bgwp_factors);
  else if (!res.factors.empty() || factor_witness_kind(inst.problem.kind))
    j["witness"] = ordered_json(res.factors);
  else
    j["witness"] = ordered_json(res.exponents);
  j["cost"] = res.cost ? ordered_json(res.cost->str()) : ordered_json(nullptr);
  j["stats"] = ordered_json{{"states", 0},
                            {"edges", 0},
                            {"rounds", 0},
                            {"millis", timing ? res.millis : 0.0}};
  j["cap_exceeded"] = res.cap_exceeded;
  j["verified"] = res.decision == gknap::Decision::Yes;
  std::cout << j.dump(2) << "\n";
  return decision_exit(res.decision);
}

int run_reduce(const std::string& path, const std::string& from,
               const std::string& to, const std::string& out_path) {
  gknap::InstanceFile inst = gknap::load_instance(path);
  std::string note;
  gknap::InstanceFile out = gknap::apply_reduction(inst, from, to, &note);
  std::string text = gknap::serialize_instance(out, note);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) {
      std::cerr << "cannot write '" << out_path << "'\n";
      return 3;
    }
    f << text;
  }
  return 0;
}

struct BenchRow {
  uint64_t l = 0;
  uint32_t rounds = 0;
  uint64_t states = 0;
  uint64_t edges = 0;
  double millis = 0.0;
};

BenchRow bench_one(const gknap::Presentation& pres, uint64_t seed, uint64_t index,
                   uint64_t count) {
  std::mt19937_64 rng(seed + 1000003ULL * index);
  uint64_t max_len = 2 + (count > 1 ? (index * 10) / (count - 1) : 0);
  size_t k = 1 + rng() % 4;
  auto random_word = [&]() {
    gknap::Word w(2);
    size_t len = 1 + rng() % max_len;
    for (size_t j = 0; j < len; ++j)
      w.letters.push_back(
          gknap::Letter(static_cast<uint32_t>(rng() % 2), rng() % 2 ? 1 : -1));
    return w;
  };
  std::vector<gknap::Word> gens;
  for (size_t i = 0; i < k; ++i) gens.push_back(random_word());
  gknap::Word target = random_word();
  uint64_t l = target.letters.size();
  for (const gknap::Word& w : gens) l += w.letters.size();
  gknap::SolverReport rep = gknap::solve_ssp(pres, gens, target);
  return {l, rep.stats.rounds, rep.stats.states, rep.stats.edges,
          rep.stats.millis};
}

int run_bench(const std::string& suite, uint64_t count, uint64_t seed,
              unsigned jobs, bool timing) {
  gknap::Presentation pres;
  if (suite == "free")
    pres = gknap::make_presentation(gknap::Alphabet(2), {});
  else
    pres = gknap::parse_presentation("a,b | aa, bbb");

  std::vector<BenchRow> rows(count);
  if (jobs <= 1) {
    for (uint64_t i = 0; i < count; ++i)
      rows[i] = bench_one(pres, seed, i, count);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back([&, t]() {
        for (uint64_t i = t; i < count; i += jobs)
          rows[i] = bench_one(pres, seed, i, count);
      });
    for (auto& th : pool) th.join();
  }

  std::string out = "l,rounds_needed,states,edges,millis\n";
  char buf[160];
  for (const BenchRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%llu,%u,%llu,%llu,%.3f\n",
                  static_cast<unsigned long long>(r.l), r.rounds,
                  static_cast<unsigned long long>(r.states),
                  static_cast<unsigned long long>(r.edges),
                  timing ? r.millis : 0.0);
    out += buf;
  }
  std::cout << out;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"solvers for knapsack-type problems over groups"};
  app.require_subcommand(1);

  std::string path, mode = "adaptive", kp_bound, dump_path;
  double c0 = 1.0, c1 = 2.0;
  uint32_t max_rounds = 32;
  bool trusted_depth = false, timing = false;

  CLI::App* solve = app.add_subcommand("solve", "solve an instance file");
  solve->add_option("path", path, "instance file")->required();
  solve->add_option("--c0", c0, "depth bound constant term");
  solve->add_option("--c1", c1, "depth bound log2 coefficient");
  solve->add_option("--mode", mode, "round policy")
      ->check(CLI::IsMember({"fixed", "adaptive"}));
  solve->add_option("--max-rounds", max_rounds, "completion round cap");
  solve->add_option("--kp-bound", kp_bound,
                    "knapsack exponent bound polynomial, coefficients highest "
                    "degree first, e.g. 1,8,8");
  solve->add_option("--dump-graph", dump_path, "write the saturated graph");
  solve->add_flag("--trusted-depth", trusted_depth,
                  "treat the configured depth as complete, enabling exhaustion "
                  "\"no\" answers on presented groups");
  solve->add_flag("--timing", timing, "report wall-clock millis");

  uint64_t max_exp = 8, max_len = 8;
  CLI::App* oracle =
      app.add_subcommand("oracle", "run the reference enumeration");
  oracle->add_option("path", path, "instance file")->required();
  oracle->add_option("--max-exp", max_exp, "exponent cap for KP/IKP");
  oracle->add_option("--max-len", max_len, "factor-count cap for SMP");
  oracle->add_flag("--timing", timing, "report wall-clock millis");

  std::string from, to, out_path;
  CLI::App* reduce = app.add_subcommand("reduce", "transform an instance file");
  reduce->add_option("path", path, "instance file")->required();
  reduce->add_option("--from", from, "source problem kind")->required();
  reduce->add_option("--to", to, "target problem kind")->required();
  reduce->add_option("-o,--out", out_path, "output file (default: stdout)");

  std::string suite = "free";
  uint64_t count = 20, seed = 1;
  unsigned jobs = 1;
  CLI::App* bench = app.add_subcommand("bench", "benchmark saturation");
  bench->add_option("--suite", suite, "instance family")
      ->check(CLI::IsMember({"free", "a2b3"}));
  bench->add_option("--count", count, "number of instances");
  bench->add_option("--seed", seed, "random seed");
  bench->add_option("--jobs", jobs, "worker threads");
  bench->add_flag("--timing", timing, "report wall-clock millis");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  try {
    if (solve->parsed()) {
      gknap::SolveRequest req;
      req.params.c0 = c0;
      req.params.c1 = c1;
      req.params.mode = mode == "fixed"
                            ? gknap::SaturationParams::Mode::Fixed
                            : gknap::SaturationParams::Mode::Adaptive;
      req.params.max_rounds = max_rounds;
      req.params.trusted_depth = trusted_depth;
      req.params.keep_graph = !dump_path.empty();
      if (!kp_bound.empty()) {
        gknap::Poly p;
        std::string cur;
        std::stringstream ss(kp_bound);
        while (std::getline(ss, cur, ','))
          p.coeffs.push_back(std::stoull(cur));
        req.kp_bound.p = p;
      }
      return run_solve(path, req, dump_path, timing);
    }
    if (oracle->parsed()) return run_oracle(path, {max_exp, max_len}, timing);
    if (reduce->parsed()) return run_reduce(path, from, to, out_path);
    if (bench->parsed()) return run_bench(suite, count, seed, jobs, timing);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
