/* instance.cpp -- instance file parsing, serialization, dispatch */

#include "gknap/instance.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "gknap/group_oracle.hpp"
#include "gknap/nilpotent.hpp"

namespace gknap {

namespace {

using Clock = std::chrono::steady_clock;

[[noreturn]] void fail(const std::string& source, int line,
                       const std::string& msg) {
  throw std::runtime_error(source + ":" + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::stringstream ss(s);
  while (std::getline(ss, cur, ',')) out.push_back(trim(cur));
  if (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return s;
}

uint64_t parse_u64(const std::string& s, const std::string& source, int line,
                   const std::string& key) {
  try {
    size_t pos = 0;
    unsigned long long v = std::stoull(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("junk");
    return v;
  } catch (const std::exception&) {
    fail(source, line, "key '" + key + "' needs a nonnegative integer, got '" +
                           s + "'");
  }
}

int64_t parse_i64(const std::string& s, const std::string& source, int line,
                  const std::string& key) {
  try {
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("junk");
    return v;
  } catch (const std::exception&) {
    fail(source, line, "key '" + key + "' needs an integer, got '" + s + "'");
  }
}

struct RawEntry {
  std::string value;
  int line = 0;
};

using RawSection = std::map<std::string, RawEntry>;

const std::vector<std::string> kGroupKinds = {
    "free", "free_abelian", "heisenberg", "hyperbolic", "bs", "fxf", "zomega"};

const std::vector<std::string> kProblemKinds = {
    "SSP",  "SSOP", "SSOP1", "SSOP2", "KP",   "KOP",    "KOP1", "KOP2",
    "IKP",  "BKP",  "BSMP",  "SMP",   "BGWP", "ZOE",    "BINSSP", "WP"};

std::vector<std::string> alphabet_names(const Alphabet& a) {
  if (!a.names.empty()) return a.names;
  std::vector<std::string> out;
  for (uint32_t i = 0; i < a.size; ++i) {
    if (a.size <= 26)
      out.push_back(std::string(1, static_cast<char>('a' + i)));
    else
      out.push_back("g" + std::to_string(i));
  }
  return out;
}

std::string presentation_text(const Presentation& p) {
  std::string out;
  auto names = alphabet_names(p.alphabet);
  for (size_t i = 0; i < names.size(); ++i) {
    if (i) out += ",";
    out += names[i];
  }
  if (!p.relators.empty()) {
    out += " | ";
    for (size_t i = 0; i < p.relators.size(); ++i) {
      if (i) out += ", ";
      out += format_word(p.relators[i], p.alphabet);
    }
  }
  return out;
}

}  // namespace

Alphabet GroupSpec::alphabet() const {
  if (kind == "free" || kind == "free_abelian") return Alphabet(rank);
  if (kind == "heisenberg") return Alphabet(2);
  if (kind == "hyperbolic" || kind == "fxf") return pres.alphabet;
  if (kind == "bs") return Alphabet(2, {"a", "t"});
  return Alphabet(0);  // zomega: no word alphabet
}

ZOmegaElement parse_zomega(const std::string& text) {
  ZOmegaElement out;
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty() || s == "0") return out;
  size_t i = 0;
  while (i < s.size()) {
    int64_t sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    if (i >= s.size() || s[i] != 'e')
      throw std::invalid_argument("bad basis element in '" + text + "'");
    ++i;
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i)
      throw std::invalid_argument("bad basis index in '" + text + "'");
    out.add(static_cast<uint32_t>(std::stoul(s.substr(start, i - start))), sign);
  }
  return out;
}

std::string format_zomega(const ZOmegaElement& e) {
  if (e.coords.empty()) return "0";
  std::string out;
  for (const auto& [idx, c] : e.coords) {
    int64_t mag = c < 0 ? -c : c;
    for (int64_t j = 0; j < mag; ++j) {
      if (c < 0)
        out += "-";
      else if (!out.empty())
        out += "+";
      out += "e" + std::to_string(idx);
    }
  }
  return out;
}

InstanceFile parse_instance(const std::string& text,
                            const std::string& source_name,
                            const std::string& dir) {
  RawSection group_raw, problem_raw;
  RawSection* cur = nullptr;
  std::string cur_name;

  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(source_name, lineno, "unterminated section header");
      std::string name = trim(line.substr(1, line.size() - 2));
      if (name == "group")
        cur = &group_raw;
      else if (name == "problem")
        cur = &problem_raw;
      else
        fail(source_name, lineno, "unknown section [" + name + "]");
      cur_name = name;
      continue;
    }
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      fail(source_name, lineno, "expected key = value");
    if (!cur)
      fail(source_name, lineno, "key outside of a [group]/[problem] section");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail(source_name, lineno, "empty key");
    if (cur->count(key))
      fail(source_name, lineno, "duplicate key '" + key + "' in [" + cur_name + "]");
    (*cur)[key] = {value, lineno};
  }

  auto take = [&](RawSection& sec, const std::string& key) {
    auto it = sec.find(key);
    if (it == sec.end()) return std::optional<RawEntry>{};
    std::optional<RawEntry> v = it->second;
    sec.erase(it);
    return v;
  };
  auto require = [&](RawSection& sec, const char* section, const std::string& key) {
    auto v = take(sec, key);
    if (!v)
      throw std::runtime_error(source_name + ": missing key '" + key +
                               "' in [" + section + "]");
    return *v;
  };
  auto reject_leftovers = [&](const RawSection& sec, const char* section) {
    if (!sec.empty())
      fail(source_name, sec.begin()->second.line,
           "unknown key '" + sec.begin()->first + "' in [" + std::string(section) +
               "] for this kind");
  };

  InstanceFile inst;

  RawEntry gkind = require(group_raw, "group", "kind");
  inst.group.kind = lower(gkind.value);
  if (std::find(kGroupKinds.begin(), kGroupKinds.end(), inst.group.kind) ==
      kGroupKinds.end())
    fail(source_name, gkind.line, "unknown group kind '" + gkind.value + "'");

  auto parse_dehn = [&](const RawEntry& e) {
    Poly p;
    for (const std::string& c : split_list(e.value))
      p.coeffs.push_back(parse_u64(c, source_name, e.line, "dehn"));
    if (p.coeffs.empty())
      fail(source_name, e.line, "key 'dehn' needs coefficients, highest degree first");
    return p;
  };

  if (inst.group.kind == "free" || inst.group.kind == "free_abelian") {
    RawEntry r = require(group_raw, "group", "rank");
    inst.group.rank =
        static_cast<uint32_t>(parse_u64(r.value, source_name, r.line, "rank"));
    if (inst.group.rank == 0) fail(source_name, r.line, "rank must be positive");
  } else if (inst.group.kind == "hyperbolic" || inst.group.kind == "fxf") {
    RawEntry pr = require(group_raw, "group", "presentation");
    try {
      inst.group.pres = parse_presentation(pr.value);
    } catch (const std::exception& e) {
      fail(source_name, pr.line, e.what());
    }
    if (auto d = take(group_raw, "dehn")) inst.group.dehn = parse_dehn(*d);
  } else if (inst.group.kind == "bs") {
    RawEntry n = require(group_raw, "group", "n");
    inst.group.bs.n =
        static_cast<uint32_t>(parse_u64(n.value, source_name, n.line, "n"));
    if (inst.group.bs.n == 0) fail(source_name, n.line, "n must be positive");
    if (auto s = take(group_raw, "sign"))
      inst.group.bs.sign =
          static_cast<int>(parse_i64(s->value, source_name, s->line, "sign"));
    else
      inst.group.bs.sign = 1;
  }
  reject_leftovers(group_raw, "group");

  RawEntry pkind = require(problem_raw, "problem", "kind");
  inst.problem.kind = upper(pkind.value);
  if (std::find(kProblemKinds.begin(), kProblemKinds.end(), inst.problem.kind) ==
      kProblemKinds.end())
    fail(source_name, pkind.line, "unknown problem kind '" + pkind.value + "'");

  Alphabet ab = inst.group.alphabet();
  auto parse_word_at = [&](const RawEntry& e, const std::string& key) {
    try {
      return parse_word(e.value, ab);
    } catch (const std::exception& ex) {
      fail(source_name, e.line, "key '" + key + "': " + ex.what());
    }
  };

  const std::string& pk = inst.problem.kind;
  bool zomega_words = inst.group.kind == "zomega";

  if (pk == "ZOE") {
    RawEntry z = require(problem_raw, "problem", "zoe");
    inst.problem.zoe_path = z.value;
    std::filesystem::path zp(z.value);
    if (zp.is_relative() && !dir.empty()) zp = std::filesystem::path(dir) / zp;
    std::ifstream in(zp);
    if (!in) fail(source_name, z.line, "cannot open zoe file '" + zp.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      inst.problem.zoe = parse_zoe(buf.str());
    } catch (const std::exception& e) {
      fail(source_name, z.line, std::string("bad zoe file: ") + e.what());
    }
  } else if (pk == "BINSSP") {
    RawEntry nums = require(problem_raw, "problem", "numbers");
    for (const std::string& t : split_list(nums.value))
      inst.problem.numbers.push_back(
          parse_u64(t, source_name, nums.line, "numbers"));
    RawEntry tgt = require(problem_raw, "problem", "target");
    inst.problem.num_target = parse_u64(tgt.value, source_name, tgt.line, "target");
  } else if (pk == "WP") {
    RawEntry w = require(problem_raw, "problem", "word");
    inst.problem.word = parse_word_at(w, "word");
  } else if (pk == "BGWP") {
    RawEntry l = require(problem_raw, "problem", "left");
    RawEntry r = require(problem_raw, "problem", "right");
    RawEntry m = require(problem_raw, "problem", "m");
    inst.problem.left = parse_word_at(l, "left");
    inst.problem.right = parse_word_at(r, "right");
    inst.problem.m = parse_u64(m.value, source_name, m.line, "m");
  } else if (zomega_words) {
    if (pk != "SSP")
      fail(source_name, pkind.line,
           "group kind zomega supports problem kinds SSP and ZOE");
    if (auto g = take(problem_raw, "gens")) {
      for (const std::string& t : split_list(g->value)) {
        try {
          inst.problem.zgens.push_back(parse_zomega(t));
        } catch (const std::exception& e) {
          fail(source_name, g->line, e.what());
        }
      }
    }
    RawEntry tgt = require(problem_raw, "problem", "target");
    try {
      inst.problem.ztarget = parse_zomega(tgt.value);
    } catch (const std::exception& e) {
      fail(source_name, tgt.line, e.what());
    }
  } else {
    // word-instance problems: gens / target (+ m for the bounded kinds)
    if (auto g = take(problem_raw, "gens"))
      for (const std::string& t : split_list(g->value)) {
        try {
          inst.problem.gens.push_back(parse_word(t, ab));
        } catch (const std::exception& e) {
          fail(source_name, g->line, std::string("key 'gens': ") + e.what());
        }
      }
    RawEntry tgt = require(problem_raw, "problem", "target");
    inst.problem.target = parse_word_at(tgt, "target");
    if (pk == "BKP" || pk == "BSMP") {
      RawEntry m = require(problem_raw, "problem", "m");
      inst.problem.m = parse_u64(m.value, source_name, m.line, "m");
    }
  }
  reject_leftovers(problem_raw, "problem");

  return inst;
}

InstanceFile load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str(), path,
                        std::filesystem::path(path).parent_path().string());
}

std::string serialize_instance(const InstanceFile& inst,
                               const std::string& witness_mapping) {
  const GroupSpec& g = inst.group;
  const ProblemSpec& p = inst.problem;
  Alphabet ab = g.alphabet();
  std::string out;
  if (!witness_mapping.empty())
    out += "# witness-mapping: " + witness_mapping + "\n";
  out += "[group]\nkind = " + g.kind + "\n";
  if (g.kind == "free" || g.kind == "free_abelian")
    out += "rank = " + std::to_string(g.rank) + "\n";
  if (g.kind == "hyperbolic" || g.kind == "fxf")
    out += "presentation = " + presentation_text(g.pres) + "\n";
  if (g.dehn) {
    out += "dehn = ";
    for (size_t i = 0; i < g.dehn->coeffs.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(g.dehn->coeffs[i]);
    }
    out += "\n";
  }
  if (g.kind == "bs") {
    out += "n = " + std::to_string(g.bs.n) + "\n";
    out += "sign = " + std::to_string(g.bs.sign) + "\n";
  }

  out += "\n[problem]\nkind = " + p.kind + "\n";
  auto words_line = [&](const char* key, const std::vector<Word>& ws) {
    out += std::string(key) + " = ";
    for (size_t i = 0; i < ws.size(); ++i) {
      if (i) out += ", ";
      out += format_word(ws[i], ab);
    }
    out += "\n";
  };
  if (p.kind == "ZOE") {
    out += "zoe = " + (p.zoe_path ? *p.zoe_path : std::string()) + "\n";
  } else if (p.kind == "BINSSP") {
    out += "numbers = ";
    for (size_t i = 0; i < p.numbers.size(); ++i) {
      if (i) out += ", ";
      out += std::to_string(p.numbers[i]);
    }
    out += "\n";
    out += "target = " + std::to_string(p.num_target ? *p.num_target : 0) + "\n";
  } else if (p.kind == "WP") {
    out += "word = " + format_word(p.word ? *p.word : Word(ab.size), ab) + "\n";
  } else if (p.kind == "BGWP") {
    out += "left = " + format_word(p.left ? *p.left : Word(ab.size), ab) + "\n";
    out += "right = " + format_word(p.right ? *p.right : Word(ab.size), ab) + "\n";
    out += "m = " + std::to_string(p.m ? *p.m : 0) + "\n";
  } else if (!p.zgens.empty() || p.ztarget) {
    out += "gens = ";
    for (size_t i = 0; i < p.zgens.size(); ++i) {
      if (i) out += ", ";
      out += format_zomega(p.zgens[i]);
    }
    out += "\n";
    out += "target = " + format_zomega(p.ztarget ? *p.ztarget : ZOmegaElement{}) +
           "\n";
  } else {
    words_line("gens", p.gens);
    out += "target = " + format_word(p.target ? *p.target : Word(ab.size), ab) +
           "\n";
    if (p.m) out += "m = " + std::to_string(*p.m) + "\n";
  }
  return out;
}

namespace {

[[noreturn]] void unsupported_pair(const std::string& gk, const std::string& pk) {
  throw std::runtime_error(
      "unsupported (group, problem) pair: (" + gk + ", " + pk +
      "); supported pairs: "
      "free: SSP SSOP SSOP1 SSOP2 KP KOP KOP1 KOP2 IKP BKP BSMP SMP WP; "
      "hyperbolic: SSP SSOP SSOP1 KP KOP KOP1 IKP BKP BSMP WP; "
      "free_abelian: SSP SSOP BSMP WP; heisenberg: SSP SSOP BSMP WP; "
      "bs: SSP WP; fxf: BGWP; zomega: SSP ZOE");
}

const Word& need_target(const ProblemSpec& p) {
  if (!p.target) throw std::runtime_error("problem key 'target' is required");
  return *p.target;
}

uint64_t need_m(const ProblemSpec& p) {
  if (!p.m) throw std::runtime_error("problem key 'm' is required");
  return *p.m;
}

SolverReport wp_report(const WpOracle& wp, const Word& w) {
  SolverReport rep;
  rep.decision = wp(free_reduce(w)) ? Decision::Yes : Decision::No;
  rep.verified = rep.decision == Decision::Yes;
  return rep;
}

}  // namespace

SolveResult dispatch_solve(const InstanceFile& inst, const SolveRequest& req) {
  const GroupSpec& g = inst.group;
  const ProblemSpec& p = inst.problem;
  const std::string& gk = g.kind;
  const std::string& pk = p.kind;

  SolveResult res;
  res.alphabet = g.alphabet();

  if (gk == "free" || gk == "hyperbolic") {
    Presentation pres =
        gk == "free" ? make_presentation(res.alphabet, {}) : g.pres;
    if (pk == "SSP") {
      res.report = solve_ssp(pres, p.gens, need_target(p), req.params);
      return res;
    }
    if (pk == "SSOP") {
      res.report = solve_ssop(pres, p.gens, need_target(p), req.params);
      return res;
    }
    if (pk == "BKP") {
      res.report = solve_bkp(pres, p.gens, need_target(p), need_m(p), req.params);
      return res;
    }
    if (pk == "BSMP") {
      res.report = solve_bsmp(pres, p.gens, need_target(p), need_m(p), req.params);
      return res;
    }
    if (pk == "KP") {
      res.report = solve_kp(pres, p.gens, need_target(p), req.kp_bound, req.params);
      return res;
    }
    if (pk == "KOP") {
      res.report = solve_kop(pres, p.gens, need_target(p), req.kp_bound, req.params);
      return res;
    }
    if (pk == "IKP") {
      res.report = solve_ikp(pres, p.gens, need_target(p), req.kp_bound, req.params);
      return res;
    }
    if (pk == "SSOP1") {
      res.report =
          solve_ssop1(pres, p.gens, need_target(p), res.alphabet, req.params);
      return res;
    }
    if (pk == "KOP1") {
      res.report = solve_kop1(pres, p.gens, need_target(p), res.alphabet,
                              req.params, req.kp_bound);
      return res;
    }
    if (pk == "WP") {
      if (!p.word) throw std::runtime_error("problem key 'word' is required");
      res.report = solve_ssp(pres, {}, *p.word, req.params);
      return res;
    }
    if (gk == "free") {
      if (pk == "SSOP2") {
        res.report = solve_ssop2(g.rank, p.gens, need_target(p), req.params);
        return res;
      }
      if (pk == "KOP2") {
        res.report =
            solve_kop2(g.rank, p.gens, need_target(p), req.params, req.kp_bound);
        return res;
      }
      if (pk == "SMP") {
        res.report = solve_smp_free(g.rank, p.gens, need_target(p), req.params);
        return res;
      }
    }
    unsupported_pair(gk, pk);
  }

  if (gk == "free_abelian" || gk == "heisenberg") {
    if (pk == "WP") {
      if (!p.word) throw std::runtime_error("problem key 'word' is required");
      res.report = wp_report(gk == "free_abelian" ? wp_abelianization(g.rank)
                                                  : wp_heisenberg(),
                             *p.word);
      return res;
    }
    auto oracle =
        gk == "free_abelian" ? free_abelian_oracle(g.rank) : heisenberg_oracle();
    if (pk == "SSP" || pk == "SSOP") {
      res.report = nilpotent_ssp(*oracle, res.alphabet, p.gens, need_target(p));
      return res;
    }
    if (pk == "BSMP") {
      res.report = nilpotent_bsmp(*oracle, res.alphabet, p.gens, need_target(p),
                                  need_m(p));
      return res;
    }
    unsupported_pair(gk, pk);
  }

  if (gk == "bs") {
    if (pk == "SSP") {
      if (g.bs.sign != 1 && g.bs.sign != -1)
        throw std::runtime_error(
            "the bs saturation solver needs sign = 1 or -1 (BS(n, n) or "
            "BS(n, -n)); other multipliers are oracle-only");
      res.report = bs_ssp(g.bs, p.gens, need_target(p));
      return res;
    }
    if (pk == "WP") {
      if (!p.word) throw std::runtime_error("problem key 'word' is required");
      res.report = wp_report(
          wp_bs(g.bs.n, static_cast<int64_t>(g.bs.sign) * g.bs.n), *p.word);
      return res;
    }
    unsupported_pair(gk, pk);
  }

  if (gk == "fxf") {
    if (pk == "BGWP") {
      if (!p.left || !p.right)
        throw std::runtime_error("problem keys 'left' and 'right' are required");
      MikhailovaGens mg = build_generators(g.pres);
      res.report = bgwp_bruteforce(mg, {*p.left, *p.right}, need_m(p));
      if (res.report.witness)
        for (uint32_t f : res.report.witness->factors)
          res.bgwp_factors.push_back(
              (f & 1) ? -static_cast<int32_t>(f / 2 + 1)
                      : static_cast<int32_t>(f / 2 + 1));
      return res;
    }
    unsupported_pair(gk, pk);
  }

  if (gk == "zomega") {
    if (pk == "SSP") {
      if (!p.ztarget) throw std::runtime_error("problem key 'target' is required");
      auto t0 = Clock::now();
      BruteResult br = zomega_brute_ssp(p.zgens, *p.ztarget);
      res.report.decision = br.decision;
      res.report.cost = br.cost;
      if (br.decision == Decision::Yes) {
        ZOmegaElement sum;
        for (size_t i = 0; i < p.zgens.size(); ++i)
          if (br.exponents[i]) sum = zomega_sum(sum, p.zgens[i]);
        if (!(sum == *p.ztarget))
          throw std::logic_error("zomega witness failed the sum re-check");
        SolutionWitness w;
        w.kind = GraphKind::SspChain;
        w.exponents = br.exponents;
        res.report.witness = std::move(w);
        res.report.verified = true;
      }
      res.report.stats.millis =
          std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
      return res;
    }
    if (pk == "ZOE") {
      if (!p.zoe) throw std::runtime_error("problem key 'zoe' is required");
      auto t0 = Clock::now();
      BruteResult br = zoe_bruteforce(*p.zoe);
      res.report.decision = br.decision;
      res.report.cost = br.cost;
      if (br.decision == Decision::Yes) {
        SolutionWitness w;
        w.kind = GraphKind::SspChain;
        w.exponents = br.exponents;
        res.report.witness = std::move(w);
        res.report.verified = true;
      }
      res.report.stats.millis =
          std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
      return res;
    }
    unsupported_pair(gk, pk);
  }

  unsupported_pair(gk, pk);
}

OracleResult dispatch_oracle(const InstanceFile& inst, const OracleCaps& caps) {
  const GroupSpec& g = inst.group;
  const ProblemSpec& p = inst.problem;
  const std::string& gk = g.kind;
  const std::string& pk = p.kind;

  auto t0 = Clock::now();
  OracleResult res;
  auto finish = [&](const BruteResult& br) {
    res.decision = br.decision;
    res.exponents = br.exponents;
    res.factors = br.factors;
    res.cost = br.cost;
    res.cap_exceeded = br.cap_exceeded;
    res.millis =
        std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return res;
  };

  if (gk == "zomega") {
    if (pk == "SSP" && p.ztarget)
      return finish(zomega_brute_ssp(p.zgens, *p.ztarget));
    if (pk == "ZOE" && p.zoe) return finish(zoe_bruteforce(*p.zoe));
    unsupported_pair(gk, pk);
  }

  if (gk == "fxf") {
    if (pk != "BGWP") unsupported_pair(gk, pk);
    if (!p.left || !p.right)
      throw std::runtime_error("problem keys 'left' and 'right' are required");
    MikhailovaGens mg = build_generators(g.pres);
    SolverReport rep = bgwp_bruteforce(mg, {*p.left, *p.right}, need_m(p));
    res.decision = rep.decision;
    res.cost = rep.cost;
    res.cap_exceeded = rep.decision == Decision::Unknown;
    if (rep.witness)
      for (uint32_t f : rep.witness->factors)
        res.bgwp_factors.push_back((f & 1) ? -static_cast<int32_t>(f / 2 + 1)
                                           : static_cast<int32_t>(f / 2 + 1));
    res.millis =
        std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return res;
  }

  if (gk == "bs" && pk == "BINSSP") {
    if (!p.num_target) throw std::runtime_error("problem key 'target' is required");
    size_t k = p.numbers.size();
    if (k >= 62) throw std::runtime_error("too many numbers");
    BruteResult br;
    br.decision = Decision::No;
    for (uint64_t mask = 0; mask < (uint64_t(1) << k); ++mask) {
      uint64_t sum = 0;
      for (size_t i = 0; i < k; ++i)
        if ((mask >> i) & 1) sum += p.numbers[i];
      if (sum == *p.num_target) {
        br.decision = Decision::Yes;
        br.exponents.assign(k, 0);
        for (size_t i = 0; i < k; ++i) br.exponents[i] = (mask >> i) & 1;
        break;
      }
    }
    return finish(br);
  }

  WpOracle wp;
  if (gk == "free") {
    wp = wp_free(g.rank);
  } else if (gk == "hyperbolic") {
    auto o = oracle_for_presentation(g.pres);
    if (!o)
      throw std::runtime_error(
          "no exact word problem oracle for this presentation (free products "
          "of cyclics only)");
    wp = *o;
  } else if (gk == "free_abelian") {
    wp = wp_abelianization(g.rank);
  } else if (gk == "heisenberg") {
    wp = wp_heisenberg();
  } else if (gk == "bs") {
    wp = wp_bs(g.bs.n, static_cast<int64_t>(g.bs.sign) * g.bs.n);
  } else {
    unsupported_pair(gk, pk);
  }

  if (pk == "WP") {
    if (!p.word) throw std::runtime_error("problem key 'word' is required");
    BruteResult br;
    br.decision = wp(free_reduce(*p.word)) ? Decision::Yes : Decision::No;
    return finish(br);
  }
  if (pk == "SSP") return finish(brute_ssp(wp, p.gens, need_target(p)));
  if (pk == "SSOP") return finish(brute_ssop(wp, p.gens, need_target(p)));
  if (pk == "BKP")
    return finish(brute_bkp(wp, p.gens, need_target(p), need_m(p)));
  if (pk == "BSMP")
    return finish(brute_bsmp(wp, p.gens, need_target(p), need_m(p)));
  if (pk == "KP") {
    if (gk == "free")
      return finish(brute_kp_free(p.gens, need_target(p), caps.max_exp));
    return finish(brute_kp(wp, p.gens, need_target(p), caps.max_exp));
  }
  if (pk == "IKP") {
    std::vector<Word> doubled = ikp_to_kp(p.gens);
    BruteResult br = gk == "free"
                         ? brute_kp_free(doubled, need_target(p), caps.max_exp)
                         : brute_kp(wp, doubled, need_target(p), caps.max_exp);
    if (br.decision == Decision::Yes)
      br.exponents = ikp_exponents_from_kp(br.exponents);
    return finish(br);
  }
  if (gk == "free" && pk == "KOP1")
    return finish(brute_kop1_free(p.gens, need_target(p), caps.max_exp));
  if (gk == "free" && pk == "KOP2")
    return finish(brute_kop2_free(p.gens, need_target(p), caps.max_exp));
  if (gk == "free" && pk == "SMP") {
    BruteResult br = brute_bsmp(wp, p.gens, need_target(p), caps.max_len);
    if (br.decision == Decision::No && !free_reduce(need_target(p)).empty()) {
      // a bounded product enumeration cannot refute unbounded membership
      br.decision = Decision::Unknown;
      br.cap_exceeded = true;
    }
    return finish(br);
  }
  unsupported_pair(gk, pk);
}

InstanceFile apply_reduction(const InstanceFile& inst, const std::string& from,
                             const std::string& to, std::string* mapping_note) {
  std::string f = lower(from), t = lower(to);
  static const std::map<std::string, std::string> kPairs = {
      {"bkp", "ssp"},   {"bsmp", "ssop"},    {"ikp", "kp"},
      {"zoe", "ssp-zomega"}, {"binssp", "bs12"}, {"wp", "bgwp"}};
  auto it = kPairs.find(f);
  if (it == kPairs.end() || it->second != t)
    throw std::runtime_error(
        "unsupported reduction pair " + f + " -> " + t +
        "; supported: bkp -> ssp, bsmp -> ssop, ikp -> kp, zoe -> ssp-zomega, "
        "binssp -> bs12, wp -> bgwp");
  if (inst.problem.kind != upper(f))
    throw std::runtime_error("instance problem kind is " + inst.problem.kind +
                             ", expected " + upper(f));

  InstanceFile out;
  std::string note;
  const ProblemSpec& p = inst.problem;

  if (f == "bkp") {
    uint64_t m = need_m(p);
    out.group = inst.group;
    out.problem.kind = "SSP";
    out.problem.gens = bkp_to_ssp(p.gens, m);
    out.problem.target = need_target(p);
    note = "bkp exponent i = sum of the ssp exponents in block i (k=" +
           std::to_string(p.gens.size()) + ", m=" + std::to_string(m) + ")";
  } else if (f == "bsmp") {
    uint64_t m = need_m(p);
    out.group = inst.group;
    out.problem.kind = "SSOP";
    out.problem.gens = bsmp_to_ssop(p.gens, m);
    out.problem.target = need_target(p);
    note = "accept iff min cost <= m; factor sequence = taken block indices "
           "mod k in product order (k=" +
           std::to_string(p.gens.size()) + ", m=" + std::to_string(m) + ")";
  } else if (f == "ikp") {
    out.group = inst.group;
    out.problem.kind = "KP";
    out.problem.gens = ikp_to_kp(p.gens);
    out.problem.target = need_target(p);
    note = "ikp exponent i = kp exponent 2i minus kp exponent 2i+1";
  } else if (f == "zoe") {
    if (!p.zoe) throw std::runtime_error("problem key 'zoe' is required");
    out.group.kind = "zomega";
    out.problem.kind = "SSP";
    auto [zgens, ztarget] = zoe_to_ssp(*p.zoe);
    out.problem.zgens = std::move(zgens);
    out.problem.ztarget = std::move(ztarget);
    note = "zoe solution vector = ssp exponent vector";
  } else if (f == "binssp") {
    if (!p.num_target)
      throw std::runtime_error("problem key 'target' is required");
    out.group.kind = "bs";
    out.group.bs.n = 1;
    out.group.bs.sign = 2;
    out.problem.kind = "SSP";
    auto [gens, target] = binary_ssp_to_bs12(p.numbers, *p.num_target);
    out.problem.gens = std::move(gens);
    out.problem.target = std::move(target);
    note = "number i is taken iff word i is taken";
  } else {  // wp -> bgwp
    if (inst.group.kind != "hyperbolic" && inst.group.kind != "fxf")
      throw std::runtime_error(
          "wp -> bgwp needs a presented group (kind hyperbolic or fxf)");
    if (!inst.group.dehn)
      throw std::runtime_error(
          "group key 'dehn' (Dehn function bound, coefficients highest degree "
          "first) is required for wp -> bgwp");
    if (!p.word) throw std::runtime_error("problem key 'word' is required");
    BgwpInstance bi = wp_to_bgwp(inst.group.pres, *inst.group.dehn, *p.word);
    out.group.kind = "fxf";
    out.group.pres = inst.group.pres;
    out.group.dehn = inst.group.dehn;
    out.problem.kind = "BGWP";
    out.problem.left = bi.target.left;
    out.problem.right = bi.target.right;
    out.problem.m = bi.n;
    note = "the word is trivial iff (word, 1) is a product of at most m "
           "subgroup generators";
  }
  if (mapping_note) *mapping_note = note;
  return out;
}

}  // namespace gknap
