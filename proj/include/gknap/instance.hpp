/* instance.hpp -- instance files: parsing, serialization, solver dispatch */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gknap/automaton.hpp"
#include "gknap/baumslag_solitar.hpp"
#include "gknap/hyperbolic.hpp"
#include "gknap/mikhailova.hpp"
#include "gknap/oracles.hpp"
#include "gknap/presentation.hpp"
#include "gknap/reductions.hpp"
#include "gknap/report.hpp"
#include "gknap/word.hpp"

namespace gknap {

// [group] section.  kind selects the group class; the other fields are
// kind-specific (rank for free/free_abelian, presentation for
// hyperbolic/fxf, n and sign for bs, dehn for the wp -> bgwp reduction).
struct GroupSpec {
  std::string kind;
  uint32_t rank = 0;
  Presentation pres;
  BsParams bs;
  std::optional<Poly> dehn;

  Alphabet alphabet() const;
};

// [problem] section.  kind selects the problem; the populated fields
// depend on (group kind, problem kind).
struct ProblemSpec {
  std::string kind;  // canonical upper case
  std::vector<Word> gens;
  std::optional<Word> target;
  std::optional<uint64_t> m;
  std::optional<Word> left;  // BGWP pair target
  std::optional<Word> right;
  std::optional<Word> word;  // WP
  std::vector<ZOmegaElement> zgens;
  std::optional<ZOmegaElement> ztarget;
  std::vector<uint64_t> numbers;  // BINSSP
  std::optional<uint64_t> num_target;
  std::optional<std::string> zoe_path;  // as written in the file
  std::optional<ZoeInstance> zoe;       // loaded relative to the file
};

struct InstanceFile {
  GroupSpec group;
  ProblemSpec problem;
};

// Parses instance text.  source_name is used in error messages
// ("name:line: message"); dir anchors relative zoe paths.
InstanceFile parse_instance(const std::string& text,
                            const std::string& source_name,
                            const std::string& dir);

// Reads and parses a file.
InstanceFile load_instance(const std::string& path);

// Renders an instance back to file text.  A non-empty mapping note
// becomes a leading "# witness-mapping:" comment.
std::string serialize_instance(const InstanceFile& inst,
                               const std::string& witness_mapping = "");

// Element syntax for Z^omega: "e0+e1-e3", "0" for zero; repeated terms
// accumulate.
ZOmegaElement parse_zomega(const std::string& text);
std::string format_zomega(const ZOmegaElement& e);

// --- solve dispatch ---------------------------------------------------------

struct SolveRequest {
  SaturationParams params;
  KpBoundConfig kp_bound;
};

struct SolveResult {
  SolverReport report;
  Alphabet alphabet;                 // for witness/graph rendering
  std::vector<int32_t> bgwp_factors; // signed 1-based generator indices
};

// Runs the solver for (group kind, problem kind).  Throws
// std::runtime_error with an explicit supported-pair list on unsupported
// combinations and on missing keys.
SolveResult dispatch_solve(const InstanceFile& inst, const SolveRequest& req);

// --- oracle dispatch --------------------------------------------------------

struct OracleCaps {
  uint64_t max_exp = 8;  // exponent cap for KP/IKP enumeration
  uint64_t max_len = 8;  // factor-count cap for SMP enumeration
};

struct OracleResult {
  Decision decision = Decision::Unknown;
  std::vector<int64_t> exponents;
  std::vector<uint32_t> factors;
  std::vector<int32_t> bgwp_factors;
  std::optional<BigInt> cost;
  bool cap_exceeded = false;
  double millis = 0.0;
};

// Runs the reference enumeration for (group kind, problem kind) against
// the exact word problem oracle of the group class.
OracleResult dispatch_oracle(const InstanceFile& inst, const OracleCaps& caps);

// --- reductions ---------------------------------------------------------------

// Transforms an instance (from -> to); to_kind names follow the command
// line: ssp, ssop, kp, ssp-zomega, bs12, bgwp.  mapping_note receives the
// witness-mapping rule recorded in the output file.
InstanceFile apply_reduction(const InstanceFile& inst, const std::string& from,
                             const std::string& to, std::string* mapping_note);

}  // namespace gknap
