/* report.hpp -- solver result types */

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "gknap/automaton_types.hpp"
#include "gknap/bigint.hpp"

namespace gknap {

struct PricedAutomaton;

enum class Decision { Yes, No, Unknown };

inline const char* to_string(Decision d) {
  switch (d) {
    case Decision::Yes: return "yes";
    case Decision::No: return "no";
    default: return "unknown";
  }
}

struct SolveStats {
  uint64_t states = 0;
  uint64_t edges = 0;
  uint32_t rounds = 0;
  double millis = 0.0;
};

struct SolverReport {
  Decision decision = Decision::Unknown;
  std::optional<SolutionWitness> witness;  // present for some yes answers
  std::optional<BigInt> cost;              // optimization variants only
  bool verified = false;                   // witness re-checked by an oracle
  std::optional<uint64_t> bound_used;      // exponent cap for KP-style runs
  bool bound_relative = false;             // a "no" that only holds under bound_used
  SolveStats stats;
  // Saturated graph, retained only when SaturationParams::keep_graph is
  // set (dump support); null otherwise.
  std::shared_ptr<const PricedAutomaton> graph;
};

}  // namespace gknap
