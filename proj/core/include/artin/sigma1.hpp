#pragma once

#include <string_view>

#include "artin/character.hpp"
#include "artin/graph.hpp"

namespace artin {

enum class Status { kIn, kOut, kOutConjectural };

/// Which result settles the verdict.
enum class Provenance {
  kMmwSufficient,  // living subgraph connected and dominant
  kMmwNecessary,   // support subgraph disconnected or not dominant
  kTheoremA,       // even graph satisfying the odd-cycle hypothesis
  kLowCycleRank,   // conjecture proven for cycle rank <= 2
  kConjectureOnly,
};

std::string_view to_string(Status s);
std::string_view to_string(Provenance p);

struct Diagnostics {
  bool lf_connected = false;
  bool lf_dominant = false;
  bool l_connected = false;
  bool even = false;
  bool hypothesis_holds = false;
  long cycle_rank = 0;

  friend bool operator==(const Diagnostics&, const Diagnostics&) = default;
};

struct Verdict {
  Status status = Status::kOutConjectural;
  Provenance provenance = Provenance::kConjectureOnly;
  Diagnostics diagnostics;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// The living subgraph is connected and dominant in the carrier.
bool conjecture_predicate(const Character& chi);

/// Membership of [chi] in Sigma^1. Classical criteria decide first; Out is
/// asserted unconditionally only where the conjecture is proven.
Verdict decide_sigma1(const Character& chi, HypothesisMode mode = HypothesisMode::kSimpleCycle);

}  // namespace artin
