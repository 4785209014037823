#include "artin/sigma1.hpp"

namespace artin {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::kIn:
      return "in";
    case Status::kOut:
      return "out";
    case Status::kOutConjectural:
      return "out_conjectural";
  }
  return "?";
}

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::kMmwSufficient:
      return "mmw_sufficient";
    case Provenance::kMmwNecessary:
      return "mmw_necessary";
    case Provenance::kTheoremA:
      return "theorem_a";
    case Provenance::kLowCycleRank:
      return "low_cycle_rank";
    case Provenance::kConjectureOnly:
      return "conjecture_only";
  }
  return "?";
}

bool conjecture_predicate(const Character& chi) {
  const auto living = living_subgraph(chi);
  return is_connected(living) && is_dominant(chi.carrier(), chi.support());
}

Verdict decide_sigma1(const Character& chi, HypothesisMode mode) {
  const auto& g = chi.carrier();
  Verdict v;
  auto& d = v.diagnostics;
  const auto support = chi.support();
  d.lf_connected = is_connected(lf_subgraph(chi));
  d.lf_dominant = is_dominant(g, support);
  d.l_connected = is_connected(living_subgraph(chi));
  d.even = g.is_even();
  d.hypothesis_holds = check_hypothesis(g, mode);
  d.cycle_rank = cycle_rank(g);

  if (!d.lf_connected || !d.lf_dominant) {
    v.status = Status::kOut;
    v.provenance = Provenance::kMmwNecessary;
  } else if (d.l_connected) {
    // L and L_F share their vertex set, so dominance carries over.
    v.status = Status::kIn;
    v.provenance = Provenance::kMmwSufficient;
  } else if (d.even && d.hypothesis_holds) {
    v.status = Status::kOut;
    v.provenance = Provenance::kTheoremA;
  } else if (d.cycle_rank <= 2) {
    v.status = Status::kOut;
    v.provenance = Provenance::kLowCycleRank;
  } else {
    v.status = Status::kOutConjectural;
    v.provenance = Provenance::kConjectureOnly;
  }
  return v;
}

}  // namespace artin
