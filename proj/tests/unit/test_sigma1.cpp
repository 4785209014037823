#include <doctest.h>

#include "artin/sigma1.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace artin;
using namespace artin::testing;

namespace {

Verdict decide(const std::string& f, const std::string& chi) {
  return decide_sigma1(parse_character(fixture(f), chi));
}

}  // namespace

TEST_SUITE("sigma1-decision") {
  TEST_CASE("conjecture predicate") {
    CHECK(conjecture_predicate(parse_character(fixture("f3"), "a=1,b=2")));
    CHECK_FALSE(conjecture_predicate(parse_character(fixture("f3"), "a=1,b=-1")));
    CHECK_FALSE(conjecture_predicate(parse_character(fixture("f1"), "v=1,s=1,u=-1,w=-1")));
  }

  TEST_CASE("verdicts on fixtures") {
    auto v = decide("f3", "a=1,b=2");
    CHECK(v.status == Status::kIn);
    CHECK(v.provenance == Provenance::kMmwSufficient);

    v = decide("f3", "a=1,b=-1");
    CHECK(v.status == Status::kOut);
    CHECK(v.provenance == Provenance::kTheoremA);

    v = decide("f1", "v=1,s=1,u=-1,w=-1");
    CHECK(v.status == Status::kOutConjectural);
    CHECK(v.provenance == Provenance::kConjectureOnly);
    CHECK(v.diagnostics.cycle_rank == 3);
    CHECK_FALSE(v.diagnostics.hypothesis_holds);
    CHECK(v.diagnostics.lf_connected);
    CHECK(v.diagnostics.lf_dominant);
    CHECK_FALSE(v.diagnostics.l_connected);

    v = decide("f2", "u=1,w=1,v=-1");
    CHECK(v.status == Status::kOut);
    CHECK(v.provenance == Provenance::kLowCycleRank);

    v = decide("f5", "a=1,b=-1,c=1");
    CHECK(v.status == Status::kOut);
    CHECK(v.provenance == Provenance::kTheoremA);

    v = decide("f5", "a=1,c=1");
    CHECK(v.status == Status::kOut);
    CHECK(v.provenance == Provenance::kMmwNecessary);
    CHECK_FALSE(v.diagnostics.lf_connected);
  }

  TEST_CASE("string forms") {
    CHECK(to_string(Status::kOutConjectural) == "out_conjectural");
    CHECK(to_string(Provenance::kLowCycleRank) == "low_cycle_rank");
    CHECK(to_string(Provenance::kMmwNecessary) == "mmw_necessary");
  }

  TEST_CASE("verdict invariants on random graphs") {
    Gen gen(31);
    for (int i = 0; i < 200; ++i) {
      const auto g = gen.graph(gen.uniform(1, 7), gen.uniform(2, 8) / 10.0, {2, 3, 4, 5, 6});
      const bool even_ok = g.is_even() && check_hypothesis(g);
      for (int j = 0; j < 20; ++j) {
        const auto chi = gen.character(g, 4, 3);
        const auto v = decide_sigma1(chi);
        // Status and provenance agree.
        if (v.status == Status::kIn) CHECK(v.provenance == Provenance::kMmwSufficient);
        if (v.status == Status::kOutConjectural) CHECK(v.provenance == Provenance::kConjectureOnly);
        // In exactly when the predicate holds, recomputed from definitions.
        CHECK((v.status == Status::kIn) == predicate_oracle(chi));
        CHECK((v.status == Status::kIn) == conjecture_predicate(chi));
        if (even_ok) CHECK(v.status != Status::kOutConjectural);
        CHECK(decide_sigma1(-chi) == v);
        CHECK(decide_sigma1(chi.scaled(Rational(5, 3))) == v);
      }
    }
  }

  TEST_CASE("strict mode never certifies more") {
    Gen gen(32);
    for (int i = 0; i < 100; ++i) {
      const auto g = gen.graph(gen.uniform(2, 7), 0.5, {2, 4, 6});
      const auto chi = gen.character(g, 3, 2);
      const auto simple = decide_sigma1(chi, HypothesisMode::kSimpleCycle);
      const auto strict = decide_sigma1(chi, HypothesisMode::kStrict);
      if (simple.status != strict.status) {
        CHECK(simple.status == Status::kOut);
        CHECK(strict.status == Status::kOutConjectural);
      }
    }
  }
}
