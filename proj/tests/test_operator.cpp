#include <doctest.h>

#include <random>

#include "epi/enumeration.hpp"
#include "epi/operator.hpp"
#include "helpers.hpp"

using namespace epi;
using namespace epi::test;

TEST_CASE("table construction and application") {
  auto space1 = space_of(1);
  auto identity = KnowledgeOperator::from_masks(space1, {0, 1});
  CHECK(identity.apply(Event::omega(space1)) == Event::omega(space1));

  auto trivial = KnowledgeOperator::from_masks(space1, {0, 0});
  CHECK(trivial.apply(Event::omega(space1)).is_empty());

  CHECK_THROWS_AS(KnowledgeOperator::from_masks(space1, {0}), WrongArity);
  CHECK_THROWS_AS(KnowledgeOperator::from_masks(space1, {0, 2}),
                  InvariantViolation);

  auto space2 = space_of(2);
  auto id2 = identity_op(space2);
  CHECK(id2.apply(Event::from_names(space2, {"a"})) ==
        Event::from_names(space2, {"a"}));
  CHECK_THROWS_AS(id2.apply(Event::empty(space1)), SpaceMismatch);
}

TEST_CASE("neighborhood semantics") {
  auto space = space_of(2);
  // N(a) = {{a}}, N(b) = {}: knows an event iff it contains a... and only
  // at state a.
  NeighborhoodSystem ns{space, {{0b01}, {}}};
  auto k = from_neighborhoods(ns);
  CHECK(k.table() == std::vector<Mask>{0b00, 0b01, 0b00, 0b01});
  CHECK(k.apply(Event::omega(space)) == Event::from_names(space, {"a"}));

  auto space1 = space_of(1);
  CHECK(from_neighborhoods({space1, {{0b1}}}) == identity_op(space1));
  CHECK(from_neighborhoods({space, {{}, {}}}) == trivial_op(space));
}

TEST_CASE("neighborhood invariants rejected") {
  auto space = space_of(2);
  // {b} does not contain a.
  CHECK_THROWS_AS(from_neighborhoods({space, {{0b10}, {}}}),
                  InvariantViolation);
  // {a} subset of {a,b}: not an antichain.
  CHECK_THROWS_AS(from_neighborhoods({space, {{0b01, 0b11}, {}}}),
                  InvariantViolation);
  CHECK_THROWS_AS(from_neighborhoods({space, {{0b01}}}), InvariantViolation);
}

TEST_CASE("to_neighborhoods") {
  auto space = space_of(2);
  auto ns = to_neighborhoods(identity_op(space));
  CHECK(ns.minimal[0] == std::vector<Mask>{0b01});
  CHECK(ns.minimal[1] == std::vector<Mask>{0b10});

  auto trivial_ns = to_neighborhoods(trivial_op(space));
  CHECK(trivial_ns.minimal[0].empty());
  CHECK(trivial_ns.minimal[1].empty());

  CHECK_THROWS_AS(to_neighborhoods(truth_only_op(space)), NotMonotone);
  CHECK_THROWS_AS(to_neighborhoods(constant_omega_op(space)), NotTruthful);
}

TEST_CASE("neighborhood round trip over all TM operators, n <= 3") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto space = space_of(n);
    enumerate_tm_operators(space, [&](const KnowledgeOperator& k) {
      CHECK(check_axiom(k, Axiom::Truth).holds);
      CHECK(check_axiom(k, Axiom::Monotonicity).holds);
      auto ns = to_neighborhoods(k);
      CHECK(from_neighborhoods(ns) == k);
    });
  }
}

TEST_CASE("axiom checks on the canonical examples") {
  auto space = space_of(2);
  auto id = identity_op(space);
  for (auto axiom :
       {Axiom::Truth, Axiom::Monotonicity, Axiom::Necessitation,
        Axiom::PositiveIntrospection, Axiom::NegativeIntrospection,
        Axiom::WeakAdditivity}) {
    auto report = check_axiom(id, axiom);
    CHECK(report.holds);
    CHECK(report.counterexamples.empty());
  }

  auto nec = check_axiom(trivial_op(space), Axiom::Necessitation);
  CHECK(!nec.holds);
  REQUIRE(nec.counterexamples.size() == 1);
  CHECK(nec.counterexamples[0].event == space->full_mask());

  auto truth_only = truth_only_op(space);
  CHECK(check_axiom(truth_only, Axiom::Truth).holds);
  auto mono = check_axiom(truth_only, Axiom::Monotonicity);
  CHECK(!mono.holds);
  bool found_pair = false;
  for (const auto& w : mono.counterexamples)
    if (w.event == 0b10 && w.second_event == 0b11) found_pair = true;
  CHECK(found_pair);  // ({b}, Omega) with K{b} = {b} not inside K Omega = {a}
}

TEST_CASE("counterexample cap") {
  auto space = space_of(3);
  auto bad = constant_omega_op(space);  // violates Truth everywhere but Omega
  auto capped = check_axiom(bad, Axiom::Truth, 3);
  CHECK(!capped.holds);
  CHECK(capped.counterexamples.size() == 3);
  auto full = check_axiom(bad, Axiom::Truth, 100);
  CHECK(full.counterexamples.size() == 7);
}

TEST_CASE("covering-pair monotonicity agrees with the naive definition") {
  // Exhaustive at n <= 3 over truthful tables plus sampled tables, then
  // 1000 random tables at n = 4.
  for (std::size_t n = 1; n <= 3; ++n) {
    auto space = space_of(n);
    const Mask count = static_cast<Mask>(space->event_count());
    std::mt19937_64 rng(7 * n);
    const std::uint64_t total = [&] {
      std::uint64_t t = 1;
      for (Mask e = 0; e < count; ++e) t *= count;
      return t;
    }();
    if (n <= 2) {
      std::vector<Mask> table(count, 0);
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t rest = idx;
        for (Mask e = 0; e < count; ++e) {
          table[e] = static_cast<Mask>(rest % count);
          rest /= count;
        }
        CHECK(is_monotone(table, n) == naive_monotone(table));
      }
    } else {
      for (int trial = 0; trial < 2000; ++trial) {
        std::vector<Mask> table(count);
        for (Mask e = 0; e < count; ++e)
          table[e] = static_cast<Mask>(rng() % count);
        CHECK(is_monotone(table, n) == naive_monotone(table));
      }
    }
  }
  {
    auto space = space_of(4);
    const Mask count = static_cast<Mask>(space->event_count());
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 1000; ++trial) {
      std::vector<Mask> table(count);
      for (Mask e = 0; e < count; ++e)
        table[e] = static_cast<Mask>(rng() % count);
      CHECK(is_monotone(table, 4) == naive_monotone(table));
    }
  }
}

TEST_CASE("claim verification on the canonical examples") {
  auto space = space_of(2);
  auto id = identity_op(space);

  auto thm3 = verify_claim(id, Claim::Theorem3);
  CHECK(thm3.applicable);
  CHECK(thm3.holds);

  NeighborhoodSystem ns{space, {{0b01}, {}}};
  auto half = from_neighborhoods(ns);
  auto report = verify_claim(half, Claim::Theorem3);
  CHECK(report.holds);
  // ~K Omega = {b}, K{b} = {}
  bool saw_not_k_omega = false;
  for (const auto& [name, mask] : report.intermediates)
    if (name == "~K Omega") {
      saw_not_k_omega = true;
      CHECK(mask == 0b10);
    }
  CHECK(saw_not_k_omega);
}

TEST_CASE("Theorem 3 needs both hypotheses") {
  auto space = space_of(2);

  // Truth without Monotonicity: applicable=false, forced evaluation shows
  // K ~K Omega = K{b} = {b}.
  auto truth_only = truth_only_op(space);
  auto gated = verify_claim(truth_only, Claim::Theorem3);
  CHECK(!gated.applicable);
  CHECK(!gated.holds);
  CHECK(gated.missing_axioms == std::vector<Axiom>{Axiom::Monotonicity});

  ClaimOptions forced;
  forced.forced = true;
  auto evaluated = verify_claim(truth_only, Claim::Theorem3, forced);
  CHECK(!evaluated.applicable);
  CHECK(evaluated.forced);
  CHECK(!evaluated.holds);
  for (const auto& [name, mask] : evaluated.intermediates)
    if (name == "K ~K Omega") CHECK(mask == 0b10);

  // Monotone without Truth: K ~K Omega = K {} = Omega.
  auto all_omega = constant_omega_op(space);
  auto evaluated2 = verify_claim(all_omega, Claim::Theorem3, forced);
  CHECK(!evaluated2.applicable);
  CHECK(!evaluated2.holds);
  for (const auto& [name, mask] : evaluated2.intermediates)
    if (name == "K ~K Omega") CHECK(mask == space->full_mask());
}

TEST_CASE("Eq1 parameter handling") {
  auto space = space_of(2);
  auto id = identity_op(space);
  CHECK_THROWS_AS(verify_claim(id, Claim::Eq1), MissingParameter);
  ClaimOptions opts;
  opts.event = Event::omega(space);
  CHECK_THROWS_AS(verify_claim(id, Claim::Eq1, opts), EIsOmega);
  opts.event = Event::from_names(space, {"a"});
  CHECK(verify_claim(id, Claim::Eq1, opts).holds);
}

TEST_CASE("universal claim properties over TM operators, n <= 4") {
  // Theorem 2 and Theorem 3 over every Truth+Monotone operator; Eq1,
  // KBound, NegKOmegaMin, WeakAdditivity exhaustively at n <= 3.
  for (std::size_t n = 1; n <= 4; ++n) {
    auto space = space_of(n);
    enumerate_tm_operators(space, [&](const KnowledgeOperator& k) {
      CHECK(verify_claim(k, Claim::Theorem2).holds);
      CHECK(verify_claim(k, Claim::Theorem3).holds);
      if (n <= 3) {
        CHECK(check_axiom(k, Axiom::WeakAdditivity).holds);
        CHECK(verify_claim(k, Claim::KBound).holds);
        CHECK(verify_claim(k, Claim::NegKOmegaMin).holds);
        CHECK(verify_claim(k, Claim::Remark1).holds);
        CHECK(verify_claim(k, Claim::IntrospectionSame).holds);
        CHECK(verify_claim(k, Claim::KKRefines).holds);
        for (Mask e = 0; e < space->full_mask(); ++e) {
          ClaimOptions opts;
          opts.event = Event(space, e);
          CHECK(verify_claim(k, Claim::Eq1, opts).holds);
        }
      }
    });
  }
}

TEST_CASE("Theorem 2 over Truth-only tables, n <= 2") {
  // Truth alone suffices for Theorem 2; it must hold even where
  // Monotonicity fails.
  for (std::size_t n = 1; n <= 2; ++n) {
    auto space = space_of(n);
    AxiomSet truth_only;
    truth_only.truth = true;
    enumerate_filtered_tables(space, truth_only,
                              [&](const KnowledgeOperator& k) {
                                auto r = verify_claim(k, Claim::Theorem2);
                                CHECK(r.applicable);
                                CHECK(r.holds);
                              });
  }
}

TEST_CASE("introspection words") {
  auto space = space_of(2);
  auto id = identity_op(space);
  CHECK(introspect(id, Event::omega(space), "K~K").is_empty());
  CHECK(introspect(trivial_op(space), Event::from_names(space, {"a"}), "~K") ==
        Event::omega(space));

  NeighborhoodSystem ns{space, {{0b01}, {}}};
  auto half = from_neighborhoods(ns);
  CHECK(introspect(half, Event::omega(space), "K~K").is_empty());
  CHECK(introspect(half, Event::omega(space), "") == Event::omega(space));

  CHECK_THROWS_AS(introspect(id, Event::omega(space), "K~X"), BadWord);
  try {
    introspect(id, Event::omega(space), "KK q");
  } catch (const BadWord& e) {
    CHECK(e.position == 2);
  }
}
