#include <doctest.h>

#include <algorithm>
#include <set>

#include "epi/enumeration.hpp"
#include "helpers.hpp"

using namespace epi;
using namespace epi::test;

TEST_CASE("Truth+Monotone operator counts match the Dedekind formula") {
  CHECK(tm_operator_count_formula(1) == 2);
  CHECK(tm_operator_count_formula(2) == 9);
  CHECK(tm_operator_count_formula(3) == 216);
  CHECK(tm_operator_count_formula(4) == 160000);
  for (std::size_t n = 1; n <= 4; ++n)
    CHECK(count_operators(space_of(n)) == tm_operator_count_formula(n));
  CHECK_THROWS_AS(count_operators(space_of(5)), TooManyStates);
}

TEST_CASE("n=1 enumeration yields identity and trivial") {
  auto space = space_of(1);
  std::vector<KnowledgeOperator> ops;
  enumerate_tm_operators(space,
                         [&](const KnowledgeOperator& k) { ops.push_back(k); });
  REQUIRE(ops.size() == 2);
  CHECK(std::count(ops.begin(), ops.end(), identity_op(space)) == 1);
  CHECK(std::count(ops.begin(), ops.end(), trivial_op(space)) == 1);
}

TEST_CASE("every enumerated operator satisfies Truth and Monotonicity") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto space = space_of(n);
    std::set<std::vector<Mask>> seen;
    enumerate_tm_operators(space, [&](const KnowledgeOperator& k) {
      CHECK(is_truthful(k.table()));
      CHECK(is_monotone(k.table(), n));
      CHECK(naive_monotone(k.table()));
      CHECK(seen.insert(k.table()).second);  // no duplicates
    });
  }
}

TEST_CASE("enumeration order is deterministic") {
  auto space = space_of(2);
  std::vector<std::vector<Mask>> first, second;
  enumerate_tm_operators(
      space, [&](const KnowledgeOperator& k) { first.push_back(k.table()); });
  enumerate_tm_operators(
      space, [&](const KnowledgeOperator& k) { second.push_back(k.table()); });
  CHECK(first == second);
}

TEST_CASE("structured enumeration equals brute-force table filtering") {
  for (std::size_t n = 1; n <= 2; ++n) {
    auto space = space_of(n);
    std::set<std::vector<Mask>> structured, brute;
    enumerate_tm_operators(space, [&](const KnowledgeOperator& k) {
      structured.insert(k.table());
    });
    AxiomSet tm;
    tm.truth = tm.monotonicity = true;
    enumerate_filtered_tables(
        space, tm, [&](const KnowledgeOperator& k) { brute.insert(k.table()); });
    CHECK(structured == brute);
  }
}

TEST_CASE("brute-force enumeration guards and counts") {
  auto space1 = space_of(1);
  std::size_t count = 0;
  enumerate_filtered_tables(space1, AxiomSet{},
                            [&](const KnowledgeOperator&) { ++count; });
  CHECK(count == 4);  // all 2^1-valued tables over 2 events

  auto space2 = space_of(2);
  count = 0;
  AxiomSet truth_only;
  truth_only.truth = true;
  bool found_counterexample_table = false;
  enumerate_filtered_tables(space2, truth_only,
                            [&](const KnowledgeOperator& k) {
                              ++count;
                              if (k.table() ==
                                  std::vector<Mask>{0b00, 0b00, 0b10, 0b01})
                                found_counterexample_table = true;
                            });
  CHECK(count == 16);
  CHECK(count >= 9);
  CHECK(found_counterexample_table);

  CHECK_THROWS_AS(
      enumerate_filtered_tables(space_of(3), AxiomSet{},
                                [](const KnowledgeOperator&) {}),
      TooManyStates);
}

TEST_CASE("random Truth+Monotone samples") {
  auto space = space_of(6);
  auto a = sample_tm_operator(space, 1234);
  auto b = sample_tm_operator(space, 1234);
  CHECK(a == b);  // deterministic in (n, seed)
  auto c = sample_tm_operator(space, 1235);
  CHECK(!(a == c));  // overwhelmingly likely to differ

  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto k = sample_tm_operator(space, seed);
    CHECK(is_truthful(k.table()));
    CHECK(is_monotone(k.table(), 6));
  }
}

TEST_CASE("universal check over the Truth+Monotone space") {
  AxiomSet tm;
  tm.truth = tm.monotonicity = true;
  auto stats = universal_check(space_of(3), Claim::Theorem3, tm);
  CHECK(stats.operator_count == 216);
  CHECK(stats.pass == 216);
  CHECK(stats.fail == 0);
  CHECK(stats.not_applicable == 0);
  CHECK(stats.counterexample_count == 0);
  CHECK(stats.pass + stats.fail + stats.not_applicable ==
        stats.operator_count);
}

TEST_CASE("dropping Truth or Monotonicity breaks Theorem 3") {
  auto space = space_of(2);

  AxiomSet truth_only;
  truth_only.truth = true;
  auto stats = universal_check(space, Claim::Theorem3, truth_only);
  CHECK(stats.operator_count == 16);
  CHECK(stats.counterexample_count >= 1);
  CHECK(stats.pass + stats.fail + stats.not_applicable ==
        stats.operator_count);
  bool found = false;
  for (const auto& sample : stats.samples)
    if (sample.table == std::vector<Mask>{0b00, 0b00, 0b10, 0b01}) {
      found = true;
      for (const auto& [name, mask] : sample.report.intermediates)
        if (name == "K ~K Omega") CHECK(mask == 0b10);
    }
  CHECK(found);

  AxiomSet mono_only;
  mono_only.monotonicity = true;
  auto mono_stats = universal_check(space, Claim::Theorem3, mono_only);
  CHECK(mono_stats.counterexample_count >= 1);
  bool found_const_omega = false;
  for (const auto& sample : mono_stats.samples)
    if (sample.table == std::vector<Mask>(4, 0b11)) found_const_omega = true;
  // The constant-Omega table may fall outside the sample cap; check the
  // forced verdict directly instead when it does.
  if (!found_const_omega) {
    ClaimOptions forced;
    forced.forced = true;
    auto report =
        verify_claim(constant_omega_op(space), Claim::Theorem3, forced);
    CHECK(!report.holds);
  }
}

TEST_CASE("Necessitation stays independent") {
  // The trivial operator is Truth+Monotone at every n yet fails
  // Necessitation: K Omega = {} != Omega.
  for (std::size_t n = 1; n <= 4; ++n) {
    auto k = trivial_op(space_of(n));
    CHECK(is_truthful(k.table()));
    CHECK(is_monotone(k.table(), n));
    CHECK(!check_axiom(k, Axiom::Necessitation).holds);
  }
}

TEST_CASE("universal Eq1 quantifies per event") {
  AxiomSet tm;
  tm.truth = tm.monotonicity = true;
  auto stats = universal_check(space_of(2), Claim::Eq1, tm);
  CHECK(stats.operator_count == 9);
  CHECK(stats.pass == 9);
  CHECK(stats.counterexample_count == 0);
}
