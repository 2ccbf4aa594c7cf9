#include <doctest.h>

#include "epi/set_core.hpp"
#include "helpers.hpp"

using namespace epi;
using epi::test::space_of;

TEST_CASE("state space construction") {
  auto space = StateSpace::make({"a", "b"});
  CHECK(space->size() == 2);
  CHECK(space->index_of("b") == 1);
  CHECK(!space->index_of("c"));

  CHECK_THROWS_AS(StateSpace::make({"a", "a"}), DuplicateLabel);
  CHECK_THROWS_AS(StateSpace::make({}), EmptyLabelList);
  CHECK_THROWS_AS(StateSpace::make({"a", ""}), InvariantViolation);

  std::vector<std::string> many;
  for (int i = 0; i < 25; ++i) many.push_back("s" + std::to_string(i));
  CHECK_THROWS_AS(StateSpace::make(many), TooManyStates);
  many.pop_back();
  CHECK(StateSpace::make(many)->size() == 24);
}

TEST_CASE("events from names") {
  auto space = space_of(2);
  CHECK(Event::from_names(space, {"a"}).mask() == 0b01);
  CHECK(Event::from_names(space, {}).is_empty());
  CHECK(Event::from_names(space, {"a", "a", "b"}).is_omega());
  CHECK_THROWS_AS(Event::from_names(space, {"c"}), UnknownLabel);
}

TEST_CASE("set operations") {
  auto space = space_of(2);
  const Event a = Event::from_names(space, {"a"});
  const Event b = Event::from_names(space, {"b"});
  const Event omega = Event::omega(space);

  CHECK(combine(a, b, SetOp::Union) == omega);
  CHECK(combine(omega, a, SetOp::Difference) == b);
  CHECK(combine(a, b, SetOp::Intersect).is_empty());
  CHECK(complement(a) == b);
  CHECK(complement(omega).is_empty());
  CHECK(complement(Event::empty(space)) == omega);

  auto other = space_of(2);
  CHECK_THROWS_AS(combine(a, Event::empty(other), SetOp::Union),
                  SpaceMismatch);
}

TEST_CASE("relations and witnesses") {
  auto space = space_of(2);
  const Event a = Event::from_names(space, {"a"});
  const Event omega = Event::omega(space);

  CHECK(relate(a, omega, Relation::Subseteq).holds);
  auto fail = relate(omega, a, Relation::Subseteq);
  CHECK(!fail.holds);
  CHECK(fail.witness == 1);  // b lies in Omega \ {a}
  CHECK(relate(a, Event::from_names(space, {"b"}), Relation::Disjoint).holds);
  CHECK(relate(a, omega, Relation::ProperSubset).holds);
  CHECK(!relate(a, a, Relation::ProperSubset).holds);
  CHECK(relate(a, a, Relation::Equals).holds);
}

TEST_CASE("event enumeration order") {
  auto space2 = space_of(2);
  auto events = enumerate_events(space2);
  REQUIRE(events.size() == 4);
  CHECK(events.front().is_empty());
  CHECK(events.back().is_omega());
  CHECK(events[1] == Event::from_names(space2, {"a"}));
  CHECK(events[2] == Event::from_names(space2, {"b"}));

  auto space1 = space_of(1);
  CHECK(enumerate_events(space1).size() == 2);

  // {a,c} sits at index 5 = binary 101 with state 0 least significant.
  auto space3 = space_of(3);
  auto events3 = enumerate_events(space3);
  REQUIRE(events3.size() == 8);
  CHECK(events3[5] == Event::from_names(space3, {"a", "c"}));
}

TEST_CASE("boolean algebra laws hold exhaustively on n <= 3") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto space = space_of(n);
    auto events = enumerate_events(space);
    for (const Event& e : events) {
      CHECK(complement(complement(e)) == e);
      CHECK(combine(e, complement(e), SetOp::Union).is_omega());
      CHECK(combine(e, complement(e), SetOp::Intersect).is_empty());
      for (const Event& f : events)
        CHECK(combine(e, f, SetOp::Difference) ==
              combine(e, complement(f), SetOp::Intersect));
    }
  }
}

TEST_CASE("powerset is closed under complement and union") {
  auto space = space_of(3);
  auto events = enumerate_events(space);
  auto contains = [&](const Event& e) {
    return e.mask() < events.size();  // canonical order = mask value
  };
  for (const Event& e : events) {
    CHECK(contains(complement(e)));
    for (const Event& f : events) CHECK(contains(combine(e, f, SetOp::Union)));
  }
}
