#ifndef EPI_OPERATOR_HPP
#define EPI_OPERATOR_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "epi/set_core.hpp"

namespace epi {

/// A knowledge operator K given by its full table: table[e] is the mask of
/// K applied to the event with mask e. No axiom is assumed by the type;
/// conformance is checked, never presumed.
class KnowledgeOperator {
 public:
  static KnowledgeOperator from_table(const SpacePtr& space,
                                      std::vector<Event> images);
  /// Table given directly as masks, in canonical event order.
  static KnowledgeOperator from_masks(const SpacePtr& space,
                                      std::vector<Mask> table);

  Event apply(const Event& e) const;
  Mask apply_mask(Mask e) const { return table_[e]; }

  const SpacePtr& space() const { return space_; }
  const std::vector<Mask>& table() const { return table_; }

  friend bool operator==(const KnowledgeOperator& a,
                         const KnowledgeOperator& b) {
    return a.space_ == b.space_ && a.table_ == b.table_;
  }

 private:
  KnowledgeOperator(SpacePtr space, std::vector<Mask> table)
      : space_(std::move(space)), table_(std::move(table)) {}
  SpacePtr space_;
  std::vector<Mask> table_;
};

/// Per-state minimal neighborhoods: the compact interchange form of a
/// Truth+Monotone operator. Each listed neighborhood contains its state and
/// the per-state lists are antichains.
struct NeighborhoodSystem {
  SpacePtr space;
  std::vector<std::vector<Mask>> minimal;  // minimal[state] = antichain

  void validate() const;  // throws InvariantViolation
};

KnowledgeOperator from_neighborhoods(const NeighborhoodSystem& ns);
NeighborhoodSystem to_neighborhoods(const KnowledgeOperator& k);

enum class Axiom {
  Truth,
  Monotonicity,
  Necessitation,
  PositiveIntrospection,
  NegativeIntrospection,
  WeakAdditivity,
};

const char* axiom_name(Axiom a);
std::optional<Axiom> axiom_from_name(const std::string& name);

/// A violating event (pair of events for Monotonicity/WeakAdditivity) plus
/// a state witnessing the violation.
struct AxiomWitness {
  Mask event = 0;
  std::optional<Mask> second_event;
  std::size_t state = 0;
};

struct AxiomReport {
  Axiom axiom = Axiom::Truth;
  bool holds = false;
  std::vector<AxiomWitness> counterexamples;  // empty iff holds
};

constexpr std::size_t kDefaultWitnessCap = 10;

AxiomReport check_axiom(const KnowledgeOperator& k, Axiom axiom,
                        std::size_t cap = kDefaultWitnessCap);

// Boolean fast paths over raw tables; agreement with check_axiom and with
// the naive all-pairs monotonicity definition is covered by tests.
bool is_truthful(const std::vector<Mask>& table);
bool is_monotone(const std::vector<Mask>& table, std::size_t n);
bool satisfies(const KnowledgeOperator& k, Axiom axiom);

enum class Claim {
  Remark1,
  Theorem2,
  Theorem3,
  Eq1,
  KBound,
  NegKOmegaMin,
  IntrospectionSame,
  KKRefines,
};

const char* claim_name(Claim c);
std::optional<Claim> claim_from_name(const std::string& name);

/// Axioms a claim's hypotheses require before it is applicable.
struct ClaimHypotheses {
  bool truth = false;
  bool monotonicity = false;
};
ClaimHypotheses claim_hypotheses(Claim c);

struct ClaimWitness {
  Mask event = 0;                    // the E at fault
  std::string relation;              // which sub-relation failed
  std::optional<std::size_t> state;  // witnessing state, when meaningful
};

struct ClaimReport {
  Claim claim = Claim::Theorem3;
  bool applicable = false;
  bool holds = false;
  bool forced = false;  // evaluated despite failed hypotheses
  /// Named intermediate events (K Omega, ~K Omega, K ~K Omega, ...).
  std::vector<std::pair<std::string, Mask>> intermediates;
  std::vector<ClaimWitness> witnesses;
  /// Axioms found missing when not applicable.
  std::vector<Axiom> missing_axioms;
};

struct ClaimOptions {
  std::optional<Event> event;  // required by Eq1
  bool forced = false;         // evaluate even when hypotheses fail
  std::size_t witness_cap = kDefaultWitnessCap;
};

ClaimReport verify_claim(const KnowledgeOperator& k, Claim claim,
                         const ClaimOptions& opts = {});

/// Applies a word over {K, ~} right-to-left to E, e.g. "K~K" computes
/// K(~(K(E))).
Event introspect(const KnowledgeOperator& k, const Event& e,
                 const std::string& word);

}  // namespace epi

#endif  // EPI_OPERATOR_HPP
