#ifndef EPI_DYNAMICS_HPP
#define EPI_DYNAMICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "epi/operator.hpp"
#include "epi/set_core.hpp"

namespace epi {

/// The agent learns that E obtains and gains the knowledge A, a nonempty
/// subset of E; A may be a proper subset when only part of E is processed.
struct LearningFact {
  Event event;
  Event learned;

  void validate() const;  // throws InvalidFact
};

/// An ordered sequence of stage operators K0, K1, ... on one space, under
/// the refinement constraint K_s E <= K_{s+1} E.
struct LearningScenario {
  SpacePtr space;
  std::vector<KnowledgeOperator> stages;
};

struct RefinementWitness {
  std::size_t stage = 0;  // violation between stage and stage+1
  Mask event = 0;
  std::size_t state = 0;
};

struct RefinementReport {
  bool valid = false;
  std::vector<RefinementWitness> witnesses;
};

RefinementReport validate_refinement(const LearningScenario& scenario,
                                     std::size_t cap = kDefaultWitnessCap);

/// The least Truth+Monotone refinement of k0 consistent with the facts:
/// K1 F = K0 F union the learned events of all facts whose event fits in F.
KnowledgeOperator learn(const KnowledgeOperator& k0,
                        const std::vector<LearningFact>& facts);

struct LearningSubClaim {
  std::string description;
  bool holds = false;
};

/// Verdicts for the staged-learning chain between k0 and k1 for a learned
/// event E, together with the intermediate events a reader needs to follow
/// it.
struct LearningReport {
  /// Preconditions: E disjoint from K0 Omega and K1 E nonempty.
  bool applicable = false;
  bool holds = false;  // all sub-claims, when applicable
  std::vector<LearningSubClaim> sub_claims;
  std::vector<std::pair<std::string, Mask>> intermediates;
};

LearningReport verify_learning_claims(const KnowledgeOperator& k0,
                                      const KnowledgeOperator& k1,
                                      const Event& learned_event);

}  // namespace epi

#endif  // EPI_DYNAMICS_HPP
