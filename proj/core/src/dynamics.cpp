#include "epi/dynamics.hpp"

namespace epi {

void LearningFact::validate() const {
  if (event.space() != learned.space()) throw SpaceMismatch();
  if (learned.is_empty())
    throw InvalidFact("learned knowledge must be nonempty");
  if (!mask_subseteq(learned.mask(), event.mask()))
    throw InvalidFact("learned knowledge " + learned.to_string() +
                      " is not a subset of the learned event " +
                      event.to_string());
}

RefinementReport validate_refinement(const LearningScenario& scenario,
                                     std::size_t cap) {
  if (scenario.stages.size() < 2) throw TooFewStages();
  for (const auto& stage : scenario.stages)
    if (stage.space() != scenario.space) throw SpaceMismatch();

  RefinementReport report;
  report.valid = true;
  const Mask count = static_cast<Mask>(scenario.space->event_count());
  for (std::size_t s = 0; s + 1 < scenario.stages.size(); ++s) {
    const auto& lo = scenario.stages[s];
    const auto& hi = scenario.stages[s + 1];
    for (Mask e = 0; e < count; ++e) {
      if (Mask d = lo.apply_mask(e) & ~hi.apply_mask(e)) {
        report.valid = false;
        if (report.witnesses.size() < cap)
          report.witnesses.push_back({s, e, lowest_state(d)});
      }
    }
  }
  return report;
}

KnowledgeOperator learn(const KnowledgeOperator& k0,
                        const std::vector<LearningFact>& facts) {
  if (!is_truthful(k0.table()))
    throw AxiomViolation("stage-0 operator fails Truth");
  if (!is_monotone(k0.table(), k0.space()->size()))
    throw AxiomViolation("stage-0 operator fails Monotonicity");
  for (const auto& fact : facts) {
    fact.validate();
    if (fact.event.space() != k0.space()) throw SpaceMismatch();
  }

  // Least refinement: add each fact's learned knowledge to every event the
  // fact's event fits in. Truth holds since A <= E <= F, Monotonicity since
  // each term grows with F.
  const Mask count = static_cast<Mask>(k0.space()->event_count());
  std::vector<Mask> table(count);
  for (Mask f = 0; f < count; ++f) {
    Mask known = k0.apply_mask(f);
    for (const auto& fact : facts)
      if (mask_subseteq(fact.event.mask(), f)) known |= fact.learned.mask();
    table[f] = known;
  }
  return KnowledgeOperator::from_masks(k0.space(), std::move(table));
}

LearningReport verify_learning_claims(const KnowledgeOperator& k0,
                                      const KnowledgeOperator& k1,
                                      const Event& learned_event) {
  if (k0.space() != k1.space() || learned_event.space() != k0.space())
    throw SpaceMismatch();
  if (!is_truthful(k0.table()) || !is_truthful(k1.table()))
    throw AxiomViolation("stage operators must satisfy Truth");
  if (!is_monotone(k0.table(), k0.space()->size()) ||
      !is_monotone(k1.table(), k1.space()->size()))
    throw AxiomViolation("stage operators must satisfy Monotonicity");

  const Mask full = k0.space()->full_mask();
  const Mask e = learned_event.mask();
  const Mask k0_omega = k0.apply_mask(full);
  const Mask not_k0_omega = full & ~k0_omega;
  const Mask k1_e = k1.apply_mask(e);
  const Mask k1_not_k0_omega = k1.apply_mask(not_k0_omega);
  const Mask k1_omega = k1.apply_mask(full);
  const Mask not_k1_omega = full & ~k1_omega;
  const Mask k1_not_k1_omega = k1.apply_mask(not_k1_omega);

  LearningReport report;
  report.intermediates = {
      {"E", e},
      {"K0 Omega", k0_omega},
      {"E & K0 Omega", e & k0_omega},
      {"~K0 Omega", not_k0_omega},
      {"K1 E", k1_e},
      {"K1 ~K0 Omega", k1_not_k0_omega},
      {"K1 Omega", k1_omega},
      {"~K1 Omega", not_k1_omega},
      {"K1 ~K1 Omega", k1_not_k1_omega},
  };

  // The paper's case: complete prior lack of knowledge of E, then learning.
  report.applicable = (e & k0_omega) == 0 && k1_e != 0;
  if (!report.applicable) return report;

  auto claim = [&](std::string description, bool holds) {
    report.sub_claims.push_back({std::move(description), holds});
  };
  claim("E <= ~K0 Omega", mask_subseteq(e, not_k0_omega));
  claim("K1 E <= K1 ~K0 Omega", mask_subseteq(k1_e, k1_not_k0_omega));
  claim("nonempty(K1 ~K0 Omega)", k1_not_k0_omega != 0);
  claim("K1 ~K0 Omega <= K1 Omega & ~K0 Omega",
        mask_subseteq(k1_not_k0_omega, k1_omega & not_k0_omega));
  claim("empty(K1 ~K1 Omega)", k1_not_k1_omega == 0);
  claim("K1 (K1 Omega | ~K1 Omega) == K1 Omega",
        k1.apply_mask(k1_omega | not_k1_omega) == k1_omega);

  report.holds = true;
  for (const auto& sc : report.sub_claims)
    if (!sc.holds) report.holds = false;
  return report;
}

}  // namespace epi
