#include "epi/operator.hpp"

#include <algorithm>

namespace epi {

KnowledgeOperator KnowledgeOperator::from_table(const SpacePtr& space,
                                                std::vector<Event> images) {
  std::vector<Mask> table;
  table.reserve(images.size());
  for (const auto& img : images) {
    if (img.space() != space) throw SpaceMismatch();
    table.push_back(img.mask());
  }
  return from_masks(space, std::move(table));
}

KnowledgeOperator KnowledgeOperator::from_masks(const SpacePtr& space,
                                                std::vector<Mask> table) {
  if (table.size() != space->event_count())
    throw WrongArity(space->event_count(), table.size());
  const Mask full = space->full_mask();
  for (Mask img : table)
    if (img & ~full)
      throw InvariantViolation("operator image outside the state space");
  return KnowledgeOperator(space, std::move(table));
}

Event KnowledgeOperator::apply(const Event& e) const {
  if (e.space() != space_) throw SpaceMismatch();
  return Event(space_, table_[e.mask()]);
}

void NeighborhoodSystem::validate() const {
  if (minimal.size() != space->size())
    throw InvariantViolation("neighborhood system must list every state");
  for (std::size_t w = 0; w < minimal.size(); ++w) {
    const auto& family = minimal[w];
    for (Mask nb : family) {
      if (!((nb >> w) & 1))
        throw InvariantViolation("neighborhood of state \"" +
                                 space->label(w) + "\" does not contain it");
      if (nb & ~space->full_mask())
        throw InvariantViolation("neighborhood outside the state space");
    }
    for (std::size_t i = 0; i < family.size(); ++i)
      for (std::size_t j = 0; j < family.size(); ++j)
        if (i != j && mask_subseteq(family[i], family[j]))
          throw InvariantViolation(
              "neighborhood list of state \"" + space->label(w) +
              "\" is not an antichain");
  }
}

KnowledgeOperator from_neighborhoods(const NeighborhoodSystem& ns) {
  ns.validate();
  const std::size_t count = ns.space->event_count();
  std::vector<Mask> table(count, 0);
  for (Mask e = 0; e < static_cast<Mask>(count); ++e) {
    Mask known = 0;
    for (std::size_t w = 0; w < ns.space->size(); ++w) {
      for (Mask nb : ns.minimal[w]) {
        if (mask_subseteq(nb, e)) {
          known |= Mask{1} << w;
          break;
        }
      }
    }
    table[e] = known;
  }
  return KnowledgeOperator::from_masks(ns.space, std::move(table));
}

NeighborhoodSystem to_neighborhoods(const KnowledgeOperator& k) {
  if (!is_truthful(k.table()))
    throw NotTruthful("operator fails Truth; no neighborhood form");
  if (!is_monotone(k.table(), k.space()->size()))
    throw NotMonotone("operator fails Monotonicity; no neighborhood form");
  NeighborhoodSystem ns;
  ns.space = k.space();
  ns.minimal.resize(k.space()->size());
  const Mask count = static_cast<Mask>(k.space()->event_count());
  for (std::size_t w = 0; w < k.space()->size(); ++w) {
    // Minimal elements of {E : w in KE}; masks scan smallest-size first
    // would be ideal, a dominance filter over canonical order suffices.
    std::vector<Mask> minimal;
    for (Mask e = 0; e < count; ++e) {
      if (!((k.apply_mask(e) >> w) & 1)) continue;
      bool dominated = false;
      for (Mask m : minimal)
        if (mask_subseteq(m, e)) {
          dominated = true;
          break;
        }
      if (!dominated) minimal.push_back(e);
    }
    ns.minimal[w] = std::move(minimal);
  }
  return ns;
}

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::Truth: return "Truth";
    case Axiom::Monotonicity: return "Monotonicity";
    case Axiom::Necessitation: return "Necessitation";
    case Axiom::PositiveIntrospection: return "PositiveIntrospection";
    case Axiom::NegativeIntrospection: return "NegativeIntrospection";
    case Axiom::WeakAdditivity: return "WeakAdditivity";
  }
  return "?";
}

std::optional<Axiom> axiom_from_name(const std::string& name) {
  std::string low;
  for (char c : name) low += static_cast<char>(std::tolower(c));
  if (low == "truth") return Axiom::Truth;
  if (low == "monotonicity" || low == "mono") return Axiom::Monotonicity;
  if (low == "necessitation" || low == "nec") return Axiom::Necessitation;
  if (low == "positiveintrospection" || low == "posintro")
    return Axiom::PositiveIntrospection;
  if (low == "negativeintrospection" || low == "negintro")
    return Axiom::NegativeIntrospection;
  if (low == "weakadditivity" || low == "weakadd")
    return Axiom::WeakAdditivity;
  return std::nullopt;
}

bool is_truthful(const std::vector<Mask>& table) {
  for (Mask e = 0; e < static_cast<Mask>(table.size()); ++e)
    if (table[e] & ~e) return false;
  return true;
}

bool is_monotone(const std::vector<Mask>& table, std::size_t n) {
  // Covering pairs (E, E + {w}) suffice: any inclusion E <= F decomposes
  // into a chain of single-state insertions.
  const Mask count = static_cast<Mask>(table.size());
  for (Mask e = 0; e < count; ++e) {
    for (std::size_t w = 0; w < n; ++w) {
      const Mask bit = Mask{1} << w;
      if (e & bit) continue;
      if (table[e] & ~table[e | bit]) return false;
    }
  }
  return true;
}

namespace {

bool sat_necessitation(const KnowledgeOperator& k) {
  return k.apply_mask(k.space()->full_mask()) == k.space()->full_mask();
}

bool sat_pos_introspection(const KnowledgeOperator& k) {
  const Mask count = static_cast<Mask>(k.table().size());
  for (Mask e = 0; e < count; ++e)
    if (k.apply_mask(e) & ~k.apply_mask(k.apply_mask(e))) return false;
  return true;
}

bool sat_neg_introspection(const KnowledgeOperator& k) {
  const Mask full = k.space()->full_mask();
  const Mask count = static_cast<Mask>(k.table().size());
  for (Mask e = 0; e < count; ++e) {
    const Mask not_known = full & ~k.apply_mask(e);
    if (not_known & ~k.apply_mask(not_known)) return false;
  }
  return true;
}

bool sat_weak_additivity(const KnowledgeOperator& k) {
  const Mask count = static_cast<Mask>(k.table().size());
  for (Mask e = 0; e < count; ++e)
    for (Mask f = e; f < count; ++f)
      if ((k.apply_mask(e) | k.apply_mask(f)) & ~k.apply_mask(e | f))
        return false;
  return true;
}

}  // namespace

bool satisfies(const KnowledgeOperator& k, Axiom axiom) {
  switch (axiom) {
    case Axiom::Truth: return is_truthful(k.table());
    case Axiom::Monotonicity:
      return is_monotone(k.table(), k.space()->size());
    case Axiom::Necessitation: return sat_necessitation(k);
    case Axiom::PositiveIntrospection: return sat_pos_introspection(k);
    case Axiom::NegativeIntrospection: return sat_neg_introspection(k);
    case Axiom::WeakAdditivity: return sat_weak_additivity(k);
  }
  return false;
}

AxiomReport check_axiom(const KnowledgeOperator& k, Axiom axiom,
                        std::size_t cap) {
  AxiomReport report;
  report.axiom = axiom;
  report.holds = true;
  const Mask count = static_cast<Mask>(k.table().size());
  const Mask full = k.space()->full_mask();
  const std::size_t n = k.space()->size();

  auto violate = [&](Mask event, std::optional<Mask> second, Mask diff) {
    report.holds = false;
    if (report.counterexamples.size() < cap)
      report.counterexamples.push_back(
          {event, second, lowest_state(diff)});
  };

  switch (axiom) {
    case Axiom::Truth:
      for (Mask e = 0; e < count; ++e)
        if (Mask d = k.apply_mask(e) & ~e) violate(e, std::nullopt, d);
      break;
    case Axiom::Monotonicity:
      for (Mask e = 0; e < count; ++e)
        for (std::size_t w = 0; w < n; ++w) {
          const Mask bit = Mask{1} << w;
          if (e & bit) continue;
          if (Mask d = k.apply_mask(e) & ~k.apply_mask(e | bit))
            violate(e, e | bit, d);
        }
      break;
    case Axiom::Necessitation:
      if (Mask d = full & ~k.apply_mask(full)) violate(full, std::nullopt, d);
      break;
    case Axiom::PositiveIntrospection:
      for (Mask e = 0; e < count; ++e)
        if (Mask d = k.apply_mask(e) & ~k.apply_mask(k.apply_mask(e)))
          violate(e, std::nullopt, d);
      break;
    case Axiom::NegativeIntrospection:
      for (Mask e = 0; e < count; ++e) {
        const Mask not_known = full & ~k.apply_mask(e);
        if (Mask d = not_known & ~k.apply_mask(not_known))
          violate(e, std::nullopt, d);
      }
      break;
    case Axiom::WeakAdditivity:
      for (Mask e = 0; e < count; ++e)
        for (Mask f = e; f < count; ++f)
          if (Mask d = (k.apply_mask(e) | k.apply_mask(f)) &
                       ~k.apply_mask(e | f))
            violate(e, f, d);
      break;
  }
  return report;
}

const char* claim_name(Claim c) {
  switch (c) {
    case Claim::Remark1: return "Remark1";
    case Claim::Theorem2: return "Theorem2";
    case Claim::Theorem3: return "Theorem3";
    case Claim::Eq1: return "Eq1";
    case Claim::KBound: return "KBound";
    case Claim::NegKOmegaMin: return "NegKOmegaMin";
    case Claim::IntrospectionSame: return "IntrospectionSame";
    case Claim::KKRefines: return "KKRefines";
  }
  return "?";
}

std::optional<Claim> claim_from_name(const std::string& name) {
  std::string low;
  for (char c : name) low += static_cast<char>(std::tolower(c));
  if (low == "remark1") return Claim::Remark1;
  if (low == "theorem2" || low == "thm2") return Claim::Theorem2;
  if (low == "theorem3" || low == "thm3") return Claim::Theorem3;
  if (low == "eq1") return Claim::Eq1;
  if (low == "kbound") return Claim::KBound;
  if (low == "negkomegamin" || low == "negkomega") return Claim::NegKOmegaMin;
  if (low == "introspectionsame" || low == "introsame")
    return Claim::IntrospectionSame;
  if (low == "kkrefines") return Claim::KKRefines;
  return std::nullopt;
}

ClaimHypotheses claim_hypotheses(Claim c) {
  switch (c) {
    case Claim::Remark1: return {false, false};        // definitional
    case Claim::Theorem2: return {true, false};
    case Claim::Theorem3: return {true, true};
    case Claim::Eq1: return {true, true};
    case Claim::KBound: return {true, true};
    case Claim::NegKOmegaMin: return {false, true};    // Monotonicity suffices
    case Claim::IntrospectionSame: return {false, false};
    case Claim::KKRefines: return {true, false};
  }
  return {};
}

ClaimReport verify_claim(const KnowledgeOperator& k, Claim claim,
                         const ClaimOptions& opts) {
  ClaimReport report;
  report.claim = claim;

  if (claim == Claim::Eq1) {
    if (!opts.event) throw MissingParameter("E");
    if (opts.event->space() != k.space()) throw SpaceMismatch();
    if (opts.event->is_omega()) throw EIsOmega();
  }

  const auto hyp = claim_hypotheses(claim);
  bool hypotheses_met = true;
  if (hyp.truth && !is_truthful(k.table())) {
    hypotheses_met = false;
    report.missing_axioms.push_back(Axiom::Truth);
  }
  if (hyp.monotonicity && !is_monotone(k.table(), k.space()->size())) {
    hypotheses_met = false;
    report.missing_axioms.push_back(Axiom::Monotonicity);
  }
  report.applicable = hypotheses_met;
  if (!hypotheses_met && !opts.forced) {
    report.holds = false;
    return report;
  }
  report.forced = !hypotheses_met;

  const Mask full = k.space()->full_mask();
  const Mask count = static_cast<Mask>(k.table().size());
  const Mask k_omega = k.apply_mask(full);
  const Mask not_k_omega = full & ~k_omega;

  auto note = [&](const std::string& name, Mask m) {
    report.intermediates.emplace_back(name, m);
  };
  auto fail = [&](Mask event, const std::string& relation,
                  std::optional<std::size_t> state) {
    report.holds = false;
    if (report.witnesses.size() < opts.witness_cap)
      report.witnesses.push_back({event, relation, state});
  };

  report.holds = true;
  switch (claim) {
    case Claim::Remark1: {
      // ~K Omega = Omega \ K Omega: for E = Omega the complement and the
      // relative complement coincide.
      const Mask relative = full & ~k_omega;
      note("K Omega", k_omega);
      note("~K Omega", not_k_omega);
      note("Omega \\ K Omega", relative);
      if (not_k_omega != relative)
        fail(full, "~K Omega == Omega \\ K Omega", std::nullopt);
      break;
    }
    case Claim::Theorem2: {
      note("K Omega", k_omega);
      for (Mask e = 0; e < count; ++e) {
        const Mask not_ke = full & ~k.apply_mask(e);
        if (mask_subseteq(not_ke, e) && e != full)
          fail(e, "~K E <= E forces E == Omega", lowest_state(full & ~e));
      }
      break;
    }
    case Claim::Theorem3: {
      const Mask k_not_k_omega = k.apply_mask(not_k_omega);
      note("K Omega", k_omega);
      note("~K Omega", not_k_omega);
      note("K ~K Omega", k_not_k_omega);
      if (k_not_k_omega != 0)
        fail(not_k_omega, "empty(K ~K Omega)",
             lowest_state(k_not_k_omega));
      break;
    }
    case Claim::Eq1: {
      const Mask e = opts.event->mask();
      const Mask not_e = full & ~e;
      const Mask ke = k.apply_mask(e);
      const Mask not_ke = full & ~ke;
      const Mask k_not_e = k.apply_mask(not_e);
      const Mask k_not_ke = k.apply_mask(not_ke);
      note("E", e);
      note("K E", ke);
      note("~K E", not_ke);
      note("~E", not_e);
      note("K ~E", k_not_e);
      note("K ~K E", k_not_ke);
      if (Mask d = k_not_e & ~not_e)
        fail(e, "K ~E <= ~E", lowest_state(d));
      if (Mask d = not_e & ~not_ke)
        fail(e, "~E <= ~K E", lowest_state(d));
      if (mask_subseteq(not_ke, e))
        fail(e, "~K E !<= E", std::nullopt);
      if (Mask d = k_not_e & ~k_not_ke)
        fail(e, "K ~E <= K ~K E", lowest_state(d));
      if (Mask d = k_not_ke & ~not_ke)
        fail(e, "K ~K E <= ~K E", lowest_state(d));
      break;
    }
    case Claim::KBound: {
      note("K Omega", k_omega);
      for (Mask e = 0; e < count; ++e)
        if (Mask d = k.apply_mask(e) & ~(e & k_omega))
          fail(e, "K E <= E & K Omega", lowest_state(d));
      break;
    }
    case Claim::NegKOmegaMin: {
      note("~K Omega", not_k_omega);
      for (Mask e = 0; e < count; ++e) {
        const Mask not_ke = full & ~k.apply_mask(e);
        if (Mask d = not_k_omega & ~not_ke)
          fail(e, "~K Omega <= ~K E", lowest_state(d));
      }
      break;
    }
    case Claim::IntrospectionSame: {
      // K Omega | ~K Omega is Omega, so this is definitional; the trace is
      // kept for the report narrative.
      const Mask tautology = k_omega | not_k_omega;
      note("K Omega", k_omega);
      note("~K Omega", not_k_omega);
      note("K Omega | ~K Omega", tautology);
      note("K (K Omega | ~K Omega)", k.apply_mask(tautology));
      if (k.apply_mask(tautology) != k_omega)
        fail(tautology, "K (K Omega | ~K Omega) == K Omega", std::nullopt);
      break;
    }
    case Claim::KKRefines: {
      const Mask kk_omega = k.apply_mask(k_omega);
      note("K Omega", k_omega);
      note("K K Omega", kk_omega);
      if (Mask d = kk_omega & ~k_omega)
        fail(k_omega, "K K Omega <= K Omega", lowest_state(d));
      break;
    }
  }
  return report;
}

Event introspect(const KnowledgeOperator& k, const Event& e,
                 const std::string& word) {
  if (e.space() != k.space()) throw SpaceMismatch();
  for (std::size_t i = 0; i < word.size(); ++i)
    if (word[i] != 'K' && word[i] != '~') throw BadWord(i);
  Mask m = e.mask();
  const Mask full = k.space()->full_mask();
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    m = (*it == 'K') ? k.apply_mask(m) : (full & ~m);
  return Event(k.space(), m);
}

}  // namespace epi
