#include "epi/enumeration.hpp"

#include <algorithm>
#include <random>

namespace epi {

std::vector<Axiom> AxiomSet::to_list() const {
  std::vector<Axiom> out;
  if (truth) out.push_back(Axiom::Truth);
  if (monotonicity) out.push_back(Axiom::Monotonicity);
  if (necessitation) out.push_back(Axiom::Necessitation);
  if (positive_introspection) out.push_back(Axiom::PositiveIntrospection);
  if (negative_introspection) out.push_back(Axiom::NegativeIntrospection);
  if (weak_additivity) out.push_back(Axiom::WeakAdditivity);
  return out;
}

AxiomSet AxiomSet::from_list(const std::vector<Axiom>& axioms) {
  AxiomSet s;
  for (Axiom a : axioms) {
    switch (a) {
      case Axiom::Truth: s.truth = true; break;
      case Axiom::Monotonicity: s.monotonicity = true; break;
      case Axiom::Necessitation: s.necessitation = true; break;
      case Axiom::PositiveIntrospection: s.positive_introspection = true; break;
      case Axiom::NegativeIntrospection: s.negative_introspection = true; break;
      case Axiom::WeakAdditivity: s.weak_additivity = true; break;
    }
  }
  return s;
}

std::string AxiomSet::to_string() const {
  std::string out;
  for (Axiom a : to_list()) {
    if (!out.empty()) out += ",";
    out += axiom_name(a);
  }
  return out.empty() ? "(none)" : out;
}

std::uint64_t dedekind_count(std::size_t k) {
  // Monotone families over a k-element set, empty family included.
  static constexpr std::uint64_t kCounts[] = {2, 3, 6, 20};
  if (k > 3) throw TooManyStates(k + 1, kMaxTmEnumStates);
  return kCounts[k];
}

std::uint64_t tm_operator_count_formula(std::size_t n) {
  std::uint64_t per_state = dedekind_count(n - 1);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= per_state;
  return total;
}

namespace {

// Drop the bit at position w, shifting higher bits down.
Mask strip_state(Mask e, std::size_t w) {
  const Mask low = e & ((Mask{1} << w) - 1);
  const Mask high = (e >> (w + 1)) << w;
  return low | high;
}

/// All upward-closed families over a k-element base set, each family a
/// bitmask over the 2^k subsets (bit s set iff subset s belongs).
std::vector<std::uint32_t> upward_closed_families(std::size_t k) {
  const std::size_t subsets = std::size_t{1} << k;
  const std::uint64_t candidates = std::uint64_t{1} << subsets;
  std::vector<std::uint32_t> out;
  for (std::uint64_t fam = 0; fam < candidates; ++fam) {
    bool closed = true;
    for (std::size_t s = 0; s < subsets && closed; ++s) {
      if (!((fam >> s) & 1)) continue;
      for (std::size_t b = 0; b < k; ++b) {
        const std::size_t sup = s | (std::size_t{1} << b);
        if (!((fam >> sup) & 1)) {
          closed = false;
          break;
        }
      }
    }
    if (closed) out.push_back(static_cast<std::uint32_t>(fam));
  }
  return out;
}

bool table_satisfies(const std::vector<Mask>& table, std::size_t n,
                     const AxiomSet& axioms) {
  const Mask full = static_cast<Mask>((std::uint64_t{1} << n) - 1);
  const Mask count = static_cast<Mask>(table.size());
  if (axioms.truth && !is_truthful(table)) return false;
  if (axioms.monotonicity && !is_monotone(table, n)) return false;
  if (axioms.necessitation && table[full] != full) return false;
  if (axioms.positive_introspection)
    for (Mask e = 0; e < count; ++e)
      if (table[e] & ~table[table[e]]) return false;
  if (axioms.negative_introspection)
    for (Mask e = 0; e < count; ++e) {
      const Mask nk = full & ~table[e];
      if (nk & ~table[nk]) return false;
    }
  if (axioms.weak_additivity)
    for (Mask e = 0; e < count; ++e)
      for (Mask f = e; f < count; ++f)
        if ((table[e] | table[f]) & ~table[e | f]) return false;
  return true;
}

}  // namespace

void enumerate_tm_operators(const SpacePtr& space, const OperatorSink& sink) {
  const std::size_t n = space->size();
  if (n > kMaxTmEnumStates) throw TooManyStates(n, kMaxTmEnumStates);

  // N(w) = {E : w in KE} decomposes the table per state; Truth makes every
  // member contain w, Monotonicity makes the family upward-closed. Stripping
  // w leaves an upward-closed family over the remaining n-1 states, so the
  // product of independent per-state family choices covers the space
  // exactly once.
  const auto families = upward_closed_families(n - 1);
  const std::size_t event_count = space->event_count();
  std::vector<std::size_t> digits(n, 0);
  std::vector<Mask> table(event_count);

  while (true) {
    for (Mask e = 0; e < static_cast<Mask>(event_count); ++e) {
      Mask known = 0;
      for (std::size_t w = 0; w < n; ++w) {
        if (!((e >> w) & 1)) continue;
        const Mask s = strip_state(e, w);
        if ((families[digits[w]] >> s) & 1) known |= Mask{1} << w;
      }
      table[e] = known;
    }
    sink(KnowledgeOperator::from_masks(space, table));

    // Mixed-radix increment, state 0 most significant.
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < families.size()) break;
      digits[pos] = 0;
      if (pos == 0) return;
    }
  }
}

void enumerate_filtered_tables(const SpacePtr& space, const AxiomSet& axioms,
                               const OperatorSink& sink,
                               bool override_large) {
  const std::size_t n = space->size();
  const std::size_t limit =
      override_large ? kMaxTableEnumStatesOverride : kMaxTableEnumStates;
  if (n > limit) throw TooManyStates(n, limit);

  const std::size_t event_count = space->event_count();
  std::vector<Mask> table(event_count, 0);
  while (true) {
    if (table_satisfies(table, n, axioms))
      sink(KnowledgeOperator::from_masks(space, table));
    std::size_t pos = event_count;
    bool done = true;
    while (pos > 0) {
      --pos;
      if (++table[pos] < static_cast<Mask>(event_count)) {
        done = false;
        break;
      }
      table[pos] = 0;
    }
    if (done) return;
  }
}

std::uint64_t count_operators(const SpacePtr& space) {
  std::uint64_t count = 0;
  enumerate_tm_operators(space, [&](const KnowledgeOperator&) { ++count; });
  return count;
}

KnowledgeOperator sample_tm_operator(const SpacePtr& space,
                                     std::uint64_t seed) {
  constexpr std::size_t kMaxSampleStates = 16;
  const std::size_t n = space->size();
  if (n > kMaxSampleStates) throw TooManyStates(n, kMaxSampleStates);

  std::mt19937_64 rng(seed);
  NeighborhoodSystem ns;
  ns.space = space;
  ns.minimal.resize(n);
  const Mask full = space->full_mask();
  for (std::size_t w = 0; w < n; ++w) {
    const std::size_t k = rng() % 4;
    std::vector<Mask> candidates;
    for (std::size_t i = 0; i < k; ++i)
      candidates.push_back((static_cast<Mask>(rng()) & full) |
                           (Mask{1} << w));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());
    // Keep minimal elements only; dominated candidates are redundant in the
    // upward closure.
    std::vector<Mask> minimal;
    for (Mask c : candidates) {
      bool dominated = false;
      for (Mask m : candidates)
        if (m != c && mask_subseteq(m, c)) {
          dominated = true;
          break;
        }
      if (!dominated) minimal.push_back(c);
    }
    ns.minimal[w] = std::move(minimal);
  }
  return from_neighborhoods(ns);
}

namespace {

/// Claim verdict for one operator; Eq1 folds all E != Omega.
ClaimReport evaluate_for_stats(const KnowledgeOperator& op, Claim claim,
                               std::size_t witness_cap) {
  if (claim != Claim::Eq1) {
    ClaimOptions opts;
    opts.forced = true;
    opts.witness_cap = witness_cap;
    return verify_claim(op, claim, opts);
  }
  ClaimReport folded;
  folded.claim = Claim::Eq1;
  folded.applicable = true;
  folded.holds = true;
  const Mask full = op.space()->full_mask();
  for (Mask e = 0; e < full; ++e) {
    ClaimOptions opts;
    opts.forced = true;
    opts.witness_cap = witness_cap;
    opts.event = Event(op.space(), e);
    ClaimReport r = verify_claim(op, Claim::Eq1, opts);
    folded.applicable = r.applicable;
    folded.forced = r.forced;
    folded.missing_axioms = r.missing_axioms;
    if (!r.holds) {
      folded.holds = false;
      if (folded.witnesses.size() < witness_cap)
        folded.witnesses.insert(folded.witnesses.end(), r.witnesses.begin(),
                                r.witnesses.end());
      if (folded.intermediates.empty()) folded.intermediates = r.intermediates;
    }
  }
  if (folded.witnesses.size() > witness_cap)
    folded.witnesses.resize(witness_cap);
  return folded;
}

}  // namespace

EnumerationStats universal_check(const SpacePtr& space, Claim claim,
                                 const AxiomSet& axioms,
                                 const UniversalCheckOptions& opts) {
  EnumerationStats stats;
  stats.n = space->size();
  stats.axioms = axioms;
  stats.claim = claim;

  auto consume = [&](const KnowledgeOperator& op) {
    ++stats.operator_count;
    ClaimReport report = evaluate_for_stats(op, claim, kDefaultWitnessCap);
    if (report.applicable) {
      if (report.holds)
        ++stats.pass;
      else
        ++stats.fail;
    } else {
      ++stats.not_applicable;
    }
    if (!report.holds) {
      ++stats.counterexample_count;
      if (stats.samples.size() < opts.sample_cap)
        stats.samples.push_back({op.table(), std::move(report)});
    }
  };

  if (axioms.is_truth_monotone_only() && space->size() <= kMaxTmEnumStates)
    enumerate_tm_operators(space, consume);
  else
    enumerate_filtered_tables(space, axioms, consume, opts.override_large);
  return stats;
}

}  // namespace epi
