#ifndef EPI_ENUMERATION_HPP
#define EPI_ENUMERATION_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "epi/operator.hpp"
#include "epi/set_core.hpp"

namespace epi {

struct AxiomSet {
  bool truth = false;
  bool monotonicity = false;
  bool necessitation = false;
  bool positive_introspection = false;
  bool negative_introspection = false;
  bool weak_additivity = false;

  bool is_truth_monotone_only() const {
    return truth && monotonicity && !necessitation &&
           !positive_introspection && !negative_introspection &&
           !weak_additivity;
  }
  std::vector<Axiom> to_list() const;
  static AxiomSet from_list(const std::vector<Axiom>& axioms);
  std::string to_string() const;
};

/// Largest n for which the Truth+Monotone space is enumerated exhaustively:
/// D(3)^4 = 20^4 = 160000 operators.
constexpr std::size_t kMaxTmEnumStates = 4;
/// Brute-force table enumeration walks (2^n)^(2^n) tables; n = 3 is 16.8M
/// and sits behind an explicit override.
constexpr std::size_t kMaxTableEnumStates = 2;
constexpr std::size_t kMaxTableEnumStatesOverride = 3;

using OperatorSink = std::function<void(const KnowledgeOperator&)>;

/// Every operator satisfying Truth and Monotonicity, each exactly once, in
/// a deterministic order. Count is D(n-1)^n with D = (2,3,6,20).
void enumerate_tm_operators(const SpacePtr& space, const OperatorSink& sink);

/// Brute force over all (2^n)^(2^n) total tables, filtered by the axiom
/// checks. The oracle for axiom subsets the structured enumerator cannot
/// produce.
void enumerate_filtered_tables(const SpacePtr& space, const AxiomSet& axioms,
                               const OperatorSink& sink,
                               bool override_large = false);

std::uint64_t count_operators(const SpacePtr& space);

/// Expected Truth+Monotone operator count, D(n-1)^n.
std::uint64_t tm_operator_count_formula(std::size_t n);

/// Dedekind count of monotone (upward-closed) families over a k-element
/// base set, including the empty family; k <= 3.
std::uint64_t dedekind_count(std::size_t k);

/// Deterministic in (n, seed); the result always satisfies Truth and
/// Monotonicity. Draws at most 3 candidate minimal neighborhoods per state.
KnowledgeOperator sample_tm_operator(const SpacePtr& space,
                                     std::uint64_t seed);

struct CounterexampleSample {
  std::vector<Mask> table;
  ClaimReport report;
};

struct EnumerationStats {
  std::size_t n = 0;
  AxiomSet axioms;
  Claim claim = Claim::Theorem3;
  std::uint64_t operator_count = 0;
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  std::uint64_t not_applicable = 0;
  /// Operators whose (possibly forced) evaluation refutes the claim.
  std::uint64_t counterexample_count = 0;
  std::vector<CounterexampleSample> samples;
};

struct UniversalCheckOptions {
  std::size_t sample_cap = kDefaultWitnessCap;
  bool override_large = false;
};

/// Runs verify_claim over every operator in the (n, axioms) space; Eq1
/// additionally quantifies over every event E != Omega per operator.
/// Operators that miss a claim hypothesis are force-evaluated so that
/// counterexamples to the unguarded statement are recorded.
EnumerationStats universal_check(const SpacePtr& space, Claim claim,
                                 const AxiomSet& axioms,
                                 const UniversalCheckOptions& opts = {});

}  // namespace epi

#endif  // EPI_ENUMERATION_HPP
