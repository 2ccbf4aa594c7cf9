#ifndef EPI_TEST_HELPERS_HPP
#define EPI_TEST_HELPERS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "epi/operator.hpp"
#include "epi/set_core.hpp"

namespace epi::test {

inline SpacePtr space_of(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    labels.push_back(std::string(1, static_cast<char>('a' + i)));
  return StateSpace::make(labels);
}

inline KnowledgeOperator identity_op(const SpacePtr& space) {
  std::vector<Mask> table;
  for (Mask e = 0; e < static_cast<Mask>(space->event_count()); ++e)
    table.push_back(e);
  return KnowledgeOperator::from_masks(space, std::move(table));
}

inline KnowledgeOperator trivial_op(const SpacePtr& space) {
  return KnowledgeOperator::from_masks(
      space, std::vector<Mask>(space->event_count(), 0));
}

inline KnowledgeOperator constant_omega_op(const SpacePtr& space) {
  return KnowledgeOperator::from_masks(
      space,
      std::vector<Mask>(space->event_count(), space->full_mask()));
}

/// The Truth-only table on {a,b} used throughout as the Monotonicity
/// counterexample: {} -> {}, {a} -> {}, {b} -> {b}, Omega -> {a}.
inline KnowledgeOperator truth_only_op(const SpacePtr& space2) {
  return KnowledgeOperator::from_masks(space2, {0b00, 0b00, 0b10, 0b01});
}

/// Monotonicity straight from the definition, all 4^n pairs. The oracle the
/// covering-pair fast path is checked against.
inline bool naive_monotone(const std::vector<Mask>& table) {
  const Mask count = static_cast<Mask>(table.size());
  for (Mask e = 0; e < count; ++e)
    for (Mask f = 0; f < count; ++f)
      if (mask_subseteq(e, f) && !mask_subseteq(table[e], table[f]))
        return false;
  return true;
}

}  // namespace epi::test

#endif  // EPI_TEST_HELPERS_HPP
