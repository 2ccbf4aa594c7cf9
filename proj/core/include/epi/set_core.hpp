#ifndef EPI_SET_CORE_HPP
#define EPI_SET_CORE_HPP

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "epi/errors.hpp"

namespace epi {

/// A subset of states packed into a machine word, least significant bit =
/// state 0. With at most 24 states every event index fits comfortably.
using Mask = std::uint32_t;

class StateSpace;
using SpacePtr = std::shared_ptr<const StateSpace>;

/// The finite state space Omega. Fixes the state ordering; the event algebra
/// is the full powerset, addressed by Mask.
class StateSpace {
 public:
  static constexpr std::size_t kMaxStates = 24;
  /// Ceiling for materializing the whole powerset as a sequence.
  static constexpr std::size_t kMaxEnumerable = 20;

  static SpacePtr make(std::vector<std::string> labels);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& label(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(const std::string& label) const;

  Mask full_mask() const {
    return static_cast<Mask>((std::uint64_t{1} << names_.size()) - 1);
  }
  std::size_t event_count() const { return std::size_t{1} << names_.size(); }

 private:
  explicit StateSpace(std::vector<std::string> labels)
      : names_(std::move(labels)) {}
  std::vector<std::string> names_;
};

/// An immutable event: a subset of a state space's states.
class Event {
 public:
  Event(SpacePtr space, Mask mask) : space_(std::move(space)), mask_(mask) {}

  static Event empty(const SpacePtr& space) { return Event(space, 0); }
  static Event omega(const SpacePtr& space) {
    return Event(space, space->full_mask());
  }
  static Event from_names(const SpacePtr& space,
                          const std::vector<std::string>& labels);

  const SpacePtr& space() const { return space_; }
  Mask mask() const { return mask_; }
  bool is_empty() const { return mask_ == 0; }
  bool is_omega() const { return mask_ == space_->full_mask(); }
  bool contains(std::size_t state) const {
    return (mask_ >> state) & Mask{1};
  }
  std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(mask_));
  }

  std::vector<std::size_t> members() const;
  /// Renders as `{a,b}`, `{}`, or `Omega`.
  std::string to_string() const;

  friend bool operator==(const Event& a, const Event& b) {
    return a.space_ == b.space_ && a.mask_ == b.mask_;
  }

 private:
  SpacePtr space_;
  Mask mask_;
};

enum class SetOp { Union, Intersect, Difference };
enum class Relation { Subseteq, ProperSubset, Equals, Disjoint };

struct RelationResult {
  bool holds = false;
  /// When a subseteq/proper-subset query fails, a state in E \ F.
  std::optional<std::size_t> witness;
};

Event combine(const Event& e, const Event& f, SetOp op);
Event complement(const Event& e);
RelationResult relate(const Event& e, const Event& f, Relation rel);

/// All 2^n events in canonical order: increasing mask value, so the first
/// element is the empty event and the last is Omega.
std::vector<Event> enumerate_events(const SpacePtr& space);

// Mask-level helpers shared by the operator and enumeration modules.
inline bool mask_subseteq(Mask a, Mask b) { return (a & ~b) == 0; }
inline std::size_t lowest_state(Mask m) {
  return static_cast<std::size_t>(std::countr_zero(m));
}

}  // namespace epi

#endif  // EPI_SET_CORE_HPP
