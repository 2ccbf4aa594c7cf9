#include "epi/set_core.hpp"

#include <algorithm>
#include <unordered_set>

namespace epi {

SpacePtr StateSpace::make(std::vector<std::string> labels) {
  if (labels.empty()) throw EmptyLabelList();
  if (labels.size() > kMaxStates) throw TooManyStates(labels.size(), kMaxStates);
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw InvariantViolation("state labels must be nonempty");
    if (!seen.insert(l).second) throw DuplicateLabel(l);
  }
  return SpacePtr(new StateSpace(std::move(labels)));
}

std::optional<std::size_t> StateSpace::index_of(const std::string& label) const {
  auto it = std::find(names_.begin(), names_.end(), label);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

Event Event::from_names(const SpacePtr& space,
                        const std::vector<std::string>& labels) {
  Mask m = 0;
  for (const auto& l : labels) {
    auto idx = space->index_of(l);
    if (!idx) throw UnknownLabel(l);
    m |= Mask{1} << *idx;
  }
  return Event(space, m);
}

std::vector<std::size_t> Event::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < space_->size(); ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string Event::to_string() const {
  if (is_omega()) return "Omega";
  std::string out = "{";
  bool first = true;
  for (std::size_t i : members()) {
    if (!first) out += ",";
    out += space_->label(i);
    first = false;
  }
  out += "}";
  return out;
}

namespace {
void require_same_space(const Event& e, const Event& f) {
  if (e.space() != f.space()) throw SpaceMismatch();
}
}  // namespace

Event combine(const Event& e, const Event& f, SetOp op) {
  require_same_space(e, f);
  switch (op) {
    case SetOp::Union:
      return Event(e.space(), e.mask() | f.mask());
    case SetOp::Intersect:
      return Event(e.space(), e.mask() & f.mask());
    case SetOp::Difference:
      return Event(e.space(), e.mask() & ~f.mask());
  }
  throw Error("unreachable");
}

Event complement(const Event& e) {
  return Event(e.space(), e.space()->full_mask() & ~e.mask());
}

RelationResult relate(const Event& e, const Event& f, Relation rel) {
  require_same_space(e, f);
  RelationResult r;
  switch (rel) {
    case Relation::Subseteq:
      r.holds = mask_subseteq(e.mask(), f.mask());
      break;
    case Relation::ProperSubset:
      r.holds = mask_subseteq(e.mask(), f.mask()) && e.mask() != f.mask();
      break;
    case Relation::Equals:
      r.holds = e.mask() == f.mask();
      break;
    case Relation::Disjoint:
      r.holds = (e.mask() & f.mask()) == 0;
      break;
  }
  if (!r.holds &&
      (rel == Relation::Subseteq || rel == Relation::ProperSubset)) {
    Mask diff = e.mask() & ~f.mask();
    if (diff) r.witness = lowest_state(diff);
  }
  return r;
}

std::vector<Event> enumerate_events(const SpacePtr& space) {
  if (space->size() > StateSpace::kMaxEnumerable)
    throw TooManyStates(space->size(), StateSpace::kMaxEnumerable);
  std::vector<Event> out;
  out.reserve(space->event_count());
  for (Mask m = 0; m < static_cast<Mask>(space->event_count()); ++m)
    out.emplace_back(space, m);
  return out;
}

}  // namespace epi
