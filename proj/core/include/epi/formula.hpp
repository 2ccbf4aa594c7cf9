#ifndef EPI_FORMULA_HPP
#define EPI_FORMULA_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "epi/operator.hpp"
#include "epi/set_core.hpp"

namespace epi {

// Surface syntax, tightest first: unary K/K0..K9 and ~ (right-associative
// chain), then `\` (left-associative), then `&`, then `|`. Parentheses
// override. `K E | ~F \ E` therefore reads `(K E) | ((~F) \ E)`.

enum class ExprKind {
  EventName,
  OmegaLit,
  EmptyLit,
  SetLit,
  Know,
  Not,
  Diff,
  And,
  Or,
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  ExprKind kind;
  std::string name;                      // EventName
  std::vector<std::string> states;       // SetLit
  int stage = -1;                        // Know: -1 = bare `K`, 0..9 = `Ks`
  ExprPtr left;                          // unary operand lives here
  ExprPtr right;

  static ExprPtr event(std::string name);
  static ExprPtr omega();
  static ExprPtr empty();
  static ExprPtr set_lit(std::vector<std::string> states);
  static ExprPtr know(ExprPtr child, int stage = -1);
  static ExprPtr negate(ExprPtr child);
  static ExprPtr diff(ExprPtr l, ExprPtr r);
  static ExprPtr conj(ExprPtr l, ExprPtr r);
  static ExprPtr disj(ExprPtr l, ExprPtr r);
};

bool structurally_equal(const ExprPtr& a, const ExprPtr& b);

enum class AssertRel {
  Subseteq,
  NotSubseteq,
  Equals,
  ProperSubset,
  Disjoint,
  Empty,
  Nonempty,
};

const char* assert_rel_name(AssertRel rel);

struct Assertion {
  AssertRel rel;
  ExprPtr left;
  ExprPtr right;  // null for unary relations
};

/// A state space with named events and stage-tagged operators, the binding
/// context for formula evaluation.
struct Model {
  SpacePtr space;
  std::map<std::string, Event> events;
  /// Keyed by stage; -1 holds the operator of a single-operator model.
  std::map<int, KnowledgeOperator> operators;

  const KnowledgeOperator& operator_for_stage(int stage) const;
};

bool is_reserved_word(const std::string& name);
bool is_valid_identifier(const std::string& name);

ExprPtr parse_expr(const std::string& text);
Assertion parse_assertion(const std::string& text);

Event eval_expr(const ExprPtr& ast, const Model& model);

struct AssertionResult {
  bool holds = false;
  std::optional<std::size_t> witness;
};

AssertionResult eval_assertion(const Assertion& ast, const Model& model);

/// Minimal-parentheses rendering; parse_expr(format(ast)) is structurally
/// equal to ast.
std::string format(const ExprPtr& ast);
std::string format(const Assertion& ast);

}  // namespace epi

#endif  // EPI_FORMULA_HPP
