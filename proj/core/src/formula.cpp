#include "epi/formula.hpp"

#include <cctype>

namespace epi {

ExprPtr Expr::event(std::string name) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::EventName;
  e->name = std::move(name);
  return e;
}
ExprPtr Expr::omega() {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::OmegaLit;
  return e;
}
ExprPtr Expr::empty() {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::EmptyLit;
  return e;
}
ExprPtr Expr::set_lit(std::vector<std::string> states) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::SetLit;
  e->states = std::move(states);
  return e;
}
ExprPtr Expr::know(ExprPtr child, int stage) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Know;
  e->stage = stage;
  e->left = std::move(child);
  return e;
}
ExprPtr Expr::negate(ExprPtr child) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Not;
  e->left = std::move(child);
  return e;
}
namespace {
ExprPtr binary(ExprKind kind, ExprPtr l, ExprPtr r) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->left = std::move(l);
  e->right = std::move(r);
  return e;
}
}  // namespace
ExprPtr Expr::diff(ExprPtr l, ExprPtr r) {
  return binary(ExprKind::Diff, std::move(l), std::move(r));
}
ExprPtr Expr::conj(ExprPtr l, ExprPtr r) {
  return binary(ExprKind::And, std::move(l), std::move(r));
}
ExprPtr Expr::disj(ExprPtr l, ExprPtr r) {
  return binary(ExprKind::Or, std::move(l), std::move(r));
}

bool structurally_equal(const ExprPtr& a, const ExprPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case ExprKind::EventName:
      return a->name == b->name;
    case ExprKind::OmegaLit:
    case ExprKind::EmptyLit:
      return true;
    case ExprKind::SetLit:
      return a->states == b->states;
    case ExprKind::Know:
      return a->stage == b->stage && structurally_equal(a->left, b->left);
    case ExprKind::Not:
      return structurally_equal(a->left, b->left);
    case ExprKind::Diff:
    case ExprKind::And:
    case ExprKind::Or:
      return structurally_equal(a->left, b->left) &&
             structurally_equal(a->right, b->right);
  }
  return false;
}

const char* assert_rel_name(AssertRel rel) {
  switch (rel) {
    case AssertRel::Subseteq: return "subseteq";
    case AssertRel::NotSubseteq: return "not_subseteq";
    case AssertRel::Equals: return "equals";
    case AssertRel::ProperSubset: return "proper_subset";
    case AssertRel::Disjoint: return "disjoint";
    case AssertRel::Empty: return "empty";
    case AssertRel::Nonempty: return "nonempty";
  }
  return "?";
}

bool is_reserved_word(const std::string& name) {
  if (name == "Omega" || name == "Empty" || name == "K") return true;
  if (name.size() == 2 && name[0] == 'K' && std::isdigit(name[1]))
    return true;
  return false;
}

bool is_valid_identifier(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_')
    return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
      return false;
  return !is_reserved_word(name);
}

namespace {

enum class Tok {
  Ident,
  Know,     // stage in Token::stage
  Omega,
  Empty,
  SetLit,   // names in Token::states
  Tilde,
  Backslash,
  Amp,
  Pipe,
  LParen,
  RParen,
  Comma,
  Le,       // <=
  NotLe,    // !<=
  EqEq,     // ==
  Lt,       // <
  End,
};

struct Token {
  Tok kind;
  std::size_t pos = 0;
  std::string text;
  std::vector<std::string> states;
  int stage = -1;
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string word;
      while (i < n && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                       text[i] == '_'))
        word += text[i++];
      if (word == "K") {
        out.push_back({Tok::Know, start, word, {}, -1});
      } else if (word.size() == 2 && word[0] == 'K' &&
                 std::isdigit(static_cast<unsigned char>(word[1]))) {
        out.push_back({Tok::Know, start, word, {}, word[1] - '0'});
      } else if (word == "Omega") {
        out.push_back({Tok::Omega, start, word});
      } else if (word == "Empty") {
        out.push_back({Tok::Empty, start, word});
      } else {
        out.push_back({Tok::Ident, start, word});
      }
      continue;
    }
    if (c == '{') {
      ++i;
      std::vector<std::string> states;
      bool expect_name = false;
      while (true) {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i < n && text[i] == '}') {
          if (expect_name)
            throw LexError(i, "state name after ',' in event literal");
          ++i;
          break;
        }
        std::string word;
        while (i < n && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                         text[i] == '_'))
          word += text[i++];
        if (word.empty()) throw LexError(i, "state name in event literal");
        states.push_back(std::move(word));
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i < n && text[i] == ',') {
          ++i;
          expect_name = true;
          continue;
        }
        if (i < n && text[i] == '}') {
          ++i;
          break;
        }
        throw LexError(i, "',' or '}' in event literal");
      }
      if (states.empty())
        out.push_back({Tok::Empty, start, "{}"});
      else
        out.push_back({Tok::SetLit, start, text.substr(start, i - start),
                       std::move(states)});
      continue;
    }
    switch (c) {
      case '~': out.push_back({Tok::Tilde, start, "~"}); ++i; break;
      case '\\': out.push_back({Tok::Backslash, start, "\\"}); ++i; break;
      case '&': out.push_back({Tok::Amp, start, "&"}); ++i; break;
      case '|': out.push_back({Tok::Pipe, start, "|"}); ++i; break;
      case '(': out.push_back({Tok::LParen, start, "("}); ++i; break;
      case ')': out.push_back({Tok::RParen, start, ")"}); ++i; break;
      case ',': out.push_back({Tok::Comma, start, ","}); ++i; break;
      case '<':
        if (i + 1 < n && text[i + 1] == '=') {
          out.push_back({Tok::Le, start, "<="});
          i += 2;
        } else {
          out.push_back({Tok::Lt, start, "<"});
          ++i;
        }
        break;
      case '!':
        if (i + 2 < n && text[i + 1] == '<' && text[i + 2] == '=') {
          out.push_back({Tok::NotLe, start, "!<="});
          i += 3;
        } else {
          throw LexError(start, "'!<='");
        }
        break;
      case '=':
        if (i + 1 < n && text[i + 1] == '=') {
          out.push_back({Tok::EqEq, start, "=="});
          i += 2;
        } else {
          throw LexError(start, "'=='");
        }
        break;
      default:
        throw LexError(start, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, n, ""});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : tokens_(lex(text)) {}

  ExprPtr parse_full_expr() {
    auto e = parse_or();
    expect(Tok::End, "end of input");
    return e;
  }

  Assertion parse_full_assertion() {
    // disjoint/empty/nonempty function forms, else a binary relation.
    if (peek().kind == Tok::Ident && tokens_[pos_ + 1].kind == Tok::LParen) {
      const std::string& fn = peek().text;
      std::optional<AssertRel> rel;
      if (fn == "disjoint") rel = AssertRel::Disjoint;
      else if (fn == "empty") rel = AssertRel::Empty;
      else if (fn == "nonempty") rel = AssertRel::Nonempty;
      if (rel) {
        advance();
        advance();  // '('
        Assertion a{*rel, parse_or(), nullptr};
        if (*rel == AssertRel::Disjoint) {
          expect(Tok::Comma, "','");
          a.right = parse_or();
        }
        expect(Tok::RParen, "')'");
        expect(Tok::End, "end of input");
        return a;
      }
    }
    auto left = parse_or();
    AssertRel rel;
    switch (peek().kind) {
      case Tok::Le: rel = AssertRel::Subseteq; break;
      case Tok::NotLe: rel = AssertRel::NotSubseteq; break;
      case Tok::EqEq: rel = AssertRel::Equals; break;
      case Tok::Lt: rel = AssertRel::ProperSubset; break;
      default:
        throw ParseError(peek().pos, "a relation ('<=', '!<=', '==', '<')");
    }
    advance();
    Assertion a{rel, std::move(left), parse_or()};
    expect(Tok::End, "end of input");
    return a;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  void advance() { ++pos_; }
  void expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) throw ParseError(peek().pos, what);
    advance();
  }

  ExprPtr parse_or() {
    auto e = parse_and();
    while (peek().kind == Tok::Pipe) {
      advance();
      e = Expr::disj(std::move(e), parse_and());
    }
    return e;
  }

  ExprPtr parse_and() {
    auto e = parse_diff();
    while (peek().kind == Tok::Amp) {
      advance();
      e = Expr::conj(std::move(e), parse_diff());
    }
    return e;
  }

  ExprPtr parse_diff() {
    auto e = parse_unary();
    while (peek().kind == Tok::Backslash) {
      advance();
      e = Expr::diff(std::move(e), parse_unary());
    }
    return e;
  }

  ExprPtr parse_unary() {
    if (peek().kind == Tok::Know) {
      const int stage = peek().stage;
      advance();
      return Expr::know(parse_unary(), stage);
    }
    if (peek().kind == Tok::Tilde) {
      advance();
      return Expr::negate(parse_unary());
    }
    return parse_primary();
  }

  ExprPtr parse_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident: {
        auto e = Expr::event(t.text);
        advance();
        return e;
      }
      case Tok::Omega:
        advance();
        return Expr::omega();
      case Tok::Empty:
        advance();
        return Expr::empty();
      case Tok::SetLit: {
        auto e = Expr::set_lit(t.states);
        advance();
        return e;
      }
      case Tok::LParen: {
        advance();
        auto e = parse_or();
        expect(Tok::RParen, "')'");
        return e;
      }
      default:
        throw ParseError(t.pos, "an event expression");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expr(const std::string& text) {
  return Parser(text).parse_full_expr();
}

Assertion parse_assertion(const std::string& text) {
  return Parser(text).parse_full_assertion();
}

const KnowledgeOperator& Model::operator_for_stage(int stage) const {
  if (stage < 0) {
    if (operators.size() == 1) return operators.begin()->second;
    throw UnknownStage("K (model has " + std::to_string(operators.size()) +
                       " operators; use an explicit stage)");
  }
  auto it = operators.find(stage);
  if (it == operators.end()) throw UnknownStage("K" + std::to_string(stage));
  return it->second;
}

Event eval_expr(const ExprPtr& ast, const Model& model) {
  switch (ast->kind) {
    case ExprKind::EventName: {
      auto it = model.events.find(ast->name);
      if (it == model.events.end()) throw UnboundName(ast->name);
      return it->second;
    }
    case ExprKind::OmegaLit:
      return Event::omega(model.space);
    case ExprKind::EmptyLit:
      return Event::empty(model.space);
    case ExprKind::SetLit:
      return Event::from_names(model.space, ast->states);
    case ExprKind::Know:
      return model.operator_for_stage(ast->stage)
          .apply(eval_expr(ast->left, model));
    case ExprKind::Not:
      return complement(eval_expr(ast->left, model));
    case ExprKind::Diff:
      return combine(eval_expr(ast->left, model),
                     eval_expr(ast->right, model), SetOp::Difference);
    case ExprKind::And:
      return combine(eval_expr(ast->left, model),
                     eval_expr(ast->right, model), SetOp::Intersect);
    case ExprKind::Or:
      return combine(eval_expr(ast->left, model),
                     eval_expr(ast->right, model), SetOp::Union);
  }
  throw Error("unreachable");
}

AssertionResult eval_assertion(const Assertion& ast, const Model& model) {
  const Event left = eval_expr(ast.left, model);
  AssertionResult r;
  switch (ast.rel) {
    case AssertRel::Subseteq: {
      auto rel = relate(left, eval_expr(ast.right, model),
                        Relation::Subseteq);
      r.holds = rel.holds;
      r.witness = rel.witness;
      break;
    }
    case AssertRel::NotSubseteq: {
      auto rel = relate(left, eval_expr(ast.right, model),
                        Relation::Subseteq);
      r.holds = !rel.holds;
      break;
    }
    case AssertRel::Equals: {
      const Event right = eval_expr(ast.right, model);
      r.holds = left.mask() == right.mask();
      if (!r.holds) r.witness = lowest_state(left.mask() ^ right.mask());
      break;
    }
    case AssertRel::ProperSubset: {
      auto rel = relate(left, eval_expr(ast.right, model),
                        Relation::ProperSubset);
      r.holds = rel.holds;
      r.witness = rel.witness;
      break;
    }
    case AssertRel::Disjoint: {
      const Event right = eval_expr(ast.right, model);
      const Mask inter = left.mask() & right.mask();
      r.holds = inter == 0;
      if (!r.holds) r.witness = lowest_state(inter);
      break;
    }
    case AssertRel::Empty:
      r.holds = left.is_empty();
      if (!r.holds) r.witness = lowest_state(left.mask());
      break;
    case AssertRel::Nonempty:
      r.holds = !left.is_empty();
      break;
  }
  return r;
}

namespace {

// Precedence levels for minimal-parentheses printing.
constexpr int kOr = 0;
constexpr int kAnd = 1;
constexpr int kDiff = 2;
constexpr int kUnary = 3;
constexpr int kAtom = 4;

int level_of(const ExprPtr& e) {
  switch (e->kind) {
    case ExprKind::Or: return kOr;
    case ExprKind::And: return kAnd;
    case ExprKind::Diff: return kDiff;
    case ExprKind::Know:
    case ExprKind::Not: return kUnary;
    default: return kAtom;
  }
}

void render(const ExprPtr& e, int min_level, std::string& out) {
  const bool parens = level_of(e) < min_level;
  if (parens) out += "(";
  switch (e->kind) {
    case ExprKind::EventName:
      out += e->name;
      break;
    case ExprKind::OmegaLit:
      out += "Omega";
      break;
    case ExprKind::EmptyLit:
      out += "{}";
      break;
    case ExprKind::SetLit: {
      out += "{";
      for (std::size_t i = 0; i < e->states.size(); ++i) {
        if (i) out += ",";
        out += e->states[i];
      }
      out += "}";
      break;
    }
    case ExprKind::Know:
      out += "K";
      if (e->stage >= 0) out += static_cast<char>('0' + e->stage);
      out += " ";
      render(e->left, kUnary, out);
      break;
    case ExprKind::Not:
      out += "~";
      render(e->left, kUnary, out);
      break;
    case ExprKind::Diff:
      render(e->left, kDiff, out);
      out += " \\ ";
      render(e->right, kUnary, out);
      break;
    case ExprKind::And:
      render(e->left, kAnd, out);
      out += " & ";
      render(e->right, kDiff, out);
      break;
    case ExprKind::Or:
      render(e->left, kOr, out);
      out += " | ";
      render(e->right, kAnd, out);
      break;
  }
  if (parens) out += ")";
}

}  // namespace

std::string format(const ExprPtr& ast) {
  std::string out;
  render(ast, kOr, out);
  return out;
}

std::string format(const Assertion& ast) {
  switch (ast.rel) {
    case AssertRel::Disjoint:
      return "disjoint(" + format(ast.left) + ", " + format(ast.right) + ")";
    case AssertRel::Empty:
      return "empty(" + format(ast.left) + ")";
    case AssertRel::Nonempty:
      return "nonempty(" + format(ast.left) + ")";
    case AssertRel::Subseteq:
      return format(ast.left) + " <= " + format(ast.right);
    case AssertRel::NotSubseteq:
      return format(ast.left) + " !<= " + format(ast.right);
    case AssertRel::Equals:
      return format(ast.left) + " == " + format(ast.right);
    case AssertRel::ProperSubset:
      return format(ast.left) + " < " + format(ast.right);
  }
  return "?";
}

}  // namespace epi
