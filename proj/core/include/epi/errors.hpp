#ifndef EPI_ERRORS_HPP
#define EPI_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace epi {

/// Base class for all workbench errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DuplicateLabel : public Error {
 public:
  explicit DuplicateLabel(const std::string& label)
      : Error("duplicate state label: \"" + label + "\""), label(label) {}
  std::string label;
};

class EmptyLabelList : public Error {
 public:
  EmptyLabelList() : Error("state label list must be nonempty") {}
};

class TooManyStates : public Error {
 public:
  TooManyStates(std::size_t got, std::size_t limit)
      : Error("too many states: " + std::to_string(got) + " (limit " +
              std::to_string(limit) + ")"),
        got(got),
        limit(limit) {}
  std::size_t got;
  std::size_t limit;
};

class UnknownLabel : public Error {
 public:
  explicit UnknownLabel(const std::string& label)
      : Error("unknown state label: \"" + label + "\""), label(label) {}
  std::string label;
};

class SpaceMismatch : public Error {
 public:
  SpaceMismatch() : Error("events belong to different state spaces") {}
};

class WrongArity : public Error {
 public:
  WrongArity(std::size_t expected, std::size_t got)
      : Error("operator table has " + std::to_string(got) +
              " entries, expected " + std::to_string(expected)),
        expected(expected),
        got(got) {}
  std::size_t expected;
  std::size_t got;
};

class InvariantViolation : public Error {
 public:
  explicit InvariantViolation(const std::string& what) : Error(what) {}
};

class NotTruthful : public Error {
 public:
  explicit NotTruthful(const std::string& what) : Error(what) {}
};

class NotMonotone : public Error {
 public:
  explicit NotMonotone(const std::string& what) : Error(what) {}
};

class BadWord : public Error {
 public:
  explicit BadWord(std::size_t position)
      : Error("bad introspection word at position " +
              std::to_string(position)),
        position(position) {}
  std::size_t position;
};

class LexError : public Error {
 public:
  LexError(std::size_t position, const std::string& what)
      : Error("lex error at " + std::to_string(position) + ": " + what),
        position(position) {}
  std::size_t position;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& expected)
      : Error("parse error at " + std::to_string(position) + ": expected " +
              expected),
        position(position) {}
  std::size_t position;
};

class UnboundName : public Error {
 public:
  explicit UnboundName(const std::string& name)
      : Error("unbound event name: \"" + name + "\""), name(name) {}
  std::string name;
};

class UnknownStage : public Error {
 public:
  explicit UnknownStage(const std::string& stage)
      : Error("no operator for stage " + stage), stage(stage) {}
  std::string stage;
};

class MissingParameter : public Error {
 public:
  explicit MissingParameter(const std::string& name)
      : Error("missing parameter: " + name), name(name) {}
  std::string name;
};

class EIsOmega : public Error {
 public:
  EIsOmega() : Error("the inclusion chain requires an event other than Omega") {}
};

class InvalidFact : public Error {
 public:
  explicit InvalidFact(const std::string& what) : Error(what) {}
};

class AxiomViolation : public Error {
 public:
  explicit AxiomViolation(const std::string& what) : Error(what) {}
};

class TooFewStages : public Error {
 public:
  TooFewStages() : Error("a scenario needs at least two stages") {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

class SchemaError : public Error {
 public:
  SchemaError(const std::string& location, const std::string& what)
      : Error("schema error at " + location + ": " + what),
        location(location) {}
  std::string location;
};

}  // namespace epi

#endif  // EPI_ERRORS_HPP
