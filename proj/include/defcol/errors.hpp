#pragma once

#include <stdexcept>
#include <string>

namespace defcol {

enum class Errc {
  LoopEdge,
  VertexOutOfRange,
  InvalidRotation,
  DisconnectedInput,
  BadHeader,
  TruncatedRecord,
  NeighborOutOfRange,
  NotPlanarEmbedding,
  IncompleteAssignment,
  InstanceTooLarge,
  InvalidInputColoring,
  PreconditionViolated,
  NotInFamily,
};

constexpr const char* errc_name(Errc code) {
  switch (code) {
    case Errc::LoopEdge: return "LoopEdge";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::InvalidRotation: return "InvalidRotation";
    case Errc::DisconnectedInput: return "DisconnectedInput";
    case Errc::BadHeader: return "BadHeader";
    case Errc::TruncatedRecord: return "TruncatedRecord";
    case Errc::NeighborOutOfRange: return "NeighborOutOfRange";
    case Errc::NotPlanarEmbedding: return "NotPlanarEmbedding";
    case Errc::IncompleteAssignment: return "IncompleteAssignment";
    case Errc::InstanceTooLarge: return "InstanceTooLarge";
    case Errc::InvalidInputColoring: return "InvalidInputColoring";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::NotInFamily: return "NotInFamily";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Positioned failure from the rule-DSL parser (1-based line/column).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace defcol
