#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace decyc {

enum class Errc {
  InvalidArgument,
  DegreeViolation,
  OddOrder,
  Disconnected,
  EmptySide,
  NotDegreeTwo,
  TooLarge,
  CapExceeded,
  HasLoop,
  TooSmall,
  WrongParity,
  NotDecycling,
  BadCertificate,
  NotStable,
  NotC4C,
  InternalSearchFailure,
  GenusUnknown,
  RootHasLoop,
  NotBridgeless,
  TrivialCut,
  AdjacentEdges,
  PreconditionFailed,
  NotOddEdge,
  DependentJoins,
  UnknownName,
  LoopVertex,
  ZeroLength,
  NotOneFace,
  ParseError,
  Graph6Multigraph,
  UnclassifiedPartition,
  Malformed,
  BudgetExhausted,
};

constexpr std::string_view to_string(Errc c) {
  switch (c) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::DegreeViolation: return "DegreeViolation";
    case Errc::OddOrder: return "OddOrder";
    case Errc::Disconnected: return "Disconnected";
    case Errc::EmptySide: return "EmptySide";
    case Errc::NotDegreeTwo: return "NotDegreeTwo";
    case Errc::TooLarge: return "TooLarge";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::HasLoop: return "HasLoop";
    case Errc::TooSmall: return "TooSmall";
    case Errc::WrongParity: return "WrongParity";
    case Errc::NotDecycling: return "NotDecycling";
    case Errc::BadCertificate: return "BadCertificate";
    case Errc::NotStable: return "NotStable";
    case Errc::NotC4C: return "NotC4C";
    case Errc::InternalSearchFailure: return "InternalSearchFailure";
    case Errc::GenusUnknown: return "GenusUnknown";
    case Errc::RootHasLoop: return "RootHasLoop";
    case Errc::NotBridgeless: return "NotBridgeless";
    case Errc::TrivialCut: return "TrivialCut";
    case Errc::AdjacentEdges: return "AdjacentEdges";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::NotOddEdge: return "NotOddEdge";
    case Errc::DependentJoins: return "DependentJoins";
    case Errc::UnknownName: return "UnknownName";
    case Errc::LoopVertex: return "LoopVertex";
    case Errc::ZeroLength: return "ZeroLength";
    case Errc::NotOneFace: return "NotOneFace";
    case Errc::ParseError: return "ParseError";
    case Errc::Graph6Multigraph: return "Graph6Multigraph";
    case Errc::UnclassifiedPartition: return "UnclassifiedPartition";
    case Errc::Malformed: return "Malformed";
    case Errc::BudgetExhausted: return "BudgetExhausted";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the Errc codes so that
/// callers (and the CLI exit-code mapping) can dispatch on it.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace decyc
