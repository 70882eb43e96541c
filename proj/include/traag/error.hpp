#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace traag {

/// Every failure the toolkit can report, by stable name.
enum class ErrorCode {
  // graph parsing / validation
  SyntaxError,
  DuplicateEdge,
  LoopEdge,
  UndeclaredVertex,
  UnknownVertex,
  NotConnected,
  EmptyGraph,
  // JSJ descriptors
  NotATree,
  BadParameters,
  MissingBoundary,
  Inconsistent,
  NotSeifert,
  // word engines
  UnknownGenerator,
  ZeroExponent,
  SpecMismatch,
  // decision engine
  HasDirectedEdges,
  NoDirectedEdges,
  // embedding verification
  BadGeneratorIndex,
  RankMismatch,
  NotEvenType,
  MissingGenerator,
  RelatorsNotVerified,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace traag
