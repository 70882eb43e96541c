#include "traag/error.hpp"

namespace traag {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::UndeclaredVertex: return "UndeclaredVertex";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::MissingBoundary: return "MissingBoundary";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::NotSeifert: return "NotSeifert";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::ZeroExponent: return "ZeroExponent";
    case ErrorCode::SpecMismatch: return "SpecMismatch";
    case ErrorCode::HasDirectedEdges: return "HasDirectedEdges";
    case ErrorCode::NoDirectedEdges: return "NoDirectedEdges";
    case ErrorCode::BadGeneratorIndex: return "BadGeneratorIndex";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::NotEvenType: return "NotEvenType";
    case ErrorCode::MissingGenerator: return "MissingGenerator";
    case ErrorCode::RelatorsNotVerified: return "RelatorsNotVerified";
  }
  return "Error";
}

}  // namespace traag
