#pragma once

#include <stdexcept>
#include <string>

namespace relift {

enum class Err {
  DuplicateElement,
  NotAPoset,
  CodomainMismatch,
  DomainMismatch,
  NotMonotone,
  ObjectMismatch,
  NotAdjointPair,
  AmbiguousWitness,
  SizeCapExceeded,
  ParseError,
  UnknownConst,
  ShapeMismatch,
  NotLeftAdjoint,
  NotAFibration,
  NotLax,
  FunctorMismatch,
  ConvexOverPreorder,
  BadArtifact,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::DuplicateElement: return "DuplicateElement";
    case Err::NotAPoset: return "NotAPoset";
    case Err::CodomainMismatch: return "CodomainMismatch";
    case Err::DomainMismatch: return "DomainMismatch";
    case Err::NotMonotone: return "NotMonotone";
    case Err::ObjectMismatch: return "ObjectMismatch";
    case Err::NotAdjointPair: return "NotAdjointPair";
    case Err::AmbiguousWitness: return "AmbiguousWitness";
    case Err::SizeCapExceeded: return "SizeCapExceeded";
    case Err::ParseError: return "ParseError";
    case Err::UnknownConst: return "UnknownConst";
    case Err::ShapeMismatch: return "ShapeMismatch";
    case Err::NotLeftAdjoint: return "NotLeftAdjoint";
    case Err::NotAFibration: return "NotAFibration";
    case Err::NotLax: return "NotLax";
    case Err::FunctorMismatch: return "FunctorMismatch";
    case Err::ConvexOverPreorder: return "ConvexOverPreorder";
    case Err::BadArtifact: return "BadArtifact";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}

  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

}  // namespace relift
