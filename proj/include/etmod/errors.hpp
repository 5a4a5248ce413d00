#pragma once

#include <stdexcept>
#include <string>

namespace etmod {

// Every failure the library reports deliberately carries one of these kinds,
// so callers (and tests) can dispatch on the reason without string matching.
enum class ErrorKind {
  MalformedPermutation,
  CapExceeded,
  ForeignElement,
  NotNormal,
  NotAbelian,
  PrimeNotDividing,
  NotPGroup,
  SylowNotContained,
  TrivialP,
  BadParameters,
  NotSplit,
  FormulaMismatch,
  HypothesisFailed,
  NoFactorization,
  BadFieldSpec,
  NotSplitMetacyclic,
  StronglyEmbeddedProper,
  ParseError,
  UnknownSuite,
  Internal,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::MalformedPermutation: return "MalformedPermutation";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::ForeignElement: return "ForeignElement";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotAbelian: return "NotAbelian";
    case ErrorKind::PrimeNotDividing: return "PrimeNotDividing";
    case ErrorKind::NotPGroup: return "NotPGroup";
    case ErrorKind::SylowNotContained: return "SylowNotContained";
    case ErrorKind::TrivialP: return "TrivialP";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::NotSplit: return "NotSplit";
    case ErrorKind::FormulaMismatch: return "FormulaMismatch";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::NoFactorization: return "NoFactorization";
    case ErrorKind::BadFieldSpec: return "BadFieldSpec";
    case ErrorKind::NotSplitMetacyclic: return "NotSplitMetacyclic";
    case ErrorKind::StronglyEmbeddedProper: return "StronglyEmbeddedProper";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace etmod
