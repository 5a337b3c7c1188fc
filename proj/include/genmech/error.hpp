#pragma once

#include <stdexcept>
#include <string>

namespace genmech {

// Numeric values are part of the C API contract (see capi.h):
// [100,200) input/validation errors, [200,300) execution errors.
enum class ErrorCode : int {
  Ok = 0,

  JsonParse = 100,
  BadDocument = 101,
  EmptyUniverse = 102,
  DuplicateElement = 103,
  EmptyBlock = 104,
  OverlappingBlocks = 105,
  IncompleteCover = 106,
  UnknownElement = 107,
  UniverseMismatch = 108,
  UniverseTooLarge = 109,
  EmptyAlphabet = 110,
  DuplicateLetter = 111,
  BlockCountMismatch = 112,
  NonDiscretizingChain = 113,
  BadRational = 114,
  BadDistribution = 115,
  IncompleteModel = 116,
  NonNormalizedNode = 117,
  InvalidCodon = 118,
  UnknownAminoAcid = 119,
  InvalidPermutation = 120,
  BadTable = 121,
  BadSpace = 122,
  SpaceTooLarge = 123,
  CodeLengthMismatch = 124,
  UnknownPosition = 125,
  EmptyCandidates = 126,
  AllZeroFitness = 127,
  BadFitness = 128,
  InvalidPolicy = 129,
  OutcomeMismatch = 130,

  NoSuchBranch = 200,
  WordTooShort = 201,
  WordTooLong = 202,
  UnknownLetter = 203,
  TrailingPartialWord = 204,
  TooFewSamples = 205,
  DidNotConverge = 206,

  Internal = 500,
};

const char* error_code_name(ErrorCode code);

inline bool is_validation_error(ErrorCode c) {
  int v = static_cast<int>(c);
  return v >= 100 && v < 200;
}

inline bool is_execution_error(ErrorCode c) {
  int v = static_cast<int>(c);
  return v >= 200 && v < 300;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code),
        message_(message) {}

  ErrorCode code() const noexcept { return code_; }
  // The message without the code-name prefix that what() carries.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace genmech
