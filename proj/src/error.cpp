#include "genmech/error.hpp"

namespace genmech {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Ok: return "Ok";
    case ErrorCode::JsonParse: return "JsonParse";
    case ErrorCode::BadDocument: return "BadDocument";
    case ErrorCode::EmptyUniverse: return "EmptyUniverse";
    case ErrorCode::DuplicateElement: return "DuplicateElement";
    case ErrorCode::EmptyBlock: return "EmptyBlock";
    case ErrorCode::OverlappingBlocks: return "OverlappingBlocks";
    case ErrorCode::IncompleteCover: return "IncompleteCover";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::UniverseMismatch: return "UniverseMismatch";
    case ErrorCode::UniverseTooLarge: return "UniverseTooLarge";
    case ErrorCode::EmptyAlphabet: return "EmptyAlphabet";
    case ErrorCode::DuplicateLetter: return "DuplicateLetter";
    case ErrorCode::BlockCountMismatch: return "BlockCountMismatch";
    case ErrorCode::NonDiscretizingChain: return "NonDiscretizingChain";
    case ErrorCode::BadRational: return "BadRational";
    case ErrorCode::BadDistribution: return "BadDistribution";
    case ErrorCode::IncompleteModel: return "IncompleteModel";
    case ErrorCode::NonNormalizedNode: return "NonNormalizedNode";
    case ErrorCode::InvalidCodon: return "InvalidCodon";
    case ErrorCode::UnknownAminoAcid: return "UnknownAminoAcid";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::BadTable: return "BadTable";
    case ErrorCode::BadSpace: return "BadSpace";
    case ErrorCode::SpaceTooLarge: return "SpaceTooLarge";
    case ErrorCode::CodeLengthMismatch: return "CodeLengthMismatch";
    case ErrorCode::UnknownPosition: return "UnknownPosition";
    case ErrorCode::EmptyCandidates: return "EmptyCandidates";
    case ErrorCode::AllZeroFitness: return "AllZeroFitness";
    case ErrorCode::BadFitness: return "BadFitness";
    case ErrorCode::InvalidPolicy: return "InvalidPolicy";
    case ErrorCode::OutcomeMismatch: return "OutcomeMismatch";
    case ErrorCode::NoSuchBranch: return "NoSuchBranch";
    case ErrorCode::WordTooShort: return "WordTooShort";
    case ErrorCode::WordTooLong: return "WordTooLong";
    case ErrorCode::UnknownLetter: return "UnknownLetter";
    case ErrorCode::TrailingPartialWord: return "TrailingPartialWord";
    case ErrorCode::TooFewSamples: return "TooFewSamples";
    case ErrorCode::DidNotConverge: return "DidNotConverge";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace genmech
