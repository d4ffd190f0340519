#pragma once

#include <stdexcept>
#include <string>

namespace cohoc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonPrimeCharacteristic : Error { using Error::Error; };
struct DuplicateGenerator : Error { using Error::Error; };
struct InhomogeneousRelation : Error { using Error::Error; };
struct OddGeneratorAtOddPrime : Error { using Error::Error; };
struct PresentationMismatch : Error { using Error::Error; };
struct ExponentOverflow : Error { using Error::Error; };
struct SyntaxError : Error {
    size_t position;
    SyntaxError(const std::string& what, size_t pos) : Error(what), position(pos) {}
};
struct UnknownGenerator : Error { using Error::Error; };
struct TruncationTooSmall : Error { using Error::Error; };
struct DegreeExceedsTruncation : Error { using Error::Error; };
struct TruncatedBasis : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct SearchSpaceTooLarge : Error { using Error::Error; };
struct DegreeMismatch : Error { using Error::Error; };
struct UnvalidatedMorphism : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };
struct SchemaError : Error {
    int line;
    SchemaError(const std::string& what, int line_no) : Error(what), line(line_no) {}
};

} // namespace cohoc
