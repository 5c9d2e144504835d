#pragma once

#include <stdexcept>
#include <string>

namespace latinchroma {

enum class ErrorCode {
    NonSquare,
    BadSymbol,
    RowRepeat,
    ColumnRepeat,
    SizeMismatch,
    OddOrder,
    NotCirculant,
    ForeignCell,
    NotRowComplete,
    InvalidPartition,
    InvalidGroup,
    NotLatin,
    NoIdentity,
    NoInverse,
    NotAssociative,
    OrderTooLarge,
    StructureViolation,
    UncoveredCell,
    MethodInapplicable,
    Undecidable,
    ParseError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace latinchroma
