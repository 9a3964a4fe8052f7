#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sigmasum {

enum class ErrorKind {
    NotAUnit,
    OrderExhausted,
    DenominatorNotUnit,
    ZeroPolynomial,
    InseparableFactor,
    NotMonic,
    SeedNotRoot,
    SingularRoot,
    NoBranchMatches,
    TelescopeDegenerate,
    InsufficientOrder,
    FieldMismatch,
    DivisionByZero,
    SyntaxError,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace sigmasum
