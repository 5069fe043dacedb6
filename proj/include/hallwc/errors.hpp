#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hallwc {

/// Base of every domain error raised by the library. `kind()` is the stable
/// machine-readable name used in CLI error records.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define HALLWC_ERROR(Name)                                                     \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(#Name, what) {}         \
    }

HALLWC_ERROR(DivisionByZero);
HALLWC_ERROR(PoleElsewhere);
HALLWC_ERROR(PoleAtPoint);
HALLWC_ERROR(PoleAtOne);
HALLWC_ERROR(VarCountMismatch);
HALLWC_ERROR(VariableMismatch);
HALLWC_ERROR(SizeCap);
HALLWC_ERROR(NonDominant);
HALLWC_ERROR(NotACharacter);
HALLWC_ERROR(NotExact);
HALLWC_ERROR(DimMismatch);
HALLWC_ERROR(ZeroDenominator);
HALLWC_ERROR(NotAcyclic);
HALLWC_ERROR(DominanceViolated);
HALLWC_ERROR(MissingEntry);
HALLWC_ERROR(NotLieElement);
HALLWC_ERROR(DegreeOverflow);
HALLWC_ERROR(InvalidInput);

#undef HALLWC_ERROR

/// Parse failure; `position()` is the 0-based byte offset into the input.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : Error("ParseError", what + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

}  // namespace hallwc
