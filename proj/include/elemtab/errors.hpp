#pragma once

#include <stdexcept>
#include <string>

namespace elemtab {

// Every failure the library raises derives from Error, so callers can
// separate analysis failures from programming mistakes.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define ELEMTAB_DEFINE_ERROR(Name)                                            \
    class Name : public Error {                                               \
    public:                                                                   \
        explicit Name(const std::string& what) : Error(#Name, what) {}        \
    };

// exactalg
ELEMTAB_DEFINE_ERROR(DimensionMismatch)
ELEMTAB_DEFINE_ERROR(InvarianceViolated)
ELEMTAB_DEFINE_ERROR(ValueError)

// multipoly
ELEMTAB_DEFINE_ERROR(NonHomogeneous)
ELEMTAB_DEFINE_ERROR(NotZeroDimensional)
ELEMTAB_DEFINE_ERROR(GeneratorCapExceeded)

// tableau
ELEMTAB_DEFINE_ERROR(DependentGenerators)
ELEMTAB_DEFINE_ERROR(GenericityFailure)
ELEMTAB_DEFINE_ERROR(TriangularityViolated)
ELEMTAB_DEFINE_ERROR(SupportViolation)
ELEMTAB_DEFINE_ERROR(CapExceeded)

// charvar / elemred
ELEMTAB_DEFINE_ERROR(MinorExplosion)
ELEMTAB_DEFINE_ERROR(Unstable)
ELEMTAB_DEFINE_ERROR(NonmonotoneFlag)
ELEMTAB_DEFINE_ERROR(InternalInvariant)

// fixtures
ELEMTAB_DEFINE_ERROR(ParameterDomain)
ELEMTAB_DEFINE_ERROR(GenerationFailed)

// spec files
ELEMTAB_DEFINE_ERROR(SchemaError)

#undef ELEMTAB_DEFINE_ERROR

/// Malformed spec text; line and column are one-based.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error("ParseError", what), line_(line), column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_, column_;
};

}  // namespace elemtab
