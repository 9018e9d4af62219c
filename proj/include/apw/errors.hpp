#pragma once

#include <stdexcept>
#include <string>

namespace apw {

// Error classes; the numeric values double as CLI exit codes.
enum class ErrorClass {
    parse = 2,
    domain = 3,
    unsupported_rank = 4,
    not_invertible = 5,
    infeasible = 6,
    internal = 10,
};

class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, const std::string& what)
        : std::runtime_error(what), cls_(cls) {}
    ErrorClass error_class() const noexcept { return cls_; }

private:
    ErrorClass cls_;
};

// Shape or coordinate-length mismatch.
struct DimensionError : Error {
    explicit DimensionError(const std::string& w) : Error(ErrorClass::domain, w) {}
};

// Operands live over different frequency bases; no implicit unification.
struct BasisMismatchError : Error {
    explicit BasisMismatchError(const std::string& w) : Error(ErrorClass::domain, w) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& w) : Error(ErrorClass::domain, w) {}
};

// Spectrum generates a subgroup of rank >= 2; outside the commensurable scope.
struct NotCommensurableError : Error {
    explicit NotCommensurableError(const std::string& w) : Error(ErrorClass::unsupported_rank, w) {}
};

// Symbol has a root on (or too near) the unit circle, or is otherwise
// not invertible in the algebra at hand.
struct DegenerateError : Error {
    explicit DegenerateError(const std::string& w) : Error(ErrorClass::not_invertible, w) {}
};

struct CompletionError : Error {
    explicit CompletionError(const std::string& w) : Error(ErrorClass::infeasible, w) {}
};

struct CoprimenessError : Error {
    explicit CoprimenessError(const std::string& w) : Error(ErrorClass::infeasible, w) {}
};

struct InfeasibleError : Error {
    explicit InfeasibleError(const std::string& w) : Error(ErrorClass::infeasible, w) {}
};

// A certified internal consistency check failed (e.g. a signature that the
// theory pins down came out different after truncation).
struct InconsistencyError : Error {
    explicit InconsistencyError(const std::string& w) : Error(ErrorClass::domain, w) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error(ErrorClass::parse, w) {}
};

} // namespace apw
