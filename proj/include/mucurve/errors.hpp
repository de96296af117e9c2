#pragma once

#include <stdexcept>
#include <string>

namespace mucurve {

// Every error carries a stable machine-readable code used by the CLI's
// structured output and its exit-status mapping.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Mathematical precondition failures (CLI exit status 1).
struct ZeroInversion : Error {
    ZeroInversion() : Error("zero_inversion", "attempt to invert zero") {}
};
struct ZeroDenominator : Error {
    ZeroDenominator() : Error("zero_denominator", "rational function with zero denominator") {}
};
struct PoleAtSpecialization : Error {
    PoleAtSpecialization() : Error("pole_at_specialization", "denominator vanishes at the specialization point") {}
};
struct DivisionByZeroPoly : Error {
    DivisionByZeroPoly() : Error("division_by_zero_poly", "polynomial division by zero") {}
};
struct NotARoot : Error {
    NotARoot() : Error("not_a_root", "claimed root does not annihilate the polynomial") {}
};
struct ConstantPolynomial : Error {
    ConstantPolynomial() : Error("constant_polynomial", "root finding requires degree >= 1") {}
};
struct NoRootInPolicy : Error {
    NoRootInPolicy() : Error("no_root_in_policy", "no root found within the root policy") {}
};
struct DegenerateShear : Error {
    DegenerateShear() : Error("degenerate_shear", "shear produced the zero polynomial") {}
};
struct NoAdmissiblePick : Error {
    explicit NoAdmissiblePick(const std::string& why)
        : Error("no_admissible_pick", "admissible (lambda, alpha) search failed: " + why) {}
};
struct MuMaximal : Error {
    MuMaximal() : Error("mu_maximal", "class equals floor(n/2); the deformation hypothesis fails") {}
};
struct NotASyzygy : Error {
    NotASyzygy() : Error("not_a_syzygy", "vector does not annihilate the triple") {}
};
struct NoDecomposition : Error {
    NoDecomposition() : Error("no_decomposition", "decomposition against the mu-basis failed (internal bug)") {}
};
struct InternalInconsistency : Error {
    explicit InternalInconsistency(const std::string& what)
        : Error("internal_inconsistency", what) {}
};
struct InvalidTriple : Error {
    explicit InvalidTriple(const std::string& what) : Error("invalid_triple", what) {}
};
struct RejectionBudgetExceeded : Error {
    explicit RejectionBudgetExceeded(const std::string& what)
        : Error("rejection_budget_exceeded", what) {}
};

// Usage / parse errors (CLI exit status 2).
struct SyntaxError : Error {
    SyntaxError(std::size_t offset, const std::string& what)
        : Error("syntax_error", what + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};
struct WrongVariable : Error {
    explicit WrongVariable(const std::string& name)
        : Error("wrong_variable", "unexpected variable '" + name + "' (only t is allowed)") {}
};
struct BadFieldSpec : Error {
    explicit BadFieldSpec(const std::string& what) : Error("bad_field_spec", what) {}
};
struct InvalidContext : Error {
    explicit InvalidContext(const std::string& what) : Error("invalid_context", what) {}
};

}  // namespace mucurve
