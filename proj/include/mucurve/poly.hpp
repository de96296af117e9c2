#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "mucurve/field.hpp"

namespace mucurve {

// Dense univariate polynomial over a FieldContext, canonical form (no trailing
// zero coefficients; the zero polynomial has an empty coefficient list).
class Poly {
public:
    Poly() = default;
    Poly(ContextPtr ctx, std::vector<FieldElem> coeffs);

    static Poly zero(ContextPtr ctx) { return Poly(std::move(ctx), {}); }
    static Poly constant(const FieldElem& c);
    static Poly from_ints(const ContextPtr& ctx, std::initializer_list<long> ascending);
    static Poly from_ints(const ContextPtr& ctx, const std::vector<long>& ascending);
    // t^k with unit coefficient
    static Poly monomial(const ContextPtr& ctx, std::size_t k, const FieldElem& c);

    const ContextPtr& context() const { return ctx_; }
    const std::vector<FieldElem>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    // Degree of a nonzero polynomial. deg(0) is deliberately not a number;
    // callers branch on is_zero() first.
    int degree() const;
    FieldElem coeff(std::size_t i) const;  // zero beyond the degree
    const FieldElem& leading() const;

    FieldElem eval(const FieldElem& x) const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const FieldElem& c, const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly shifted(std::size_t k) const;  // * t^k
    Poly monic() const;
    Poly derivative() const;

    // Embeds coefficients into a larger context (extension or ratfunc whose
    // base tower contains this polynomial's context).
    Poly map_context(const ContextPtr& target) const;

    std::string str(const std::string& var = "t") const;

private:
    ContextPtr ctx_;
    std::vector<FieldElem> c_;
};

// f = q*g + r with r = 0 or deg r < deg g. Throws DivisionByZeroPoly.
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g);
Poly operator/(const Poly& f, const Poly& g);  // exact division paths; remainder discarded
bool divides(const Poly& g, const Poly& f);

// Monic gcd; gcd(f, 0) = monic(f); gcd(0, 0) = 0.
Poly gcd(const Poly& f, const Poly& g);
Poly gcd3(const Poly& a, const Poly& b, const Poly& c);

// Monic product of the distinct irreducible factors of f. Handles f' = 0 in
// characteristic p by p-th-root recursion. Requires f != 0.
Poly squarefree_part(const Poly& f);

// Embeds x into the context chain of target if needed (identity when equal).
FieldElem lift_into(const FieldElem& x, const ContextPtr& target);

// ratfunc_make over Poly in eps: num/den live over rf->base().
FieldElem ratfunc_elem(const ContextPtr& rf, const Poly& num, const Poly& den);

// Applies eps = eps0 coefficient-wise to a Poly over a ratfunc context,
// returning a Poly over the base context.
Poly specialize_eps(const Poly& f, const FieldElem& eps0);

}  // namespace mucurve
