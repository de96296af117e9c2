#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "mucurve/errors.hpp"
#include "mucurve/rng.hpp"

namespace mucurve {

class FieldContext;
class FieldElem;
using ContextPtr = std::shared_ptr<const FieldContext>;

// Numerator/denominator pair of dense polynomials over the base field.
// Canonical: denominator monic and coprime to the numerator; zero is ({}, {1}).
struct RatFuncPayload {
    std::vector<FieldElem> num;
    std::vector<FieldElem> den;
};

// Inversion in an extension context F[x]/(m) can hit a zero divisor when m is
// reducible. The error surfaces the discovered proper factor of m so callers
// can refine the modulus and retry (dynamic evaluation).
struct ZeroDivisor : Error {
    explicit ZeroDivisor(std::vector<FieldElem> factor);
    std::vector<FieldElem> factor;  // monic proper factor of the modulus, over the base
};

// An exact field: Q, F_p, a simple extension base[x]/(m), or the rational
// functions base(eps). Immutable; elements hold a shared_ptr to their context.
class FieldContext : public std::enable_shared_from_this<FieldContext> {
public:
    enum class Kind { Rationals, Prime, Extension, RatFunc };

    static ContextPtr rationals();
    static ContextPtr prime(std::uint64_t p);
    // modulus: ascending coefficients over base; must be monic of degree >= 2.
    // Squarefree reducible moduli are accepted (inversion may raise ZeroDivisor).
    static ContextPtr extension(ContextPtr base, std::vector<FieldElem> modulus);
    static ContextPtr ratfunc(ContextPtr base, std::string variable = "eps");

    Kind kind() const noexcept { return kind_; }
    bool is_rationals() const noexcept { return kind_ == Kind::Rationals; }
    bool is_prime() const noexcept { return kind_ == Kind::Prime; }
    bool is_extension() const noexcept { return kind_ == Kind::Extension; }
    bool is_ratfunc() const noexcept { return kind_ == Kind::RatFunc; }

    std::uint64_t prime_modulus() const { return p_; }  // Prime only
    const ContextPtr& base() const { return base_; }    // Extension/RatFunc only
    const std::vector<FieldElem>& modulus() const { return modulus_; }
    const std::string& variable() const { return variable_; }

    // Characteristic: 0 for Q and anything built over it; p otherwise.
    std::uint64_t characteristic() const;
    // Number of elements: 0 if infinite, else p^k.
    mpz_class order() const;
    bool is_finite() const { return order() != 0; }

    // Structural equality (same mathematical field, same presentation).
    bool same(const FieldContext& other) const;

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem from_int(long v) const;
    FieldElem from_mpq(const mpq_class& q) const;  // throws ZeroInversion in F_p when den = 0 mod p
    // Embeds an element of base() into this context (Extension/RatFunc).
    FieldElem embed(const FieldElem& x) const;
    // Extension: the class of x. RatFunc: the variable eps.
    FieldElem generator() const;

    // Seeded uniform draw; heightBound caps numerator/denominator over Q.
    FieldElem random_elem(Rng& rng, long heightBound = 10) const;

    std::string describe() const;

private:
    FieldContext() = default;
    Kind kind_ = Kind::Rationals;
    std::uint64_t p_ = 0;
    ContextPtr base_;
    std::vector<FieldElem> modulus_;
    std::string variable_;
};

class FieldElem {
public:
    using Payload = std::variant<mpq_class, std::uint64_t, std::vector<FieldElem>, RatFuncPayload>;

    FieldElem() = default;  // invalid sentinel; any arithmetic on it throws
    FieldElem(ContextPtr ctx, Payload payload);

    const ContextPtr& context() const { return ctx_; }
    bool valid() const { return ctx_ != nullptr; }
    bool is_zero() const;
    bool is_one() const;

    const mpq_class& rational() const { return std::get<mpq_class>(v_); }
    std::uint64_t residue() const { return std::get<std::uint64_t>(v_); }
    const std::vector<FieldElem>& ext_coeffs() const { return std::get<std::vector<FieldElem>>(v_); }
    const RatFuncPayload& ratfunc() const { return std::get<RatFuncPayload>(v_); }

    FieldElem operator-() const;
    FieldElem inverse() const;  // ZeroInversion / ZeroDivisor

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
    friend bool operator==(const FieldElem& a, const FieldElem& b);
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

    std::string str() const;

private:
    ContextPtr ctx_;
    Payload v_;
};

// num/den are ascending coefficient vectors over rf->base(). Canonicalizes
// (cancel gcd, make denominator monic). Throws ZeroDenominator.
FieldElem ratfunc_make(const ContextPtr& rf, std::vector<FieldElem> num, std::vector<FieldElem> den);

// Evaluation homomorphism K(eps) -> K at eps = eps0 (eps0 over the base field).
// Throws PoleAtSpecialization when the (canonical) denominator vanishes.
FieldElem specialize_eps(const FieldElem& x, const FieldElem& eps0);

bool is_probable_prime(std::uint64_t n);

// Dense polynomial arithmetic on raw coefficient vectors over a field context.
// Shared by the extension/ratfunc internals and by Poly. Vectors are ascending
// degree; canonical form has no trailing zeros (zero polynomial = empty vector).
namespace vecpoly {

using Vec = std::vector<FieldElem>;

void trim(Vec& v);
bool is_zero(const Vec& v);
int deg(const Vec& v);  // -1 for the zero polynomial (internal sentinel only)
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec neg(const Vec& a);
Vec mul(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const FieldElem& c);
Vec shift(const Vec& a, std::size_t k);  // multiply by t^k
std::pair<Vec, Vec> divmod(const Vec& f, const Vec& g);  // DivisionByZeroPoly
Vec mod(const Vec& f, const Vec& g);
Vec monic(const Vec& f);
Vec gcd(const Vec& f, const Vec& g);  // monic
// g, u with g = gcd(f, m) monic and u*f = g (mod m). Used for inversion mod m.
std::pair<Vec, Vec> half_ext_gcd(const Vec& f, const Vec& m);
FieldElem eval(const Vec& f, const FieldElem& x);
Vec derivative(const Vec& f);
bool equal(const Vec& a, const Vec& b);
std::string str(const Vec& f, const std::string& var);

}  // namespace vecpoly

}  // namespace mucurve
