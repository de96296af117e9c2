#pragma once

#include <vector>

#include "mucurve/poly.hpp"

namespace mucurve {

// Root search policy. Over Q only rational-root enumeration is performed and
// allow_extension has no effect (irreducible factorization over Q is out of
// scope); over finite fields allow_extension permits certified roots in
// F_{q^d} via an extension context.
struct RootPolicy {
    bool allow_extension = false;
};

// A certified root: evaluating the source polynomial at value gives exactly
// zero in witness_context. minimal_factor is the monic factor of the input
// (over the input's context) that certifies the root: t - alpha for base-field
// roots, the irreducible extension modulus otherwise.
struct RootHandle {
    FieldElem value;
    ContextPtr witness_context;
    Poly minimal_factor;
};

// Deterministic total order on field elements of one context (used to fix the
// enumeration order of roots and factors).
bool canonical_less(const FieldElem& a, const FieldElem& b);

// h^e mod f.
Poly pow_mod(const Poly& h, const mpz_class& e, const Poly& f);

// Monic irreducible factors of a squarefree product of degree-d irreducibles
// (Cantor-Zassenhaus; trace splitting in characteristic 2), sorted canonically.
std::vector<Poly> equal_degree_factor(const Poly& g, int d);

// All roots of f in its own (finite) base field, sorted canonically.
std::vector<FieldElem> base_field_roots(const Poly& f);

// One certified root, in the deterministic enumeration order.
// Throws ConstantPolynomial (deg < 1) or NoRootInPolicy.
RootHandle find_root(const Poly& f, const RootPolicy& policy);

// f / (t - alpha), computed by synthetic division in alpha's witness context.
// Throws NotARoot if f(alpha) != 0.
Poly divide_by_linear(const Poly& f, const RootHandle& alpha);

}  // namespace mucurve
