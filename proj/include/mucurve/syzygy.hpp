#pragma once

#include <array>
#include <vector>

#include "mucurve/linalg.hpp"
#include "mucurve/poly.hpp"

namespace mucurve {

// A parametrization datum (a, b, c) with gcd(a,b,c) = 1 and n = max degree.
// Membership in the space of genuine curve parametrizations additionally asks
// c != 0; that is flagged, not enforced, so syzygy operations stay usable on
// degenerate specializations.
struct ParamTriple {
    Poly a, b, c;
    int n = 0;
    bool c_is_zero = false;

    // Validates: (a,b,c) != 0, gcd = 1, n >= 1, common context.
    static ParamTriple create(Poly a, Poly b, Poly c);
    // Skips the gcd/degree validation (used on specializations whose gcd may
    // degenerate); still computes n.
    static ParamTriple unchecked(Poly a, Poly b, Poly c);

    const ContextPtr& context() const { return a.context(); }
    const Poly& coord(int i) const { return i == 0 ? a : (i == 1 ? b : c); }
};

struct SyzygyVec {
    Poly A, B, C;

    const Poly& coord(int i) const { return i == 0 ? A : (i == 1 ? B : C); }
    bool is_zero() const { return A.is_zero() && B.is_zero() && C.is_zero(); }
    int degree() const;  // max coordinate degree; requires nonzero
    bool annihilates(const ParamTriple& t) const;
    SyzygyVec map_context(const ContextPtr& target) const;
};

// Cross product of two syzygies, as a plain polynomial triple:
// (A_y B_w - A_w B_y, A_w B_x - A_x B_w, A_x B_y - A_y B_x).
std::array<Poly, 3> cross(const SyzygyVec& p, const SyzygyVec& q);

struct MuBasis {
    ParamTriple triple;
    SyzygyVec p;  // degree mu
    SyzygyVec q;  // degree n - mu, canonical representative, cross(p, q) = (a, b, c)
    int mu = 0;
    int n = 0;
};

// Deterministic echelon basis of the degree-<= d syzygies (kernel of the
// coefficient map from degree-<= d triples to degree-<= n+d polynomials).
std::vector<SyzygyVec> syzygy_space(const ParamTriple& t, int d);
int syzygy_space_dim(const ParamTriple& t, int d);

// Smallest d with a nonzero degree-<= d syzygy; always <= floor(n/2).
int mu(const ParamTriple& t);

// Same class, computed by fraction-free Bareiss elimination after clearing
// denominators (triple over a ratfunc context). Independent of the generic
// elimination path.
int mu_bareiss(const ParamTriple& t);

MuBasis mu_basis(const ParamTriple& t);

// s = h1*p + h2*q, unique with deg h1 <= deg s - mu, deg h2 <= deg s + mu - n.
// Throws NotASyzygy; NoDecomposition signals an internal bug.
std::pair<Poly, Poly> decompose(const MuBasis& basis, const SyzygyVec& s);

struct IdentityReport {
    bool a_ok = false, b_ok = false, c_ok = false;
    bool deg_p_ok = false, deg_q_ok = false;
    bool gcd_p_ok = false;
    bool all() const { return a_ok && b_ok && c_ok && deg_p_ok && deg_q_ok && gcd_p_ok; }
};

IdentityReport verify_identity(const MuBasis& basis, const ParamTriple& t);

}  // namespace mucurve
