#include "mucurve/syzygy.hpp"

#include <algorithm>

namespace mucurve {

namespace {

int triple_degree(const Poly& a, const Poly& b, const Poly& c) {
    int n = -1;
    for (const Poly* f : {&a, &b, &c})
        if (!f->is_zero()) n = std::max(n, f->degree());
    return n;
}

}  // namespace

ParamTriple ParamTriple::create(Poly a, Poly b, Poly c) {
    if (!a.context()->same(*b.context()) || !a.context()->same(*c.context()))
        throw InvalidTriple("coordinates live in different field contexts");
    const int n = triple_degree(a, b, c);
    if (n < 0) throw InvalidTriple("(a, b, c) must not be the zero triple");
    if (n < 1) throw InvalidTriple("max degree must be at least 1");
    const Poly g = gcd3(a, b, c);
    if (g.is_zero() || g.degree() != 0) throw InvalidTriple("gcd(a, b, c) must be 1");
    ParamTriple t;
    t.c_is_zero = c.is_zero();
    t.a = std::move(a);
    t.b = std::move(b);
    t.c = std::move(c);
    t.n = n;
    return t;
}

ParamTriple ParamTriple::unchecked(Poly a, Poly b, Poly c) {
    ParamTriple t;
    t.n = triple_degree(a, b, c);
    t.c_is_zero = c.is_zero();
    t.a = std::move(a);
    t.b = std::move(b);
    t.c = std::move(c);
    return t;
}

int SyzygyVec::degree() const {
    const int d = triple_degree(A, B, C);
    if (d < 0) throw InternalInconsistency("degree of a zero syzygy vector");
    return d;
}

bool SyzygyVec::annihilates(const ParamTriple& t) const {
    return (A * t.a + B * t.b + C * t.c).is_zero();
}

SyzygyVec SyzygyVec::map_context(const ContextPtr& target) const {
    return SyzygyVec{A.map_context(target), B.map_context(target), C.map_context(target)};
}

std::array<Poly, 3> cross(const SyzygyVec& p, const SyzygyVec& q) {
    return {p.B * q.C - p.C * q.B, p.C * q.A - p.A * q.C, p.A * q.B - p.B * q.A};
}

namespace {

// Coefficient map matrix: (A, B, C) of degree <= d |-> Aa + Bb + Cc, with
// columns [A_0..A_d, B_0..B_d, C_0..C_d] and rows the t^k coefficients.
linalg::Matrix coefficient_matrix(const ParamTriple& t, int d) {
    const ContextPtr& ctx = t.context();
    const std::size_t rows = static_cast<std::size_t>(t.n + d + 1);
    const std::size_t cols = 3u * (d + 1);
    linalg::Matrix m(rows, linalg::Row(cols, ctx->zero()));
    for (int j = 0; j < 3; ++j) {
        const Poly& f = t.coord(j);
        for (int i = 0; i <= d; ++i)
            for (std::size_t ci = 0; ci < f.coeffs().size(); ++ci)
                m[ci + i][j * (d + 1) + i] = f.coeffs()[ci];
    }
    return m;
}

SyzygyVec syzygy_from_vector(const ParamTriple& t, int d, const linalg::Row& v) {
    const ContextPtr& ctx = t.context();
    auto piece = [&](int j) {
        std::vector<FieldElem> c(v.begin() + j * (d + 1), v.begin() + (j + 1) * (d + 1));
        return Poly(ctx, std::move(c));
    };
    return SyzygyVec{piece(0), piece(1), piece(2)};
}

linalg::Row vector_from_syzygy(const SyzygyVec& s, int d, const ContextPtr& ctx) {
    linalg::Row v(3u * (d + 1), ctx->zero());
    for (int j = 0; j < 3; ++j) {
        const Poly& f = s.coord(j);
        for (std::size_t i = 0; i < f.coeffs().size(); ++i) v[j * (d + 1) + i] = f.coeffs()[i];
    }
    return v;
}

}  // namespace

std::vector<SyzygyVec> syzygy_space(const ParamTriple& t, int d) {
    if (d < 0) throw InvalidTriple("syzygy_space requires d >= 0");
    const auto basis = linalg::kernel(coefficient_matrix(t, d), 3u * (d + 1), t.context());
    std::vector<SyzygyVec> out;
    out.reserve(basis.size());
    for (const auto& v : basis) out.push_back(syzygy_from_vector(t, d, v));
    return out;
}

int syzygy_space_dim(const ParamTriple& t, int d) {
    return static_cast<int>(3 * (d + 1)) - linalg::rank(coefficient_matrix(t, d));
}

int mu(const ParamTriple& t) {
    for (int d = 0; d <= t.n; ++d)
        if (syzygy_space_dim(t, d) > 0) return d;
    throw InternalInconsistency("no syzygy found up to degree n");
}

int mu_bareiss(const ParamTriple& t) {
    if (!t.context()->is_ratfunc())
        throw InvalidContext("mu_bareiss expects a triple over a rational-function context");
    for (int d = 0; d <= t.n; ++d) {
        linalg::Matrix m = coefficient_matrix(t, d);
        // Clear denominators row by row (row scaling preserves the kernel).
        linalg::PolyMatrix pm(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) {
            vecpoly::Vec common = {t.context()->base()->one()};
            for (const auto& e : m[i]) {
                const auto& den = e.ratfunc().den;
                vecpoly::Vec g = vecpoly::gcd(common, den);
                common = vecpoly::mul(common, vecpoly::divmod(den, g).first);
            }
            pm[i].reserve(m[i].size());
            for (const auto& e : m[i]) {
                const auto& rf = e.ratfunc();
                pm[i].push_back(vecpoly::mul(rf.num, vecpoly::divmod(common, rf.den).first));
            }
        }
        const int dim = static_cast<int>(3 * (d + 1)) - linalg::bareiss_rank(pm);
        if (dim > 0) return d;
    }
    throw InternalInconsistency("no syzygy found up to degree n (Bareiss path)");
}

namespace {

// Scales a degree-mu kernel element so that its highest-degree coordinate
// (first among x, y, w at the vector degree) is monic.
SyzygyVec canonical_scale(const SyzygyVec& s) {
    const int d = s.degree();
    for (int j = 0; j < 3; ++j) {
        const Poly& f = s.coord(j);
        if (!f.is_zero() && f.degree() == d) {
            const FieldElem inv = f.leading().inverse();
            return SyzygyVec{inv * s.A, inv * s.B, inv * s.C};
        }
    }
    throw InternalInconsistency("unscalable syzygy vector");
}

// Reduces v against the echelon span of {t^i p : 0 <= i <= shifts} in the
// degree-d coefficient space; returns the canonical coset representative.
SyzygyVec reduce_mod_shifts(const ParamTriple& t, const SyzygyVec& p, const SyzygyVec& v, int d,
                            int shifts) {
    const ContextPtr& ctx = t.context();
    linalg::Matrix span;
    for (int i = 0; i <= shifts; ++i) {
        SyzygyVec sh{p.A.shifted(i), p.B.shifted(i), p.C.shifted(i)};
        span.push_back(vector_from_syzygy(sh, d, ctx));
    }
    const std::vector<int> pivots = linalg::rref(span);
    linalg::Row w = vector_from_syzygy(v, d, ctx);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        const FieldElem f = w[pivots[i]];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < w.size(); ++j) w[j] = w[j] - f * span[i][j];
    }
    return syzygy_from_vector(t, d, w);
}

}  // namespace

MuBasis mu_basis(const ParamTriple& t) {
    const int m = mu(t);
    const auto kmu = syzygy_space(t, m);
    if (kmu.empty()) throw InternalInconsistency("empty kernel at d = mu");
    const SyzygyVec p = canonical_scale(kmu.front());

    const int d2 = t.n - m;
    std::vector<SyzygyVec> k2;
    if (d2 == m && kmu.size() >= 2) {
        k2 = kmu;  // mu = n/2: p and q both live in the degree-mu kernel
    } else {
        k2 = syzygy_space(t, d2);
    }

    for (std::size_t idx = 0; idx < k2.size(); ++idx) {
        if (d2 == m && idx == 0) continue;  // that element is p itself
        const SyzygyVec& v = k2[idx];
        const auto cr = cross(p, v);
        if (cr[0].is_zero() && cr[1].is_zero() && cr[2].is_zero()) continue;
        // cr must be a constant multiple of (a, b, c).
        FieldElem kappa = t.context()->zero();
        for (int j = 0; j < 3; ++j) {
            if (!t.coord(j).is_zero()) {
                if (cr[j].is_zero()) kappa = t.context()->zero();
                else kappa = cr[j].leading() / t.coord(j).leading();
                break;
            }
        }
        if (kappa.is_zero()) continue;
        bool match = true;
        for (int j = 0; j < 3; ++j)
            if (cr[j] != kappa * t.coord(j)) {
                match = false;
                break;
            }
        if (!match)
            throw InternalInconsistency("degree-(n-mu) syzygy with non-constant cross multiple");

        SyzygyVec q = reduce_mod_shifts(t, p, v, d2, t.n - 2 * m);
        const FieldElem inv = kappa.inverse();
        q = SyzygyVec{inv * q.A, inv * q.B, inv * q.C};
        MuBasis basis{t, p, q, m, t.n};
        const auto check = cross(basis.p, basis.q);
        if (check[0] != t.a || check[1] != t.b || check[2] != t.c)
            throw InternalInconsistency("cross-product normalization failed");
        return basis;
    }
    throw InternalInconsistency("no degree-(n-mu) kernel element with nonzero cross product");
}

std::pair<Poly, Poly> decompose(const MuBasis& basis, const SyzygyVec& s) {
    const ParamTriple& t = basis.triple;
    if (s.is_zero() || !s.annihilates(t)) throw NotASyzygy();
    const ContextPtr& ctx = t.context();
    const int ds = s.degree();
    const int d1 = ds - basis.mu;
    const int d2 = ds + basis.mu - basis.n;
    if (d1 < 0) throw NoDecomposition();
    const int n1 = d1 + 1;
    const int n2 = d2 >= 0 ? d2 + 1 : 0;

    // Columns: coefficients of h1 then h2; rows: t^k coefficient of each
    // coordinate of h1*p + h2*q.
    const std::size_t rows = 3u * (ds + 1);
    linalg::Matrix m(rows, linalg::Row(n1 + n2, ctx->zero()));
    linalg::Row rhs(rows, ctx->zero());
    for (int j = 0; j < 3; ++j) {
        const Poly& pj = basis.p.coord(j);
        const Poly& qj = basis.q.coord(j);
        for (int i = 0; i < n1; ++i)
            for (std::size_t ci = 0; ci < pj.coeffs().size(); ++ci)
                m[j * (ds + 1) + ci + i][i] = pj.coeffs()[ci];
        for (int i = 0; i < n2; ++i)
            for (std::size_t ci = 0; ci < qj.coeffs().size(); ++ci)
                m[j * (ds + 1) + ci + i][n1 + i] = qj.coeffs()[ci];
        const Poly& sj = s.coord(j);
        for (std::size_t ci = 0; ci < sj.coeffs().size(); ++ci) rhs[j * (ds + 1) + ci] = sj.coeffs()[ci];
    }
    const auto sol = linalg::solve(std::move(m), rhs, ctx);
    if (!sol) throw NoDecomposition();
    std::vector<FieldElem> h1(sol->begin(), sol->begin() + n1);
    std::vector<FieldElem> h2(sol->begin() + n1, sol->end());
    return {Poly(ctx, std::move(h1)), Poly(ctx, std::move(h2))};
}

IdentityReport verify_identity(const MuBasis& basis, const ParamTriple& t) {
    IdentityReport r;
    const auto cr = cross(basis.p, basis.q);
    r.a_ok = cr[0] == t.a;
    r.b_ok = cr[1] == t.b;
    r.c_ok = cr[2] == t.c;
    r.deg_p_ok = !basis.p.is_zero() && basis.p.degree() == basis.mu;
    r.deg_q_ok = !basis.q.is_zero() && basis.q.degree() == basis.n - basis.mu;
    const Poly g = gcd3(basis.p.A, basis.p.B, basis.p.C);
    r.gcd_p_ok = !g.is_zero() && g.degree() == 0;
    return r;
}

}  // namespace mucurve
