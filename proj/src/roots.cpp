#include "mucurve/roots.hpp"

#include <algorithm>
#include <map>

#include "mucurve/rng.hpp"

namespace mucurve {

// ---------------------------------------------------------------------------
// ordering

bool canonical_less(const FieldElem& a, const FieldElem& b) {
    switch (a.context()->kind()) {
        case FieldContext::Kind::Rationals: {
            // 0, then by height, positive before negative, then by denominator.
            const mpq_class &x = a.rational(), &y = b.rational();
            if (x == y) return false;
            auto key = [](const mpq_class& q) {
                mpz_class num = abs(q.get_num());
                mpz_class h = num > q.get_den() ? num : q.get_den();
                return std::tuple<mpz_class, int, mpz_class>(h, q < 0 ? 1 : 0, q.get_den());
            };
            auto ka = key(x), kb = key(y);
            if (ka != kb) return ka < kb;
            return x < y;
        }
        case FieldContext::Kind::Prime:
            return a.residue() < b.residue();
        case FieldContext::Kind::Extension: {
            const auto &u = a.ext_coeffs(), &v = b.ext_coeffs();
            if (u.size() != v.size()) return u.size() < v.size();
            for (std::size_t i = u.size(); i-- > 0;) {
                if (u[i] != v[i]) return canonical_less(u[i], v[i]);
            }
            return false;
        }
        case FieldContext::Kind::RatFunc:
            return a.str() < b.str();
    }
    return false;
}

static bool poly_less(const Poly& f, const Poly& g) {
    const auto &u = f.coeffs(), &v = g.coeffs();
    if (u.size() != v.size()) return u.size() < v.size();
    for (std::size_t i = u.size(); i-- > 0;)
        if (u[i] != v[i]) return canonical_less(u[i], v[i]);
    return false;
}

// ---------------------------------------------------------------------------
// finite-field machinery

Poly pow_mod(const Poly& h, const mpz_class& e, const Poly& f) {
    Poly acc = Poly::constant(f.context()->one());
    Poly base = divmod(h, f).second;
    mpz_class ee = e;
    while (ee > 0) {
        if (mpz_odd_p(ee.get_mpz_t())) acc = divmod(acc * base, f).second;
        base = divmod(base * base, f).second;
        ee >>= 1;
    }
    return acc;
}

namespace {

Poly random_poly_below(const ContextPtr& ctx, int deg_bound, Rng& rng) {
    std::vector<FieldElem> c;
    for (int i = 0; i < deg_bound; ++i) c.push_back(ctx->random_elem(rng));
    return Poly(ctx, std::move(c));
}

// One splitting attempt; returns a proper monic factor or the zero poly.
Poly edf_split(const Poly& g, int d, Rng& rng) {
    const ContextPtr& ctx = g.context();
    const mpz_class q = ctx->order();
    const Poly u = random_poly_below(ctx, g.degree(), rng);
    if (u.is_zero() || u.is_constant()) return Poly::zero(ctx);
    Poly w;
    if (ctx->characteristic() == 2) {
        // Trace map T(u) = u + u^2 + ... + u^(2^(kd-1)) mod g.
        unsigned long kd = mpz_sizeinbase(q.get_mpz_t(), 2) - 1;  // q = 2^k
        kd *= static_cast<unsigned long>(d);
        Poly acc = divmod(u, g).second;
        Poly term = acc;
        for (unsigned long j = 1; j < kd; ++j) {
            term = divmod(term * term, g).second;
            acc = acc + term;
        }
        w = acc;
    } else {
        mpz_class e;
        mpz_pow_ui(e.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
        e = (e - 1) / 2;
        w = pow_mod(u, e, g) - Poly::constant(ctx->one());
    }
    if (w.is_zero()) return Poly::zero(ctx);
    Poly h = gcd(g, w);
    if (h.is_constant() || h.degree() == g.degree()) return Poly::zero(ctx);
    return h;
}

void edf_rec(const Poly& g, int d, Rng& rng, std::vector<Poly>& out) {
    if (g.degree() == d) {
        out.push_back(g.monic());
        return;
    }
    Poly h = Poly::zero(g.context());
    while (h.is_zero()) h = edf_split(g, d, rng);
    edf_rec(h, d, rng, out);
    edf_rec((g / h).monic(), d, rng, out);
}

// (degree, product of monic irreducible factors of that degree) for a
// squarefree monic input, ascending degree.
std::vector<std::pair<int, Poly>> distinct_degree_factor(Poly f) {
    const ContextPtr& ctx = f.context();
    const mpz_class q = ctx->order();
    std::vector<std::pair<int, Poly>> out;
    Poly h = Poly::from_ints(ctx, {0, 1});  // t
    int i = 0;
    while (!f.is_constant()) {
        ++i;
        if (2 * i > f.degree()) {
            out.emplace_back(f.degree(), f.monic());
            break;
        }
        h = pow_mod(h, q, f);
        const Poly g = gcd(f, h - Poly::from_ints(ctx, {0, 1}));
        if (!g.is_constant()) {
            out.emplace_back(i, g);
            f = (f / g).monic();
            h = divmod(h, f).second;
        }
    }
    return out;
}

}  // namespace

std::vector<Poly> equal_degree_factor(const Poly& g, int d) {
    Rng rng(0x5eedULL + static_cast<std::uint64_t>(g.degree()));
    std::vector<Poly> out;
    edf_rec(g.monic(), d, rng, out);
    std::sort(out.begin(), out.end(), poly_less);
    return out;
}

std::vector<FieldElem> base_field_roots(const Poly& f) {
    const ContextPtr& ctx = f.context();
    if (!ctx->is_finite()) throw InvalidContext("base_field_roots requires a finite field");
    std::vector<FieldElem> roots;
    Poly s = squarefree_part(f);
    const auto parts = distinct_degree_factor(s);
    for (const auto& [d, g] : parts) {
        if (d != 1) continue;
        for (const Poly& lin : equal_degree_factor(g, 1)) roots.push_back(-lin.coeff(0));
    }
    std::sort(roots.begin(), roots.end(), canonical_less);
    return roots;
}

// ---------------------------------------------------------------------------
// rational roots over Q

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> divs;
    if (n == 0) return divs;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            divs.push_back(d);
            if (d * d != n) divs.push_back(n / d);
        }
    }
    return divs;
}

std::vector<mpq_class> rational_root_candidates(const Poly& f) {
    // Clear denominators and remove integer content.
    mpz_class den_lcm = 1;
    for (const auto& c : f.coeffs()) den_lcm = lcm(den_lcm, c.rational().get_den());
    std::vector<mpz_class> ic;
    for (const auto& c : f.coeffs()) ic.push_back(mpz_class(c.rational() * den_lcm));
    mpz_class content = 0;
    for (const auto& z : ic) content = gcd(content, z);
    for (auto& z : ic) z /= content;
    // Skip the power of t dividing f (root 0 is handled by the caller).
    std::size_t lo = 0;
    while (lo < ic.size() && ic[lo] == 0) ++lo;
    const auto rs = positive_divisors(ic[lo]);
    const auto ss = positive_divisors(ic.back());
    std::vector<mpq_class> cands;
    for (const auto& r : rs)
        for (const auto& s : ss) {
            mpq_class q(r, s);
            q.canonicalize();
            cands.push_back(q);
            cands.push_back(-q);
        }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    const ContextPtr Q = FieldContext::rationals();
    std::sort(cands.begin(), cands.end(), [&](const mpq_class& a, const mpq_class& b) {
        return canonical_less(FieldElem(Q, a), FieldElem(Q, b));
    });
    return cands;
}

}  // namespace

RootHandle find_root(const Poly& f, const RootPolicy& policy) {
    if (f.is_zero() || f.degree() < 1) throw ConstantPolynomial();
    const ContextPtr& ctx = f.context();

    if (ctx->is_rationals()) {
        if (f.coeff(0).is_zero()) {
            const FieldElem z = ctx->zero();
            return RootHandle{z, ctx, Poly::from_ints(ctx, {0, 1})};
        }
        for (const mpq_class& cand : rational_root_candidates(f)) {
            const FieldElem alpha = ctx->from_mpq(cand);
            if (f.eval(alpha).is_zero())
                return RootHandle{alpha, ctx, Poly(ctx, {-alpha, ctx->one()})};
        }
        throw NoRootInPolicy();
    }

    if (!ctx->is_finite()) throw InvalidContext("find_root supports Q and finite fields only");

    const auto roots = base_field_roots(f);
    if (!roots.empty()) {
        const FieldElem& alpha = roots.front();
        return RootHandle{alpha, ctx, Poly(ctx, {-alpha, ctx->one()})};
    }
    if (!policy.allow_extension) throw NoRootInPolicy();

    // Smallest-degree irreducible factor, canonically first among ties.
    const Poly s = squarefree_part(f);
    for (const auto& [d, g] : distinct_degree_factor(s)) {
        if (d < 2) continue;
        const Poly m = equal_degree_factor(g, d).front();
        const ContextPtr ext = FieldContext::extension(ctx, m.coeffs());
        return RootHandle{ext->generator(), ext, m};
    }
    throw NoRootInPolicy();
}

Poly divide_by_linear(const Poly& f, const RootHandle& alpha) {
    const Poly g = f.context()->same(*alpha.witness_context) ? f : f.map_context(alpha.witness_context);
    // Synthetic division by (t - alpha).
    if (g.is_zero()) throw NotARoot();
    std::vector<FieldElem> out(g.coeffs().size() - 1, alpha.witness_context->zero());
    FieldElem carry = alpha.witness_context->zero();
    for (std::size_t i = g.coeffs().size(); i-- > 1;) {
        carry = g.coeffs()[i] + carry * alpha.value;
        out[i - 1] = carry;
    }
    const FieldElem rem = g.coeffs()[0] + carry * alpha.value;
    if (!rem.is_zero()) throw NotARoot();
    return Poly(alpha.witness_context, std::move(out));
}

}  // namespace mucurve
