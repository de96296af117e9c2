// Acceptance gate: ten criteria, one pass/fail line each. Exits nonzero if any
// criterion fails. All comparisons are exact unless a time bound is stated.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mucurve/explore.hpp"
#include "mucurve/parse.hpp"

using namespace mucurve;
using Clock = std::chrono::steady_clock;

namespace {

ContextPtr Q() { return FieldContext::rationals(); }

Poly qpoly(std::initializer_list<long> c) { return Poly::from_ints(Q(), c); }

Poly qp(std::initializer_list<const char*> ascending) {
    std::vector<FieldElem> c;
    for (const char* s : ascending) c.push_back(Q()->from_mpq(mpq_class(s)));
    return Poly(Q(), std::move(c));
}

ParamTriple quintic_triple(const ContextPtr& ctx) {
    return ParamTriple::create(Poly::from_ints(ctx, {1, -2, 1}),
                               Poly::from_ints(ctx, {0, 0, -1, 0, -1, 1}),
                               Poly::from_ints(ctx, {0, 1, 0, 0, 1, -1}));
}

bool proportional(const SyzygyVec& s, const SyzygyVec& ref) {
    return s.A * ref.B == s.B * ref.A && s.A * ref.C == s.C * ref.A && s.B * ref.C == s.C * ref.B;
}

// Independent dense elimination: forward Gaussian elimination with first-found
// pivots, distinct from the library's reduced-echelon path.
int brute_kernel_dim(const ParamTriple& t, int d) {
    const ContextPtr& ctx = t.context();
    const int rows = t.n + d + 1;
    const int cols = 3 * (d + 1);
    std::vector<std::vector<FieldElem>> m(rows, std::vector<FieldElem>(cols, ctx->zero()));
    for (int j = 0; j < 3; ++j)
        for (int s = 0; s <= d; ++s)
            for (int i = 0; i < static_cast<int>(t.coord(j).coeffs().size()); ++i)
                m[i + s][j * (d + 1) + s] = m[i + s][j * (d + 1) + s] + t.coord(j).coeffs()[i];
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (!m[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            if (m[r][col].is_zero()) continue;
            const FieldElem f = m[r][col] / m[rank][col];
            for (int cc = col; cc < cols; ++cc) m[r][cc] = m[r][cc] - f * m[rank][cc];
        }
        ++rank;
    }
    return cols - rank;
}

struct Criterion {
    int number;
    std::string label;
    std::function<bool(std::string&)> check;
};

double elapsed_s(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// 1: class of the worked quintic.
bool crit1(std::string& why) {
    const auto t0 = Clock::now();
    const ParamTriple t = quintic_triple(Q());
    if (mu(t) != 1) {
        why = "mu != 1";
        return false;
    }
    const auto space = syzygy_space(t, 1);
    const SyzygyVec ref{qpoly({0, 1}), qpoly({-1, 1}), qpoly({-1, 1})};
    if (space.size() != 1 || !proportional(space[0], ref)) {
        why = "minimal syzygy is not proportional to (t, t-1, t-1)";
        return false;
    }
    if (elapsed_s(t0) >= 0.1) {
        why = "time bound 0.1 s exceeded";
        return false;
    }
    return true;
}

// 2: mu-basis reproduction.
bool crit2(std::string& why) {
    const auto t0 = Clock::now();
    const ParamTriple t = quintic_triple(Q());
    const MuBasis basis = mu_basis(t);
    const SyzygyVec pref{qpoly({0, 1}), qpoly({-1, 1}), qpoly({-1, 1})};
    if (!proportional(basis.p, pref)) {
        why = "p is not proportional to (t, t-1, t-1)";
        return false;
    }
    const auto xp = cross(basis.p, basis.q);
    if (!(xp[0] == t.a && xp[1] == t.b && xp[2] == t.c)) {
        why = "cross(p, q) != (a, b, c) with constant 1";
        return false;
    }
    const SyzygyVec qref{qpoly({0, 0, 0, 0, 1}), qpoly({1}), qpoly({0, 1})};
    auto [h1, h2] = decompose(basis, qref);
    if (!(h2 == qpoly({1}))) {
        why = "q does not agree with (t^4, 1, t) modulo shifts of p";
        return false;
    }
    if (elapsed_s(t0) >= 0.1) {
        why = "time bound 0.1 s exceeded";
        return false;
    }
    return true;
}

// 3: the cautionary family stays at class 1.
bool crit3(std::string& why) {
    const ParamTriple t = quintic_triple(Q());
    const MuBasis basis = mu_basis(t);
    const RootHandle one{Q()->from_int(1), Q(), qpoly({-1, 1})};
    const ApproxSeq seq = approx_sequence_unchecked(t, basis, Q()->zero(), one);
    const ContextPtr E = seq.eps_ctx;
    const FieldElem eps = E->generator();
    const Poly expect = t.a.map_context(E) + Poly::constant(eps) * qpoly({-1, 1}).map_context(E);
    if (seq.aEps != expect) {
        why = "family is not (t-1)^2 + eps(t-1)";
        return false;
    }
    const ParamTriple family = ParamTriple::unchecked(seq.aEps, seq.bEps, seq.cEps);
    if (mu(family) != 1) {
        why = "class over Q(eps) != 1";
        return false;
    }
    const Poly tp = qpoly({0, 1}).map_context(E);
    const Poly tm1e = qpoly({-1, 1}).map_context(E) + Poly::constant(eps);
    if (!SyzygyVec{tp, tm1e, tm1e}.annihilates(family)) {
        why = "(t, t-1+eps, t-1+eps) is not a witness";
        return false;
    }
    return true;
}

// 4: the worked class-raising family with alpha pinned to 2.
bool crit4(std::string& why) {
    const auto t0 = Clock::now();
    const ParamTriple t = quintic_triple(Q());
    const MuBasis basis = mu_basis(t);
    AdmissibleOptions opt;
    opt.candidates = {Q()->from_int(2)};
    const AdmissiblePick pick = find_admissible(t, basis, {}, opt);
    if (pick.lambda != Q()->from_mpq(mpq_class(-1, 12))) {
        why = "lambda != -1/12";
        return false;
    }
    const ApproxSeq seq = approx_sequence(pick);
    const ContextPtr E = seq.eps_ctx;
    const FieldElem eps = E->generator();
    const Poly sheared_a = qp({"1", "-2", "13/12", "0", "1/12", "-1/12"});
    const Poly quot = qp({"-1/2", "3/4", "-1/6", "-1/12", "-1/12"});
    if (seq.aEps != sheared_a.map_context(E) + Poly::constant(eps) * quot.map_context(E)) {
        why = "a_eps does not match the printed coefficients";
        return false;
    }
    if (mu(ParamTriple::unchecked(seq.aEps, seq.bEps, seq.cEps)) != 2) {
        why = "class over Q(eps) != 2";
        return false;
    }
    const ApproxSeq moved = transport(seq, pick.lambda);
    if (moved.aEps != t.a.map_context(E) + Poly::constant(eps) * quot.map_context(E) ||
        moved.bEps != t.b.map_context(E) || moved.cEps != t.c.map_context(E)) {
        why = "transported family != (a + eps*quotient, b, c)";
        return false;
    }
    if (elapsed_s(t0) >= 1.0) {
        why = "time bound 1 s exceeded";
        return false;
    }
    return true;
}

// 5: construct + verify on 100 seeded finite-field triples.
bool crit5(std::string& why) {
    const auto t0 = Clock::now();
    auto f101 = FieldContext::prime(101);
    Rng rng(505);
    int done = 0;
    while (done < 100) {
        const int n = 4 + static_cast<int>(rng.below(5));  // 4..8
        if (n / 2 < 2) continue;
        const int target = 1 + static_cast<int>(rng.below(n / 2 - 1));  // < floor(n/2)
        auto [t, basis] = sample_with_class(n, target, f101, rng);
        try {
            auto [seq, rep] = construct(t, RootPolicy{true});
            if (!(rep.gcd_ok && rep.degree_ok && rep.class_ok && rep.spec_ok)) {
                why = "verification bullet failed on sample " + std::to_string(done);
                return false;
            }
        } catch (const Error& e) {
            why = std::string("construct failed: ") + e.what();
            return false;
        }
        ++done;
    }
    if (elapsed_s(t0) >= 60.0) {
        why = "time bound 60 s exceeded";
        return false;
    }
    return true;
}

// 6: degree filtration dimensions against a brute-force kernel.
bool crit6(std::string& why) {
    auto f101 = FieldContext::prime(101);
    Rng rng(606);
    for (int i = 0; i < 50; ++i) {
        const int n = 2 + static_cast<int>(rng.below(6));
        const ParamTriple t = sample_triple(n, f101, rng);
        const int m = mu(t);
        for (int d = 0; d <= n; ++d) {
            const int expected = std::max(0, d - m + 1) + std::max(0, d + m - n + 1);
            if (syzygy_space_dim(t, d) != expected || brute_kernel_dim(t, d) != expected) {
                why = "dimension mismatch at sample " + std::to_string(i) + ", d = " +
                      std::to_string(d);
                return false;
            }
        }
    }
    return true;
}

// 7: shear invariance over F_101 and Q.
bool crit7(std::string& why) {
    auto f101 = FieldContext::prime(101);
    Rng rng(707);
    for (int i = 0; i < 100; ++i) {
        const int n = 2 + static_cast<int>(rng.below(5));
        const ParamTriple t = sample_triple(n, f101, rng);
        const FieldElem lam = f101->random_elem(rng);
        try {
            const ParamTriple sh = shear(t, lam);
            if (mu(sh) != mu(t)) {
                why = "class changed under shear over F_101";
                return false;
            }
            if (!verify_identity(shear_mubasis(mu_basis(t), lam), sh).all()) {
                why = "sheared basis fails verify_identity over F_101";
                return false;
            }
        } catch (const DegenerateShear&) {
        }
    }
    Rng rq(708);
    for (int i = 0; i < 100; ++i) {
        const int n = 2 + static_cast<int>(rq.below(3));
        const ParamTriple t = sample_triple(n, Q(), rq);
        const FieldElem lam = Q()->random_elem(rq, 10);
        try {
            const ParamTriple sh = shear(t, lam);
            if (mu(sh) != mu(t)) {
                why = "class changed under shear over Q";
                return false;
            }
            if (!verify_identity(shear_mubasis(mu_basis(t), lam), sh).all()) {
                why = "sheared basis fails verify_identity over Q";
                return false;
            }
        } catch (const DegenerateShear&) {
        }
    }
    return true;
}

// 8: decomposition uniqueness round-trip.
bool crit8(std::string& why) {
    auto f101 = FieldContext::prime(101);
    Rng rng(808);
    int done = 0;
    while (done < 100) {
        const int n = 3 + static_cast<int>(rng.below(4));
        const int m = 1 + static_cast<int>(rng.below(n / 2));
        auto [t, basis] = sample_with_class(n, m, f101, rng);
        std::vector<FieldElem> c1, c2;
        for (int k = 0; k <= static_cast<int>(rng.below(3)); ++k) c1.push_back(f101->random_elem(rng));
        for (int k = 0; k <= static_cast<int>(rng.below(2)); ++k) c2.push_back(f101->random_elem(rng));
        const Poly h1(f101, std::move(c1));
        const Poly h2(f101, std::move(c2));
        const SyzygyVec s{h1 * basis.p.A + h2 * basis.q.A, h1 * basis.p.B + h2 * basis.q.B,
                          h1 * basis.p.C + h2 * basis.q.C};
        if (s.is_zero()) continue;
        auto [r1, r2] = decompose(basis, s);
        if (!(r1 == h1 && r2 == h2)) {
            why = "round-trip mismatch at sample " + std::to_string(done);
            return false;
        }
        ++done;
    }
    return true;
}

// 9: semicontinuity at seeded specializations.
bool crit9(std::string& why) {
    auto f101 = FieldContext::prime(101);
    Rng rng(909);
    for (int fam = 0; fam < 20; ++fam) {
        const int n = 6 + static_cast<int>(rng.below(2));
        const int target = 1 + static_cast<int>(rng.below(2));
        auto [t, basis] = sample_with_class(n, target, f101, rng);
        auto [seq, rep] = construct(t, RootPolicy{true});
        if (!rep.all_ok()) {
            why = "construction failed verification for family " + std::to_string(fam);
            return false;
        }
        const ContextPtr& W = seq.eps_ctx->base();
        std::vector<FieldElem> pts{W->zero()};
        while (pts.size() < 11) {
            const FieldElem e0 = W->random_elem(rng);
            if (!e0.is_zero()) pts.push_back(e0);
        }
        const auto probe = specialization_probe(seq, pts);
        if (probe[0].second != target) {
            why = "class at eps = 0 != mu for family " + std::to_string(fam);
            return false;
        }
        int hits = 0;
        for (std::size_t i = 1; i < probe.size(); ++i) {
            if (probe[i].second > target + 1) {
                why = "class exceeded mu+1 under specialization";
                return false;
            }
            if (probe[i].second == target + 1) ++hits;
        }
        if (hits < 9) {
            why = "fewer than 9/10 specializations kept class mu+1";
            return false;
        }
    }
    return true;
}

// 10: genericity census.
bool crit10(std::string& why) {
    const auto t0 = Clock::now();
    auto f101 = FieldContext::prime(101);
    const CensusReport rep = census(6, 1000, f101, 42);
    int total = 0;
    for (const auto& [k, v] : rep.histogram) {
        if (k < 0 || k > 3) {
            why = "histogram not supported on {0,1,2,3}";
            return false;
        }
        total += v;
    }
    if (total != 1000) {
        why = "sample count mismatch";
        return false;
    }
    const auto it = rep.histogram.find(3);
    const int top = it == rep.histogram.end() ? 0 : it->second;
    if (top < 900) {
        why = "mu = 3 fraction below 0.9 (" + std::to_string(top) + "/1000)";
        return false;
    }
    if (elapsed_s(t0) >= 30.0) {
        why = "time bound 30 s exceeded";
        return false;
    }
    return true;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "worked quintic has class 1 with minimal syzygy (t, t-1, t-1)", crit1},
        {2, "mu-basis reproduction with exact cross-product identity", crit2},
        {3, "inadmissible root keeps the family at class 1", crit3},
        {4, "pinned alpha = 2 reproduces lambda = -1/12 and the printed family", crit4},
        {5, "construct + verify on 100 seeded finite-field triples", crit5},
        {6, "degree filtration dims match formula and brute-force kernel", crit6},
        {7, "shear preserves the class and transforms the basis", crit7},
        {8, "decomposition round-trip is the identity", crit8},
        {9, "specializations respect semicontinuity and genericity", crit9},
        {10, "census n = 6 over F_101 concentrates on class 3", crit10},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        std::string why;
        bool ok = false;
        try {
            ok = c.check(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        if (ok) {
            std::printf("PASS %2d: %s\n", c.number, c.label.c_str());
        } else {
            std::printf("FAIL %2d: %s (%s)\n", c.number, c.label.c_str(), why.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
