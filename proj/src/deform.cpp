#include "mucurve/deform.hpp"

#include <algorithm>

namespace mucurve {

ParamTriple shear(const ParamTriple& t, const FieldElem& lambda) {
    const Poly anew = t.a + lambda * t.b;
    if (anew.is_zero() && t.b.is_zero() && t.c.is_zero()) throw DegenerateShear();
    if (anew.is_zero()) throw DegenerateShear();
    return ParamTriple::create(anew, t.b, t.c);
}

MuBasis shear_mubasis(const MuBasis& basis, const FieldElem& lambda) {
    const SyzygyVec p{basis.p.A, basis.p.B - lambda * basis.p.A, basis.p.C};
    const SyzygyVec q{basis.q.A, basis.q.B - lambda * basis.q.A, basis.q.C};
    MuBasis out{shear(basis.triple, lambda), p, q, basis.mu, basis.n};
    return out;
}

void validate_pick(const AdmissiblePick& pick) {
    if (!pick.sheared.a.eval(pick.alpha.value).is_zero())
        throw InternalInconsistency("admissible pick: alpha is not a root of a + lambda*b");
    if (pick.sheared.a.is_constant())
        throw InternalInconsistency("admissible pick: deg(a + lambda*b) must be >= 1");
    const FieldElem py = pick.shearedBasis.p.B.eval(pick.alpha.value);
    const FieldElem pw = pick.shearedBasis.p.C.eval(pick.alpha.value);
    if (py.is_zero() && pw.is_zero())
        throw InternalInconsistency("admissible pick: p_y and p_w both vanish at alpha");
}

namespace {

// Strips from h every factor shared with g: h <- h / gcd(h, g) until coprime.
Poly strip_common_roots(Poly h, const Poly& g) {
    for (Poly d = gcd(h, g); !d.is_zero() && d.degree() > 0; d = gcd(h, g)) h = h / d;
    return h;
}

std::optional<AdmissiblePick> lambda_zero_path(const ParamTriple& t, const MuBasis& basis,
                                               const RootPolicy& policy) {
    if (t.a.is_zero() || t.a.is_constant()) return std::nullopt;
    const Poly g = gcd(basis.p.B, basis.p.C);
    const Poly h = strip_common_roots(t.a, g);
    if (h.is_constant()) return std::nullopt;
    try {
        RootHandle alpha = find_root(h, policy);
        AdmissiblePick pick{t.context()->zero(), std::move(alpha), t, basis};
        validate_pick(pick);
        return pick;
    } catch (const NoRootInPolicy&) {
        return std::nullopt;
    }
}

// Candidate alpha enumeration order: 0, 1, -1, 2, -2, ... mapped into the
// field (for F_p this walks 0, 1, p-1, 2, p-2, ...).
FieldElem nth_candidate(const ContextPtr& ctx, int k) {
    if (k == 0) return ctx->zero();
    const long v = (k + 1) / 2;
    return ctx->from_int(k % 2 == 1 ? v : -v);
}

std::optional<AdmissiblePick> alpha_first_path(const ParamTriple& t, const MuBasis& basis,
                                               const AdmissibleOptions& options) {
    const ContextPtr& ctx = t.context();
    const int count = options.candidates.empty() ? options.budget
                                                 : static_cast<int>(options.candidates.size());
    for (int k = 0; k < count; ++k) {
        const FieldElem alpha = options.candidates.empty() ? nth_candidate(ctx, k) : options.candidates[k];
        const FieldElem bval = t.b.eval(alpha);
        if (bval.is_zero()) continue;
        const FieldElem lambda = -(t.a.eval(alpha)) / bval;
        const Poly anew = t.a + lambda * t.b;
        if (anew.is_zero() || anew.is_constant()) continue;
        const FieldElem py = basis.p.B.eval(alpha) - lambda * basis.p.A.eval(alpha);
        const FieldElem pw = basis.p.C.eval(alpha);
        if (py.is_zero() && pw.is_zero()) continue;
        AdmissiblePick pick{lambda,
                            RootHandle{alpha, ctx, Poly(ctx, {-alpha, ctx->one()})},
                            shear(t, lambda),
                            shear_mubasis(basis, lambda)};
        validate_pick(pick);
        return pick;
    }
    return std::nullopt;
}

}  // namespace

AdmissiblePick find_admissible(const ParamTriple& t, const MuBasis& basis, const RootPolicy& policy,
                               const AdmissibleOptions& options) {
    // (1) lambda = 0 with a base-field root of the filtered a.
    if (auto pick = lambda_zero_path(t, basis, RootPolicy{false})) return *pick;
    // (2) alpha-first: lambda := -a(alpha)/b(alpha) makes alpha a root by
    // construction, so base-field roots exist whenever a candidate passes.
    if (auto pick = alpha_first_path(t, basis, options)) return *pick;
    // (3) over finite fields, allow extension roots in the lambda = 0 path.
    if (policy.allow_extension && t.context()->is_finite()) {
        if (auto pick = lambda_zero_path(t, basis, RootPolicy{true})) return *pick;
    }
    throw NoAdmissiblePick("candidate budget exhausted under the current root policy");
}

namespace {

Poly linear_t_minus(const ContextPtr& eps_ctx, const FieldElem& alpha_lifted) {
    return Poly(eps_ctx, {-lift_into(alpha_lifted, eps_ctx), eps_ctx->one()});
}

ApproxSeq build_sequence(const ParamTriple& sheared, const MuBasis& shearedBasis,
                         const FieldElem& lambda, const RootHandle& alpha) {
    const ContextPtr& W = alpha.witness_context;
    const ParamTriple lifted = W->same(*sheared.context())
                                   ? sheared
                                   : ParamTriple::create(sheared.a.map_context(W), sheared.b.map_context(W),
                                                         sheared.c.map_context(W));
    const SyzygyVec p = W->same(*sheared.context()) ? shearedBasis.p : shearedBasis.p.map_context(W);

    const Poly quotient = divide_by_linear(lifted.a, alpha);  // (a + lambda*b) / (t - alpha)
    const ContextPtr E = FieldContext::ratfunc(W);
    const FieldElem eps = E->generator();

    ApproxSeq seq;
    seq.eps_ctx = E;
    // a_eps = (a + lambda*b) + eps * quotient = quotient * (t - alpha + eps)
    seq.aEps = lifted.a.map_context(E) + Poly::constant(eps) * quotient.map_context(E);
    seq.bEps = lifted.b.map_context(E);
    seq.cEps = lifted.c.map_context(E);
    seq.origin = lifted;
    seq.targetMu = shearedBasis.mu + 1;
    seq.lambda = lambda;
    seq.alpha = alpha.value;
    // ((t - alpha) p_x, (t - alpha + eps) p_y, (t - alpha + eps) p_w)
    const Poly tma = linear_t_minus(E, alpha.value);
    const Poly tmae = tma + Poly::constant(eps);
    seq.witness = SyzygyVec{tma * p.A.map_context(E), tmae * p.B.map_context(E),
                            tmae * p.C.map_context(E)};
    return seq;
}

}  // namespace

ApproxSeq approx_sequence(const AdmissiblePick& pick) {
    validate_pick(pick);
    return build_sequence(pick.sheared, pick.shearedBasis, pick.lambda, pick.alpha);
}

ApproxSeq approx_sequence_unchecked(const ParamTriple& t, const MuBasis& basis,
                                    const FieldElem& lambda, const RootHandle& alpha) {
    const ParamTriple sheared = lambda.is_zero() ? t : shear(t, lambda);
    const MuBasis shearedBasis = lambda.is_zero() ? basis : shear_mubasis(basis, lambda);
    ApproxSeq seq = build_sequence(sheared, shearedBasis, lambda, alpha);
    seq.notes.push_back("admissibility_not_checked");
    return seq;
}

VerificationReport verify_approx(const ApproxSeq& seq) {
    VerificationReport r;
    const ParamTriple family = ParamTriple::unchecked(seq.aEps, seq.bEps, seq.cEps);
    const int n = seq.origin.n;

    const Poly g = gcd3(seq.aEps, seq.bEps, seq.cEps);
    r.gcd_ok = !g.is_zero() && g.degree() == 0;
    r.degree_ok = family.n == n;
    r.witness_ok = !seq.witness.is_zero() && seq.witness.annihilates(family);

    const FieldElem zero0 = seq.eps_ctx->base()->zero();
    const Poly a0 = specialize_eps(seq.aEps, zero0);
    const Poly b0 = specialize_eps(seq.bEps, zero0);
    const Poly c0 = specialize_eps(seq.cEps, zero0);
    r.spec_ok = a0 == seq.origin.a && b0 == seq.origin.b && c0 == seq.origin.c;

    const int mu_generic = mu(family);
    const int mu_ff = mu_bareiss(family);
    r.elimination_paths_agree = mu_generic == mu_ff;
    r.mu_eps = mu_generic;
    r.class_ok = r.elimination_paths_agree && mu_generic == seq.targetMu;

    r.theorem_applicable = seq.targetMu <= n / 2;
    if (!r.theorem_applicable)
        r.notes.push_back("mu_maximal: mu = floor(n/2), the deformation theorem does not apply");
    r.notes.insert(r.notes.end(), seq.notes.begin(), seq.notes.end());
    return r;
}

ApproxSeq transport(const ApproxSeq& seq, const FieldElem& lambda) {
    ApproxSeq out = seq;
    const FieldElem lam = lift_into(lambda, seq.eps_ctx);
    out.aEps = seq.aEps - lam * seq.bEps;
    const FieldElem lamW = lift_into(lambda, seq.origin.context());
    out.origin = ParamTriple::create(seq.origin.a - lamW * seq.origin.b, seq.origin.b, seq.origin.c);
    // (A, B, C) annihilates (a~, b, c); (A, B + lambda*A, C) annihilates (a~ - lambda*b, b, c).
    out.witness = SyzygyVec{seq.witness.A, seq.witness.B + lam * seq.witness.A, seq.witness.C};
    out.lambda = seq.origin.context()->zero();
    out.transported = true;
    return out;
}

std::pair<ApproxSeq, VerificationReport> construct(const ParamTriple& t, const RootPolicy& policy,
                                                   const AdmissibleOptions& options) {
    const int m = mu(t);
    if (m >= t.n / 2) throw MuMaximal();

    // Normalization: the construction wants deg(a) >= 1. If a is constant,
    // pre-shear by the first lambda making a + lambda*b nonconstant; if b is
    // constant too, swap b and c first (permutations act on syzygies by the
    // same permutation and preserve the class).
    ParamTriple work = t;
    bool swapped_bc = false;
    FieldElem pre_lambda = t.context()->zero();
    std::vector<std::string> notes;
    if (work.a.is_zero() || work.a.is_constant()) {
        if (work.b.is_zero() || work.b.is_constant()) {
            work = ParamTriple::create(work.a, work.c, work.b);
            swapped_bc = true;
            notes.push_back("normalization: swapped coordinates b and c");
        }
        for (int k = 1;; ++k) {
            const FieldElem lam = nth_candidate(t.context(), k);
            const Poly anew = work.a + lam * work.b;
            if (!anew.is_zero() && !anew.is_constant()) {
                pre_lambda = lam;
                work = shear(work, lam);
                notes.push_back("normalization: pre-shear with lambda = " + lam.str());
                break;
            }
        }
    }

    const MuBasis basis = mu_basis(work);
    const AdmissiblePick pick = find_admissible(work, basis, policy, options);
    ApproxSeq seq = approx_sequence(pick);
    if (!pick.lambda.is_zero()) seq = transport(seq, pick.lambda);
    if (!pre_lambda.is_zero()) seq = transport(seq, pre_lambda);
    if (swapped_bc) {
        std::swap(seq.bEps, seq.cEps);
        std::swap(seq.witness.B, seq.witness.C);
        seq.origin = ParamTriple::create(seq.origin.a, seq.origin.c, seq.origin.b);
        notes.push_back("normalization: un-swapped coordinates b and c");
    }
    seq.notes.insert(seq.notes.end(), notes.begin(), notes.end());
    VerificationReport report = verify_approx(seq);
    return {std::move(seq), std::move(report)};
}

}  // namespace mucurve
