#include "mucurve/serialize.hpp"

namespace mucurve {

Json elem_to_json(const FieldElem& x) {
    switch (x.context()->kind()) {
        case FieldContext::Kind::Rationals:
            return x.rational().get_str();
        case FieldContext::Kind::Prime:
            return std::to_string(x.residue());
        case FieldContext::Kind::Extension: {
            Json arr = Json::array();
            for (const auto& c : x.ext_coeffs()) arr.push_back(elem_to_json(c));
            return arr;
        }
        case FieldContext::Kind::RatFunc: {
            Json j;
            Json num = Json::array(), den = Json::array();
            for (const auto& c : x.ratfunc().num) num.push_back(elem_to_json(c));
            for (const auto& c : x.ratfunc().den) den.push_back(elem_to_json(c));
            j["num"] = std::move(num);
            j["den"] = std::move(den);
            return j;
        }
    }
    throw InternalInconsistency("unreachable");
}

FieldElem elem_from_json(const Json& j, const ContextPtr& ctx) {
    switch (ctx->kind()) {
        case FieldContext::Kind::Rationals: {
            mpq_class q(j.get<std::string>(), 10);
            q.canonicalize();
            return FieldElem(ctx, std::move(q));
        }
        case FieldContext::Kind::Prime:
            return FieldElem(ctx, static_cast<std::uint64_t>(std::stoull(j.get<std::string>())));
        case FieldContext::Kind::Extension: {
            std::vector<FieldElem> v;
            for (const auto& c : j) v.push_back(elem_from_json(c, ctx->base()));
            return FieldElem(ctx, std::move(v));
        }
        case FieldContext::Kind::RatFunc: {
            std::vector<FieldElem> num, den;
            for (const auto& c : j.at("num")) num.push_back(elem_from_json(c, ctx->base()));
            for (const auto& c : j.at("den")) den.push_back(elem_from_json(c, ctx->base()));
            return ratfunc_make(ctx, std::move(num), std::move(den));
        }
    }
    throw InternalInconsistency("unreachable");
}

Json poly_to_json(const Poly& f) {
    Json arr = Json::array();
    for (const auto& c : f.coeffs()) arr.push_back(elem_to_json(c));
    return arr;
}

Poly poly_from_json(const Json& j, const ContextPtr& ctx) {
    std::vector<FieldElem> c;
    for (const auto& e : j) c.push_back(elem_from_json(e, ctx));
    return Poly(ctx, std::move(c));
}

Json eps_poly_to_json(const Poly& f) {
    if (!f.context()->is_ratfunc()) throw InvalidContext("eps_poly_to_json requires a ratfunc Poly");
    const ContextPtr& base = f.context()->base();
    std::size_t eps_deg = 0;
    for (const auto& c : f.coeffs()) {
        const auto& rf = c.ratfunc();
        if (!(rf.den.size() == 1 && rf.den[0].is_one()))
            throw InternalInconsistency("family coefficient is not polynomial in eps");
        eps_deg = std::max(eps_deg, rf.num.size());
    }
    Json parts = Json::array();
    for (std::size_t j = 0; j < std::max<std::size_t>(eps_deg, 1); ++j) {
        std::vector<FieldElem> tcoeffs;
        for (const auto& c : f.coeffs()) {
            const auto& num = c.ratfunc().num;
            tcoeffs.push_back(j < num.size() ? num[j] : base->zero());
        }
        parts.push_back(poly_to_json(Poly(base, std::move(tcoeffs))));
    }
    return parts;
}

Poly eps_poly_from_json(const Json& j, const ContextPtr& eps_ctx) {
    const ContextPtr& base = eps_ctx->base();
    std::vector<Poly> parts;
    std::size_t tlen = 0;
    for (const auto& pj : j) {
        parts.push_back(poly_from_json(pj, base));
        tlen = std::max(tlen, parts.back().coeffs().size());
    }
    std::vector<FieldElem> coeffs;
    for (std::size_t i = 0; i < tlen; ++i) {
        std::vector<FieldElem> num;
        for (const auto& p : parts) num.push_back(p.coeff(i));
        coeffs.push_back(ratfunc_make(eps_ctx, std::move(num), {base->one()}));
    }
    return Poly(eps_ctx, std::move(coeffs));
}

Json triple_to_json(const ParamTriple& t) {
    Json j;
    j["a"] = poly_to_json(t.a);
    j["b"] = poly_to_json(t.b);
    j["c"] = poly_to_json(t.c);
    j["n"] = t.n;
    return j;
}

ParamTriple triple_from_json(const Json& j, const ContextPtr& ctx, bool checked) {
    Poly a = poly_from_json(j.at("a"), ctx);
    Poly b = poly_from_json(j.at("b"), ctx);
    Poly c = poly_from_json(j.at("c"), ctx);
    return checked ? ParamTriple::create(std::move(a), std::move(b), std::move(c))
                   : ParamTriple::unchecked(std::move(a), std::move(b), std::move(c));
}

namespace {

Json syzygy_to_json(const SyzygyVec& s) {
    Json j;
    j["A"] = poly_to_json(s.A);
    j["B"] = poly_to_json(s.B);
    j["C"] = poly_to_json(s.C);
    return j;
}

Json eps_syzygy_to_json(const SyzygyVec& s) {
    Json j;
    j["A"] = eps_poly_to_json(s.A);
    j["B"] = eps_poly_to_json(s.B);
    j["C"] = eps_poly_to_json(s.C);
    return j;
}

}  // namespace

Json mubasis_to_json(const MuBasis& b) {
    Json j;
    j["mu"] = b.mu;
    j["n"] = b.n;
    j["p"] = syzygy_to_json(b.p);
    j["q"] = syzygy_to_json(b.q);
    return j;
}

Json identity_report_to_json(const IdentityReport& r) {
    Json j;
    j["a_ok"] = r.a_ok;
    j["b_ok"] = r.b_ok;
    j["c_ok"] = r.c_ok;
    j["deg_p_ok"] = r.deg_p_ok;
    j["deg_q_ok"] = r.deg_q_ok;
    j["gcd_p_ok"] = r.gcd_p_ok;
    j["all_ok"] = r.all();
    return j;
}

Json verification_report_to_json(const VerificationReport& r) {
    Json j;
    j["gcd_one"] = r.gcd_ok;
    j["degree_preserved"] = r.degree_ok;
    j["class_raised"] = r.class_ok;
    j["specializes_to_origin"] = r.spec_ok;
    j["witness_annihilates"] = r.witness_ok;
    j["mu_eps"] = r.mu_eps;
    j["elimination_paths_agree"] = r.elimination_paths_agree;
    j["theorem_applicable"] = r.theorem_applicable;
    j["all_ok"] = r.all_ok();
    j["notes"] = r.notes;
    return j;
}

Json census_to_json(const CensusReport& r) {
    Json j;
    j["n"] = r.n;
    j["field"] = r.field;
    j["seed"] = r.seed;
    j["samples"] = r.samples;
    j["jobs"] = r.jobs;
    Json hist;
    for (const auto& [k, v] : r.histogram) hist[std::to_string(k)] = v;
    j["histogram"] = std::move(hist);
    j["rejected"] = r.rejected;
    return j;
}

Json approxseq_to_json(const ApproxSeq& seq) {
    Json j;
    j["family"] = Json{{"a", eps_poly_to_json(seq.aEps)},
                       {"b", eps_poly_to_json(seq.bEps)},
                       {"c", eps_poly_to_json(seq.cEps)}};
    j["origin"] = triple_to_json(seq.origin);
    j["target_mu"] = seq.targetMu;
    j["lambda"] = elem_to_json(seq.lambda);
    j["alpha"] = seq.alpha ? elem_to_json(*seq.alpha) : Json(nullptr);
    j["transported"] = seq.transported;
    j["witness"] = eps_syzygy_to_json(seq.witness);
    j["notes"] = seq.notes;
    return j;
}

ApproxSeq approxseq_from_json(const Json& j, const ContextPtr& base_ctx) {
    ApproxSeq seq;
    seq.eps_ctx = FieldContext::ratfunc(base_ctx);
    const Json& fam = j.at("family");
    seq.aEps = eps_poly_from_json(fam.at("a"), seq.eps_ctx);
    seq.bEps = eps_poly_from_json(fam.at("b"), seq.eps_ctx);
    seq.cEps = eps_poly_from_json(fam.at("c"), seq.eps_ctx);
    seq.origin = triple_from_json(j.at("origin"), base_ctx);
    seq.targetMu = j.at("target_mu").get<int>();
    seq.lambda = elem_from_json(j.at("lambda"), base_ctx);
    if (!j.at("alpha").is_null()) seq.alpha = elem_from_json(j.at("alpha"), base_ctx);
    seq.transported = j.at("transported").get<bool>();
    const Json& w = j.at("witness");
    seq.witness = SyzygyVec{eps_poly_from_json(w.at("A"), seq.eps_ctx),
                            eps_poly_from_json(w.at("B"), seq.eps_ctx),
                            eps_poly_from_json(w.at("C"), seq.eps_ctx)};
    if (j.contains("notes"))
        for (const auto& note : j.at("notes")) seq.notes.push_back(note.get<std::string>());
    return seq;
}

}  // namespace mucurve
