#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mucurve/explore.hpp"
#include "mucurve/parse.hpp"
#include "mucurve/serialize.hpp"

using namespace mucurve;

namespace {

struct Options {
    std::string field = "q";
    bool json = false;
    std::string file;
    std::uint64_t seed = 0;
    int budget = 200;
    bool allow_extension = false;
    int jobs = 1;
    std::string candidates;
    std::string lambda;
    std::string eps_values;
    int n = 0;
    int count = 0;
    std::vector<std::string> polys;
};

std::string field_spec_string(const ContextPtr& ctx) {
    if (ctx->is_rationals()) return "q";
    if (ctx->is_prime()) return "fp:" + std::to_string(ctx->prime_modulus());
    if (ctx->is_extension() && ctx->base()->is_prime())
        return "fp:" + std::to_string(ctx->base()->prime_modulus()) + "/" +
               print_poly(Poly(ctx->base(), ctx->modulus()), "x");
    return ctx->describe();
}

Json load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--file", "cannot open '" + path + "'");
    Json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw SyntaxError(0, std::string("invalid JSON document: ") + e.what());
    }
    return doc;
}

struct TripleInput {
    ContextPtr ctx;
    ParamTriple triple;
};

TripleInput read_triple(const Options& opt) {
    if (!opt.file.empty()) {
        const Json doc = load_document(opt.file);
        const ContextPtr ctx = parse_field_spec(doc.value("field", opt.field));
        const Json& in = doc.contains("inputs") ? doc.at("inputs") : doc;
        return {ctx, triple_from_json(in, ctx)};
    }
    if (opt.polys.size() < 3)
        throw CLI::ValidationError("polynomials", "three polynomials a b c are required (or --file)");
    const ContextPtr ctx = parse_field_spec(opt.field);
    return {ctx, ParamTriple::create(parse_poly(opt.polys[0], ctx), parse_poly(opt.polys[1], ctx),
                                     parse_poly(opt.polys[2], ctx))};
}

std::vector<FieldElem> parse_scalar_list(const std::string& text, const ContextPtr& ctx) {
    std::vector<FieldElem> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        out.push_back(parse_scalar(item, ctx));
    }
    return out;
}

// t-polynomials over the base field, one per eps power.
std::vector<Poly> eps_parts(const Poly& f) {
    const ContextPtr& base = f.context()->base();
    std::size_t eps_len = 1;
    for (const auto& c : f.coeffs()) eps_len = std::max(eps_len, c.ratfunc().num.size());
    std::vector<Poly> parts;
    for (std::size_t j = 0; j < eps_len; ++j) {
        std::vector<FieldElem> tc;
        for (const auto& c : f.coeffs()) {
            const auto& num = c.ratfunc().num;
            tc.push_back(j < num.size() ? num[j] : base->zero());
        }
        parts.emplace_back(base, std::move(tc));
    }
    return parts;
}

std::string human_family(const Poly& f) {
    const auto parts = eps_parts(f);
    std::ostringstream os;
    os << print_poly(parts[0]);
    for (std::size_t j = 1; j < parts.size(); ++j) {
        if (parts[j].is_zero()) continue;
        os << " + eps";
        if (j > 1) os << "^" << j;
        os << "*(" << print_poly(parts[j]) << ")";
    }
    return os.str();
}

std::string human_syzygy(const SyzygyVec& s) {
    return "(" + print_poly(s.A) + ", " + print_poly(s.B) + ", " + print_poly(s.C) + ")";
}

std::string human_eps_syzygy(const SyzygyVec& s) {
    return "(" + human_family(s.A) + ", " + human_family(s.B) + ", " + human_family(s.C) + ")";
}

Json inputs_json(const ParamTriple& t) {
    Json j;
    j["a"] = poly_to_json(t.a);
    j["b"] = poly_to_json(t.b);
    j["c"] = poly_to_json(t.c);
    j["n"] = t.n;
    return j;
}

struct Emitter {
    bool json;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    // Structured mode stays byte-identical for identical inputs, so timing is
    // reported in human mode only.
    void finish(const Json& doc, const std::string& human) const {
        if (json) {
            std::cout << doc.dump(2) << "\n";
        } else {
            std::cout << human;
            const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - start)
                                .count();
            std::cout << "elapsed: " << ms << " ms\n";
        }
    }
};

void cmd_mu(const Options& opt) {
    Emitter em{opt.json};
    const auto [ctx, t] = read_triple(opt);
    const int m = mu(t);
    const auto space = syzygy_space(t, m);
    Json doc;
    doc["command"] = "mu";
    doc["field"] = field_spec_string(ctx);
    doc["inputs"] = inputs_json(t);
    doc["mu"] = m;
    Json syz = Json::array();
    for (const auto& s : space)
        syz.push_back(Json{{"A", poly_to_json(s.A)}, {"B", poly_to_json(s.B)}, {"C", poly_to_json(s.C)}});
    doc["minimal_syzygies"] = std::move(syz);
    std::ostringstream os;
    os << "mu = " << m << "\n";
    for (const auto& s : space) os << "syzygy: " << human_syzygy(s) << "\n";
    em.finish(doc, os.str());
}

void cmd_mubasis(const Options& opt) {
    Emitter em{opt.json};
    const auto [ctx, t] = read_triple(opt);
    const MuBasis basis = mu_basis(t);
    const IdentityReport rep = verify_identity(basis, t);
    Json doc;
    doc["command"] = "mubasis";
    doc["field"] = field_spec_string(ctx);
    doc["inputs"] = inputs_json(t);
    doc["basis"] = mubasis_to_json(basis);
    doc["identity"] = identity_report_to_json(rep);
    std::ostringstream os;
    os << "mu = " << basis.mu << ", n = " << basis.n << "\n";
    os << "p = " << human_syzygy(basis.p) << "\n";
    os << "q = " << human_syzygy(basis.q) << "\n";
    os << "identity: " << (rep.all() ? "ok" : "FAILED") << "\n";
    em.finish(doc, os.str());
}

void cmd_decompose(const Options& opt) {
    Emitter em{opt.json};
    if (opt.polys.size() < 6)
        throw CLI::ValidationError("polynomials", "decompose needs a b c A B C");
    const ContextPtr ctx = parse_field_spec(opt.field);
    const ParamTriple t = ParamTriple::create(parse_poly(opt.polys[0], ctx),
                                              parse_poly(opt.polys[1], ctx),
                                              parse_poly(opt.polys[2], ctx));
    const SyzygyVec s{parse_poly(opt.polys[3], ctx), parse_poly(opt.polys[4], ctx),
                      parse_poly(opt.polys[5], ctx)};
    const MuBasis basis = mu_basis(t);
    const auto [h1, h2] = decompose(basis, s);
    Json doc;
    doc["command"] = "decompose";
    doc["field"] = field_spec_string(ctx);
    doc["inputs"] = inputs_json(t);
    doc["syzygy"] = Json{{"A", poly_to_json(s.A)}, {"B", poly_to_json(s.B)}, {"C", poly_to_json(s.C)}};
    doc["basis"] = mubasis_to_json(basis);
    doc["h1"] = poly_to_json(h1);
    doc["h2"] = poly_to_json(h2);
    std::ostringstream os;
    os << "s = h1*p + h2*q with\n";
    os << "h1 = " << print_poly(h1) << "\n";
    os << "h2 = " << print_poly(h2) << "\n";
    em.finish(doc, os.str());
}

void cmd_shear(const Options& opt) {
    Emitter em{opt.json};
    const auto [ctx, t] = read_triple(opt);
    if (opt.lambda.empty()) throw CLI::ValidationError("--lambda", "shear requires --lambda");
    const FieldElem lam = parse_scalar(opt.lambda, ctx);
    const ParamTriple sh = shear(t, lam);
    const MuBasis basis = shear_mubasis(mu_basis(t), lam);
    Json doc;
    doc["command"] = "shear";
    doc["field"] = field_spec_string(ctx);
    doc["inputs"] = inputs_json(t);
    doc["lambda"] = elem_to_json(lam);
    doc["sheared"] = inputs_json(sh);
    doc["basis"] = mubasis_to_json(basis);
    doc["identity"] = identity_report_to_json(verify_identity(basis, sh));
    std::ostringstream os;
    os << "a + lambda*b = " << print_poly(sh.a) << "\n";
    os << "p = " << human_syzygy(basis.p) << "\n";
    os << "q = " << human_syzygy(basis.q) << "\n";
    em.finish(doc, os.str());
}

Json approx_document(const ContextPtr& ctx, const ParamTriple& t, const ApproxSeq& seq,
                     const VerificationReport& rep) {
    Json doc;
    doc["command"] = "approx";
    doc["field"] = field_spec_string(ctx);
    doc["inputs"] = inputs_json(t);
    doc["approx"] = approxseq_to_json(seq);
    doc["report"] = verification_report_to_json(rep);
    return doc;
}

std::string approx_human(const ApproxSeq& seq, const VerificationReport& rep) {
    std::ostringstream os;
    os << "target class: " << seq.targetMu << "\n";
    if (seq.alpha) os << "alpha = " << seq.alpha->str() << "\n";
    os << "lambda = " << seq.lambda.str() << "\n";
    os << "a_eps = " << human_family(seq.aEps) << "\n";
    os << "b_eps = " << human_family(seq.bEps) << "\n";
    os << "c_eps = " << human_family(seq.cEps) << "\n";
    os << "witness = " << human_eps_syzygy(seq.witness) << "\n";
    os << "report: gcd=" << rep.gcd_ok << " degree=" << rep.degree_ok << " class=" << rep.class_ok
       << " specialization=" << rep.spec_ok << " witness=" << rep.witness_ok
       << " paths_agree=" << rep.elimination_paths_agree << " mu_eps=" << rep.mu_eps << "\n";
    os << "verdict: " << (rep.all_ok() ? "ok" : "FAILED") << "\n";
    for (const auto& note : rep.notes) os << "note: " << note << "\n";
    return os.str();
}

void cmd_approx(const Options& opt) {
    Emitter em{opt.json};
    const auto [ctx, t] = read_triple(opt);
    AdmissibleOptions aopt;
    aopt.budget = opt.budget;
    if (!opt.candidates.empty()) aopt.candidates = parse_scalar_list(opt.candidates, ctx);
    auto [seq, rep] = construct(t, RootPolicy{opt.allow_extension}, aopt);
    em.finish(approx_document(ctx, t, seq, rep), approx_human(seq, rep));
}

ApproxSeq read_approx(const Options& opt, ContextPtr& base_out) {
    if (opt.file.empty()) throw CLI::ValidationError("--file", "this command requires --file");
    const Json doc = load_document(opt.file);
    const std::string spec = doc.value("field", opt.field);
    ContextPtr ctx = parse_field_spec(spec);
    base_out = ctx;
    const Json& body = doc.contains("approx") ? doc.at("approx") : doc;
    return approxseq_from_json(body, ctx);
}

void cmd_verify(const Options& opt) {
    Emitter em{opt.json};
    ContextPtr ctx;
    const ApproxSeq seq = read_approx(opt, ctx);
    const VerificationReport rep = verify_approx(seq);
    Json doc;
    doc["command"] = "verify";
    doc["field"] = field_spec_string(ctx);
    doc["report"] = verification_report_to_json(rep);
    em.finish(doc, approx_human(seq, rep));
}

void cmd_transport(const Options& opt) {
    Emitter em{opt.json};
    ContextPtr ctx;
    ApproxSeq seq = read_approx(opt, ctx);
    if (opt.lambda.empty()) throw CLI::ValidationError("--lambda", "transport requires --lambda");
    const FieldElem lam = parse_scalar(opt.lambda, ctx);
    seq = transport(seq, lam);
    const VerificationReport rep = verify_approx(seq);
    Json doc;
    doc["command"] = "transport";
    doc["field"] = field_spec_string(ctx);
    doc["approx"] = approxseq_to_json(seq);
    doc["report"] = verification_report_to_json(rep);
    em.finish(doc, approx_human(seq, rep));
}

void cmd_sample(const Options& opt) {
    Emitter em{opt.json};
    if (opt.n < 1) throw CLI::ValidationError("--n", "sample requires --n >= 1");
    const ContextPtr ctx = parse_field_spec(opt.field);
    Rng rng(opt.seed);
    const ParamTriple t = sample_triple(opt.n, ctx, rng);
    Json doc;
    doc["command"] = "sample";
    doc["field"] = field_spec_string(ctx);
    doc["seed"] = opt.seed;
    doc["inputs"] = inputs_json(t);
    doc["mu"] = mu(t);
    std::ostringstream os;
    os << "a = " << print_poly(t.a) << "\n";
    os << "b = " << print_poly(t.b) << "\n";
    os << "c = " << print_poly(t.c) << "\n";
    os << "mu = " << mu(t) << "\n";
    em.finish(doc, os.str());
}

void cmd_census(const Options& opt) {
    Emitter em{opt.json};
    if (opt.n < 1 || opt.count < 1)
        throw CLI::ValidationError("--n", "census requires --n >= 1 and --count >= 1");
    const ContextPtr ctx = parse_field_spec(opt.field);
    const CensusReport rep = census(opt.n, opt.count, ctx, opt.seed, opt.jobs);
    Json doc;
    doc["command"] = "census";
    doc["census"] = census_to_json(rep);
    std::ostringstream os;
    os << "n = " << rep.n << ", field = " << rep.field << ", samples = " << rep.samples
       << ", seed = " << rep.seed << "\n";
    for (const auto& [k, v] : rep.histogram)
        os << "mu = " << k << ": " << v << " (" << (100.0 * v / rep.samples) << "%)\n";
    os << "rejected draws: " << rep.rejected << "\n";
    em.finish(doc, os.str());
}

void cmd_probe(const Options& opt) {
    Emitter em{opt.json};
    ContextPtr ctx;
    const ApproxSeq seq = read_approx(opt, ctx);
    const ContextPtr& base = seq.eps_ctx->base();
    std::vector<FieldElem> pts;
    pts.push_back(base->zero());
    if (!opt.eps_values.empty()) {
        for (auto& v : parse_scalar_list(opt.eps_values, base)) pts.push_back(std::move(v));
    } else {
        Rng rng(opt.seed);
        const int count = opt.count > 0 ? opt.count : 10;
        for (int i = 0; i < count; ++i) pts.push_back(base->random_elem(rng));
    }
    const auto probe = specialization_probe(seq, pts);
    Json doc;
    doc["command"] = "probe";
    doc["field"] = field_spec_string(ctx);
    doc["target_mu"] = seq.targetMu;
    Json arr = Json::array();
    for (const auto& [e0, m] : probe) arr.push_back(Json{{"eps", elem_to_json(e0)}, {"mu", m}});
    doc["probe"] = std::move(arr);
    std::ostringstream os;
    for (const auto& [e0, m] : probe) os << "eps = " << e0.str() << ": mu = " << m << "\n";
    em.finish(doc, os.str());
}

bool is_usage_code(const std::string& code) {
    return code == "syntax_error" || code == "wrong_variable" || code == "bad_field_spec" ||
           code == "invalid_context";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact class and mu-basis computations for rational planar-curve "
                 "parametrizations, with constructive class-raising deformations"};
    app.require_subcommand(1);

    Options opt;
    std::function<void(const Options&)> action;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--field", opt.field, "field spec: q | fp:<prime> | fp:<prime>/<monic poly in x>");
        sub->add_flag("--json", opt.json, "structured output");
        sub->add_option("--seed", opt.seed, "RNG seed");
        sub->add_option("--file", opt.file, "read inputs from a structured document");
    };

    auto make = [&](const std::string& name, const std::string& desc,
                    void (*fn)(const Options&)) {
        CLI::App* sub = app.add_subcommand(name, desc);
        add_common(sub);
        sub->callback([&, fn] { action = fn; });
        return sub;
    };

    // Polynomial arguments may begin with '-', so the poly-taking subcommands
    // collect them from the unmatched remainder instead of positional options.
    make("mu", "class of a parametrization", cmd_mu)->allow_extras();
    make("mubasis", "mu-basis (p, q)", cmd_mubasis)->allow_extras();
    make("decompose", "write a syzygy as h1*p + h2*q", cmd_decompose)->allow_extras();
    CLI::App* sh = make("shear", "(a, b, c) -> (a + lambda*b, b, c)", cmd_shear);
    sh->allow_extras();
    sh->add_option("--lambda", opt.lambda, "shear scalar");
    CLI::App* ap = make("approx", "construct a class-raising eps-family", cmd_approx);
    ap->allow_extras();
    ap->add_option("--candidates", opt.candidates, "comma-separated alpha candidates");
    ap->add_option("--budget", opt.budget, "candidate budget");
    ap->add_flag("--allow-extension", opt.allow_extension, "allow extension-field roots");
    make("verify", "re-verify an emitted family document", cmd_verify);
    CLI::App* tr = make("transport", "shear an eps-family back", cmd_transport);
    tr->add_option("--lambda", opt.lambda, "shear scalar");
    CLI::App* sa = make("sample", "draw a random parametrization", cmd_sample);
    sa->add_option("--n", opt.n, "degree");
    CLI::App* ce = make("census", "class histogram over random samples", cmd_census);
    ce->add_option("--n", opt.n, "degree");
    ce->add_option("--count", opt.count, "number of samples");
    ce->add_option("--jobs", opt.jobs, "worker count");
    CLI::App* pr = make("probe", "class of an eps-family at specialization points", cmd_probe);
    pr->add_option("--eps", opt.eps_values, "comma-separated eps values");
    pr->add_option("--count", opt.count, "number of seeded eps values");

    try {
        app.parse(argc, argv);
        for (CLI::App* sub : app.get_subcommands())
            for (const std::string& extra : sub->remaining()) opt.polys.push_back(extra);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        return is_usage_code(e.code()) ? 2 : 1;
    }

    try {
        action(opt);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        return is_usage_code(e.code()) ? 2 : 1;
    }
    return 0;
}
