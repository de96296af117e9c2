#include "mucurve/explore.hpp"

#include <thread>

namespace mucurve {

namespace {

Poly random_poly(const ContextPtr& ctx, int deg_bound, Rng& rng, long height) {
    std::vector<FieldElem> c;
    c.reserve(deg_bound + 1);
    for (int i = 0; i <= deg_bound; ++i) c.push_back(ctx->random_elem(rng, height));
    return Poly(ctx, std::move(c));
}

int effective_budget(const ContextPtr& ctx, int budget) {
    // Small fields reject much more often.
    const mpz_class q = ctx->order();
    if (q != 0 && q <= 3) return budget * 10;
    return budget;
}

}  // namespace

ParamTriple sample_triple(int n, const ContextPtr& ctx, Rng& rng, const SampleOptions& options,
                          long* rejections) {
    if (n < 1) throw InvalidTriple("sample_triple requires n >= 1");
    const int budget = effective_budget(ctx, options.budget);
    for (int tries = 0; tries < budget; ++tries) {
        Poly a = random_poly(ctx, n, rng, options.height_bound);
        Poly b = random_poly(ctx, n, rng, options.height_bound);
        Poly c = random_poly(ctx, n, rng, options.height_bound);
        const bool deg_ok = (!a.is_zero() && a.degree() == n) || (!b.is_zero() && b.degree() == n) ||
                            (!c.is_zero() && c.degree() == n);
        if (deg_ok && !c.is_zero()) {
            const Poly g = gcd3(a, b, c);
            if (!g.is_zero() && g.degree() == 0)
                return ParamTriple::create(std::move(a), std::move(b), std::move(c));
        }
        if (rejections) ++*rejections;
    }
    throw RejectionBudgetExceeded("sample_triple: no valid triple within the budget");
}

std::pair<ParamTriple, MuBasis> sample_with_class(int n, int target_mu, const ContextPtr& ctx, Rng& rng,
                                                  const SampleOptions& options) {
    if (n < 1 || target_mu < 0 || target_mu > n / 2)
        throw InvalidTriple("sample_with_class requires 0 <= mu <= floor(n/2)");
    const int budget = effective_budget(ctx, options.budget);
    for (int tries = 0; tries < budget; ++tries) {
        SyzygyVec p{random_poly(ctx, target_mu, rng, options.height_bound),
                    random_poly(ctx, target_mu, rng, options.height_bound),
                    random_poly(ctx, target_mu, rng, options.height_bound)};
        SyzygyVec q{random_poly(ctx, n - target_mu, rng, options.height_bound),
                    random_poly(ctx, n - target_mu, rng, options.height_bound),
                    random_poly(ctx, n - target_mu, rng, options.height_bound)};
        const auto cr = cross(p, q);
        if (cr[0].is_zero() && cr[1].is_zero() && cr[2].is_zero()) continue;
        if (cr[2].is_zero()) continue;
        const int deg = std::max(cr[0].is_zero() ? -1 : cr[0].degree(),
                                 std::max(cr[1].is_zero() ? -1 : cr[1].degree(), cr[2].degree()));
        if (deg != n) continue;
        const Poly g = gcd3(cr[0], cr[1], cr[2]);
        if (g.is_zero() || g.degree() != 0) continue;
        ParamTriple t = ParamTriple::create(cr[0], cr[1], cr[2]);
        // The cross product bounds the class above by mu; it can still drop.
        if (mu(t) != target_mu) continue;
        return {t, mu_basis(t)};
    }
    throw RejectionBudgetExceeded("sample_with_class: no class-" + std::to_string(target_mu) +
                                  " triple within the budget");
}

CensusReport census(int n, int count, const ContextPtr& ctx, std::uint64_t seed, int jobs,
                    const SampleOptions& options) {
    if (count < 1) throw InvalidTriple("census requires count >= 1");
    if (jobs < 1) jobs = 1;
    if (jobs > count) jobs = count;

    std::vector<std::map<int, int>> hists(jobs);
    std::vector<long> rejects(jobs, 0);
    auto worker = [&](int w) {
        Rng rng(seed + static_cast<std::uint64_t>(w));
        const int chunk = count / jobs + (w < count % jobs ? 1 : 0);
        for (int i = 0; i < chunk; ++i) {
            const ParamTriple t = sample_triple(n, ctx, rng, options, &rejects[w]);
            ++hists[w][mu(t)];
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
        for (auto& th : threads) th.join();
    }

    CensusReport report;
    report.n = n;
    report.field = ctx->describe();
    report.seed = seed;
    report.samples = count;
    report.jobs = jobs;
    for (int w = 0; w < jobs; ++w) {
        report.rejected += rejects[w];
        for (const auto& [k, v] : hists[w]) report.histogram[k] += v;
    }
    return report;
}

std::vector<std::pair<FieldElem, int>> specialization_probe(const ApproxSeq& seq,
                                                            const std::vector<FieldElem>& eps_values) {
    std::vector<std::pair<FieldElem, int>> out;
    out.reserve(eps_values.size());
    for (const FieldElem& e0 : eps_values) {
        const Poly a = specialize_eps(seq.aEps, e0);
        const Poly b = specialize_eps(seq.bEps, e0);
        const Poly c = specialize_eps(seq.cEps, e0);
        out.emplace_back(e0, mu(ParamTriple::unchecked(a, b, c)));
    }
    return out;
}

}  // namespace mucurve
