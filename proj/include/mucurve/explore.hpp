#pragma once

#include <cstdint>
#include <map>

#include "mucurve/deform.hpp"

namespace mucurve {

struct CensusReport {
    int n = 0;
    std::string field;
    std::uint64_t seed = 0;
    int samples = 0;
    std::map<int, int> histogram;  // class -> count
    long rejected = 0;             // gcd/degree rejections across all draws
    int jobs = 1;
};

struct SampleOptions {
    int budget = 1000;       // rejection budget per sample
    long height_bound = 10;  // coefficient height over Q
};

// Uniform coefficient draw, rejected until gcd(a,b,c) = 1, max degree exactly
// n and c != 0. rejections, when given, accumulates the rejected draws.
ParamTriple sample_triple(int n, const ContextPtr& ctx, Rng& rng, const SampleOptions& options = {},
                          long* rejections = nullptr);

// Builds (a,b,c) as the cross product of random degree-(mu) and degree-(n-mu)
// vectors, rejected until the triple is valid and its class is exactly mu.
std::pair<ParamTriple, MuBasis> sample_with_class(int n, int mu, const ContextPtr& ctx, Rng& rng,
                                                  const SampleOptions& options = {});

// Histogram of the class over `count` samples; deterministic under
// (seed, jobs). Worker w draws its chunk with seed + w.
CensusReport census(int n, int count, const ContextPtr& ctx, std::uint64_t seed, int jobs = 1,
                    const SampleOptions& options = {});

// Class of the family at each specialization point (rank semicontinuity says
// every value is <= targetMu).
std::vector<std::pair<FieldElem, int>> specialization_probe(const ApproxSeq& seq,
                                                            const std::vector<FieldElem>& eps_values);

}  // namespace mucurve
