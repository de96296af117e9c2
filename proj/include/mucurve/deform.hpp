#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mucurve/roots.hpp"
#include "mucurve/syzygy.hpp"

namespace mucurve {

// The shear (a, b, c) -> (a + lambda*b, b, c); preserves n, gcd and the class.
ParamTriple shear(const ParamTriple& t, const FieldElem& lambda);

// Transforms a mu-basis along the shear: p -> (p_x, p_y - lambda*p_x, p_w),
// likewise for q; the result satisfies the cross-product identity for the
// sheared triple.
MuBasis shear_mubasis(const MuBasis& basis, const FieldElem& lambda);

// An admissible (lambda, alpha): alpha is a root of a + lambda*b at which the
// sheared basis coordinates p_y and p_w do not both vanish.
struct AdmissiblePick {
    FieldElem lambda;       // over the triple's field
    RootHandle alpha;       // possibly in an extension context
    ParamTriple sheared;    // (a + lambda*b, b, c)
    MuBasis shearedBasis;   // basis of sheared, by the linear transform
};

struct AdmissibleOptions {
    int budget = 200;
    // When nonempty, used verbatim as the alpha-candidate list of the
    // alpha-first path (pins reproductions of hand calculations).
    std::vector<FieldElem> candidates;
};

// Throws InternalInconsistency if the pick violates its invariants.
void validate_pick(const AdmissiblePick& pick);

AdmissiblePick find_admissible(const ParamTriple& t, const MuBasis& basis, const RootPolicy& policy,
                               const AdmissibleOptions& options = {});

// The family (a_eps, b_eps, c_eps) over K(eps), coefficients in K[eps],
// specializing to origin at eps = 0.
struct ApproxSeq {
    ContextPtr eps_ctx;  // ratfunc over the witness field
    Poly aEps, bEps, cEps;
    ParamTriple origin;
    int targetMu = 0;
    SyzygyVec witness;   // degree-(targetMu) syzygy certifying mu_eps <= targetMu
    FieldElem lambda;    // shear still pending transport (zero once transported)
    std::optional<FieldElem> alpha;
    bool transported = false;
    std::vector<std::string> notes;
};

ApproxSeq approx_sequence(const AdmissiblePick& pick);

// Builds the family without the admissibility filter; useful for exhibiting
// the failure mode at a common root of p_y and p_w, where the class does not
// rise. alpha must still be a root of a + lambda*b.
ApproxSeq approx_sequence_unchecked(const ParamTriple& t, const MuBasis& basis,
                                    const FieldElem& lambda, const RootHandle& alpha);

struct VerificationReport {
    bool gcd_ok = false;       // gcd over K(eps)[t] is 1
    bool degree_ok = false;    // max t-degree equals n
    bool class_ok = false;     // mu over K(eps) equals targetMu
    bool spec_ok = false;      // eps = 0 specialization equals origin
    bool witness_ok = false;   // recorded witness syzygy annihilates the family
    int mu_eps = -1;           // class over K(eps); generic and Bareiss paths must agree
    bool elimination_paths_agree = false;
    bool theorem_applicable = true;  // targetMu <= floor(n/2)
    std::vector<std::string> notes;

    // The four main bullets plus the witness; the class bullet is waived when
    // the deformation hypothesis mu < floor(n/2) does not hold.
    bool all_ok() const {
        return gcd_ok && degree_ok && spec_ok && witness_ok && elimination_paths_agree &&
               (class_ok || !theorem_applicable);
    }
};

VerificationReport verify_approx(const ApproxSeq& seq);

// seq approximates (a + lambda*b, b, c); returns the family for (a, b, c).
ApproxSeq transport(const ApproxSeq& seq, const FieldElem& lambda);

// End-to-end pipeline: mu_basis, admissible search, family construction,
// transport back through any shear, verification. Throws MuMaximal when
// mu = floor(n/2), NoAdmissiblePick when the search budget is exhausted.
std::pair<ApproxSeq, VerificationReport> construct(const ParamTriple& t, const RootPolicy& policy,
                                                   const AdmissibleOptions& options = {});

}  // namespace mucurve
