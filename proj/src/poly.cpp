#include "mucurve/poly.hpp"

#include <cassert>

namespace mucurve {

Poly::Poly(ContextPtr ctx, std::vector<FieldElem> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    if (!ctx_) throw InvalidContext("Poly requires a context");
    for (const auto& c : c_)
        if (!c.context()->same(*ctx_)) throw InvalidContext("Poly coefficient in a different context");
    vecpoly::trim(c_);
}

Poly Poly::constant(const FieldElem& c) {
    std::vector<FieldElem> v;
    if (!c.is_zero()) v.push_back(c);
    return Poly(c.context(), std::move(v));
}

Poly Poly::from_ints(const ContextPtr& ctx, std::initializer_list<long> ascending) {
    return from_ints(ctx, std::vector<long>(ascending));
}

Poly Poly::from_ints(const ContextPtr& ctx, const std::vector<long>& ascending) {
    std::vector<FieldElem> v;
    v.reserve(ascending.size());
    for (long x : ascending) v.push_back(ctx->from_int(x));
    return Poly(ctx, std::move(v));
}

Poly Poly::monomial(const ContextPtr& ctx, std::size_t k, const FieldElem& c) {
    std::vector<FieldElem> v(k + 1, ctx->zero());
    v[k] = c;
    return Poly(ctx, std::move(v));
}

int Poly::degree() const {
    if (c_.empty()) throw InternalInconsistency("degree() of the zero polynomial");
    return static_cast<int>(c_.size()) - 1;
}

FieldElem Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : ctx_->zero(); }

const FieldElem& Poly::leading() const {
    if (c_.empty()) throw InternalInconsistency("leading() of the zero polynomial");
    return c_.back();
}

FieldElem Poly::eval(const FieldElem& x) const {
    if (c_.empty()) return ctx_->zero();
    const FieldElem xx = x.context()->same(*ctx_) ? x : lift_into(x, ctx_);
    return vecpoly::eval(c_, xx);
}

Poly Poly::operator-() const { return Poly(ctx_, vecpoly::neg(c_)); }

Poly operator+(const Poly& a, const Poly& b) { return Poly(a.ctx_, vecpoly::add(a.c_, b.c_)); }
Poly operator-(const Poly& a, const Poly& b) { return Poly(a.ctx_, vecpoly::sub(a.c_, b.c_)); }
Poly operator*(const Poly& a, const Poly& b) { return Poly(a.ctx_, vecpoly::mul(a.c_, b.c_)); }
Poly operator*(const FieldElem& c, const Poly& a) { return Poly(a.ctx_, vecpoly::scale(a.c_, c)); }

bool operator==(const Poly& a, const Poly& b) {
    return a.ctx_->same(*b.ctx_) && vecpoly::equal(a.c_, b.c_);
}

Poly Poly::shifted(std::size_t k) const { return Poly(ctx_, vecpoly::shift(c_, k)); }
Poly Poly::monic() const { return Poly(ctx_, vecpoly::monic(c_)); }
Poly Poly::derivative() const { return Poly(ctx_, vecpoly::derivative(c_)); }

Poly Poly::map_context(const ContextPtr& target) const {
    std::vector<FieldElem> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(lift_into(c, target));
    return Poly(target, std::move(v));
}

std::string Poly::str(const std::string& var) const { return vecpoly::str(c_, var); }

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
    auto [q, r] = vecpoly::divmod(f.coeffs(), g.coeffs());
    return {Poly(f.context(), std::move(q)), Poly(f.context(), std::move(r))};
}

Poly operator/(const Poly& f, const Poly& g) { return divmod(f, g).first; }

bool divides(const Poly& g, const Poly& f) {
    if (g.is_zero()) return f.is_zero();
    return divmod(f, g).second.is_zero();
}

Poly gcd(const Poly& f, const Poly& g) { return Poly(f.context(), vecpoly::gcd(f.coeffs(), g.coeffs())); }

Poly gcd3(const Poly& a, const Poly& b, const Poly& c) { return gcd(a, gcd(b, c)); }

namespace {

// p-th root of f when f = g(t^p) in characteristic p (Frobenius preimage of
// each coefficient; over F_{p^k} that preimage is c^(q/p)).
Poly pth_root(const Poly& f) {
    const std::uint64_t p = f.context()->characteristic();
    const mpz_class q = f.context()->order();
    if (q == 0) throw InternalInconsistency("pth_root outside a finite field");
    mpz_class e = q / static_cast<unsigned long>(p);  // c -> c^(q/p) inverts x -> x^p
    std::vector<FieldElem> out;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) {
        FieldElem c = f.coeffs()[i];
        // square-and-multiply with mpz exponent
        FieldElem acc = f.context()->one();
        FieldElem base = c;
        mpz_class ee = e;
        while (ee > 0) {
            if (mpz_odd_p(ee.get_mpz_t())) acc = acc * base;
            base = base * base;
            ee >>= 1;
        }
        out.push_back(acc);
    }
    return Poly(f.context(), std::move(out));
}

}  // namespace

Poly squarefree_part(const Poly& f) {
    if (f.is_zero()) throw DivisionByZeroPoly();
    if (f.degree() == 0) return f.monic();
    const Poly df = f.derivative();
    if (df.is_zero()) {
        // char p and f = g(t^p): recurse on the p-th root.
        return squarefree_part(pth_root(f));
    }
    const Poly g = gcd(f, df);
    Poly s = (f / g).monic();
    if (f.context()->characteristic() == 0 || g.is_constant()) return s;
    // Factors whose multiplicity is divisible by p are invisible in s.
    // Strip every s-factor from f; what survives is a p-th power.
    Poly w = f;
    for (Poly h = gcd(w, s); !h.is_constant(); h = gcd(w, s)) w = w / h;
    if (w.is_constant()) return s;
    return (s * squarefree_part(pth_root(w.monic()))).monic();
}

FieldElem lift_into(const FieldElem& x, const ContextPtr& target) {
    if (x.context()->same(*target)) return x;
    if (target->is_extension() || target->is_ratfunc())
        return target->embed(lift_into(x, target->base()));
    throw InvalidContext("element cannot be lifted into the target context");
}

FieldElem ratfunc_elem(const ContextPtr& rf, const Poly& num, const Poly& den) {
    return ratfunc_make(rf, num.coeffs(), den.coeffs());
}

Poly specialize_eps(const Poly& f, const FieldElem& eps0) {
    if (!f.context()->is_ratfunc()) throw InvalidContext("specialize_eps requires a ratfunc Poly");
    std::vector<FieldElem> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) out.push_back(specialize_eps(c, eps0));
    return Poly(f.context()->base(), std::move(out));
}

}  // namespace mucurve
