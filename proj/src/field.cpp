#include "mucurve/field.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace mucurve {

// ---------------------------------------------------------------------------
// primality

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool miller_rabin(std::uint64_t n) {
    // Deterministic for n < 2^64 with this witness set (Sinclair's bases).
    static const std::uint64_t witnesses[] = {2, 325, 9375, 28178, 450775, 9780504, 1795265022};
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : witnesses) {
        a %= n;
        if (a == 0) continue;
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace

bool is_probable_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n < (1ULL << 31)) {
        // Deterministic trial division for small candidates.
        if (n % 2 == 0) return n == 2;
        for (std::uint64_t d = 3; d * d <= n; d += 2)
            if (n % d == 0) return false;
        return true;
    }
    if (n % 2 == 0) return false;
    return miller_rabin(n);
}

// ---------------------------------------------------------------------------
// vecpoly

namespace vecpoly {

void trim(Vec& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

bool is_zero(const Vec& v) { return v.empty(); }

int deg(const Vec& v) { return static_cast<int>(v.size()) - 1; }

Vec add(const Vec& a, const Vec& b) {
    const Vec& lo = a.size() <= b.size() ? a : b;
    const Vec& hi = a.size() <= b.size() ? b : a;
    Vec r = hi;
    for (std::size_t i = 0; i < lo.size(); ++i) r[i] = r[i] + lo[i];
    trim(r);
    return r;
}

Vec neg(const Vec& a) {
    Vec r = a;
    for (auto& c : r) c = -c;
    return r;
}

Vec sub(const Vec& a, const Vec& b) { return add(a, neg(b)); }

Vec mul(const Vec& a, const Vec& b) {
    if (a.empty() || b.empty()) return {};
    Vec r(a.size() + b.size() - 1, a.front().context()->zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    trim(r);
    return r;
}

Vec scale(const Vec& a, const FieldElem& c) {
    if (c.is_zero()) return {};
    Vec r = a;
    for (auto& x : r) x = x * c;
    trim(r);
    return r;
}

Vec shift(const Vec& a, std::size_t k) {
    if (a.empty() || k == 0) return a;
    Vec r(a.size() + k, a.front().context()->zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
    return r;
}

std::pair<Vec, Vec> divmod(const Vec& f, const Vec& g) {
    if (g.empty()) throw DivisionByZeroPoly();
    if (f.size() < g.size()) return {{}, f};
    const FieldElem lc_inv = g.back().inverse();
    Vec rem = f;
    Vec quo(f.size() - g.size() + 1, g.back().context()->zero());
    for (int i = static_cast<int>(f.size()) - static_cast<int>(g.size()); i >= 0; --i) {
        const FieldElem q = rem[i + g.size() - 1] * lc_inv;
        if (q.is_zero()) continue;
        quo[i] = q;
        for (std::size_t j = 0; j < g.size(); ++j) rem[i + j] = rem[i + j] - q * g[j];
    }
    trim(quo);
    trim(rem);
    return {quo, rem};
}

Vec mod(const Vec& f, const Vec& g) { return divmod(f, g).second; }

Vec monic(const Vec& f) {
    if (f.empty()) return f;
    if (f.back().is_one()) return f;
    return scale(f, f.back().inverse());
}

Vec gcd(const Vec& f, const Vec& g) {
    Vec a = f, b = g;
    trim(a);
    trim(b);
    while (!b.empty()) {
        Vec r = mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

std::pair<Vec, Vec> half_ext_gcd(const Vec& f, const Vec& m) {
    // r0 = u0*f (mod m) is the loop invariant.
    Vec r0 = f, r1 = m;
    trim(r0);
    trim(r1);
    Vec u0, u1;
    if (!m.empty())
        u0 = {m.front().context()->one()};
    else if (!f.empty())
        u0 = {f.front().context()->one()};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        Vec u2 = sub(u0, mul(q, u1));
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r0.empty()) return {r0, u0};
    const FieldElem lcinv = r0.back().inverse();
    Vec g = scale(r0, lcinv);
    Vec u = scale(u0, lcinv);
    if (!m.empty() && u.size() >= m.size()) u = mod(u, m);
    return {g, u};
}

FieldElem eval(const Vec& f, const FieldElem& x) {
    FieldElem acc = x.context()->zero();
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
    return acc;
}

Vec derivative(const Vec& f) {
    if (f.size() <= 1) return {};
    Vec r;
    r.reserve(f.size() - 1);
    const ContextPtr& ctx = f.front().context();
    for (std::size_t i = 1; i < f.size(); ++i) r.push_back(ctx->from_int(static_cast<long>(i)) * f[i]);
    trim(r);
    return r;
}

bool equal(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

std::string str(const Vec& f, const std::string& var) {
    if (f.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = f.size(); i-- > 0;) {
        if (f[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << f[i].str();
            continue;
        }
        if (!f[i].is_one()) os << "(" << f[i].str() << ")*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

}  // namespace vecpoly

// ---------------------------------------------------------------------------
// FieldContext

ZeroDivisor::ZeroDivisor(std::vector<FieldElem> f)
    : Error("zero_divisor", "zero divisor in extension context; modulus factor found"),
      factor(std::move(f)) {}

ContextPtr FieldContext::rationals() {
    static const ContextPtr instance = [] {
        auto c = std::shared_ptr<FieldContext>(new FieldContext());
        c->kind_ = Kind::Rationals;
        return c;
    }();
    return instance;
}

ContextPtr FieldContext::prime(std::uint64_t p) {
    if (!is_probable_prime(p)) throw InvalidContext("prime field modulus " + std::to_string(p) + " is not prime");
    auto c = std::shared_ptr<FieldContext>(new FieldContext());
    c->kind_ = Kind::Prime;
    c->p_ = p;
    return c;
}

ContextPtr FieldContext::extension(ContextPtr base, std::vector<FieldElem> modulus) {
    if (!base) throw InvalidContext("extension requires a base context");
    vecpoly::trim(modulus);
    if (vecpoly::deg(modulus) < 2) throw InvalidContext("extension modulus must have degree >= 2");
    if (!modulus.back().is_one()) throw InvalidContext("extension modulus must be monic");
    for (const auto& c : modulus)
        if (!c.context()->same(*base)) throw InvalidContext("extension modulus coefficients must lie in the base");
    auto c = std::shared_ptr<FieldContext>(new FieldContext());
    c->kind_ = Kind::Extension;
    c->base_ = std::move(base);
    c->modulus_ = std::move(modulus);
    c->variable_ = "x";
    return c;
}

ContextPtr FieldContext::ratfunc(ContextPtr base, std::string variable) {
    if (!base) throw InvalidContext("ratfunc requires a base context");
    if (base->is_ratfunc()) throw InvalidContext("nested rational-function contexts are rejected");
    auto c = std::shared_ptr<FieldContext>(new FieldContext());
    c->kind_ = Kind::RatFunc;
    c->base_ = std::move(base);
    c->variable_ = std::move(variable);
    return c;
}

std::uint64_t FieldContext::characteristic() const {
    switch (kind_) {
        case Kind::Rationals: return 0;
        case Kind::Prime: return p_;
        default: return base_->characteristic();
    }
}

mpz_class FieldContext::order() const {
    switch (kind_) {
        case Kind::Rationals:
        case Kind::RatFunc: return 0;
        case Kind::Prime: {
            mpz_class z;
            mpz_import(z.get_mpz_t(), 1, 1, sizeof(p_), 0, 0, &p_);
            return z;
        }
        case Kind::Extension: {
            mpz_class b = base_->order();
            if (b == 0) return 0;
            mpz_class r;
            mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(modulus_.size() - 1));
            return r;
        }
    }
    return 0;
}

bool FieldContext::same(const FieldContext& other) const {
    if (this == &other) return true;
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case Kind::Rationals: return true;
        case Kind::Prime: return p_ == other.p_;
        case Kind::Extension:
            return base_->same(*other.base_) && vecpoly::equal(modulus_, other.modulus_);
        case Kind::RatFunc: return base_->same(*other.base_);
    }
    return false;
}

FieldElem FieldContext::zero() const {
    switch (kind_) {
        case Kind::Rationals: return FieldElem(shared_from_this(), mpq_class(0));
        case Kind::Prime: return FieldElem(shared_from_this(), std::uint64_t{0});
        case Kind::Extension: return FieldElem(shared_from_this(), std::vector<FieldElem>{});
        case Kind::RatFunc: return FieldElem(shared_from_this(), RatFuncPayload{{}, {base_->one()}});
    }
    throw InternalInconsistency("unreachable");
}

FieldElem FieldContext::one() const { return from_int(1); }

FieldElem FieldContext::from_int(long v) const { return from_mpq(mpq_class(v)); }

FieldElem FieldContext::from_mpq(const mpq_class& q) const {
    switch (kind_) {
        case Kind::Rationals: return FieldElem(shared_from_this(), q);
        case Kind::Prime: {
            // Route through mpz to stay correct for any p and any q.
            mpz_class pz(order());
            mpz_class n = q.get_num() % pz;
            if (n < 0) n += pz;
            mpz_class d = q.get_den() % pz;
            std::uint64_t nn = mpz_get_ui(n.get_mpz_t());
            std::uint64_t dd = mpz_get_ui(d.get_mpz_t());
            FieldElem numer(shared_from_this(), nn);
            FieldElem denom(shared_from_this(), dd);
            if (denom.is_zero()) throw ZeroInversion();
            return numer * denom.inverse();
        }
        default: return embed(base_->from_mpq(q));
    }
}

FieldElem FieldContext::embed(const FieldElem& x) const {
    if (kind_ != Kind::Extension && kind_ != Kind::RatFunc)
        throw InvalidContext("embed is only defined for extension/ratfunc contexts");
    if (!x.context()->same(*base_)) throw InvalidContext("embed: element does not lie in the base context");
    if (kind_ == Kind::Extension) {
        std::vector<FieldElem> v;
        if (!x.is_zero()) v.push_back(x);
        return FieldElem(shared_from_this(), std::move(v));
    }
    RatFuncPayload p;
    if (!x.is_zero()) p.num.push_back(x);
    p.den.push_back(base_->one());
    return FieldElem(shared_from_this(), std::move(p));
}

FieldElem FieldContext::generator() const {
    if (kind_ == Kind::Extension)
        return FieldElem(shared_from_this(), std::vector<FieldElem>{base_->zero(), base_->one()});
    if (kind_ == Kind::RatFunc)
        return FieldElem(shared_from_this(), RatFuncPayload{{base_->zero(), base_->one()}, {base_->one()}});
    throw InvalidContext("generator is only defined for extension/ratfunc contexts");
}

FieldElem FieldContext::random_elem(Rng& rng, long heightBound) const {
    switch (kind_) {
        case Kind::Rationals: {
            long num = rng.range(-heightBound, heightBound);
            long den = rng.range(1, heightBound);
            return FieldElem(shared_from_this(), mpq_class(num, den));
        }
        case Kind::Prime: return FieldElem(shared_from_this(), rng.below(p_));
        case Kind::Extension: {
            std::vector<FieldElem> v;
            for (std::size_t i = 0; i + 1 < modulus_.size(); ++i) v.push_back(base_->random_elem(rng, heightBound));
            return FieldElem(shared_from_this(), std::move(v));
        }
        case Kind::RatFunc: {
            // Ratio of a small random numerator by a random nonzero denominator.
            std::vector<FieldElem> num, den;
            for (int i = 0; i <= 2; ++i) num.push_back(base_->random_elem(rng, heightBound));
            for (int i = 0; i <= 1; ++i) den.push_back(base_->random_elem(rng, heightBound));
            vecpoly::trim(den);
            if (den.empty()) den.push_back(base_->one());
            return ratfunc_make(shared_from_this(), std::move(num), std::move(den));
        }
    }
    throw InternalInconsistency("unreachable");
}

std::string FieldContext::describe() const {
    switch (kind_) {
        case Kind::Rationals: return "Q";
        case Kind::Prime: return "F_" + std::to_string(p_);
        case Kind::Extension:
            return base_->describe() + "[" + variable_ + "]/(" + vecpoly::str(modulus_, variable_) + ")";
        case Kind::RatFunc: return base_->describe() + "(" + variable_ + ")";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// FieldElem

FieldElem::FieldElem(ContextPtr ctx, Payload payload) : ctx_(std::move(ctx)), v_(std::move(payload)) {
    // Canonicalize on construction so equality is a syntactic check.
    switch (ctx_->kind()) {
        case FieldContext::Kind::Rationals: {
            std::get<mpq_class>(v_).canonicalize();
            break;
        }
        case FieldContext::Kind::Prime: {
            auto& r = std::get<std::uint64_t>(v_);
            r %= ctx_->prime_modulus();
            break;
        }
        case FieldContext::Kind::Extension: {
            auto& v = std::get<std::vector<FieldElem>>(v_);
            vecpoly::trim(v);
            if (v.size() >= ctx_->modulus().size()) v = vecpoly::mod(v, ctx_->modulus());
            break;
        }
        case FieldContext::Kind::RatFunc: {
            auto& rf = std::get<RatFuncPayload>(v_);
            vecpoly::trim(rf.num);
            vecpoly::trim(rf.den);
            if (rf.den.empty()) throw ZeroDenominator();
            if (rf.num.empty()) {
                rf.den = {ctx_->base()->one()};
                break;
            }
            vecpoly::Vec g = vecpoly::gcd(rf.num, rf.den);
            if (vecpoly::deg(g) > 0) {
                rf.num = vecpoly::divmod(rf.num, g).first;
                rf.den = vecpoly::divmod(rf.den, g).first;
            }
            if (!rf.den.back().is_one()) {
                const FieldElem inv = rf.den.back().inverse();
                rf.num = vecpoly::scale(rf.num, inv);
                rf.den = vecpoly::scale(rf.den, inv);
            }
            break;
        }
    }
}

bool FieldElem::is_zero() const {
    switch (ctx_->kind()) {
        case FieldContext::Kind::Rationals: return std::get<mpq_class>(v_) == 0;
        case FieldContext::Kind::Prime: return std::get<std::uint64_t>(v_) == 0;
        case FieldContext::Kind::Extension: return std::get<std::vector<FieldElem>>(v_).empty();
        case FieldContext::Kind::RatFunc: return std::get<RatFuncPayload>(v_).num.empty();
    }
    return false;
}

bool FieldElem::is_one() const {
    switch (ctx_->kind()) {
        case FieldContext::Kind::Rationals: return std::get<mpq_class>(v_) == 1;
        case FieldContext::Kind::Prime: return std::get<std::uint64_t>(v_) == 1;
        case FieldContext::Kind::Extension: {
            const auto& v = std::get<std::vector<FieldElem>>(v_);
            return v.size() == 1 && v[0].is_one();
        }
        case FieldContext::Kind::RatFunc: {
            const auto& rf = std::get<RatFuncPayload>(v_);
            return rf.num.size() == 1 && rf.num[0].is_one() && rf.den.size() == 1 && rf.den[0].is_one();
        }
    }
    return false;
}

namespace {

void check_same_context(const FieldElem& a, const FieldElem& b) {
    if (!a.valid() || !b.valid()) throw InvalidContext("arithmetic on an invalid FieldElem");
    if (!a.context()->same(*b.context()))
        throw InvalidContext("arithmetic between elements of different field contexts");
}

}  // namespace

FieldElem FieldElem::operator-() const {
    switch (ctx_->kind()) {
        case FieldContext::Kind::Rationals: return FieldElem(ctx_, mpq_class(-std::get<mpq_class>(v_)));
        case FieldContext::Kind::Prime: {
            std::uint64_t r = std::get<std::uint64_t>(v_);
            return FieldElem(ctx_, r == 0 ? std::uint64_t{0} : ctx_->prime_modulus() - r);
        }
        case FieldContext::Kind::Extension:
            return FieldElem(ctx_, vecpoly::neg(std::get<std::vector<FieldElem>>(v_)));
        case FieldContext::Kind::RatFunc: {
            const auto& rf = std::get<RatFuncPayload>(v_);
            return FieldElem(ctx_, RatFuncPayload{vecpoly::neg(rf.num), rf.den});
        }
    }
    throw InternalInconsistency("unreachable");
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    check_same_context(a, b);
    const ContextPtr& ctx = a.ctx_;
    switch (ctx->kind()) {
        case FieldContext::Kind::Rationals:
            return FieldElem(ctx, mpq_class(a.rational() + b.rational()));
        case FieldContext::Kind::Prime: {
            const std::uint64_t p = ctx->prime_modulus();
            std::uint64_t x = a.residue(), y = b.residue();
            std::uint64_t s = x + y;
            if (s < x || s >= p) s -= p;  // handles wraparound for large p
            return FieldElem(ctx, s);
        }
        case FieldContext::Kind::Extension:
            return FieldElem(ctx, vecpoly::add(a.ext_coeffs(), b.ext_coeffs()));
        case FieldContext::Kind::RatFunc: {
            const auto& x = a.ratfunc();
            const auto& y = b.ratfunc();
            vecpoly::Vec num = vecpoly::add(vecpoly::mul(x.num, y.den), vecpoly::mul(y.num, x.den));
            vecpoly::Vec den = vecpoly::mul(x.den, y.den);
            return FieldElem(ctx, RatFuncPayload{std::move(num), std::move(den)});
        }
    }
    throw InternalInconsistency("unreachable");
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + (-b); }

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    check_same_context(a, b);
    const ContextPtr& ctx = a.ctx_;
    switch (ctx->kind()) {
        case FieldContext::Kind::Rationals:
            return FieldElem(ctx, mpq_class(a.rational() * b.rational()));
        case FieldContext::Kind::Prime:
            return FieldElem(ctx, mulmod(a.residue(), b.residue(), ctx->prime_modulus()));
        case FieldContext::Kind::Extension:
            return FieldElem(ctx, vecpoly::mul(a.ext_coeffs(), b.ext_coeffs()));
        case FieldContext::Kind::RatFunc: {
            const auto& x = a.ratfunc();
            const auto& y = b.ratfunc();
            return FieldElem(ctx, RatFuncPayload{vecpoly::mul(x.num, y.num), vecpoly::mul(x.den, y.den)});
        }
    }
    throw InternalInconsistency("unreachable");
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw ZeroInversion();
    switch (ctx_->kind()) {
        case FieldContext::Kind::Rationals:
            return FieldElem(ctx_, mpq_class(1 / std::get<mpq_class>(v_)));
        case FieldContext::Kind::Prime:
            return FieldElem(ctx_, powmod(std::get<std::uint64_t>(v_), ctx_->prime_modulus() - 2, ctx_->prime_modulus()));
        case FieldContext::Kind::Extension: {
            auto [g, u] = vecpoly::half_ext_gcd(std::get<std::vector<FieldElem>>(v_), ctx_->modulus());
            if (vecpoly::deg(g) == 0) return FieldElem(ctx_, std::move(u));
            // Reducible modulus detected: surface the proper factor so callers
            // can split the modulus (dynamic evaluation).
            throw ZeroDivisor(std::move(g));
        }
        case FieldContext::Kind::RatFunc: {
            const auto& rf = std::get<RatFuncPayload>(v_);
            return FieldElem(ctx_, RatFuncPayload{rf.den, rf.num});
        }
    }
    throw InternalInconsistency("unreachable");
}

bool operator==(const FieldElem& a, const FieldElem& b) {
    check_same_context(a, b);
    switch (a.ctx_->kind()) {
        case FieldContext::Kind::Rationals: return a.rational() == b.rational();
        case FieldContext::Kind::Prime: return a.residue() == b.residue();
        case FieldContext::Kind::Extension: return vecpoly::equal(a.ext_coeffs(), b.ext_coeffs());
        case FieldContext::Kind::RatFunc:
            return vecpoly::equal(a.ratfunc().num, b.ratfunc().num) &&
                   vecpoly::equal(a.ratfunc().den, b.ratfunc().den);
    }
    return false;
}

std::string FieldElem::str() const {
    switch (ctx_->kind()) {
        case FieldContext::Kind::Rationals: return std::get<mpq_class>(v_).get_str();
        case FieldContext::Kind::Prime: return std::to_string(std::get<std::uint64_t>(v_));
        case FieldContext::Kind::Extension:
            return vecpoly::str(std::get<std::vector<FieldElem>>(v_), ctx_->variable());
        case FieldContext::Kind::RatFunc: {
            const auto& rf = std::get<RatFuncPayload>(v_);
            std::string n = vecpoly::str(rf.num, ctx_->variable());
            if (rf.den.size() == 1 && rf.den[0].is_one()) return n;
            return "(" + n + ")/(" + vecpoly::str(rf.den, ctx_->variable()) + ")";
        }
    }
    return "?";
}

FieldElem ratfunc_make(const ContextPtr& rf, std::vector<FieldElem> num, std::vector<FieldElem> den) {
    if (!rf || !rf->is_ratfunc()) throw InvalidContext("ratfunc_make requires a rational-function context");
    vecpoly::trim(den);
    if (den.empty()) throw ZeroDenominator();
    return FieldElem(rf, RatFuncPayload{std::move(num), std::move(den)});
}

FieldElem specialize_eps(const FieldElem& x, const FieldElem& eps0) {
    if (!x.context()->is_ratfunc()) throw InvalidContext("specialize_eps requires a ratfunc element");
    if (!eps0.context()->same(*x.context()->base()))
        throw InvalidContext("specialization point must lie in the base field");
    const RatFuncPayload& rf = x.ratfunc();
    const FieldElem den = vecpoly::eval(rf.den, eps0);
    if (den.is_zero()) throw PoleAtSpecialization();
    return vecpoly::eval(rf.num, eps0) * den.inverse();
}

}  // namespace mucurve
