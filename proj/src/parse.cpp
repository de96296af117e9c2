#include "mucurve/parse.hpp"

#include <cctype>
#include <sstream>

namespace mucurve {

namespace {

struct Parser {
    const std::string& s;
    const ContextPtr& ctx;
    const std::string& var;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= s.size();
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) { throw SyntaxError(pos, what); }

    mpz_class integer() {
        skip_ws();
        const std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        return mpz_class(s.substr(start, pos - start));
    }

    unsigned long natural() {
        const mpz_class z = integer();
        if (!z.fits_ulong_p()) fail("exponent too large");
        return z.get_ui();
    }

    std::string identifier() {
        skip_ws();
        const std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }

    Poly base() {
        const char c = peek();
        if (c == '-') {
            // Unary minus binds a whole factor so that -t^2 means -(t^2).
            ++pos;
            return -factor();
        }
        if (c == '(') {
            ++pos;
            Poly e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num = integer();
            mpz_class den = 1;
            // '/' binds to a rational literal only when followed by digits
            // (the grammar has no division operator).
            std::size_t save = pos;
            if (eat('/')) {
                skip_ws();
                if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                    den = integer();
                    if (den == 0) fail("zero denominator in rational literal");
                } else {
                    pos = save;
                }
            }
            return Poly::constant(ctx->from_mpq(mpq_class(num, den)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos;
            const std::string name = identifier();
            if (name != var) {
                pos = start;
                throw WrongVariable(name);
            }
            return Poly::from_ints(ctx, {0, 1});
        }
        fail("expected a number, variable or '('");
    }

    Poly factor() {
        Poly b = base();
        if (eat('^')) {
            const unsigned long e = natural();
            Poly acc = Poly::constant(ctx->one());
            for (unsigned long i = 0; i < e; ++i) acc = acc * b;
            return acc;
        }
        return b;
    }

    bool starts_factor() {
        const char c = peek();
        return c == '(' || std::isdigit(static_cast<unsigned char>(c)) ||
               std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }

    Poly term() {
        Poly acc = factor();
        while (true) {
            if (eat('*')) {
                acc = acc * factor();
            } else if (starts_factor()) {
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    Poly expr() {
        Poly acc = term();
        while (true) {
            if (eat('+')) acc = acc + term();
            else if (peek() == '-') {
                ++pos;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }
};

}  // namespace

Poly parse_poly(const std::string& text, const ContextPtr& ctx, const std::string& var) {
    Parser p{text, ctx, var};
    if (p.at_end()) throw SyntaxError(0, "empty polynomial expression");
    Poly result = p.expr();
    if (!p.at_end()) p.fail("trailing input after expression");
    return result;
}

FieldElem parse_scalar(const std::string& text, const ContextPtr& ctx) {
    const Poly f = parse_poly(text, ctx, "t");
    if (!f.is_constant()) throw SyntaxError(0, "expected a scalar, got a polynomial");
    return f.is_zero() ? ctx->zero() : f.coeff(0);
}

namespace {

std::string coeff_str(const FieldElem& c, bool magnitude_only) {
    if (c.context()->is_rationals()) {
        mpq_class q = c.rational();
        if (magnitude_only) q = abs(q);
        return q.get_str();
    }
    return c.str();
}

bool coeff_negative(const FieldElem& c) {
    return c.context()->is_rationals() && c.rational() < 0;
}

}  // namespace

std::string print_poly(const Poly& f, const std::string& var) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        const FieldElem c = f.coeff(static_cast<std::size_t>(i));
        if (c.is_zero()) continue;
        if (first) {
            if (coeff_negative(c)) os << "-";
        } else {
            os << (coeff_negative(c) ? " - " : " + ");
        }
        first = false;
        const std::string mag = coeff_str(c, true);
        if (i == 0) {
            os << mag;
        } else {
            if (mag != "1") os << mag;
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

ContextPtr parse_field_spec(const std::string& spec) {
    if (spec == "q" || spec == "Q") return FieldContext::rationals();
    const std::string prefix = "fp:";
    if (spec.rfind(prefix, 0) != 0)
        throw BadFieldSpec("field spec must be 'q', 'fp:<prime>' or 'fp:<prime>/<monic poly in x>'");
    const std::string rest = spec.substr(prefix.size());
    const std::size_t slash = rest.find('/');
    const std::string pstr = rest.substr(0, slash);
    std::uint64_t p = 0;
    try {
        p = std::stoull(pstr);
    } catch (const std::exception&) {
        throw BadFieldSpec("invalid prime in field spec: '" + pstr + "'");
    }
    ContextPtr ctx;
    try {
        ctx = FieldContext::prime(p);
    } catch (const InvalidContext& e) {
        throw BadFieldSpec(e.what());
    }
    if (slash == std::string::npos) return ctx;
    const std::string modstr = rest.substr(slash + 1);
    const Poly modulus = parse_poly(modstr, ctx, "x");
    try {
        return FieldContext::extension(ctx, modulus.coeffs());
    } catch (const InvalidContext& e) {
        throw BadFieldSpec(e.what());
    }
}

}  // namespace mucurve
