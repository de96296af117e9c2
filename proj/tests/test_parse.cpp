#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mucurve/parse.hpp"

using namespace mucurve;

namespace {

ContextPtr Q() { return FieldContext::rationals(); }

Poly qpoly(std::initializer_list<long> c) { return Poly::from_ints(Q(), c); }

}  // namespace

TEST_CASE("basic expressions") {
    CHECK(parse_poly("(t-1)^2", Q()) == qpoly({1, -2, 1}));
    CHECK(parse_poly("t^5 - t^4 - t^2", Q()) == qpoly({0, 0, -1, 0, -1, 1}));
    CHECK(parse_poly("-t^5 + t^4 + t", Q()) == qpoly({0, 1, 0, 0, 1, -1}));
    CHECK(parse_poly("0", Q()).is_zero());
    CHECK(parse_poly("  7 ", Q()) == qpoly({7}));
    CHECK(parse_poly("t", Q()) == qpoly({0, 1}));
    CHECK(parse_poly("2t^3", Q()) == qpoly({0, 0, 0, 2}));
    CHECK(parse_poly("2*t^3", Q()) == qpoly({0, 0, 0, 2}));
    CHECK(parse_poly("t t", Q()) == qpoly({0, 0, 1}));
    CHECK(parse_poly("(t+1)(t-1)", Q()) == qpoly({-1, 0, 1}));
    CHECK(parse_poly("-(t+1)^2 + t^2", Q()) == qpoly({-1, -2}));
    CHECK(parse_poly("t^0", Q()) == qpoly({1}));
}

TEST_CASE("rational literals") {
    CHECK(parse_poly("1/2", Q()) == Poly::constant(Q()->from_mpq(mpq_class(1, 2))));
    CHECK(parse_poly("-1/12t^5", Q()) ==
          Poly::monomial(Q(), 5, Q()->from_mpq(mpq_class(-1, 12))));
    CHECK(parse_poly("3/6", Q()) == Poly::constant(Q()->from_mpq(mpq_class(1, 2))));
    // '/' not followed by digits is not a literal and the grammar has no division
    CHECK_THROWS_AS(parse_poly("1/t", Q()), SyntaxError);
    CHECK(parse_scalar("-1/12", Q()) == Q()->from_mpq(mpq_class(-1, 12)));
    CHECK_THROWS_AS(parse_scalar("t+1", Q()), SyntaxError);
}

TEST_CASE("finite field coefficients") {
    auto f7 = FieldContext::prime(7);
    CHECK(parse_poly("10t + 9", f7) == Poly::from_ints(f7, {2, 3}));
    CHECK(parse_poly("1/2", f7) == Poly::constant(f7->from_int(4)));  // 2^-1 = 4 mod 7
}

TEST_CASE("errors carry positions") {
    CHECK_THROWS_AS(parse_poly("", Q()), SyntaxError);
    CHECK_THROWS_AS(parse_poly("   ", Q()), SyntaxError);
    CHECK_THROWS_AS(parse_poly("t +", Q()), SyntaxError);
    CHECK_THROWS_AS(parse_poly("(t+1", Q()), SyntaxError);
    CHECK_THROWS_AS(parse_poly("t^", Q()), SyntaxError);
    CHECK_THROWS_AS(parse_poly("t ) 1", Q()), SyntaxError);
    try {
        parse_poly("t + %", Q());
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.offset() == 4);
    }
    try {
        parse_poly("t + x^2", Q());
        FAIL("expected WrongVariable");
    } catch (const WrongVariable&) {
    }
    // the variable name is configurable
    CHECK(parse_poly("x^2-2", Q(), "x") == qpoly({-2, 0, 1}));
}

TEST_CASE("print_poly canonical form") {
    CHECK(print_poly(qpoly({1, -2, 1})) == "t^2 - 2t + 1");
    CHECK(print_poly(Poly::zero(Q())) == "0");
    CHECK(print_poly(qpoly({-5})) == "-5");
    CHECK(print_poly(qpoly({0, 1})) == "t");
    CHECK(print_poly(qpoly({0, -1})) == "-t");
    CHECK(print_poly(Poly::monomial(Q(), 5, Q()->from_mpq(mpq_class(-1, 12)))) == "-1/12t^5");
    auto f7 = FieldContext::prime(7);
    CHECK(print_poly(Poly::from_ints(f7, {2, 3})) == "3t + 2");
}

TEST_CASE("print-then-parse is the identity") {
    std::vector<ContextPtr> contexts = {Q(), FieldContext::prime(101)};
    Rng rng(2718);
    for (const auto& ctx : contexts) {
        for (int i = 0; i < 500; ++i) {
            std::vector<FieldElem> c;
            const int d = static_cast<int>(rng.below(9));
            for (int k = 0; k <= d; ++k) c.push_back(ctx->random_elem(rng));
            const Poly f(ctx, std::move(c));
            const std::string s = print_poly(f);
            REQUIRE(parse_poly(s, ctx) == f);
            REQUIRE(print_poly(parse_poly(s, ctx)) == s);
        }
    }
}

TEST_CASE("field specs") {
    CHECK(parse_field_spec("q")->is_rationals());
    CHECK(parse_field_spec("Q")->is_rationals());
    auto f101 = parse_field_spec("fp:101");
    CHECK(f101->is_prime());
    CHECK(f101->prime_modulus() == 101);

    auto f9 = parse_field_spec("fp:3/x^2+1");
    CHECK(f9->is_extension());
    CHECK(f9->order() == 9);

    CHECK_THROWS_AS(parse_field_spec("r"), BadFieldSpec);
    CHECK_THROWS_AS(parse_field_spec("fp:91"), BadFieldSpec);   // 7 * 13
    CHECK_THROWS_AS(parse_field_spec("fp:abc"), BadFieldSpec);
    CHECK_THROWS_AS(parse_field_spec("fp:3/x+1"), BadFieldSpec);      // degree < 2
    CHECK_THROWS_AS(parse_field_spec("fp:3/2x^2+1"), BadFieldSpec);   // not monic
    CHECK_THROWS_AS(parse_field_spec("fp:3/t^2+1"), WrongVariable);
}
