#include "doctest.h"

#include "weylk/box.hpp"
#include "weylk/parser.hpp"

using namespace weylk;

namespace {

std::shared_ptr<const GammaLattice> z_lattice(Signature sig) {
    return lattice_validate(sig, {RatVec{Rational(1)}});
}

Monomial mono(const GammaLattice &L, IntVec coeffs, IntVec i, IntVec mu) {
    return make_monomial(L.signature(), L.element(coeffs), std::move(i), std::move(mu));
}

} // namespace

TEST_CASE("single monomial") {
    auto L = z_lattice(make_signature(0, 0, 0, 1));
    Element e = parse_element("m[2;0;1]", *L);
    CHECK(e == Element::monomial(L->signature(), mono(*L, {2}, {0}, {1})));
}

TEST_CASE("two-term expression with rational coefficients") {
    auto L = z_lattice(make_signature(0, 0, 1, 0));
    Element e = parse_element("3*m[0;1;1] - 1/2*m[0;0;2]", *L);
    Element want(L->signature());
    want.add_term(mono(*L, {0}, {1}, {1}), Rational(3));
    want.add_term(mono(*L, {0}, {0}, {2}), Rational(-1, 2));
    CHECK(e == want);
    // whitespace is insignificant
    CHECK(parse_element("3 * m[ 0 ; 1 ; 1 ]-1/2*m[0;0;2]", *L) == want);
}

TEST_CASE("zero element") {
    auto L = z_lattice(make_signature(0, 0, 0, 1));
    CHECK(parse_element("0", *L).is_zero());
    CHECK(parse_element(" 0 ", *L).is_zero());
    CHECK(print_element(Element::zero(L->signature())) == "0");
    // "0*m[...]" also cancels to zero through the grammar proper
    CHECK(parse_element("0*m[1;0;0]", *L).is_zero());
}

TEST_CASE("membership and index validation errors") {
    auto L = z_lattice(make_signature(0, 0, 0, 1));
    CHECK_THROWS_AS(parse_element("m[1/2;0;0]", *L), NotInGamma);
    CHECK_THROWS_AS(parse_element("m[1;1;0]", *L), InvalidJIndex); // i must be 0 on l4 range
    CHECK_THROWS_AS(parse_element("m[1;0;-1]", *L), InvalidDerivIndex);

    auto L2 = z_lattice(make_signature(0, 1, 0, 0));
    CHECK_THROWS_AS(parse_element("m[1;-1;0]", *L2), InvalidJIndex); // Z_+ slice
}

TEST_CASE("syntax errors carry position and expectation") {
    auto L = z_lattice(make_signature(0, 0, 0, 1));
    try {
        parse_element("m[2;0;1] + ", *L);
        FAIL("expected SyntaxError");
    } catch (const SyntaxError &e) {
        CHECK(e.position() == 11);
        CHECK(e.expected() == "digits");
    }
    CHECK_THROWS_AS(parse_element("m[2;0]", *L), SyntaxError);
    CHECK_THROWS_AS(parse_element("2*", *L), SyntaxError);
    CHECK_THROWS_AS(parse_element("m[2;0;1] m[1;0;0]", *L), SyntaxError);
    CHECK_THROWS_AS(parse_element("m[1,2;0;1]", *L), SyntaxError); // wrong alpha arity
    CHECK_THROWS_AS(parse_element("1/0*m[1;0;0]", *L), SyntaxError);
    CHECK_THROWS_AS(parse_element("", *L), SyntaxError);
}

TEST_CASE("round-trip on randomized elements across three signatures") {
    struct Case {
        Signature sig;
        std::vector<RatVec> gens;
        Box box;
    };
    std::vector<Case> cases = {
        {make_signature(0, 0, 0, 1), {RatVec{Rational(1)}}, Box{3, 0, 3}},
        {make_signature(0, 0, 1, 0), {RatVec{Rational(1)}}, Box{2, 2, 2}},
        {make_signature(1, 1, 1, 1),
         {RatVec{Rational(0), Rational(1), Rational(0), Rational(0)},
          RatVec{Rational(0), Rational(0), Rational(1), Rational(0)},
          RatVec{Rational(0), Rational(0), Rational(0), Rational(1)}},
         Box{2, 2, 2}},
    };
    for (const auto &c : cases) {
        auto L = lattice_validate(c.sig, c.gens);
        Rng rng(1234);
        for (int t = 0; t < 300; ++t) {
            Element e = random_element(c.box, *L, rng, 4);
            Element back = parse_element(print_element(e), *L);
            CHECK(back == e);
        }
    }
}

TEST_CASE("printing handles signs and unit coefficients") {
    auto L = z_lattice(make_signature(0, 0, 1, 0));
    const Signature &sig = L->signature();
    Element e(sig);
    e.add_term(mono(*L, {0}, {0}, {0}), Rational(-1));
    CHECK(print_element(e) == "-1*m[0;0;0]");
    CHECK(parse_element(print_element(e), *L) == e);

    Element f(sig);
    f.add_term(mono(*L, {0}, {0}, {1}), Rational(1));
    f.add_term(mono(*L, {1}, {0}, {0}), Rational(-1));
    CHECK(parse_element(print_element(f), *L) == f);
}

TEST_CASE("enumerate_box counts") {
    auto L1 = z_lattice(make_signature(0, 0, 0, 1));
    CHECK(enumerate_box(Box{2, 0, 1}, *L1).size() == 10); // 5 alpha values x 2 mu values
    CHECK(enumerate_box(Box{0, 0, 0}, *L1).size() == 1);  // just the identity monomial
    CHECK(enumerate_box(Box{0, 0, 0}, *L1)[0].is_identity());

    auto L2 = z_lattice(make_signature(0, 0, 1, 0));
    CHECK(enumerate_box(Box{1, 1, 0}, *L2).size() == 9); // 3 x 3

    CHECK(box_size(Box{2, 0, 1}, L1->signature(), 1) == 10);

    // deterministic lexicographic order: repeated runs agree
    auto a = enumerate_box(Box{1, 1, 1}, *L2);
    auto b = enumerate_box(Box{1, 1, 1}, *L2);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k)
        CHECK(a[k] == b[k]);
}
