#include "pslab/poly.hpp"

#include <cstdint>

#include "doctest.h"
#include "pslab/formulas.hpp"
#include "pslab/patterns.hpp"

using namespace pslab;

namespace {

// Deterministic little generator for the ring-law samples.
struct Lcg {
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    int next(int bound) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<int>((state >> 33) % static_cast<std::uint64_t>(bound));
    }
};

Poly4 random_poly(Lcg& rng) {
    Poly4 p;
    int terms = rng.next(5);
    for (int i = 0; i < terms; ++i) {
        int c = rng.next(9) - 4;  // small, possibly negative or zero
        p += Poly4::monomial(rng.next(3), rng.next(3), rng.next(3), rng.next(3), c);
    }
    return p;
}

}  // namespace

TEST_CASE("monomial arithmetic") {
    Poly4 rs = Poly4::monomial(0, 1, 1, 0, 1);
    Poly4 one_plus_rs = Poly4::one() + rs;
    Poly4 square = one_plus_rs * one_plus_rs;
    CHECK(square.to_text() == "1 + 2*r*s + r^2*s^2");

    CHECK((Poly4::monomial(1, 1, 0, 0, 1) * Poly4::monomial(0, 0, 1, 1, 1)).to_text() == "q*r*s*t");

    Poly4 p = parse_poly4("3 + q*t - 2*s");
    CHECK(p + Poly4{} == p);
    CHECK((p * Poly4::one()) == p);
    CHECK(Poly4{}.is_zero());
    CHECK(Poly4{}.to_text() == "0");

    // Cancellation drops the stored term.
    Poly4 cancel = p + Poly4::monomial(0, 0, 1, 0, 2);
    CHECK(cancel.term_count() == 2);
}

TEST_CASE("ring laws on sampled polynomials") {
    Lcg rng;
    for (int trial = 0; trial < 200; ++trial) {
        Poly4 a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("distribution of small classes") {
    PatternSet p123 = PatternSet::parse("1/2/3");
    CHECK(class_distribution(3, &p123).to_text() == "1 + r*s^2 + r^2*s + q*r*s*t");

    PatternSet p132 = PatternSet::parse("13/2");
    CHECK(class_distribution(2, &p132).to_text() == "1 + r*s");

    CHECK(class_distribution(0, nullptr).to_text() == "1");

    std::vector<Rgf> words = {parse_rgf("111"), parse_rgf("121")};
    CHECK(distribution(words).to_text() == "1 + q*r*s*t");
}

TEST_CASE("all-ones evaluation counts the words") {
    for (int n = 0; n <= 12; ++n) {
        Poly4 p = class_distribution(n, nullptr);
        CHECK(p.eval_all_ones() == bell_number(n));
    }
}

TEST_CASE("specialization") {
    PatternSet p123 = PatternSet::parse("1/2/3");
    Poly4 f3 = class_distribution(3, &p123);
    CHECK(f3.specialize(StatKind::lb).to_text() == "3 + q");
    CHECK(f3.specialize(StatKind::lb).var() == 'q');
    CHECK(f3.specialize(StatKind::ls).var() == 'r');
    CHECK(f3.specialize(StatKind::ls).with_var('q').to_text() == "1 + 2*q + q^2");
    CHECK(Poly4::one().specialize(StatKind::ls).to_text() == "1");
    CHECK(f3.specialize(StatKind::lb).eval_one() == 4);

    CHECK(f3.set_one({Var::q, Var::t}) == f3.set_one({Var::t}).set_one({Var::q}));
    CHECK(f3.set_one({Var::q, Var::r, Var::s, Var::t}).to_text() == "4");
}

TEST_CASE("variable swaps") {
    PatternSet p123 = PatternSet::parse("1/2/3");
    Poly4 f3 = class_distribution(3, &p123);
    CHECK(f3.swap_vars(Poly4::SwapPair::qt) == f3);  // q,t enter symmetrically here
    CHECK(f3.swap_vars(Poly4::SwapPair::rs) == f3);  // and r,s at n=3
    Poly4 skew = Poly4::monomial(2, 0, 0, 1, 5);
    CHECK(skew.swap_vars(Poly4::SwapPair::qt).to_text() == "5*q*t^2");
    CHECK(skew.swap_vars(Poly4::SwapPair::qt).swap_vars(Poly4::SwapPair::qt) == skew);
}

TEST_CASE("coefficient access and degrees") {
    Poly1 p = parse_poly1("3 + q");
    CHECK(p.coefficient(1) == 1);
    CHECK(p.coefficient(0) == 3);
    CHECK(p.coefficient(7) == 0);
    CHECK(p.degree() == 1);
    CHECK(Poly1{}.degree() == -1);
    CHECK(Poly1{}.to_text() == "0");

    Poly4 f = parse_poly4("q^3*t + 2*r*s^2");
    CHECK(f.degree_in(Var::q) == 3);
    CHECK(f.degree_in(Var::r) == 1);
    CHECK(f.degree_in(Var::t) == 1);
    CHECK(Poly4{}.degree_in(Var::q) == -1);
    CHECK(f.coefficient(Exp4{{0, 1, 2, 0}}) == 2);
}

TEST_CASE("canonical rendering is stable under parsing") {
    Lcg rng;
    for (int trial = 0; trial < 200; ++trial) {
        Poly4 p = random_poly(rng);
        std::string text = p.to_text();
        CHECK(parse_poly4(text) == p);
        CHECK(parse_poly4(text).to_text() == text);
    }
    CHECK(parse_poly4("1 - 2*q").to_text() == "1 - 2*q");
    CHECK(parse_poly4("0").is_zero());
    CHECK(parse_poly1("2*q + q^2 + q^3").to_text() == "2*q + q^2 + q^3");
    CHECK_THROWS_AS(parse_poly4("q +"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly4("x"), std::invalid_argument);
}

TEST_CASE("json and csv forms") {
    PatternSet p123 = PatternSet::parse("1/2/3");
    Poly4 f3 = class_distribution(3, &p123);
    CHECK(f3.to_json() ==
          R"({"vars":["q","r","s","t"],"terms":[{"e":[0,0,0,0],"c":"1"},{"e":[0,1,2,0],"c":"1"},)"
          R"({"e":[0,2,1,0],"c":"1"},{"e":[1,1,1,1],"c":"1"}]})");
    CHECK(f3.to_csv() == "e_q,e_r,e_s,e_t,coeff\n0,0,0,0,1\n0,1,2,0,1\n0,2,1,0,1\n1,1,1,1,1\n");

    Poly1 lb = f3.specialize(StatKind::lb);
    CHECK(lb.to_json() == R"({"vars":["q"],"terms":[{"e":[0],"c":"3"},{"e":[1],"c":"1"}]})");
    CHECK(lb.to_csv() == "e,coeff\n0,3\n1,1\n");
}

TEST_CASE("coefficients stay exact far past 64 bits") {
    // (1 + q)^200 has a central coefficient near 10^59.
    Poly1 p = Poly1::constant(1);
    Poly1 binomial = parse_poly1("1 + q");
    for (int i = 0; i < 200; ++i) p = p * binomial;
    CHECK(p.coefficient(100) ==
          mpz_class("90548514656103281165404177077484163874504589675413336841320"));
    CHECK(p.eval_one() == mpz_class(1) << 200);
}
