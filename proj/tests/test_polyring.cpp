#include <doctest.h>
#include <random>

#include "zeta4/multipoly.hpp"
#include "zeta4/theorem1.hpp"

using namespace zeta4;

namespace {

MultiPoly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> terms(1, 4), expo(0, 3), num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    MultiPoly p;
    int t = terms(rng);
    for (int i = 0; i < t; ++i) {
        MultiPoly::Exponents e{expo(rng), expo(rng), expo(rng), expo(rng)};
        p.add_term(e, rat(num(rng), den(rng)));
    }
    return p;
}

PermList all_s4() { return S4Data::instance().all; }

} // namespace

TEST_CASE("subset powers") {
    MultiPoly p = subset_power(mask_of({1, 2}), 2);
    CHECK(p.coefficient({2, 0, 0, 0}) == 1);
    CHECK(p.coefficient({1, 1, 0, 0}) == 2);
    CHECK(p.coefficient({0, 2, 0, 0}) == 1);
    CHECK(subset_power(mask_of({1, 3, 4}), 0) == MultiPoly::constant(1));
    CHECK(subset_power(mask_of({2, 3, 4}), 1) ==
          MultiPoly::variable(2) + MultiPoly::variable(3) + MultiPoly::variable(4));
}

TEST_CASE("variable relabeling action") {
    Perm s = Perm::cycles("(1234)");
    CHECK(act(s, MultiPoly::variable(1)) == MultiPoly::variable(2));
    // the action is a ring homomorphism
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        MultiPoly p = random_poly(rng), q = random_poly(rng);
        CHECK(act(s, p * q) == act(s, p) * act(s, q));
    }
    // merged-subscript slots transform by relabeling the subscripts
    Perm rho = Perm::cycles("(243)");
    MultiPoly lhs = act(s * rho, subset_power(mask_of({2, 3, 4}), 3));
    Perm sr = s * rho;
    MultiPoly rhs = subset_power(mask_of({sr(2), sr(3), sr(4)}), 3);
    CHECK(lhs == rhs);
}

TEST_CASE("ring laws on random polynomials") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        MultiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("action is functorial over the whole group") {
    std::mt19937_64 rng(13);
    MultiPoly p = random_poly(rng);
    for (const Perm& a : all_s4())
        for (const Perm& b : all_s4())
            if (!(act(a * b, p) == act(a, act(b, p)))) {
                CAPTURE(a.cycle_str());
                CAPTURE(b.cycle_str());
                REQUIRE(false);
            }
    CHECK(true);
}

TEST_CASE("substitution") {
    CHECK(subset_power(mask_of({1, 2, 3, 4}), 2).substitute({1, 1, 1, 1}) == 16);
    // right-hand multiplier at the unit point keeps a single monomial
    for (int l = 5; l <= 9; ++l)
        CHECK(rhs_multiplier(l).substitute({1, 0, 0, 0}) == 1);
}

TEST_CASE("bracket polynomial is homogeneous of degree weight minus four") {
    for (int l = 5; l <= 8; ++l)
        for (const IndexWord& w : compositions(l, 4, true)) {
            MultiPoly p = theorem1_coefficient(w);
            CAPTURE(w.str());
            CHECK(p.homogeneous(l - 4));
        }
}

TEST_CASE("bracket polynomial reduces to one at the unit substitution") {
    for (int l = 5; l <= 9; ++l)
        for (const IndexWord& w : compositions(l, 4, true)) {
            CAPTURE(w.str());
            CHECK(theorem1_coefficient(w).substitute({1, 0, 0, 0}) == 1);
        }
}

TEST_CASE("bracket polynomial is invariant under the cyclic action") {
    Perm g = Perm::cycles("(1234)");
    for (int l = 5; l <= 8; ++l)
        for (const IndexWord& w : compositions(l, 4, true)) {
            MultiPoly p = theorem1_coefficient(w);
            CAPTURE(w.str());
            CHECK(act(g, p) == p);
        }
}

TEST_CASE("both assembly routes agree") {
    for (int l = 5; l <= 8; ++l)
        for (const IndexWord& w : compositions(l, 4, true)) {
            CAPTURE(w.str());
            CHECK(theorem1_coefficient(w) == theorem1_coefficient_route2(w));
        }
}

TEST_CASE("specialized combinations reproduce the printed coefficients") {
    auto combo = derive_z_combination({Rational(1), Rational(1), Rational(0), Rational(0)});
    ZPatternKey k2221{Rational(2), Rational(2), Rational(2), Rational(1)};
    ZPatternKey k1111{Rational(1), Rational(1), Rational(1), Rational(1)};
    CHECK(combo.at(k2221) == 2);
    CHECK(combo.at(k1111) == -3);
    auto combo4 = derive_z_combination({Rational(1), Rational(1), Rational(1), Rational(1)});
    ZPatternKey k4321{Rational(4), Rational(3), Rational(2), Rational(1)};
    CHECK(combo4.at(k4321) == 24);
}

TEST_CASE("the specialized combination does not depend on the assembly route") {
    for (auto point : {std::array<Rational, 4>{1, 1, 0, 0}, std::array<Rational, 4>{1, 1, 1, 0},
                       std::array<Rational, 4>{1, 1, 1, 1}}) {
        std::map<ZPatternKey, int> from_route2;
        for (const BracketTerm& t : theorem1_terms_route2()) {
            ZPatternKey key;
            for (int k = 0; k < 4; ++k) {
                Rational sum(0);
                for (int j = 1; j <= 4; ++j)
                    if (t.slots[static_cast<std::size_t>(k)] & (1u << (j - 1)))
                        sum += point[static_cast<std::size_t>(j - 1)];
                key[static_cast<std::size_t>(k)] = sum;
            }
            if (key[0] == 0) continue;
            int& c = from_route2[key];
            c += t.sign;
            if (c == 0) from_route2.erase(key);
        }
        CHECK(from_route2 == derive_z_combination(point));
    }
}
