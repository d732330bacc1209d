#include <doctest.h>
#include <random>

#include "zeta4/qshuffle.hpp"

using namespace zeta4;

namespace {

Mask M1(int a) { return mask_of({a}); }

std::vector<Letter> word(std::initializer_list<std::pair<int, int>> letters) {
    std::vector<Letter> w;
    for (auto [slot, zexp] : letters) w.push_back({M1(slot), zexp});
    return w;
}

std::vector<Letter> random_word(std::mt19937_64& rng, int from, int len) {
    std::uniform_int_distribution<int> step(0, 2);
    std::vector<Letter> w;
    int e = 1 + step(rng);
    for (int i = 0; i < len; ++i) {
        w.push_back({M1(from + i), e});
        e += step(rng);
    }
    return w;
}

FormalLiSum lift(const std::vector<Letter>& w) {
    LiSymbol s;
    s.letters = w;
    return FormalLiSum(s);
}

} // namespace

TEST_CASE("two singletons stuffle into the three-term expansion") {
    FormalLiSum p = stuffle(word({{1, 1}}), word({{2, 2}}));
    REQUIRE(p.size() == 3);
    FormalLiSum expected;
    expected.add(make_symbol({M1(1), M1(2)}, {1, 3}), 1);
    expected.add(make_symbol({M1(2), M1(1)}, {2, 3}), 1);
    expected.add(make_symbol({mask_of({1, 2})}, {3}), 1);
    CHECK(p == expected);
}

TEST_CASE("depth-three times singleton gives the seven-term expansion") {
    FormalLiSum p = stuffle(word({{1, 1}, {2, 2}, {3, 3}}), word({{4, 1}}));
    REQUIRE(p.size() == 7);
    FormalLiSum expected;
    expected.add(make_symbol({M1(1), M1(2), M1(3), M1(4)}, {1, 2, 3, 4}), 1);
    expected.add(make_symbol({M1(1), M1(2), M1(4), M1(3)}, {1, 2, 3, 4}), 1);
    expected.add(make_symbol({M1(1), M1(4), M1(2), M1(3)}, {1, 2, 3, 4}), 1);
    expected.add(make_symbol({M1(4), M1(1), M1(2), M1(3)}, {1, 2, 3, 4}), 1);
    expected.add(make_symbol({mask_of({1, 4}), M1(2), M1(3)}, {2, 3, 4}), 1);
    expected.add(make_symbol({M1(1), mask_of({2, 4}), M1(3)}, {1, 3, 4}), 1);
    expected.add(make_symbol({M1(1), M1(2), mask_of({3, 4})}, {1, 2, 4}), 1);
    CHECK(p == expected);
}

TEST_CASE("empty word is the unit") {
    std::vector<Letter> b = word({{2, 1}, {3, 2}});
    FormalLiSum p = stuffle(std::vector<Letter>{}, b);
    CHECK(p == lift(b));
}

TEST_CASE("flat product of depth-two words has thirteen terms") {
    FormalLiSum p = stuffle(word({{1, 1}, {2, 1}}), word({{3, 1}, {4, 1}}));
    CHECK(p.size() == 13);
}

TEST_CASE("stuffle is commutative and associative on random words") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 200; ++it) {
        std::vector<Letter> a = random_word(rng, 1, 2);
        std::vector<Letter> b = random_word(rng, 3, 1 + static_cast<int>(rng() % 2));
        CHECK(stuffle(a, b) == stuffle(b, a));
    }
    for (int it = 0; it < 200; ++it) {
        std::vector<Letter> a = random_word(rng, 1, 1 + static_cast<int>(rng() % 2));
        std::vector<Letter> b = random_word(rng, 3, 1);
        std::vector<Letter> c = random_word(rng, 4, 1);
        FormalLiSum left = stuffle(stuffle(a, b), c);
        FormalLiSum right = stuffle(stuffle(b, c), a);
        CHECK(left == right);
    }
}

TEST_CASE("the action commutes with the product") {
    std::vector<Letter> a = word({{1, 1}, {2, 2}});
    std::vector<Letter> b = word({{3, 1}, {4, 2}});
    for (const Perm& s : S4Data::instance().all) {
        std::vector<Letter> sa, sb;
        for (const Letter& l : a) sa.push_back({apply_perm(s, l.exp), l.zexp});
        for (const Letter& l : b) sb.push_back({apply_perm(s, l.exp), l.zexp});
        CHECK(act(s, stuffle(a, b)) == stuffle(sa, sb));
    }
}

TEST_CASE("harmonic lemma, formal (all four parts)") {
    for (int part = 1; part <= 4; ++part) {
        CAPTURE(part);
        CHECK(verify_lemma21(part));
    }
    // the fourfold product expands into 75 distinct symbols on either side
    LemmaSides s = lemma21_sides(4);
    CHECK(s.lhs.size() == 75);
    CHECK(s.rhs.size() == 75);
}

TEST_CASE("harmonic lemma, stated instantiations") {
    CHECK(verify_lemma21(1, {1, 1, 1, 1}));
    CHECK(verify_lemma21(2, {2, 1, 1, 1}));
    CHECK(verify_lemma21(3, {1, 2, 2, 1}));
    CHECK(verify_lemma21(4, {1, 1, 1, 1}));
}

TEST_CASE("summed harmonic lemma") {
    for (int part = 1; part <= 3; ++part) {
        CAPTURE(part);
        CHECK(verify_lemma22(part));
    }
    CHECK(verify_lemma22(1, {1, 1, 1, 1}));
    CHECK(verify_lemma22(2, {2, 1, 2, 1}));
    CHECK(verify_lemma22(3, {1, 2, 1, 1}));
}

TEST_CASE("combined per-index identity") {
    LemmaSides s = harmonic_combined_sides();
    CHECK(s.equal());
    CHECK(verify_lemma21(1, {3, 1, 2, 1}));
    std::array<int, 4> ones{1, 1, 1, 1};
    CHECK(instantiate(s.lhs, ones) == instantiate(s.rhs, ones));
}

TEST_CASE("exhaustive instantiation sweep to weight eight") {
    for (int part = 1; part <= 4; ++part) {
        LemmaSides s = lemma21_sides(part);
        for (int l = 4; l <= 8; ++l)
            for (const IndexWord& w : compositions(l, 4, false)) {
                std::array<int, 4> comp{w[0], w[1], w[2], w[3]};
                if (!(instantiate(s.lhs, comp) == instantiate(s.rhs, comp))) {
                    CAPTURE(part);
                    CAPTURE(w.str());
                    REQUIRE(false);
                }
            }
    }
    CHECK(true);
}

TEST_CASE("the five-block structure carries the printed sign pattern") {
    auto blocks = prop21_blocks();
    REQUIRE(blocks.size() == 5);
    int signs[5] = {-1, 1, 1, -1, 1};
    std::vector<std::vector<int>> depths{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    for (int i = 0; i < 5; ++i) {
        CHECK(blocks[static_cast<std::size_t>(i)].sign == signs[i]);
        CHECK(blocks[static_cast<std::size_t>(i)].factor_depths == depths[static_cast<std::size_t>(i)]);
        CHECK(blocks[static_cast<std::size_t>(i)].min_weights == depths[static_cast<std::size_t>(i)]);
    }
    CHECK(blocks[0].sigmas.size() == 4);  // cyclic set
    CHECK(blocks[2].sigmas.size() == 2);  // its two-element subset
    CHECK(blocks[4].sigmas.size() == 1);  // untwisted product
    // at the smallest weight the three-one split is forced
    CHECK(blocks[1].min_weights[0] == 3);
}
