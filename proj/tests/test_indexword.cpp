#include <doctest.h>

#include "oracles.hpp"
#include "zeta4/indexword.hpp"

using namespace zeta4;

TEST_CASE("composition enumeration matches the stated special cases") {
    auto v = compositions(5, 4, true);
    REQUIRE(v.size() == 1);
    CHECK(v[0] == IndexWord({2, 1, 1, 1}));

    auto all4 = compositions(4, 4, false);
    REQUIRE(all4.size() == 1);
    CHECK(all4[0] == IndexWord({1, 1, 1, 1}));

    // all compositions of 6 into 4 parts number ten; the admissible ones four
    CHECK(compositions(6, 4, false).size() == 10);
    CHECK(compositions(6, 4, true).size() == 4);
    CHECK(oracle::count_compositions(6, 4, 1) == 10);
    CHECK(oracle::count_compositions(6, 4, 2) == 4);
}

TEST_CASE("composition counts agree with binomials, exhaustively") {
    for (int L = 1; L <= 12; ++L)
        for (int n = 1; n <= 4 && n <= L; ++n) {
            CAPTURE(L);
            CAPTURE(n);
            auto all = compositions(L, n, false);
            CHECK(static_cast<long long>(all.size()) == oracle::binomial(L - 1, n - 1));
            CHECK(static_cast<long>(all.size()) == oracle::count_compositions(L, n, 1));
            for (const IndexWord& w : all) {
                CHECK(w.weight() == L);
                CHECK(w.depth() == n);
            }
            if (L >= n + 1) {
                auto adm = compositions(L, n, true);
                CHECK(static_cast<long long>(adm.size()) == oracle::binomial(L - 2, n - 1));
                for (const IndexWord& w : adm) CHECK(w.admissible());
            }
        }
}

TEST_CASE("composition enumeration is lexicographically sorted") {
    auto v = compositions(8, 4, true);
    for (std::size_t i = 1; i < v.size(); ++i) CHECK(v[i - 1] < v[i]);
}

TEST_CASE("invalid enumeration arguments are rejected") {
    CHECK_THROWS_AS(compositions(3, 4, false), InvalidArguments);
    CHECK_THROWS_AS(compositions(4, 4, true), InvalidArguments);
}

TEST_CASE("word and argument pattern arities must match") {
    CHECK_NOTHROW(checked_pair(IndexWord({2, 1}), ZPattern({1, 2})));
    CHECK_NOTHROW(checked_pair(IndexWord({1, 1, 1, 1}), ZPattern({1, 2, 3, 4})));
    CHECK_THROWS_AS(checked_pair(IndexWord({2, 1}), ZPattern({1, 2, 3})), ArityMismatch);
}

TEST_CASE("ladder and flat patterns") {
    CHECK(ZPattern::ladder(4) == ZPattern({1, 2, 3, 4}));
    CHECK(ZPattern::flat(3) == ZPattern({1, 1, 1}));
    CHECK_THROWS_AS(ZPattern({0, 1}), InvalidArguments);
    CHECK_THROWS_AS(IndexWord({2, 0}), InvalidArguments);
}
