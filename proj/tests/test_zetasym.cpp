#include <doctest.h>

#include "zeta4/zetasym.hpp"

using namespace zeta4;

TEST_CASE("formal zeta sums canonicalize factor order") {
    ZetaSum a, b;
    a.add(make_monomial({{mask_of({1})}, {mask_of({2})}}), 1);
    b.add(make_monomial({{mask_of({2})}, {mask_of({1})}}), 1);
    CHECK(a == b);
}

TEST_CASE("the cyclic-sum difference has the expected shape") {
    ZetaSum d = cyclic_sum_delta();
    CHECK(!d.is_zero());
    // acting by a cyclic generator permutes the terms of the left side only,
    // so the difference is invariant
    CHECK(act(Perm::cycles("(1234)"), d) == d);
}

TEST_CASE("depth-two symmetric difference") {
    ZetaSum d = symmetric2_delta(mask_of({1}), mask_of({2}));
    CHECK(d.terms().size() == 4);
    CHECK(symmetric2_delta(mask_of({2}), mask_of({1})) == d);
}

TEST_CASE("six-fold summation reduces to the quadruple symmetric equation") {
    ReductionResult r = verify_sixfold_reduction();
    CHECK(r.reduced);
    CHECK(r.used > 0);
}
