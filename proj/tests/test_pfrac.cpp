#include <doctest.h>

#include "zeta4/pfrac.hpp"

using namespace zeta4;

TEST_CASE("two-factor split and the chain identities hold exactly") {
    for (BaseIdentity which : {BaseIdentity::split34, BaseIdentity::u1_form,
                               BaseIdentity::u2_form, BaseIdentity::s4_form}) {
        auto [lhs, rhs] = base_identity(which);
        DecisionOutcome d = equal_as_rational_functions(lhs, rhs);
        CAPTURE(base_identity_name(which));
        CHECK(d.equal);
    }
}

TEST_CASE("the decision procedure rejects a perturbed identity") {
    auto [lhs, rhs] = base_identity(BaseIdentity::split34);
    rhs.add(MultiPoly::constant(rat(1, 1000)), {{mask_of({1}), 1}});
    DecisionOutcome d = equal_as_rational_functions(lhs, rhs);
    CHECK_FALSE(d.equal);
}

TEST_CASE("weight-four coefficient extraction is the identity itself") {
    auto [lhs, rhs] = base_identity(BaseIdentity::u1_form);
    auto series = texpand_coefficient(lhs, 4);
    auto display = composition_expansion(lhs, 4);
    CHECK(series == display);
    // the degree-zero coefficient is the original term list
    CHECK(series.size() == 1);
    CHECK(series.begin()->second == MultiPoly::constant(1));
}

TEST_CASE("series route matches the composition display through weight eight") {
    for (BaseIdentity which : {BaseIdentity::split34, BaseIdentity::u1_form,
                               BaseIdentity::u2_form, BaseIdentity::s4_form}) {
        auto [lhs, rhs] = base_identity(which);
        int arity = static_cast<int>(lhs.terms[0].den.size());
        for (int l = arity; l <= 8; ++l) {
            CAPTURE(base_identity_name(which));
            CAPTURE(l);
            CHECK(texpand_coefficient(lhs, l) == composition_expansion(lhs, l));
            CHECK(texpand_coefficient(rhs, l) == composition_expansion(rhs, l));
        }
    }
}

TEST_CASE("expanded coefficients agree across sides as rational functions") {
    auto [lhs, rhs] = base_identity(BaseIdentity::u1_form);
    FracSum a, b;
    for (const auto& [den, num] : texpand_coefficient(lhs, 5)) a.add(num, den);
    for (const auto& [den, num] : texpand_coefficient(rhs, 5)) b.add(num, den);
    DecisionOutcome d = equal_as_rational_functions(a, b, ExecMode::openmp);
    CHECK(d.equal);
}

TEST_CASE("grid decision gives identical output in both execution modes") {
    auto [lhs, rhs] = base_identity(BaseIdentity::u2_form);
    DecisionOutcome s = equal_as_rational_functions(lhs, rhs, ExecMode::serial);
    DecisionOutcome p = equal_as_rational_functions(lhs, rhs, ExecMode::openmp);
    CHECK(s.equal == p.equal);
    CHECK(s.points == p.points);
    CHECK(s.grid_per_variable == p.grid_per_variable);
}
