#include "zeta4/theorem1.hpp"

#include "zeta4/errors.hpp"

namespace zeta4 {

namespace {

Mask M(std::initializer_list<int> s) { return mask_of(s); }

std::array<Mask, 4> acted(const Perm& sigma, std::array<Mask, 4> t) {
    for (Mask& m : t) m = apply_perm(sigma, m);
    return t;
}

void push_orbit(std::vector<BracketTerm>& out, const PermList& set, int sign,
                std::array<Mask, 4> t) {
    for (const Perm& s : set) out.push_back({sign, acted(s, t)});
}

std::vector<BracketTerm> build_terms(bool merged_third_block) {
    const S4Data& s4 = S4Data::instance();
    PermList C_u_C34 = s4.C;
    for (const Perm& p : right_coset(s4.C, Perm::cycles("(34)"))) C_u_C34.push_back(p);
    PermList g234 = generate({Perm::cycles("(234)")});
    PermList g24 = generate({Perm::cycles("(24)")});
    PermList g34 = generate({Perm::cycles("(34)")});

    std::vector<BracketTerm> terms;

    // block 1: sum over S4 of the fully nested pattern
    push_orbit(terms, s4.all, +1, {M({1, 2, 3, 4}), M({2, 3, 4}), M({3, 4}), M({4})});

    // block 2: minus sum over C u C(34)
    for (const Perm& sigma : C_u_C34) {
        for (const Perm& rho : g234)
            terms.push_back({-1, acted(sigma, {M({1, 3, 4}),
                                               M({rho(2), rho(3), rho(4)}),
                                               M({rho(3), rho(4)}),
                                               M({rho(4)})})});
        for (const Perm& rho : g24)
            terms.push_back({-1, acted(sigma, {M({3, 1, 4}), M({1, 4}),
                                               M({rho(2), rho(4)}), M({rho(4)})})});
        terms.push_back({-1, acted(sigma, {M({3, 4, 1}), M({4, 1}), M({1}), M({2})})});
    }

    // block 3: plus sum over C
    for (const Perm& sigma : s4.C) {
        if (merged_third_block) {
            // nu in Cb picks the template, rho runs over <(nu(2) 4)>
            for (const Perm& nu : s4.Cb) {
                Perm t = Perm::cycles("(" + std::to_string(nu(2)) + "4)");
                for (const Perm& rho : generate({t}))
                    terms.push_back({+1, acted(sigma, {M({1, nu(3)}),
                                                       M({nu(3), 2}),
                                                       M({rho(nu(2)), rho(4)}),
                                                       M({rho(4)})})});
                terms.push_back({+1, acted(sigma, {M({nu(1), 3}), M({2, nu(3)}),
                                                   M({nu(3)}), M({nu(4)})})});
            }
        } else {
            for (const Perm& rho : g24)
                terms.push_back({+1, acted(sigma, {M({1, 3}), M({3, 2}),
                                                   M({rho(2), rho(4)}), M({rho(4)})})});
            for (const Perm& rho : g34)
                terms.push_back({+1, acted(sigma, {M({1, 4}), M({2, 4}),
                                                   M({rho(3), rho(4)}), M({rho(4)})})});
            terms.push_back({+1, acted(sigma, {M({1, 3}), M({2, 3}), M({3}), M({4})})});
            terms.push_back({+1, acted(sigma, {M({1, 4}), M({4, 2}), M({2}), M({3})})});
        }
        terms.push_back({+1, acted(sigma, {M({4, 1}), M({1}), M({2}), M({3})})});
        terms.push_back({-1, acted(sigma, {M({1}), M({2}), M({3}), M({4})})});
    }
    return terms;
}

MultiPoly assemble(const std::vector<BracketTerm>& terms, const IndexWord& l) {
    if (l.depth() != 4) throw InvalidArguments("theorem1_coefficient: depth-4 index required");
    if (!l.admissible()) throw InvalidArguments("theorem1_coefficient: index not admissible");
    MultiPoly acc;
    for (const BracketTerm& t : terms) {
        MultiPoly prod = subset_power(t.slots[0], l[0] - 1);
        for (int k = 1; k < 4; ++k) {
            if (prod.is_zero()) break;
            prod = prod * subset_power(t.slots[static_cast<std::size_t>(k)], l[k] - 1);
        }
        if (t.sign > 0)
            acc += prod;
        else
            acc -= prod;
    }
    return acc;
}

} // namespace

std::vector<BracketTerm> theorem1_terms() {
    static const std::vector<BracketTerm> terms = build_terms(true);
    return terms;
}

std::vector<BracketTerm> theorem1_terms_route2() {
    static const std::vector<BracketTerm> terms = build_terms(false);
    return terms;
}

MultiPoly theorem1_coefficient(const IndexWord& l) {
    return assemble(theorem1_terms(), l);
}

MultiPoly theorem1_coefficient_route2(const IndexWord& l) {
    return assemble(theorem1_terms_route2(), l);
}

MultiPoly rhs_multiplier(int weight) {
    if (weight < 4) throw InvalidArguments("rhs_multiplier: weight >= 4 required");
    MultiPoly out;
    for (const IndexWord& w : compositions(weight, 4, false)) {
        MultiPoly::Exponents e{w[0] - 1, w[1] - 1, w[2] - 1, w[3] - 1};
        out.add_term(e, 1);
    }
    return out;
}

std::map<ZPatternKey, int> derive_z_combination(const std::array<Rational, 4>& point) {
    std::map<ZPatternKey, int> combo;
    for (const BracketTerm& t : theorem1_terms()) {
        ZPatternKey key;
        for (int k = 0; k < 4; ++k) {
            Rational sum(0);
            for (int j = 1; j <= 4; ++j)
                if (t.slots[static_cast<std::size_t>(k)] & (1u << (j - 1)))
                    sum += point[static_cast<std::size_t>(j - 1)];
            key[static_cast<std::size_t>(k)] = sum;
        }
        // a zero weight in the first slot kills every admissible term
        if (key[0] == 0) continue;
        int& c = combo[key];
        c += t.sign;
        if (c == 0) combo.erase(key);
    }
    return combo;
}

} // namespace zeta4
