#ifndef ZETA4_ZETASYM_HPP
#define ZETA4_ZETASYM_HPP

#include <map>
#include <string>
#include <vector>

#include "zeta4/multipoly.hpp"
#include "zeta4/perm.hpp"

namespace zeta4 {

// Formal products of zeta symbols whose entries are subscript sets, e.g.
// zeta(l_{12}) * zeta(l_3, l_4).  A monomial is a multiset of factor words.
using ZWord = std::vector<Mask>;
using ZMonomial = std::vector<ZWord>; // kept sorted

class ZetaSum {
public:
    using Terms = std::map<ZMonomial, Rational>;

    void add(ZMonomial m, const Rational& c);
    ZetaSum& operator+=(const ZetaSum& rhs);
    ZetaSum& operator-=(const ZetaSum& rhs);
    ZetaSum operator*(const Rational& c) const;

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    bool operator==(const ZetaSum& rhs) const { return terms_ == rhs.terms_; }

    std::string str() const;

private:
    Terms terms_;
};

ZMonomial make_monomial(std::initializer_list<ZWord> words);
ZetaSum act(const Perm& sigma, const ZetaSum& s);

// lhs - rhs of the cyclic-sum equation for quadruple values.
ZetaSum cyclic_sum_delta();
// lhs - rhs of the symmetric-sum equations at depth 2, 3, 4.
ZetaSum symmetric2_delta(Mask a, Mask b);
ZetaSum symmetric3_delta(Mask a, Mask b, Mask c);
ZetaSum symmetric4_delta();

// Sums the cyclic-sum equation over the six listed permutations and asks
// whether the difference from the depth-4 symmetric-sum equation lies in
// the exact rational span of depth-2/3 symmetric-sum instances (with
// spectator factors).  Returns true together with the certificate size.
struct ReductionResult {
    bool reduced = false;
    std::size_t candidates = 0;
    std::size_t used = 0;
};
ReductionResult verify_sixfold_reduction();

} // namespace zeta4

#endif
