#include "zeta4/perm.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "zeta4/errors.hpp"

namespace zeta4 {

Perm Perm::identity(int degree) {
    std::vector<int> im(static_cast<std::size_t>(degree));
    for (int i = 1; i <= degree; ++i) im[static_cast<std::size_t>(i - 1)] = i;
    return Perm(std::move(im));
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 1 || v > degree() || seen[static_cast<std::size_t>(v - 1)])
            throw InvalidArguments("Perm: image array is not a bijection");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

Perm Perm::cycles(const std::string& notation, int degree) {
    Perm p = identity(degree);
    if (notation == "e" || notation.empty()) return p;
    std::vector<int>& im = p.images_;
    std::size_t i = 0;
    while (i < notation.size()) {
        if (notation[i] != '(')
            throw InvalidArguments("Perm::cycles: expected '(' in " + notation);
        std::vector<int> cyc;
        ++i;
        while (i < notation.size() && notation[i] != ')') {
            if (notation[i] < '1' || notation[i] > '9')
                throw InvalidArguments("Perm::cycles: bad symbol in " + notation);
            int v = notation[i] - '0';
            if (v > degree) throw InvalidArguments("Perm::cycles: point beyond degree");
            cyc.push_back(v);
            ++i;
        }
        if (i == notation.size()) throw InvalidArguments("Perm::cycles: missing ')'");
        ++i;
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            int from = cyc[k];
            int to = cyc[(k + 1) % cyc.size()];
            im[static_cast<std::size_t>(from - 1)] = to;
        }
    }
    return Perm(std::move(p.images_));
}

Perm Perm::operator*(const Perm& rhs) const {
    std::vector<int> im(images_.size());
    for (int x = 1; x <= degree(); ++x)
        im[static_cast<std::size_t>(x - 1)] = (*this)(rhs(x));
    return Perm(std::move(im));
}

Perm Perm::inverse() const {
    std::vector<int> im(images_.size());
    for (int x = 1; x <= degree(); ++x)
        im[static_cast<std::size_t>((*this)(x)-1)] = x;
    return Perm(std::move(im));
}

bool Perm::is_identity() const {
    for (int x = 1; x <= degree(); ++x)
        if ((*this)(x) != x) return false;
    return true;
}

bool Perm::even() const {
    std::vector<bool> seen(images_.size(), false);
    int parity = 0;
    for (int x = 1; x <= degree(); ++x) {
        if (seen[static_cast<std::size_t>(x - 1)]) continue;
        int len = 0, y = x;
        while (!seen[static_cast<std::size_t>(y - 1)]) {
            seen[static_cast<std::size_t>(y - 1)] = true;
            y = (*this)(y);
            ++len;
        }
        parity ^= (len - 1) & 1;
    }
    return parity == 0;
}

std::string Perm::cycle_str() const {
    std::vector<bool> seen(images_.size(), false);
    std::ostringstream os;
    bool any = false;
    for (int x = 1; x <= degree(); ++x) {
        if (seen[static_cast<std::size_t>(x - 1)] || (*this)(x) == x) {
            seen[static_cast<std::size_t>(x - 1)] = true;
            continue;
        }
        os << '(';
        int y = x;
        while (!seen[static_cast<std::size_t>(y - 1)]) {
            seen[static_cast<std::size_t>(y - 1)] = true;
            os << y;
            y = (*this)(y);
        }
        os << ')';
        any = true;
    }
    return any ? os.str() : std::string("e");
}

SignedPermSet to_multiset(const PermList& v, int coeff) {
    SignedPermSet s;
    for (const Perm& p : v) s[p] += coeff;
    return s;
}

SignedPermSet& add_to(SignedPermSet& acc, const SignedPermSet& other, int coeff) {
    for (const auto& [p, c] : other) {
        int& slot = acc[p];
        slot += coeff * c;
        if (slot == 0) acc.erase(p);
    }
    return acc;
}

bool multiset_equal(const SignedPermSet& a, const SignedPermSet& b) {
    return a == b;
}

std::string multiset_str(const SignedPermSet& s) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : s) {
        if (!first) os << " ";
        os << c << "*" << p.cycle_str();
        first = false;
    }
    return os.str();
}

PermList generate(const PermList& generators, int degree) {
    std::set<Perm> closed;
    closed.insert(Perm::identity(degree));
    std::vector<Perm> frontier(closed.begin(), closed.end());
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const Perm& p : frontier)
            for (const Perm& g : generators) {
                Perm q = g * p;
                if (closed.insert(q).second) next.push_back(q);
            }
        frontier = std::move(next);
    }
    return PermList(closed.begin(), closed.end());
}

PermList right_coset(const PermList& H, const Perm& sigma) {
    PermList out;
    out.reserve(H.size());
    for (const Perm& h : H) out.push_back(h * sigma);
    return out;
}

PermList left_coset(const Perm& sigma, const PermList& H) {
    PermList out;
    out.reserve(H.size());
    for (const Perm& h : H) out.push_back(sigma * h);
    return out;
}

SignedPermSet product_multiset(const PermList& A, const PermList& B) {
    SignedPermSet s;
    for (const Perm& a : A)
        for (const Perm& b : B) s[a * b] += 1;
    return s;
}

namespace {

PermList parse_list(std::initializer_list<const char*> names) {
    PermList out;
    for (const char* n : names) out.push_back(Perm::cycles(n));
    return out;
}

S4Data build_s4() {
    S4Data d;
    d.all = generate(parse_list({"(12)", "(1234)"}));
    d.C = generate(parse_list({"(1234)"}));
    d.Cb = parse_list({"e", "(1234)"});
    for (const Perm& p : d.all)
        if (p.even()) d.A4.push_back(p);

    d.U1 = parse_list({"e", "(34)", "(243)", "(1432)"});
    d.V2 = parse_list({"(23)", "(1342)"});
    d.U2 = parse_list({"(23)", "(1342)", "e", "(13)(24)", "(132)", "(234)"});
    d.W3 = parse_list({"(23)", "(24)"});
    d.V3 = parse_list({"(23)", "(24)", "(34)", "(1342)", "(1423)", "(1432)"});
    auto minus = [](const PermList& a, const Perm& drop) {
        PermList out;
        for (const Perm& p : a)
            if (p != drop) out.push_back(p);
        return out;
    };
    d.V3a = minus(d.V3, Perm::cycles("(34)"));
    d.V3b = minus(d.V3, Perm::cycles("(1432)"));
    d.V3c = minus(d.V3, Perm::cycles("(1423)"));
    d.U3 = d.V3;
    for (const Perm& p : parse_list({"e", "(13)(24)", "(132)", "(142)", "(234)", "(243)"}))
        d.U3.push_back(p);
    return d;
}

} // namespace

const S4Data& S4Data::instance() {
    static const S4Data d = build_s4();
    return d;
}

Mask mask_of(std::initializer_list<int> subscripts) {
    Mask m = 0;
    for (int s : subscripts) m = static_cast<Mask>(m | (1u << (s - 1)));
    return m;
}

Mask apply_perm(const Perm& sigma, Mask m) {
    Mask out = 0;
    for (int j = 1; j <= 4; ++j)
        if (m & (1u << (j - 1))) out = static_cast<Mask>(out | (1u << (sigma(j) - 1)));
    return out;
}

SubscriptTuple act_on_subscript_tuple(const Perm& sigma, const SubscriptTuple& t) {
    SubscriptTuple out;
    out.reserve(t.size());
    for (Mask m : t) out.push_back(apply_perm(sigma, m));
    return out;
}

std::string mask_str(Mask m) {
    if (m == 0) return "0";
    std::string s = "l";
    for (int j = 1; j <= 4; ++j)
        if (m & (1u << (j - 1))) s += static_cast<char>('0' + j);
    return s;
}

std::string tuple_str(const SubscriptTuple& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += mask_str(t[i]);
    }
    return s + ")";
}

TupleMultiset orbit_multiset(const PermList& set, const SubscriptTuple& t) {
    TupleMultiset out;
    for (const Perm& p : set) out[act_on_subscript_tuple(p, t)] += 1;
    return out;
}

bool tuple_multiset_equal(const TupleMultiset& a, const TupleMultiset& b) {
    return a == b;
}

} // namespace zeta4
