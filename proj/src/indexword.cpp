#include "zeta4/indexword.hpp"

#include <sstream>

namespace zeta4 {

std::string IndexWord::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

std::string ZPattern::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (i) os << ',';
        os << "z^" << exps_[i];
    }
    os << ')';
    return os.str();
}

ZPattern ZPattern::ladder(int n) {
    std::vector<int> e(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = i + 1;
    return ZPattern(std::move(e));
}

ZPattern ZPattern::flat(int n) {
    return ZPattern(std::vector<int>(static_cast<std::size_t>(n), 1));
}

namespace {

void emit(std::vector<int>& cur, int remaining, int slots, std::vector<IndexWord>& out) {
    if (slots == 1) {
        cur.push_back(remaining);
        out.emplace_back(cur);
        cur.pop_back();
        return;
    }
    for (int v = 1; v <= remaining - (slots - 1); ++v) {
        cur.push_back(v);
        emit(cur, remaining - v, slots - 1, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<IndexWord> compositions(int weight, int depth, bool admissible_only) {
    if (depth < 1 || weight < depth)
        throw InvalidArguments("compositions: need weight >= depth >= 1");
    if (admissible_only && weight < depth + 1)
        throw InvalidArguments("compositions: admissible needs weight >= depth+1");
    std::vector<IndexWord> out;
    int first_min = admissible_only ? 2 : 1;
    if (depth == 1) {
        out.emplace_back(std::vector<int>{weight});
        return out;
    }
    std::vector<int> cur;
    for (int l1 = first_min; l1 <= weight - (depth - 1); ++l1) {
        cur.push_back(l1);
        emit(cur, weight - l1, depth - 1, out);
        cur.pop_back();
    }
    return out;
}

std::pair<IndexWord, ZPattern> checked_pair(const IndexWord& w, const ZPattern& z) {
    if (w.depth() != z.length())
        throw ArityMismatch("index word depth " + std::to_string(w.depth()) +
                            " vs argument pattern length " + std::to_string(z.length()));
    return {w, z};
}

} // namespace zeta4
