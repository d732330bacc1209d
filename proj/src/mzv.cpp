#include "zeta4/mzv.hpp"

#include <mutex>

#include "zeta4/errors.hpp"
#include "zeta4/polylog.hpp"
#include "zeta4/qshuffle.hpp"

namespace zeta4 {

std::vector<int> to_binary_word(const IndexWord& w) {
    std::vector<int> b;
    for (int part : w.parts()) {
        for (int i = 0; i < part - 1; ++i) b.push_back(0);
        b.push_back(1);
    }
    return b;
}

IndexWord from_binary_word(const std::vector<int>& b) {
    std::vector<int> parts;
    int zeros = 0;
    for (int bit : b) {
        if (bit == 0) {
            ++zeros;
        } else {
            parts.push_back(zeros + 1);
            zeros = 0;
        }
    }
    if (zeros != 0) throw InvalidArguments("from_binary_word: word must end in 1");
    return IndexWord(parts);
}

namespace {

// value of one split piece at z = 1/2; empty word contributes 1
LiValue piece_value(const std::vector<int>& parts, const BigReal& piece_err, mpfr_prec_t prec) {
    if (parts.empty()) {
        LiValue one{BigReal(1, prec), BigReal(0, prec), 0};
        return one;
    }
    BigReal half = BigReal(1, prec) / 2;
    std::vector<int> flat(parts.size(), 1);
    return eval_li(parts, flat, half, piece_err, prec);
}

} // namespace

MzvValue eval_mzv(const IndexWord& w, const BigReal& target_err, mpfr_prec_t prec) {
    if (!w.admissible()) throw InvalidArguments("eval_mzv: index not admissible");
    const std::vector<int> a = to_binary_word(w);
    const int l = static_cast<int>(a.size());

    BigReal piece_err = target_err / (64L * (l + 1));
    BigReal value(0, prec), err(0, prec);
    for (int j = 0; j <= l; ++j) {
        // upper part of the domain: reversed prefix with letters flipped
        std::vector<int> upper_bits;
        for (int i = j - 1; i >= 0; --i) upper_bits.push_back(1 - a[static_cast<std::size_t>(i)]);
        std::vector<int> lower_bits(a.begin() + j, a.end());
        std::vector<int> upper_parts = upper_bits.empty() ? std::vector<int>{} : from_binary_word(upper_bits).parts();
        std::vector<int> lower_parts = lower_bits.empty() ? std::vector<int>{} : from_binary_word(lower_bits).parts();
        LiValue u = piece_value(upper_parts, piece_err, prec);
        LiValue v = piece_value(lower_parts, piece_err, prec);
        value += u.value * v.value;
        err += u.err * v.value.abs() + v.err * u.value.abs() + u.err * v.err;
    }
    // rounding slop for the products and sums
    BigReal slop = (value.abs() + BigReal(8, prec)) * (8L * (l + 1));
    mpfr_mul_2si(slop.raw(), slop.raw(), -static_cast<long>(prec - 4), MPFR_RNDU);
    err += slop;
    return MzvValue{w, value, err, false};
}

std::map<IndexWord, Rational> star_expansion(const IndexWord& w) {
    static std::map<std::vector<int>, std::map<IndexWord, Rational>> memo;
    static std::mutex memo_mu;
    {
        std::lock_guard<std::mutex> lock(memo_mu);
        auto it = memo.find(w.parts());
        if (it != memo.end()) return it->second;
    }

    std::map<IndexWord, Rational> out;
    if (w.admissible()) {
        out[w] = 1;
    } else {
        int leading = 0;
        while (leading < w.depth() && w[leading] == 1) ++leading;
        if (leading < w.depth()) {
            if (w.depth() > 4)
                throw UnsupportedIndex("star_expansion: depth above four not supported");
            // harmonic product of Li(1^a) with Li(tail), all flat arguments;
            // the constant term of the product vanishes, which eliminates
            // the unknown in favour of words with fewer leading ones.
            std::vector<Letter> A, B;
            for (int i = 0; i < leading; ++i) A.push_back({static_cast<Mask>(1u << i), 1});
            for (int i = leading; i < w.depth(); ++i) B.push_back({static_cast<Mask>(1u << i), 1});
            FormalLiSum prod = stuffle(A, B);
            std::array<int, 4> comp{1, 1, 1, 1};
            for (int i = 0; i < w.depth(); ++i) comp[static_cast<std::size_t>(i)] = w[i];
            // collect by index word; the argument pattern does not affect
            // the constant term for these shapes
            std::map<std::vector<int>, Rational> words;
            for (const auto& [sym, c] : instantiate(prod, comp)) {
                Rational& slot = words[sym.word];
                slot += c;
                if (slot == 0) words.erase(sym.word);
            }
            auto self = words.find(w.parts());
            if (self == words.end() || self->second != 1)
                throw UnsupportedIndex("star_expansion: elimination failed for " + w.str());
            words.erase(self);
            for (const auto& [parts, c] : words) {
                for (const auto& [adm, inner] : star_expansion(IndexWord(parts))) {
                    Rational& slot = out[adm];
                    slot -= c * inner;
                    if (slot == 0) out.erase(adm);
                }
            }
        }
        // all-ones words expand to zero
    }

    std::lock_guard<std::mutex> lock(memo_mu);
    memo[w.parts()] = out;
    return out;
}

BigReal MzvEvaluator::compute(const IndexWord& w, bool star) {
    if (!star && !w.admissible())
        throw InvalidArguments("zeta: index not admissible; use zeta_star");
    if (star && !w.admissible()) {
        if (cache_) {
            auto rec = cache_->lookup(w.parts(), true);
            if (rec && rec->prec_bits >= static_cast<long>(prec_)) {
                BigReal err = BigReal::from_string(rec->err, 64);
                if (err <= target_err_)
                    return BigReal::from_string(rec->value, static_cast<mpfr_prec_t>(rec->prec_bits));
            }
        }
        std::map<IndexWord, Rational> exp = star_expansion(w);
        BigReal acc(0, prec_);
        BigReal errsum(0, prec_);
        for (const auto& [adm, c] : exp) {
            acc += zeta(adm) * BigReal(c, prec_);
            errsum += target_err_ * BigReal(abs(c), prec_);
        }
        if (cache_) {
            MzvCache::Record rec;
            rec.index = w.parts();
            rec.star = true;
            rec.value = acc.to_string();
            rec.err = errsum.to_string();
            rec.prec_bits = static_cast<long>(prec_);
            cache_->store(rec);
        }
        return acc;
    }
    if (cache_) {
        auto rec = cache_->lookup(w.parts(), false);
        if (rec && rec->prec_bits >= static_cast<long>(prec_)) {
            BigReal err = BigReal::from_string(rec->err, 64);
            if (err <= target_err_) {
                if (err > worst_err_) worst_err_ = err;
                return BigReal::from_string(rec->value, static_cast<mpfr_prec_t>(rec->prec_bits));
            }
        }
    }
    MzvValue v = eval_mzv(w, target_err_, prec_);
    if (v.err > worst_err_) worst_err_ = v.err;
    if (cache_) {
        MzvCache::Record rec;
        rec.index = w.parts();
        rec.star = false;
        rec.value = v.value.to_string();
        rec.err = v.err.to_string();
        rec.prec_bits = static_cast<long>(prec_);
        cache_->store(rec);
    }
    return v.value;
}

BigReal MzvEvaluator::zeta(const IndexWord& w) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto key = std::make_pair(w.parts(), false);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    BigReal v = compute(w, false);
    memo_.emplace(key, v);
    return v;
}

BigReal MzvEvaluator::zeta_star(const IndexWord& w) {
    if (w.admissible()) return zeta(w);
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto key = std::make_pair(w.parts(), true);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    BigReal v = compute(w, true);
    memo_.emplace(key, v);
    return v;
}

} // namespace zeta4
