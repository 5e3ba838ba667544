#include "pachner/tower.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace pachner {

namespace {

bool is_zero_term(const TowerTerm& t) { return t.height == 0 && t.argument == 0; }

// Value of the term if it is <= cap, nullopt if it provably exceeds cap.
std::optional<BigInt> eval_capped(const TowerTerm& t, const BigInt& cap) {
    if (cap < 0) throw std::invalid_argument("eval_capped: negative cap");
    BigInt v = t.argument;
    BigInt remaining = t.height;
    if (remaining == 0) return v <= cap ? std::optional<BigInt>(v) : std::nullopt;
    const BigInt cap_bits = cap == 0 ? 0 : BigInt(boost::multiprecision::msb(cap)) + 1;
    while (remaining > 0) {
        if (v > cap_bits) return std::nullopt;  // 2^v >= 2^(cap_bits) > cap
        v = BigInt(1) << static_cast<unsigned long>(v);
        --remaining;
        if (remaining > 0 && v > cap) return std::nullopt;  // e only grows
    }
    return v <= cap ? std::optional<BigInt>(v) : std::nullopt;
}

Cmp cmp_big(const BigInt& a, const BigInt& b) {
    return a < b ? Cmp::Less : a == b ? Cmp::Equal : Cmp::Greater;
}

}  // namespace

TowerExpression::TowerExpression(std::vector<TowerTerm> terms) : terms_(std::move(terms)) {
    for (const auto& t : terms_)
        if (t.height < 0 || t.argument < 0)
            throw std::invalid_argument("TowerExpression: negative component");
}

TowerExpression TowerExpression::operator+(const TowerExpression& o) const {
    std::vector<TowerTerm> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    return TowerExpression(std::move(all));
}

std::string TowerExpression::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (i) os << '+';
        const TowerTerm& t = terms_[i];
        os << "e^{";
        if (t.height > 0 && (t.height & (t.height - 1)) == 0 && t.height > 4)
            os << "2^" << boost::multiprecision::msb(t.height);
        else
            os << t.height;
        os << "}(" << t.argument << ")";
    }
    return os.str();
}

Cmp tower_cmp(const TowerExpression& e, const BigInt& n) {
    if (n < 0) throw std::invalid_argument("tower_cmp: negative target");
    BigInt sum = 0;
    for (const TowerTerm& t : e.terms()) {
        const auto v = eval_capped(t, n);
        if (!v) return Cmp::Greater;
        sum += *v;
        if (sum > n) return Cmp::Greater;
    }
    return cmp_big(sum, n);
}

Cmp tower_term_cmp(const TowerTerm& a, const TowerTerm& b) {
    // Strip common height: 2^x < 2^y iff x < y.
    const BigInt k = std::min(a.height, b.height);
    TowerTerm ra{a.height - k, a.argument};
    TowerTerm rb{b.height - k, b.argument};
    if (ra.height == 0) {
        const auto v = eval_capped(rb, ra.argument);
        if (!v) return Cmp::Less;
        return cmp_big(ra.argument, *v);
    }
    if (rb.height == 0) {
        const auto v = eval_capped(ra, rb.argument);
        if (!v) return Cmp::Greater;
        return cmp_big(*v, rb.argument);
    }
    // Both heights positive can only happen when k overflowed nothing;
    // unreachable because k = min of the two.
    throw std::logic_error("tower_term_cmp: unreachable");
}

namespace {

// ceil(log2(n)) for n >= 1.
BigInt ceil_log2(size_t n) {
    BigInt b = 0;
    size_t v = 1;
    while (v < n) {
        v <<= 1;
        ++b;
    }
    return b;
}

}  // namespace

Cmp tower_expr_cmp(const TowerExpression& a, const TowerExpression& b) {
    // Fully materialized comparison under a generous cap.
    const BigInt cap = BigInt(1) << 65536;
    BigInt sa = 0, sb = 0;
    bool ok_a = true, ok_b = true;
    for (const auto& t : a.terms()) {
        const auto v = eval_capped(t, cap);
        if (!v) {
            ok_a = false;
            break;
        }
        sa += *v;
    }
    for (const auto& t : b.terms()) {
        const auto v = eval_capped(t, cap);
        if (!v) {
            ok_b = false;
            break;
        }
        sb += *v;
    }
    if (ok_a && ok_b) return cmp_big(sa, sb);
    if (ok_a && !ok_b) return Cmp::Less;  // sa <= cap < some term of b
    if (!ok_a && ok_b) return Cmp::Greater;

    // Cancel identical terms, drop zeros.
    std::vector<TowerTerm> ta, tb;
    for (const auto& t : a.terms())
        if (!is_zero_term(t)) ta.push_back(t);
    for (const auto& t : b.terms())
        if (!is_zero_term(t)) tb.push_back(t);
    for (size_t i = 0; i < ta.size();) {
        auto it = std::find(tb.begin(), tb.end(), ta[i]);
        if (it != tb.end()) {
            tb.erase(it);
            ta.erase(ta.begin() + static_cast<long>(i));
        } else {
            ++i;
        }
    }
    if (ta.empty() && tb.empty()) return Cmp::Equal;
    if (ta.empty()) return Cmp::Less;
    if (tb.empty()) return Cmp::Greater;

    auto max_term = [](const std::vector<TowerTerm>& ts) {
        TowerTerm m = ts.front();
        for (const auto& t : ts)
            if (tower_term_cmp(t, m) == Cmp::Greater) m = t;
        return m;
    };
    const TowerTerm ma = max_term(ta), mb = max_term(tb);
    // sum(x) <= e^h(arg + ceil_log2 #terms) for the dominant term (h >= 1),
    // so a strictly smaller bumped dominant separates the sums.
    const TowerTerm bump_a{ma.height, ma.argument + ceil_log2(ta.size())};
    const TowerTerm bump_b{mb.height, mb.argument + ceil_log2(tb.size())};
    if (ma.height > 0 && tower_term_cmp(bump_a, mb) == Cmp::Less) return Cmp::Less;
    if (mb.height > 0 && tower_term_cmp(bump_b, ma) == Cmp::Less) return Cmp::Greater;

    // Beyond separation: order structurally (documented best-effort; the
    // bound expressions this library builds never reach here).
    auto key = [](const std::vector<TowerTerm>& ts) {
        std::vector<std::pair<BigInt, BigInt>> k;
        for (const auto& t : ts) k.push_back({t.height, t.argument});
        std::sort(k.rbegin(), k.rend());
        return k;
    };
    const auto ka = key(ta), kb = key(tb);
    return ka < kb ? Cmp::Less : ka == kb ? Cmp::Equal : Cmp::Greater;
}

TowerExpression theorem_bound(const BigInt& p, const BigInt& q, const BigInt& a) {
    if (p < 1 || q < 1) throw std::invalid_argument("theorem_bound: tetrahedron counts start at 1");
    if (a < 1) throw std::invalid_argument("theorem_bound: constant a must be positive");
    auto height = [&](const BigInt& n) {
        const BigInt e = a * n;
        if (e > 1u << 30) throw std::invalid_argument("theorem_bound: exponent too large");
        return BigInt(1) << static_cast<unsigned long>(e);
    };
    return TowerExpression({TowerTerm{height(p), p}, TowerTerm{height(q), q}});
}

}  // namespace pachner
