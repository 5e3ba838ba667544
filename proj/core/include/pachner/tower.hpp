#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace pachner {

using BigInt = boost::multiprecision::cpp_int;

/// e^height(argument) where e(x) = 2^x composed height times.
struct TowerTerm {
    BigInt height;
    BigInt argument;

    friend bool operator==(const TowerTerm&, const TowerTerm&) = default;
};

/// A sum of iterated-exponential terms, compared lazily: unfolding stops as
/// soon as a tower provably exceeds the comparison target, so expressions
/// with astronomically tall towers stay cheap to handle.
class TowerExpression {
public:
    TowerExpression() = default;
    explicit TowerExpression(std::vector<TowerTerm> terms);

    const std::vector<TowerTerm>& terms() const { return terms_; }

    TowerExpression operator+(const TowerExpression& o) const;

    /// Renders e^{h}(x)+...; heights that are exact powers of two print as
    /// 2^k to keep theorem-sized expressions readable.
    std::string str() const;

private:
    std::vector<TowerTerm> terms_;
};

enum class Cmp { Less, Equal, Greater };

/// Exact three-way comparison against a natural number. Never materializes
/// more than O(bits(n)) worth of tower, so it is safe for any height.
Cmp tower_cmp(const TowerExpression& e, const BigInt& n);

/// Exact comparison of two single terms.
Cmp tower_term_cmp(const TowerTerm& a, const TowerTerm& b);

/// Comparison of two expressions: exact whenever either both sides fit in a
/// large evaluation cap or term cancellation plus dominant-term separation
/// decides the order (which covers sums of theorem-style terms).
Cmp tower_expr_cmp(const TowerExpression& a, const TowerExpression& b);

/// The Pachner path-length bound e^{2^{a p}}(p) + e^{2^{a q}}(q).
TowerExpression theorem_bound(const BigInt& p, const BigInt& q, const BigInt& a = 200);

}  // namespace pachner
