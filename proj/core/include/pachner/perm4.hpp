#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace pachner {

/// Permutation of {0,1,2,3}. Carrier for face gluings: a gluing permutation
/// acts on the vertex labels of a whole tetrahedron and carries the glued
/// face index to the target face index.
class Perm4 {
public:
    constexpr Perm4() : img_{0, 1, 2, 3} {}

    constexpr Perm4(int a, int b, int c, int d)
        : img_{static_cast<uint8_t>(a), static_cast<uint8_t>(b),
               static_cast<uint8_t>(c), static_cast<uint8_t>(d)} {
        int seen = 0;
        for (int v : {a, b, c, d}) {
            if (v < 0 || v > 3) throw std::invalid_argument("Perm4: image out of range");
            seen |= 1 << v;
        }
        if (seen != 0xf) throw std::invalid_argument("Perm4: images not distinct");
    }

    constexpr int operator[](int v) const { return img_[v]; }

    constexpr Perm4 inverse() const {
        Perm4 r;
        for (int v = 0; v < 4; ++v) r.img_[img_[v]] = static_cast<uint8_t>(v);
        return r;
    }

    /// Composition: (p * q)(x) = p(q(x)).
    constexpr Perm4 operator*(const Perm4& q) const {
        Perm4 r;
        for (int v = 0; v < 4; ++v) r.img_[v] = img_[q.img_[v]];
        return r;
    }

    constexpr bool is_identity() const {
        return img_[0] == 0 && img_[1] == 1 && img_[2] == 2 && img_[3] == 3;
    }

    /// +1 for even permutations, -1 for odd ones.
    constexpr int sign() const {
        int inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (img_[i] > img_[j]) ++inv;
        return (inv % 2 == 0) ? 1 : -1;
    }

    static constexpr Perm4 transposition(int a, int b) {
        Perm4 r;
        r.img_[a] = static_cast<uint8_t>(b);
        r.img_[b] = static_cast<uint8_t>(a);
        return r;
    }

    /// Lexicographic rank among all 24 permutations.
    constexpr int index() const {
        int rank = 0;
        for (int i = 0; i < 4; ++i) {
            int smaller = 0;
            for (int j = i + 1; j < 4; ++j)
                if (img_[j] < img_[i]) ++smaller;
            int fact = 1;
            for (int k = 2; k <= 3 - i; ++k) fact *= k;
            rank += smaller * fact;
        }
        return rank;
    }

    static constexpr int count = 24;

    static constexpr Perm4 at(int rank) {
        bool used[4] = {false, false, false, false};
        Perm4 r;
        int fact[4] = {6, 2, 1, 1};
        for (int i = 0; i < 4; ++i) {
            int q = rank / fact[i];
            rank %= fact[i];
            for (int v = 0; v < 4; ++v) {
                if (used[v]) continue;
                if (q == 0) {
                    r.img_[i] = static_cast<uint8_t>(v);
                    used[v] = true;
                    break;
                }
                --q;
            }
        }
        return r;
    }

    /// Four digits, image of vertex v at position v ("0123" is the identity).
    std::string digits() const {
        std::string s(4, '0');
        for (int v = 0; v < 4; ++v) s[v] = static_cast<char>('0' + img_[v]);
        return s;
    }

    static Perm4 from_digits(const std::string& s) {
        if (s.size() != 4) throw std::invalid_argument("Perm4: expected 4 digits");
        int v[4];
        for (int i = 0; i < 4; ++i) {
            if (s[i] < '0' || s[i] > '3')
                throw std::invalid_argument("Perm4: digit out of range");
            v[i] = s[i] - '0';
        }
        return Perm4(v[0], v[1], v[2], v[3]);
    }

    friend constexpr auto operator<=>(const Perm4&, const Perm4&) = default;

private:
    std::array<uint8_t, 4> img_;
};

}  // namespace pachner
