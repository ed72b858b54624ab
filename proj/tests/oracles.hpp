#pragma once

// Test-only oracles, independent of the library's computation paths:
// a permutation-sign oracle by explicit insertion sort, a brute-force
// Jacobi scan over structure constants, and a tiny int64 fraction
// elimination used to cross-check Massey verdicts.

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace oracles {

/// Sign of the permutation sorting `indices`; 0 when an index repeats.
inline int sort_sign(std::vector<int> indices) {
    int sign = 1;
    for (std::size_t i = 1; i < indices.size(); ++i)
        for (std::size_t j = i; j > 0 && indices[j - 1] >= indices[j]; --j) {
            if (indices[j - 1] == indices[j])
                return 0;
            std::swap(indices[j - 1], indices[j]);
            sign = -sign;
        }
    return sign;
}

/// Exact fraction on int64; plenty for the small oracle systems.
struct Frac {
    long long num = 0;
    long long den = 1;

    Frac() = default;
    Frac(long long n) : num(n), den(1) {}
    Frac(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0)
            den = 1;
    }
    bool is_zero() const { return num == 0; }
    friend Frac operator+(Frac a, Frac b) { return Frac(a.num * b.den + b.num * a.den, a.den * b.den); }
    friend Frac operator-(Frac a, Frac b) { return Frac(a.num * b.den - b.num * a.den, a.den * b.den); }
    friend Frac operator*(Frac a, Frac b) { return Frac(a.num * b.num, a.den * b.den); }
    friend Frac operator/(Frac a, Frac b) { return Frac(a.num * b.den, a.den * b.num); }
    friend bool operator==(Frac a, Frac b) { return a.num == b.num && a.den == b.den; }
};

using FracVec = std::vector<Frac>;
using FracMat = std::vector<FracVec>;

/// Row echelon rank; also used for span membership below.
inline int frac_rank(FracMat m) {
    int rank = 0;
    std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t sel = static_cast<std::size_t>(rank);
        while (sel < m.size() && m[sel][c].is_zero())
            ++sel;
        if (sel == m.size())
            continue;
        std::swap(m[static_cast<std::size_t>(rank)], m[sel]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == static_cast<std::size_t>(rank) || m[r][c].is_zero())
                continue;
            Frac f = m[r][c] / m[static_cast<std::size_t>(rank)][c];
            for (std::size_t j = c; j < cols; ++j)
                m[r][j] = m[r][j] - f * m[static_cast<std::size_t>(rank)][j];
        }
        ++rank;
    }
    return rank;
}

inline bool frac_in_span(const FracMat& span, const FracVec& v) {
    FracMat with = span;
    with.push_back(v);
    return frac_rank(span) == frac_rank(with);
}

/// Structure constants c[i][j][k], 0-based, antisymmetric in (i,j).
using Brackets = std::vector<std::vector<std::vector<Frac>>>;

/// Direct Jacobi scan: [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej] = 0 on
/// every basis triple.
inline bool jacobi_holds(const Brackets& c) {
    std::size_t n = c.size();
    auto bracket_basis = [&](std::size_t a, std::size_t b) { return c[a][b]; };
    auto bracket_vec = [&](const FracVec& x, std::size_t b) {
        FracVec out(n);
        for (std::size_t a = 0; a < n; ++a) {
            if (x[a].is_zero())
                continue;
            FracVec ab = bracket_basis(a, b);
            for (std::size_t k = 0; k < n; ++k)
                out[k] = out[k] + x[a] * ab[k];
        }
        return out;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                FracVec t1 = bracket_vec(bracket_basis(i, j), k);
                FracVec t2 = bracket_vec(bracket_basis(j, k), i);
                FracVec t3 = bracket_vec(bracket_basis(k, i), j);
                for (std::size_t t = 0; t < n; ++t)
                    if (!(t1[t] + t2[t] + t3[t]).is_zero())
                        return false;
            }
    return true;
}

}  // namespace oracles
