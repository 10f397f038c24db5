#pragma once

// Shared helpers for the test binaries: seeded generators and brute-force oracles.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nielsen/fgab.hpp"

namespace testsupport {

using nielsen::FgAbGroup;
using nielsen::GroupElement;
using nielsen::Int;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    Int uniform(Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(gen_); }
    bool coin() { return uniform(0, 1) == 1; }
    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

using Big = boost::multiprecision::cpp_int;
using BigMatrix = std::vector<std::vector<Big>>;

/// Arbitrary-precision copies so that oracle checks cannot overflow.
inline BigMatrix widen(const nielsen::IntMatrix& m)
{
    BigMatrix out(m.rows(), std::vector<Big>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i][j] = m(i, j);
    return out;
}

inline BigMatrix big_product(const BigMatrix& a, const BigMatrix& b, std::size_t inner, std::size_t cols)
{
    BigMatrix out(a.size(), std::vector<Big>(cols, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k)
            for (std::size_t j = 0; j < cols; ++j)
                out[i][j] += a[i][k] * b[k][j];
    return out;
}

/// Determinant by cofactor-free Gaussian elimination over exact big integers (Bareiss).
inline Big big_determinant(BigMatrix a)
{
    const std::size_t n = a.size();
    if (n == 0)
        return 1;
    Big sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && a[s][k] == 0)
                ++s;
            if (s == n)
                return 0;
            std::swap(a[k], a[s]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

/// Every element of a finite group, in lexicographic coefficient order.
inline std::vector<GroupElement> enumerate(const FgAbGroup& g)
{
    std::vector<GroupElement> out;
    std::vector<Int> c(g.num_generators(), 0);
    for (;;) {
        out.push_back(g.element(c));
        std::size_t i = 0;
        while (i < c.size()) {
            if (++c[i] < g.torsion()[i])
                break;
            c[i] = 0;
            ++i;
        }
        if (i == c.size())
            break;
    }
    return out;
}

/// Closure of a generating set under addition, by breadth-first search.
inline std::set<std::vector<Int>> span_closure(const FgAbGroup& g, const std::vector<GroupElement>& gens)
{
    std::set<std::vector<Int>> seen{g.zero().coeffs()};
    std::vector<GroupElement> frontier{g.zero()};
    while (!frontier.empty()) {
        std::vector<GroupElement> next;
        for (const auto& x : frontier)
            for (const auto& s : gens) {
                GroupElement y = x + s;
                if (seen.insert(y.coeffs()).second)
                    next.push_back(y);
            }
        frontier = std::move(next);
    }
    return seen;
}

/// A random finite group with at most max_order elements.
inline FgAbGroup random_finite_group(Rng& rng, Int max_order)
{
    std::vector<Int> orders;
    Int size = 1;
    int factors = static_cast<int>(rng.uniform(0, 4));
    for (int i = 0; i < factors; ++i) {
        Int t = rng.uniform(2, 30);
        if (size * t > max_order)
            break;
        size *= t;
        orders.push_back(t);
    }
    return FgAbGroup::from_orders(0, orders);
}

inline GroupElement random_element(Rng& rng, const FgAbGroup& g)
{
    std::vector<Int> c(g.num_generators());
    for (std::size_t i = 0; i < c.size(); ++i) {
        Int t = g.generator_order(i);
        c[i] = t == 0 ? rng.uniform(-5, 5) : rng.uniform(0, t - 1);
    }
    return g.element(std::move(c));
}

/// A random well-defined homomorphism matrix between finite groups.
inline nielsen::IntMatrix random_hom_matrix(Rng& rng, const FgAbGroup& dom, const FgAbGroup& cod)
{
    nielsen::IntMatrix m(cod.num_generators(), dom.num_generators());
    for (std::size_t j = 0; j < dom.num_generators(); ++j) {
        Int t = dom.generator_order(j);
        for (std::size_t i = 0; i < cod.num_generators(); ++i) {
            Int e = cod.generator_order(i);
            Int step = e / std::gcd(t, e);
            m(i, j) = step * rng.uniform(0, e / step - 1);
        }
    }
    return m;
}

}  // namespace testsupport
