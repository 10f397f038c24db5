#pragma once

// Looseness of self-coincidence pairs (f, f) and the block self-map s of the
// unit sphere in K^{n'+1}, with exact rational quaternion arithmetic.

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nielsen/projective.hpp"

namespace nielsen {

using Rational = boost::multiprecision::cpp_rational;

/// a + b i + c j + d k over the rationals.
struct Quaternion {
    Rational a, b, c, d;

    static Quaternion real(Rational x) { return {std::move(x), 0, 0, 0}; }
    static Quaternion one() { return {1, 0, 0, 0}; }
    static Quaternion i() { return {0, 1, 0, 0}; }
    static Quaternion j() { return {0, 0, 1, 0}; }
    static Quaternion k() { return {0, 0, 0, 1}; }

    Quaternion conj() const { return {a, -b, -c, -d}; }
    Rational norm2() const { return a * a + b * b + c * c + d * d; }
    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }

    Quaternion operator+(const Quaternion& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    Quaternion operator-(const Quaternion& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    Quaternion operator-() const { return {-a, -b, -c, -d}; }
    Quaternion operator*(const Quaternion& o) const;

    std::string to_string() const;

    friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

/// A vector in K^{n'+1}; scalars are quaternions confined to the subfield K.
struct KVector {
    Field field;
    std::vector<Quaternion> entries;

    Rational norm2() const;
    std::string to_string() const;

    friend bool operator==(const KVector&, const KVector&) = default;
};

/// Throws DomainError when an entry leaves the subfield R, C = R + Ri, or H.
KVector make_kvector(Field f, std::vector<Quaternion> entries);

/// Left scalar multiplication lambda * x.
KVector scale_left(const Quaternion& lambda, const KVector& x);

enum class LooseVerdict { Loose, NotLoose, Unknown };

std::string to_string(LooseVerdict v);

struct Looseness {
    LooseVerdict verdict = LooseVerdict::Unknown;
    std::string reason;
};

/// Whether the congruence condition on (K, n') holds: n' odd for R, C; n' = 23 mod 24 for H.
bool congruence_condition(FieldTag tag, int n_prime);

/// Looseness of (f, f) for every f: S^m -> KP(n').
Looseness self_loose(FieldTag tag, int m, int n_prime);
/// Looseness of (p, p) for the fiber projection p: S^{d(n'+1)-1} -> KP(n').
Looseness fiber_projection_self_loose(FieldTag tag, int n_prime);

/// (x1, x2; x3, x4; ...) -> (-conj x2, conj x1; -conj x4, conj x3; ...). Needs an even number of entries.
KVector selfmap_s(const KVector& x);

/// Squared distance from s(x/|x|) to the left K-line through x/|x|.
Rational residual_not_parallel(const KVector& x);

struct Counterexample {
    KVector x;
    Quaternion lambda;
};

/// x = (j, k, 0, ...) in H^{n'+1} with s(x) = i x. n' odd.
Counterexample quaternion_counterexample(int n_prime = 1);

/// Seeded exact rational points on the unit sphere of K^{n'+1}, by inverse stereographic projection.
std::vector<KVector> sample_unit_vectors(Field f, int n_prime, std::size_t count, std::uint64_t seed);

}  // namespace nielsen
