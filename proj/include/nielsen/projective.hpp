#pragma once

// Projective targets KP(n'), Reidemeister numbers, stable Hopf classes and the
// lift/correction decomposition of map classes S^m -> KP(n').

#include <optional>
#include <string>

#include "nielsen/common.hpp"
#include "nielsen/homotopy_data.hpp"

namespace nielsen {

enum class FieldTag { R, C, H };

struct Field {
    FieldTag tag = FieldTag::R;
    int d = 1;

    /// "R", "C" or "H".
    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;
};

Field field(FieldTag tag);
/// Accepts R, C, H (case-insensitive). Throws DomainError.
Field parse_field(const std::string& s);

struct ProjSpace {
    Field field;
    int n_prime = 1;
    int n = 1;             // d * n'
    int q = 1;             // n + d - 1, dimension of the total sphere
    int reidemeister = 2;  // # pi_1, for n >= 2

    /// "RP(2)", "CP(1)", "HP(3)".
    std::string name() const;

    friend bool operator==(const ProjSpace&, const ProjSpace&) = default;
};

/// Throws DomainError for n' < 1.
ProjSpace space(FieldTag tag, int n_prime);

/// # pi_1 of the target; Infinite for RP(1) = S^1.
InvariantValue reidemeister(const ProjSpace& s, int m);

/// Stable class of the Hopf map: 2 iota, eta or nu.
StableElement hopf_stable(const TableSet& t, FieldTag tag);

/// Whether the lift decomposition exists: n' >= 2 or pi_{m-1}(S^{d-1}) = 0.
bool decompose_valid(const TableSet& t, const ProjSpace& s, int m);

/// An element of pi_m(KP(n')) as (lift in pi_m(S^q), correction in pi_{m-1}(S^{d-1})).
struct MapClass {
    ProjSpace space;
    int m = 2;
    SphereElement lift;
    /// nullopt when pi_{m-1}(S^{d-1}) is not tabulated.
    std::optional<SphereElement> correction;

    bool is_constant() const;
};

/// Checks the decomposition hypothesis and that lift lies in pi_m(S^q). Throws DomainError.
MapClass map_class(const TableSet& t, const ProjSpace& s, int m, const SphereElement& lift,
                   std::optional<SphereElement> correction = std::nullopt);
MapClass constant_map(const TableSet& t, const ProjSpace& s, int m);

}  // namespace nielsen
