#pragma once

// Reidemeister, minimum and Nielsen coincidence numbers for maps from spheres
// into spheres and projective spaces, and the kernel-chain equivalence scan.

#include <optional>
#include <string>
#include <vector>

#include "nielsen/common.hpp"
#include "nielsen/homotopy_data.hpp"
#include "nielsen/projective.hpp"

namespace nielsen {

struct Report {
    std::string target;  // "S^5" or "RP(2)"
    int m = 0;
    int n = 0;
    bool projective = false;
    std::string f1;
    std::string f2;

    InvariantValue R;
    InvariantValue MCC;
    InvariantValue MC;
    InvariantValue N_sharp;
    InvariantValue N_tilde;
    InvariantValue N_plain;
    InvariantValue N_z;

    std::vector<std::string> hypothesis_notes;
    std::vector<std::string> derivation;
    bool kervaire_flag = false;
};

/// Pairs S^m -> S^n given by elements of pi_m(S^n).
Report sphere_report(const TableSet& t, const SphereElement& f1, const SphereElement& f2);

/// Pairs S^m -> KP(n'). N is reported for the difference of lifts lift(f1) - lift(f2).
Report projective_report(const TableSet& t, const MapClass& f1, const MapClass& f2, bool assume_self_loose = false);

struct EquivalenceVerdict {
    std::string target;
    int m = 0;
    int n = 0;
    Tri sharp_tilde = Tri::Unknown;  // N^# == N~, Ker Gamma = 0
    Tri tilde_plain = Tri::Unknown;  // N~ == N, Ker Gamma = Ker(h E^infinity)
    Tri plain_zero = Tri::Unknown;   // N == 0, Ker(h E^infinity) = whole
    Tri plain_z = Tri::Unknown;      // N == N^Z
    Tri z_zero = Tri::Unknown;       // N^Z == 0
    std::vector<std::string> notes;

    /// "N^# ≡ Ñ ≢ N ≡ N^Z ≡ 0", with "?" for undecided relations.
    std::string relations() const;
};

/// Equivalences over all pairs of maps S^m -> S^n.
EquivalenceVerdict sphere_equivalence_scan(const TableSet& t, int m, int n);
/// Equivalences over all pairs of maps S^m -> KP(n'); n' = 1 uses the sphere KP(1) = S^d.
EquivalenceVerdict equivalence_scan(const TableSet& t, const ProjSpace& s, int m);

/// Rows "m=4,5: ..." merging consecutive m with identical relations.
std::vector<std::string> format_compare_rows(const std::vector<EquivalenceVerdict>& verdicts);

struct KervaireResult {
    std::optional<Report> report;
    std::string note;
};

/// The non-Wecken pairs (f, f) for K = R, n in {16, 32, 64}, m = 2n - 2.
KervaireResult kervaire_exception(FieldTag tag, int n, int m);

enum class WeckenStatus { Holds, FailsWithWitness, Unknown };

std::string to_string(WeckenStatus w);

struct WeckenResult {
    WeckenStatus status = WeckenStatus::Unknown;
    std::string note;
};

/// Whether MCC = N^# for all pairs S^m -> KP(n').
WeckenResult wecken_status(const ProjSpace& s, int m);

struct ChainCheck {
    bool ok = true;
    std::vector<std::string> violations;
    std::vector<std::string> notes;
};

/// MC >= MCC >= N^# >= N~ >= N >= N^Z >= 0 among finite entries, and MCC <= R (informational when n = 2).
ChainCheck chain_check(const Report& r);
/// Every finite value of a projective report is 0 or R.
bool dichotomy_holds(const Report& r);

}  // namespace nielsen
