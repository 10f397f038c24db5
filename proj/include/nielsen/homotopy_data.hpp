#pragma once

// Curated homotopy groups pi_m(S^q) with per-generator annotations, and the
// queries built on them: suspension, stabilization, the James-Hopf total
// invariant Gamma, composition with the antipodal map, and the kernel chain.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nielsen/common.hpp"
#include "nielsen/fgab.hpp"
#include "nielsen/stable_ring.hpp"

namespace nielsen {

/// Coordinates of a stable element in the stem of the given degree.
struct StableCoords {
    int degree = 0;
    std::vector<Int> coeffs;

    friend bool operator==(const StableCoords&, const StableCoords&) = default;
};

struct GeneratorRecord {
    std::string name;
    std::optional<std::vector<Int>> susp;  // coordinates in pi_{m+1}(S^{q+1})
    std::optional<StableCoords> stab;      // degree m - q
    std::map<int, StableCoords> gamma;     // k >= 2, degree m - 1 - k(q - 1)
    std::optional<std::vector<Int>> antip; // coordinates in the same group
    std::string source;

    friend bool operator==(const GeneratorRecord&, const GeneratorRecord&) = default;
};

struct SphereGroupEntry {
    int m = 0;
    int q = 0;
    FgAbGroup group;
    std::vector<GeneratorRecord> generators;
    std::string source;
    bool closed_form = false;

    std::vector<std::string> generator_names() const;

    friend bool operator==(const SphereGroupEntry&, const SphereGroupEntry&) = default;
};

struct NamedElementRecord {
    std::string name;
    int m = 0;
    int q = 0;
    std::vector<Int> coeffs;
    std::string source;

    friend bool operator==(const NamedElementRecord&, const NamedElementRecord&) = default;
};

/// An element of pi_m(S^q).
struct SphereElement {
    int m = 0;
    int q = 0;
    GroupElement value;

    bool is_zero() const { return value.is_zero(); }
    SphereElement operator+(const SphereElement& o) const;
    SphereElement operator-(const SphereElement& o) const;
    SphereElement scale(Int k) const { return {m, q, value.scale(k)}; }

    friend bool operator==(const SphereElement&, const SphereElement&) = default;
};

class TableSet {
public:
    std::map<std::pair<int, int>, SphereGroupEntry> entries;
    StableRing ring;
    std::vector<NamedElementRecord> names;

    /// Tabulated entry or closed form. Throws OutOfTabulatedRange otherwise.
    SphereGroupEntry lookup(int m, int q) const;
    bool covers(int m, int q) const;

    SphereElement zero(int m, int q) const;
    SphereElement element(int m, int q, std::vector<Int> coeffs) const;
    /// Registered element by name, e.g. "hopfC" or "whitehead(5)". Throws LookupError.
    SphereElement named(const std::string& name) const;
    const NamedElementRecord* find_name(const std::string& name) const;

    /// "0", "eta_3", "6*nu'", "nu_4 + 11*Enu'".
    std::string describe(const SphereElement& x) const;

    friend bool operator==(const TableSet&, const TableSet&) = default;
};

/// Closed-form groups need no table data: q <= 1, m < q, or m = q.
bool is_closed_form(int m, int q);
SphereGroupEntry closed_form_entry(int m, int q);

/// Syntax error with 1-based line and column.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& what);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Structural error in well-formed input, with the path of the offending entity.
class SemanticError : public std::runtime_error {
public:
    SemanticError(std::string path, const std::string& what);
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

/// Parses and structurally checks a table file. All-or-nothing.
TableSet load_tables(std::string_view source);
TableSet load_tables_file(const std::string& path);
/// Canonical text form; load_tables(serialize_tables(t)) == t.
std::string serialize_tables(const TableSet& t);
/// The dataset compiled into the library.
std::string_view embedded_tables();
const TableSet& default_tables();

// ---------------------------------------------------------------------------
// Queries

Partial<SphereElement> suspend(const TableSet& t, const SphereElement& x);
/// Iterated suspension.
Partial<SphereElement> suspend(const TableSet& t, const SphereElement& x, int times);
Partial<StableElement> stabilize(const TableSet& t, const SphereElement& x);
/// [a o x] for the antipodal map a of S^q.
Partial<SphereElement> antipodal_compose(const TableSet& t, const SphereElement& x);

struct GammaValue {
    int m = 0;
    int q = 0;
    /// Index k - 1 holds component k, k = 1 .. kmax; nullopt when not determined by the data.
    std::vector<std::optional<StableElement>> components;
    std::vector<std::string> missing;

    /// Yes only when every component is known and zero; No as soon as one known component is nonzero.
    Tri is_zero() const;
};

/// Largest k with a Gamma component on pi_m(S^q), i.e. floor((m - 1) / (q - 1)).
int gamma_kmax(int m, int q);
int gamma_degree(int m, int q, int k);
GammaValue gamma(const TableSet& t, const SphereElement& x);

/// Membership of x in the image of suspension from pi_{m-1}(S^{q-1}).
Tri suspension_image_contains(const TableSet& t, const SphereElement& x);

/// One Gamma component, or h * E^infinity, as a homomorphism when fully determined.
Partial<Homomorphism> gamma_component_hom(const TableSet& t, int m, int q, int k);
Partial<Homomorphism> hopf_stab_hom(const TableSet& t, int m, int q, const StableElement& h);

struct KernelChain {
    Subgroup ker_gamma;
    Subgroup ker_hopf_stab;
    Subgroup whole;
};

/// {0} <= Ker Gamma <= Ker(h * E^infinity) <= pi_m(S^q). Throws IncompleteData naming
/// the missing annotation when the data does not decide a kernel.
KernelChain kernel_chain(const TableSet& t, int m, int q, const StableElement& h);

// ---------------------------------------------------------------------------
// Validation

struct Violation {
    std::string check;
    std::string path;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// Internal consistency of a loaded table set.
ValidationReport validate(const TableSet& t);
/// Load and validate; load failures are reported as violations.
ValidationReport validate_source(std::string_view source);

}  // namespace nielsen
