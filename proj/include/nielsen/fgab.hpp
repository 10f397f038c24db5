#pragma once

// Exact arithmetic for finitely generated abelian groups.
//
// Groups are kept in invariant-factor form Z^r + Z_{t1} + ... + Z_{tk} with
// t1 | t2 | ... | tk, so two groups are isomorphic iff they compare equal.
// Generators are ordered free-first, then torsion in the order of the factors.
// All integer arithmetic is checked 64-bit; overflow throws OverflowError.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nielsen {

using Int = std::int64_t;

class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

namespace checked {
Int add(Int a, Int b);
Int sub(Int a, Int b);
Int mul(Int a, Int b);
Int neg(Int a);
/// Representative of a in [0, m), m >= 1.
Int mod(Int a, Int m);
Int gcd(Int a, Int b);
Int lcm(Int a, Int b);
}  // namespace checked

/// Dense integer matrix with explicit shape, so 0 x n and n x 0 are representable.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols, Int fill = 0);
    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Int> column(std::size_t c) const;
    void set_column(std::size_t c, std::span<const Int> values);

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
std::vector<Int> operator*(const IntMatrix& a, std::span<const Int> x);

/// Determinant by fraction-free elimination (Bareiss). Square matrices only.
Int determinant(const IntMatrix& a);

struct SmithForm {
    IntMatrix U;  // rows x rows, unimodular
    IntMatrix D;  // rows x cols, diagonal, d_i | d_{i+1}, d_i >= 0
    IntMatrix V;  // cols x cols, unimodular
    std::size_t rank = 0;
};

/// D = U * m * V.
SmithForm smith_normal_form(const IntMatrix& m);

class GroupElement;

class FgAbGroup {
public:
    /// The trivial group.
    FgAbGroup() = default;
    /// Throws DomainError unless torsion is a divisibility chain of integers >= 2.
    FgAbGroup(int free_rank, std::vector<Int> torsion);

    static FgAbGroup trivial() { return {}; }
    static FgAbGroup integers() { return FgAbGroup(1, {}); }
    /// Z_n; n == 0 gives Z and n == 1 the trivial group.
    static FgAbGroup cyclic(Int n);
    /// Normalizes an arbitrary list of cyclic orders (each >= 1) plus a free rank.
    static FgAbGroup from_orders(int free_rank, std::span<const Int> orders);

    int free_rank() const { return free_rank_; }
    const std::vector<Int>& torsion() const { return torsion_; }
    std::size_t num_generators() const { return static_cast<std::size_t>(free_rank_) + torsion_.size(); }
    bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
    bool is_finite() const { return free_rank_ == 0; }
    /// Order of the group; nullopt when infinite.
    std::optional<Int> order() const;
    /// Order of the i-th generator, 0 meaning infinite.
    Int generator_order(std::size_t i) const;
    /// Largest torsion factor (1 for torsion-free groups).
    Int exponent() const;

    GroupElement zero() const;
    GroupElement generator(std::size_t i) const;
    GroupElement element(std::vector<Int> coeffs) const;

    /// "0", "Z", "Z_2", "Z + Z_12" style description.
    std::string to_string() const;

    friend bool operator==(const FgAbGroup&, const FgAbGroup&) = default;

private:
    int free_rank_ = 0;
    std::vector<Int> torsion_;
};

/// An element with canonical coefficients: torsion coordinates reduced to [0, order).
class GroupElement {
public:
    GroupElement() = default;
    GroupElement(FgAbGroup parent, std::vector<Int> coeffs);

    const FgAbGroup& parent() const { return parent_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    GroupElement operator+(const GroupElement& other) const;
    GroupElement operator-(const GroupElement& other) const;
    GroupElement operator-() const;
    GroupElement scale(Int k) const;

    std::string to_string() const;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;

private:
    void check_same_parent(const GroupElement& other) const;

    FgAbGroup parent_;
    std::vector<Int> coeffs_;
};

/// Least k >= 1 with k * a == 0; nullopt when a has infinite order.
std::optional<Int> element_order(const GroupElement& a);

class Homomorphism {
public:
    Homomorphism() = default;
    /// matrix is codomain.num_generators() x domain.num_generators(); column j is
    /// the image of domain generator j. Throws DomainError if not well defined.
    Homomorphism(FgAbGroup domain, FgAbGroup codomain, IntMatrix matrix);

    static Homomorphism zero(FgAbGroup domain, FgAbGroup codomain);
    static Homomorphism identity(FgAbGroup group);

    const FgAbGroup& domain() const { return domain_; }
    const FgAbGroup& codomain() const { return codomain_; }
    const IntMatrix& matrix() const { return matrix_; }

    GroupElement operator()(const GroupElement& x) const;

    friend bool operator==(const Homomorphism&, const Homomorphism&) = default;

private:
    FgAbGroup domain_;
    FgAbGroup codomain_;
    IntMatrix matrix_;
};

/// True iff column is a legal image for a generator of the given order (0 = infinite).
bool column_respects_order(const FgAbGroup& codomain, std::span<const Int> column, Int generator_order);

/// Every homomorphism from Z_order into target is zero (order >= 1 finite).
bool hom_forced_zero(Int order, const FgAbGroup& target);

GroupElement hom_apply(const Homomorphism& h, const GroupElement& x);
/// g after h.
Homomorphism hom_compose(const Homomorphism& g, const Homomorphism& h);
FgAbGroup direct_sum(std::span<const FgAbGroup> groups);

class Subgroup {
public:
    Subgroup() = default;
    Subgroup(FgAbGroup ambient, std::vector<GroupElement> generators);

    static Subgroup trivial(FgAbGroup ambient);
    static Subgroup whole(FgAbGroup ambient);

    const FgAbGroup& ambient() const { return ambient_; }
    const std::vector<GroupElement>& generators() const { return generators_; }

    bool contains(const GroupElement& x) const;
    bool is_trivial() const;
    bool is_whole() const;
    /// Number of elements; nullopt when infinite.
    std::optional<Int> order() const;

    std::string to_string() const;

private:
    FgAbGroup ambient_;
    std::vector<GroupElement> generators_;
};

enum class SubgroupRelation { Equal, ProperSub, ProperSuper, Incomparable };

std::string to_string(SubgroupRelation r);

Subgroup kernel(const Homomorphism& h);
/// Common kernel of several homomorphisms sharing one domain (the kernel of their product map).
Subgroup joint_kernel(const FgAbGroup& domain, std::span<const Homomorphism> maps);
Subgroup image(const Homomorphism& h);
/// Throws DomainError when the ambient groups differ.
SubgroupRelation subgroup_cmp(const Subgroup& a, const Subgroup& b);
bool subgroup_contains(const Subgroup& outer, const Subgroup& inner);

}  // namespace nielsen
