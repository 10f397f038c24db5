#pragma once

// Stable stems pi_k^S with named generators and a partial product table.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nielsen/common.hpp"
#include "nielsen/fgab.hpp"

namespace nielsen {

struct StableStem {
    int degree = 0;
    FgAbGroup group;
    std::vector<std::string> generator_names;
    std::string source;

    friend bool operator==(const StableStem&, const StableStem&) = default;
};

struct StableElement {
    int degree = 0;
    GroupElement value;

    bool is_zero() const { return value.is_zero(); }
    StableElement operator+(const StableElement& o) const;
    StableElement operator-(const StableElement& o) const;
    StableElement scale(Int k) const { return {degree, value.scale(k)}; }

    friend bool operator==(const StableElement&, const StableElement&) = default;
};

/// A stored product of two generators, named by their generator names.
struct ProductRecord {
    std::string left;
    std::string right;
    int degree = 0;
    std::vector<Int> coeffs;
    std::string source;

    friend bool operator==(const ProductRecord&, const ProductRecord&) = default;
};

/// A registered stable element that is not itself a generator, e.g. "two".
struct StableNameRecord {
    std::string name;
    int degree = 0;
    std::vector<Int> coeffs;
    std::string source;

    friend bool operator==(const StableNameRecord&, const StableNameRecord&) = default;
};

struct GeneratorRef {
    int degree = 0;
    std::size_t index = 0;
};

class StableRing {
public:
    /// Throws DomainError on duplicate degree or wrong number of generator names.
    void add_stem(StableStem stem);
    /// Throws DomainError on unknown generators, wrong degree or vector length, or a duplicate pair.
    void add_product(ProductRecord rec);
    void add_name(StableNameRecord rec);

    bool has_stem(int k) const { return stems_.count(k) != 0; }
    /// Throws OutOfTabulatedRange for untabulated degrees.
    const StableStem& stem(int k) const;

    StableElement zero(int k) const;
    StableElement element(int k, std::vector<Int> coeffs) const;
    std::optional<GeneratorRef> find_generator(const std::string& name) const;

    /// nullopt when some needed generator product is not in the table and not forced to vanish.
    std::optional<StableElement> multiply(const StableElement& a, const StableElement& b) const;

    /// Generator names and registered names. Throws LookupError listing the available names.
    StableElement named(const std::string& name) const;
    std::vector<std::string> available_names() const;

    /// "0", "eta", "12*nu", "eta_sigma + epsilon".
    std::string describe(const StableElement& x) const;

    const std::map<int, StableStem>& stems() const { return stems_; }
    const std::vector<ProductRecord>& products() const { return products_; }
    const std::vector<StableNameRecord>& names() const { return names_; }

    friend bool operator==(const StableRing&, const StableRing&) = default;

private:
    std::optional<StableElement> generator_product(GeneratorRef a, GeneratorRef b) const;

    std::map<int, StableStem> stems_;
    std::vector<ProductRecord> products_;
    std::vector<StableNameRecord> names_;
};

/// Order of an element, with 0 standing for infinite order.
Int order_or_zero(const GroupElement& x);

/// True when c * y = 0 for every y in target of order dividing gen_order (0 = infinite).
bool term_forced_zero(Int c, Int gen_order, const FgAbGroup& target);

}  // namespace nielsen
