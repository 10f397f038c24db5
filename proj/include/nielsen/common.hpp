#pragma once

// Small vocabulary types shared by every module.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "nielsen/fgab.hpp"

namespace nielsen {

/// Requested group or stem lies outside the curated data (distinct from a trivial group).
class OutOfTabulatedRange : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// A query needed an annotation the data does not provide.
class IncompleteData : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class LookupError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

enum class Tri { Yes, No, Unknown };

std::string to_string(Tri t);

inline Tri tri_of(bool b) { return b ? Tri::Yes : Tri::No; }
inline Tri tri_not(Tri t) { return t == Tri::Unknown ? t : (t == Tri::Yes ? Tri::No : Tri::Yes); }

/// A value that may be missing because the data does not determine it.
template <class T>
struct Partial {
    std::optional<T> value;
    std::string reason;

    static Partial known(T v) { return Partial{std::move(v), {}}; }
    static Partial unknown(std::string why) { return Partial{std::nullopt, std::move(why)}; }

    bool is_known() const { return value.has_value(); }
    const T& operator*() const { return *value; }
    const T* operator->() const { return &*value; }
};

/// Finite(k) | Infinite | Unknown(reason).
class InvariantValue {
public:
    enum class Kind { Finite, Infinite, Unknown };

    static InvariantValue finite(Int k) { return InvariantValue(Kind::Finite, k, {}); }
    static InvariantValue infinite() { return InvariantValue(Kind::Infinite, 0, {}); }
    static InvariantValue unknown(std::string reason) { return InvariantValue(Kind::Unknown, 0, std::move(reason)); }

    InvariantValue() = default;

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_infinite() const { return kind_ == Kind::Infinite; }
    bool is_unknown() const { return kind_ == Kind::Unknown; }
    /// Only meaningful for Finite values.
    Int value() const { return value_; }
    const std::string& reason() const { return reason_; }

    /// "2", "inf" or "?".
    std::string to_string() const;

    friend bool operator==(const InvariantValue&, const InvariantValue&) = default;

private:
    InvariantValue(Kind k, Int v, std::string r) : kind_(k), value_(v), reason_(std::move(r)) {}

    Kind kind_ = Kind::Unknown;
    Int value_ = 0;
    std::string reason_ = "not computed";
};

}  // namespace nielsen
