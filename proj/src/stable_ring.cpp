#include "nielsen/stable_ring.hpp"

#include <algorithm>
#include <sstream>

namespace nielsen {

std::string to_string(Tri t)
{
    switch (t) {
    case Tri::Yes: return "Yes";
    case Tri::No: return "No";
    case Tri::Unknown: return "Unknown";
    }
    return "?";
}

std::string InvariantValue::to_string() const
{
    switch (kind_) {
    case Kind::Finite: return std::to_string(value_);
    case Kind::Infinite: return "inf";
    case Kind::Unknown: return "?";
    }
    return "?";
}

StableElement StableElement::operator+(const StableElement& o) const
{
    if (degree != o.degree)
        throw DomainError("adding stable elements of different degrees");
    return {degree, value + o.value};
}

StableElement StableElement::operator-(const StableElement& o) const
{
    if (degree != o.degree)
        throw DomainError("subtracting stable elements of different degrees");
    return {degree, value - o.value};
}

Int order_or_zero(const GroupElement& x)
{
    return element_order(x).value_or(0);
}

bool term_forced_zero(Int c, Int gen_order, const FgAbGroup& target)
{
    if (target.is_trivial())
        return true;
    // A finite-order image lies in the torsion part, so its order divides the exponent.
    Int g = gen_order != 0 ? checked::gcd(gen_order, target.exponent())
                           : (target.free_rank() > 0 ? 0 : target.exponent());
    if (g == 0)
        return c == 0;
    return c % g == 0;
}

void StableRing::add_stem(StableStem stem)
{
    if (stems_.count(stem.degree))
        throw DomainError("stem " + std::to_string(stem.degree) + " declared twice");
    if (stem.degree < 0)
        throw DomainError("negative stem degree");
    if (stem.generator_names.size() != stem.group.num_generators())
        throw DomainError("stem " + std::to_string(stem.degree) + " has " + std::to_string(stem.group.num_generators()) +
                          " generators but " + std::to_string(stem.generator_names.size()) + " names");
    for (const auto& name : stem.generator_names)
        if (find_generator(name))
            throw DomainError("stable generator name '" + name + "' used twice");
    int k = stem.degree;
    stems_.emplace(k, std::move(stem));
}

void StableRing::add_product(ProductRecord rec)
{
    auto a = find_generator(rec.left);
    auto b = find_generator(rec.right);
    std::string path = "prod " + rec.left + " " + rec.right;
    if (!a || !b)
        throw DomainError(path + ": unknown stable generator");
    if (rec.degree != a->degree + b->degree)
        throw DomainError(path + ": degree " + std::to_string(rec.degree) + " should be " +
                          std::to_string(a->degree + b->degree));
    const StableStem& target = stem(rec.degree);
    if (rec.coeffs.size() != target.group.num_generators())
        throw DomainError(path + ": coefficient vector has wrong length");
    for (const auto& p : products_)
        if (p.left == rec.left && p.right == rec.right)
            throw DomainError(path + ": product stored twice");
    products_.push_back(std::move(rec));
}

void StableRing::add_name(StableNameRecord rec)
{
    if (find_generator(rec.name))
        throw DomainError("stable name '" + rec.name + "' clashes with a generator");
    for (const auto& n : names_)
        if (n.name == rec.name)
            throw DomainError("stable name '" + rec.name + "' registered twice");
    const StableStem& target = stem(rec.degree);
    if (rec.coeffs.size() != target.group.num_generators())
        throw DomainError("stable name '" + rec.name + "': coefficient vector has wrong length");
    names_.push_back(std::move(rec));
}

const StableStem& StableRing::stem(int k) const
{
    auto it = stems_.find(k);
    if (it == stems_.end())
        throw OutOfTabulatedRange("stable stem pi_" + std::to_string(k) + "^S is not tabulated");
    return it->second;
}

StableElement StableRing::zero(int k) const
{
    return {k, stem(k).group.zero()};
}

StableElement StableRing::element(int k, std::vector<Int> coeffs) const
{
    return {k, stem(k).group.element(std::move(coeffs))};
}

std::optional<GeneratorRef> StableRing::find_generator(const std::string& name) const
{
    for (const auto& [k, s] : stems_)
        for (std::size_t i = 0; i < s.generator_names.size(); ++i)
            if (s.generator_names[i] == name)
                return GeneratorRef{k, i};
    return std::nullopt;
}

std::optional<StableElement> StableRing::generator_product(GeneratorRef a, GeneratorRef b) const
{
    const StableStem& sa = stem(a.degree);
    const StableStem& sb = stem(b.degree);
    const int k = a.degree + b.degree;
    // The unit acts trivially.
    if (a.degree == 0 && sa.group.free_rank() == 1 && a.index == 0)
        return StableElement{b.degree, sb.group.generator(b.index)};
    if (b.degree == 0 && sb.group.free_rank() == 1 && b.index == 0)
        return StableElement{a.degree, sa.group.generator(a.index)};
    if (!has_stem(k))
        return std::nullopt;
    const std::string& na = sa.generator_names[a.index];
    const std::string& nb = sb.generator_names[b.index];
    for (const auto& p : products_) {
        if (p.left == na && p.right == nb)
            return element(k, p.coeffs);
    }
    for (const auto& p : products_) {
        if (p.left == nb && p.right == na) {
            StableElement x = element(k, p.coeffs);
            return (a.degree * b.degree) % 2 == 0 ? x : x.scale(-1);
        }
    }
    return std::nullopt;
}

std::optional<StableElement> StableRing::multiply(const StableElement& a, const StableElement& b) const
{
    const int k = a.degree + b.degree;
    const StableStem& sa = stem(a.degree);
    const StableStem& sb = stem(b.degree);
    if (a.value.parent() != sa.group || b.value.parent() != sb.group)
        throw DomainError("stable element does not belong to its stem");
    const StableStem& target = stem(k);
    if (a.is_zero() || b.is_zero())
        return zero(k);
    StableElement acc = zero(k);
    for (std::size_t i = 0; i < sa.group.num_generators(); ++i) {
        Int ci = a.value.coeffs()[i];
        if (ci == 0)
            continue;
        for (std::size_t j = 0; j < sb.group.num_generators(); ++j) {
            Int cj = b.value.coeffs()[j];
            if (cj == 0)
                continue;
            Int c = checked::mul(ci, cj);
            auto p = generator_product({a.degree, i}, {b.degree, j});
            if (p) {
                acc = acc + p->scale(c);
                continue;
            }
            // An unstored product still vanishes if its order bound kills the coefficient.
            Int bound = checked::gcd(sa.group.generator_order(i), sb.group.generator_order(j));
            if (!term_forced_zero(c, bound, target.group))
                return std::nullopt;
        }
    }
    return acc;
}

StableElement StableRing::named(const std::string& name) const
{
    if (auto g = find_generator(name))
        return {g->degree, stem(g->degree).group.generator(g->index)};
    for (const auto& n : names_)
        if (n.name == name)
            return element(n.degree, n.coeffs);
    std::ostringstream os;
    os << "unknown stable element '" << name << "'; available:";
    for (const auto& a : available_names())
        os << " " << a;
    throw LookupError(os.str());
}

std::vector<std::string> StableRing::available_names() const
{
    std::vector<std::string> out;
    for (const auto& [k, s] : stems_)
        out.insert(out.end(), s.generator_names.begin(), s.generator_names.end());
    for (const auto& n : names_)
        out.push_back(n.name);
    return out;
}

std::string StableRing::describe(const StableElement& x) const
{
    if (x.is_zero())
        return "0";
    const StableStem& s = stem(x.degree);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < x.value.coeffs().size(); ++i) {
        Int c = x.value.coeffs()[i];
        if (c == 0)
            continue;
        if (!first)
            os << " + ";
        first = false;
        if (c != 1)
            os << c << "*";
        os << s.generator_names[i];
    }
    return os.str();
}

}  // namespace nielsen
