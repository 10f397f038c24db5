#include "nielsen/projective.hpp"

#include <cctype>

namespace nielsen {

std::string Field::name() const
{
    switch (tag) {
    case FieldTag::R: return "R";
    case FieldTag::C: return "C";
    case FieldTag::H: return "H";
    }
    return "?";
}

Field field(FieldTag tag)
{
    switch (tag) {
    case FieldTag::R: return {tag, 1};
    case FieldTag::C: return {tag, 2};
    case FieldTag::H: return {tag, 4};
    }
    throw DomainError("unknown field");
}

Field parse_field(const std::string& s)
{
    if (s.size() == 1) {
        switch (std::toupper(static_cast<unsigned char>(s[0]))) {
        case 'R': return field(FieldTag::R);
        case 'C': return field(FieldTag::C);
        case 'H': return field(FieldTag::H);
        }
    }
    throw DomainError("unknown field '" + s + "', expected R, C or H");
}

std::string ProjSpace::name() const
{
    return field.name() + "P(" + std::to_string(n_prime) + ")";
}

ProjSpace space(FieldTag tag, int n_prime)
{
    if (n_prime < 1)
        throw DomainError("n' must be at least 1");
    ProjSpace s;
    s.field = field(tag);
    s.n_prime = n_prime;
    s.n = static_cast<int>(checked::mul(s.field.d, n_prime));
    s.q = s.n + s.field.d - 1;
    s.reidemeister = tag == FieldTag::R ? 2 : 1;
    return s;
}

InvariantValue reidemeister(const ProjSpace& s, int m)
{
    if (m < 2)
        throw DomainError("the domain S^m must be simply connected, m >= 2");
    if (s.n == 1)
        return InvariantValue::infinite();
    return InvariantValue::finite(s.reidemeister);
}

StableElement hopf_stable(const TableSet& t, FieldTag tag)
{
    switch (tag) {
    case FieldTag::R: return t.ring.element(0, {2});
    case FieldTag::C: return t.ring.named("eta");
    case FieldTag::H: return t.ring.named("nu");
    }
    throw DomainError("unknown field");
}

bool decompose_valid(const TableSet& t, const ProjSpace& s, int m)
{
    if (m < 2)
        throw DomainError("m must be at least 2");
    if (s.n_prime >= 2)
        return true;
    return t.lookup(m - 1, s.field.d - 1).group.is_trivial();
}

bool MapClass::is_constant() const
{
    return lift.is_zero() && (!correction || correction->is_zero());
}

MapClass map_class(const TableSet& t, const ProjSpace& s, int m, const SphereElement& lift,
                   std::optional<SphereElement> correction)
{
    if (!decompose_valid(t, s, m))
        throw DomainError("no lift decomposition for " + s.name() + " with m = " + std::to_string(m) +
                          ": n' = 1 and pi_" + std::to_string(m - 1) + "(S^" + std::to_string(s.field.d - 1) +
                          ") != 0");
    if (lift.m != m || lift.q != s.q)
        throw DomainError("lift must lie in pi_" + std::to_string(m) + "(S^" + std::to_string(s.q) + ")");
    MapClass c{s, m, lift, std::nullopt};
    if (correction) {
        if (correction->m != m - 1 || correction->q != s.field.d - 1)
            throw DomainError("correction must lie in pi_" + std::to_string(m - 1) + "(S^" +
                              std::to_string(s.field.d - 1) + ")");
        c.correction = correction;
    } else if (t.covers(m - 1, s.field.d - 1)) {
        c.correction = t.zero(m - 1, s.field.d - 1);
    }
    return c;
}

MapClass constant_map(const TableSet& t, const ProjSpace& s, int m)
{
    return map_class(t, s, m, t.zero(m, s.q));
}

}  // namespace nielsen
