#include "nielsen/selfcoincidence.hpp"

#include <random>
#include <sstream>

namespace nielsen {

Quaternion Quaternion::operator*(const Quaternion& o) const
{
    return {a * o.a - b * o.b - c * o.c - d * o.d,
            a * o.b + b * o.a + c * o.d - d * o.c,
            a * o.c - b * o.d + c * o.a + d * o.b,
            a * o.d + b * o.c - c * o.b + d * o.a};
}

std::string Quaternion::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    const Rational* parts[4] = {&a, &b, &c, &d};
    const char* units[4] = {"", "i", "j", "k"};
    bool first = true;
    for (int u = 0; u < 4; ++u) {
        const Rational& v = *parts[u];
        if (v == 0)
            continue;
        Rational mag = v < 0 ? Rational(-v) : v;
        if (v < 0)
            os << (first ? "-" : " - ");
        else if (!first)
            os << " + ";
        first = false;
        if (u == 0 || mag != 1)
            os << mag;
        os << units[u];
    }
    return os.str();
}

Rational KVector::norm2() const
{
    Rational s = 0;
    for (const auto& e : entries)
        s += e.norm2();
    return s;
}

std::string KVector::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i)
            out += ", ";
        out += entries[i].to_string();
    }
    return out + ")";
}

KVector make_kvector(Field f, std::vector<Quaternion> entries)
{
    for (const auto& e : entries) {
        bool ok = f.tag == FieldTag::H || (e.c == 0 && e.d == 0 && (f.tag == FieldTag::C || e.b == 0));
        if (!ok)
            throw DomainError("entry " + e.to_string() + " does not lie in " + f.name());
    }
    return {f, std::move(entries)};
}

KVector scale_left(const Quaternion& lambda, const KVector& x)
{
    KVector out{x.field, {}};
    for (const auto& e : x.entries)
        out.entries.push_back(lambda * e);
    return out;
}

std::string to_string(LooseVerdict v)
{
    switch (v) {
    case LooseVerdict::Loose: return "Loose";
    case LooseVerdict::NotLoose: return "NotLoose";
    case LooseVerdict::Unknown: return "Unknown";
    }
    return "?";
}

bool congruence_condition(FieldTag tag, int n_prime)
{
    if (tag == FieldTag::H)
        return n_prime % 24 == 23;
    return n_prime % 2 == 1;
}

Looseness self_loose(FieldTag tag, int m, int n_prime)
{
    if (m < 1 || n_prime < 1)
        throw DomainError("m and n' must be at least 1");
    const int n = field(tag).d * n_prime;
    const bool region = congruence_condition(tag, n_prime) || n <= 3;
    if (!region)
        return {LooseVerdict::Unknown, "(K, n') is not covered by the self-looseness criterion"};
    if (m == 2 && n == 2)
        return {LooseVerdict::Unknown,
                "(m, n) = (2, 2) is excluded: (f, f) is loose only when f is null-homotopic"};
    if (congruence_condition(tag, n_prime))
        return {LooseVerdict::Loose, tag == FieldTag::H ? "n' = 23 mod 24: the fiber bundle admits a section"
                                                        : "n' odd: a tangent field pushes fibers off themselves"};
    return {LooseVerdict::Loose, "n = d n' <= 3"};
}

Looseness fiber_projection_self_loose(FieldTag tag, int n_prime)
{
    if (n_prime < 1)
        throw DomainError("n' must be at least 1");
    if (congruence_condition(tag, n_prime))
        return {LooseVerdict::Loose, "the fiber projection admits a fiberwise deformation"};
    return {LooseVerdict::NotLoose, tag == FieldTag::H ? "n' != 23 mod 24: no section of the fiber bundle"
                                                       : "n' even: no section of the fiber bundle"};
}

KVector selfmap_s(const KVector& x)
{
    if (x.entries.size() % 2 != 0)
        throw DomainError("s needs paired coordinates, i.e. n' odd");
    KVector out{x.field, std::vector<Quaternion>(x.entries.size())};
    for (std::size_t i = 0; i < x.entries.size(); i += 2) {
        out.entries[i] = -x.entries[i + 1].conj();
        out.entries[i + 1] = x.entries[i].conj();
    }
    return out;
}

Rational residual_not_parallel(const KVector& x)
{
    const Rational n2 = x.norm2();
    if (n2 == 0)
        throw DomainError("zero vector");
    const KVector y = selfmap_s(x);
    // The closest point lambda x has lambda = <y, x> / |x|^2 with <y, x> = sum y_i conj(x_i).
    Quaternion inner{0, 0, 0, 0};
    for (std::size_t i = 0; i < x.entries.size(); ++i)
        inner = inner + y.entries[i] * x.entries[i].conj();
    // |y| = |x|, so after normalizing the squared distance is 1 - |<y, x>|^2 / |x|^4.
    return 1 - inner.norm2() / (n2 * n2);
}

Counterexample quaternion_counterexample(int n_prime)
{
    if (n_prime < 1 || n_prime % 2 == 0)
        throw DomainError("n' must be odd");
    std::vector<Quaternion> e(static_cast<std::size_t>(n_prime) + 1, Quaternion{0, 0, 0, 0});
    e[0] = Quaternion::j();
    e[1] = Quaternion::k();
    Counterexample c{make_kvector(field(FieldTag::H), std::move(e)), Quaternion::i()};
    if (selfmap_s(c.x) != scale_left(c.lambda, c.x))
        throw std::logic_error("s(x) = i x fails");
    return c;
}

std::vector<KVector> sample_unit_vectors(Field f, int n_prime, std::size_t count, std::uint64_t seed)
{
    if (n_prime < 1)
        throw DomainError("n' must be at least 1");
    const std::size_t dim = static_cast<std::size_t>(f.d) * (static_cast<std::size_t>(n_prime) + 1);
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<int> num(-12, 12);
    std::uniform_int_distribution<int> den(1, 7);
    std::vector<KVector> out;
    out.reserve(count);
    while (out.size() < count) {
        // t in Q^{dim-1} maps to (2t, |t|^2 - 1) / (|t|^2 + 1) on the unit sphere.
        std::vector<Rational> t(dim - 1);
        Rational t2 = 0;
        for (auto& ti : t) {
            ti = Rational(num(gen), den(gen));
            t2 += ti * ti;
        }
        std::vector<Rational> coords(dim);
        for (std::size_t i = 0; i + 1 < dim; ++i)
            coords[i] = 2 * t[i] / (t2 + 1);
        coords[dim - 1] = (t2 - 1) / (t2 + 1);
        std::vector<Quaternion> e;
        for (std::size_t i = 0; i < dim; i += static_cast<std::size_t>(f.d)) {
            Quaternion qv{coords[i], 0, 0, 0};
            if (f.d >= 2)
                qv.b = coords[i + 1];
            if (f.d == 4) {
                qv.c = coords[i + 2];
                qv.d = coords[i + 3];
            }
            e.push_back(qv);
        }
        out.push_back(make_kvector(f, std::move(e)));
    }
    return out;
}

}  // namespace nielsen
