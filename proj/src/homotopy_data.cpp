// Queries over the curated tables.

#include <algorithm>
#include <sstream>

#include "nielsen/homotopy_data.hpp"

namespace nielsen {

std::vector<std::string> SphereGroupEntry::generator_names() const
{
    std::vector<std::string> out;
    for (const auto& g : generators)
        out.push_back(g.name);
    return out;
}

SphereElement SphereElement::operator+(const SphereElement& o) const
{
    if (m != o.m || q != o.q)
        throw DomainError("adding elements of different homotopy groups");
    return {m, q, value + o.value};
}

SphereElement SphereElement::operator-(const SphereElement& o) const
{
    if (m != o.m || q != o.q)
        throw DomainError("subtracting elements of different homotopy groups");
    return {m, q, value - o.value};
}

// ---------------------------------------------------------------------------
// TableSet

SphereGroupEntry TableSet::lookup(int m, int q) const
{
    auto it = entries.find({m, q});
    if (it != entries.end())
        return it->second;
    if (m >= 1 && q >= 0 && is_closed_form(m, q))
        return closed_form_entry(m, q);
    throw OutOfTabulatedRange("pi_" + std::to_string(m) + "(S^" + std::to_string(q) + ") is not tabulated");
}

bool TableSet::covers(int m, int q) const
{
    return entries.count({m, q}) != 0 || (m >= 1 && q >= 0 && is_closed_form(m, q));
}

SphereElement TableSet::zero(int m, int q) const
{
    return {m, q, lookup(m, q).group.zero()};
}

SphereElement TableSet::element(int m, int q, std::vector<Int> coeffs) const
{
    return {m, q, lookup(m, q).group.element(std::move(coeffs))};
}

const NamedElementRecord* TableSet::find_name(const std::string& name) const
{
    for (const auto& n : names)
        if (n.name == name)
            return &n;
    return nullptr;
}

SphereElement TableSet::named(const std::string& name) const
{
    if (const auto* n = find_name(name))
        return element(n->m, n->q, n->coeffs);
    std::ostringstream os;
    os << "unknown element '" << name << "'; available:";
    for (const auto& n : names)
        os << " " << n.name;
    throw LookupError(os.str());
}

std::string TableSet::describe(const SphereElement& x) const
{
    if (x.is_zero())
        return "0";
    const SphereGroupEntry e = lookup(x.m, x.q);
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
        os << e.generators[i].name;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Per-generator columns

namespace {

std::string gen_path(const SphereGroupEntry& e, std::size_t i)
{
    return e.generators[i].name + " in pi_" + std::to_string(e.m) + "(S^" + std::to_string(e.q) + ")";
}

/// Stabilization of one generator: annotation, else via its suspension, else forced by orders.
Partial<std::vector<Int>> stab_column(const TableSet& t, const SphereGroupEntry& e, std::size_t i)
{
    const FgAbGroup& target = t.ring.stem(e.m - e.q).group;
    if (target.is_trivial())
        return Partial<std::vector<Int>>::known({});
    const GeneratorRecord& g = e.generators[i];
    if (g.stab)
        return Partial<std::vector<Int>>::known(g.stab->coeffs);
    if (g.susp) {
        auto s = stabilize(t, t.element(e.m + 1, e.q + 1, *g.susp));
        if (s.is_known())
            return Partial<std::vector<Int>>::known(s->value.coeffs());
        return Partial<std::vector<Int>>::unknown(s.reason);
    }
    if (term_forced_zero(1, e.group.generator_order(i), target))
        return Partial<std::vector<Int>>::known(std::vector<Int>(target.num_generators(), 0));
    return Partial<std::vector<Int>>::unknown("stabilization of " + gen_path(e, i) + " is not tabulated");
}

Partial<std::vector<Int>> gamma_column(const TableSet& t, const SphereGroupEntry& e, std::size_t i, int k)
{
    if (k == 1)
        return stab_column(t, e, i);
    const FgAbGroup& target = t.ring.stem(gamma_degree(e.m, e.q, k)).group;
    if (target.is_trivial())
        return Partial<std::vector<Int>>::known({});
    const GeneratorRecord& g = e.generators[i];
    if (auto it = g.gamma.find(k); it != g.gamma.end())
        return Partial<std::vector<Int>>::known(it->second.coeffs);
    if (term_forced_zero(1, e.group.generator_order(i), target))
        return Partial<std::vector<Int>>::known(std::vector<Int>(target.num_generators(), 0));
    return Partial<std::vector<Int>>::unknown("Gamma component " + std::to_string(k) + " of " + gen_path(e, i) +
                                              " is not determined by the tables");
}

/// Applies per-generator columns to x, skipping generators with zero coefficient.
template <class ColumnFn>
Partial<GroupElement> apply_columns(const SphereGroupEntry& e, const FgAbGroup& target, const GroupElement& x,
                                    ColumnFn column)
{
    GroupElement acc = target.zero();
    for (std::size_t i = 0; i < e.generators.size(); ++i) {
        Int c = x.coeffs()[i];
        if (c == 0)
            continue;
        Partial<std::vector<Int>> col = column(i);
        if (!col.is_known()) {
            // The coefficient may still kill every admissible image.
            if (term_forced_zero(c, e.group.generator_order(i), target))
                continue;
            return Partial<GroupElement>::unknown(col.reason);
        }
        acc = acc + target.element(*col).scale(c);
    }
    return Partial<GroupElement>::known(acc);
}

template <class ColumnFn>
Partial<Homomorphism> build_hom(const SphereGroupEntry& e, const FgAbGroup& target, ColumnFn column)
{
    IntMatrix mat(target.num_generators(), e.group.num_generators());
    for (std::size_t i = 0; i < e.generators.size(); ++i) {
        Partial<std::vector<Int>> col = column(i);
        if (!col.is_known())
            return Partial<Homomorphism>::unknown(col.reason);
        mat.set_column(i, *col);
    }
    return Partial<Homomorphism>::known(Homomorphism(e.group, target, std::move(mat)));
}

void check_parent(const TableSet& t, const SphereElement& x, const SphereGroupEntry& e)
{
    (void)t;
    if (x.value.parent() != e.group)
        throw DomainError("element does not belong to pi_" + std::to_string(x.m) + "(S^" + std::to_string(x.q) + ")");
}

}  // namespace

// ---------------------------------------------------------------------------
// Suspension, stabilization, antipodal action

Partial<SphereElement> suspend(const TableSet& t, const SphereElement& x)
{
    const SphereGroupEntry e = t.lookup(x.m, x.q);
    check_parent(t, x, e);
    const FgAbGroup target = t.lookup(x.m + 1, x.q + 1).group;
    auto r = apply_columns(e, target, x.value, [&](std::size_t i) {
        const GeneratorRecord& g = e.generators[i];
        if (target.is_trivial())
            return Partial<std::vector<Int>>::known({});
        if (g.susp)
            return Partial<std::vector<Int>>::known(*g.susp);
        if (term_forced_zero(1, e.group.generator_order(i), target))
            return Partial<std::vector<Int>>::known(std::vector<Int>(target.num_generators(), 0));
        return Partial<std::vector<Int>>::unknown("suspension of " + gen_path(e, i) + " is not tabulated");
    });
    if (!r.is_known())
        return Partial<SphereElement>::unknown(r.reason);
    return Partial<SphereElement>::known({x.m + 1, x.q + 1, *r.value});
}

Partial<SphereElement> suspend(const TableSet& t, const SphereElement& x, int times)
{
    if (times < 0)
        throw DomainError("negative suspension count");
    Partial<SphereElement> cur = Partial<SphereElement>::known(x);
    for (int i = 0; i < times && cur.is_known(); ++i)
        cur = suspend(t, *cur);
    return cur;
}

Partial<StableElement> stabilize(const TableSet& t, const SphereElement& x)
{
    if (x.m < x.q)
        return Partial<StableElement>::known({x.m - x.q, FgAbGroup::trivial().zero()});
    const SphereGroupEntry e = t.lookup(x.m, x.q);
    check_parent(t, x, e);
    const int k = x.m - x.q;
    const FgAbGroup& target = t.ring.stem(k).group;
    auto r = apply_columns(e, target, x.value, [&](std::size_t i) { return stab_column(t, e, i); });
    if (!r.is_known())
        return Partial<StableElement>::unknown(r.reason);
    return Partial<StableElement>::known({k, *r.value});
}

Partial<SphereElement> antipodal_compose(const TableSet& t, const SphereElement& x)
{
    const SphereGroupEntry e = t.lookup(x.m, x.q);
    check_parent(t, x, e);
    // The antipodal map of an odd sphere has degree one.
    if (x.q % 2 == 1)
        return Partial<SphereElement>::known(x);
    GroupElement acc = e.group.zero();
    for (std::size_t i = 0; i < e.generators.size(); ++i) {
        Int c = x.value.coeffs()[i];
        if (c == 0)
            continue;
        const GeneratorRecord& g = e.generators[i];
        if (!g.antip)
            return Partial<SphereElement>::unknown("antipodal action on " + gen_path(e, i) + " is not tabulated");
        acc = acc + e.group.element(*g.antip).scale(c);
    }
    return Partial<SphereElement>::known({x.m, x.q, acc});
}

// ---------------------------------------------------------------------------
// Gamma

Tri GammaValue::is_zero() const
{
    bool unknown = false;
    for (const auto& c : components) {
        if (!c)
            unknown = true;
        else if (!c->is_zero())
            return Tri::No;
    }
    return unknown ? Tri::Unknown : Tri::Yes;
}

int gamma_kmax(int m, int q)
{
    if (m < q)
        return 0;
    if (q <= 1)
        return 1;
    return std::max(1, (m - 1) / (q - 1));
}

int gamma_degree(int m, int q, int k)
{
    return m - 1 - k * (q - 1);
}

GammaValue gamma(const TableSet& t, const SphereElement& x)
{
    const SphereGroupEntry e = t.lookup(x.m, x.q);
    check_parent(t, x, e);
    GammaValue out;
    out.m = x.m;
    out.q = x.q;
    const int kmax = gamma_kmax(x.m, x.q);
    for (int k = 1; k <= kmax; ++k) {
        const int deg = gamma_degree(x.m, x.q, k);
        const FgAbGroup& target = t.ring.stem(deg).group;
        auto r = apply_columns(e, target, x.value, [&](std::size_t i) { return gamma_column(t, e, i, k); });
        if (r.is_known()) {
            out.components.emplace_back(StableElement{deg, *r.value});
        } else {
            out.components.emplace_back(std::nullopt);
            out.missing.push_back(r.reason);
        }
    }
    return out;
}

Partial<Homomorphism> gamma_component_hom(const TableSet& t, int m, int q, int k)
{
    const int kmax = gamma_kmax(m, q);
    if (k < 1 || k > kmax)
        throw DomainError("Gamma component " + std::to_string(k) + " does not exist on pi_" + std::to_string(m) +
                          "(S^" + std::to_string(q) + ")");
    const SphereGroupEntry e = t.lookup(m, q);
    const FgAbGroup& target = t.ring.stem(gamma_degree(m, q, k)).group;
    return build_hom(e, target, [&](std::size_t i) { return gamma_column(t, e, i, k); });
}

Partial<Homomorphism> hopf_stab_hom(const TableSet& t, int m, int q, const StableElement& h)
{
    const SphereGroupEntry e = t.lookup(m, q);
    if (m < q)
        return Partial<Homomorphism>::known(Homomorphism::zero(e.group, FgAbGroup::trivial()));
    const int deg = h.degree + (m - q);
    const FgAbGroup& target = t.ring.stem(deg).group;
    return build_hom(e, target, [&](std::size_t i) {
        auto s = stab_column(t, e, i);
        if (!s.is_known())
            return s;
        StableElement si{m - q, t.ring.stem(m - q).group.element(*s)};
        auto p = t.ring.multiply(h, si);
        if (!p)
            return Partial<std::vector<Int>>::unknown("stable product " + t.ring.describe(h) + " * " +
                                                      t.ring.describe(si) + " is not tabulated");
        return Partial<std::vector<Int>>::known(p->value.coeffs());
    });
}

// ---------------------------------------------------------------------------
// Suspension image

Tri suspension_image_contains(const TableSet& t, const SphereElement& x)
{
    const SphereGroupEntry e = t.lookup(x.m, x.q);
    check_parent(t, x, e);
    if (x.is_zero())
        return Tri::Yes;
    if (x.m < 2 || x.q < 1)
        return Tri::No;
    if (!t.covers(x.m - 1, x.q - 1))
        return Tri::Unknown;
    const SphereGroupEntry src = t.lookup(x.m - 1, x.q - 1);
    std::vector<GroupElement> known;
    bool unknown = false;
    for (std::size_t i = 0; i < src.generators.size(); ++i) {
        auto s = suspend(t, SphereElement{src.m, src.q, src.group.generator(i)});
        if (s.is_known())
            known.push_back(s->value);
        else
            unknown = true;
    }
    if (Subgroup(e.group, known).contains(x.value))
        return Tri::Yes;
    return unknown ? Tri::Unknown : Tri::No;
}

// ---------------------------------------------------------------------------
// Kernel chain

KernelChain kernel_chain(const TableSet& t, int m, int q, const StableElement& h)
{
    const SphereGroupEntry e = t.lookup(m, q);
    KernelChain out;
    out.whole = Subgroup::whole(e.group);

    std::vector<Homomorphism> homs;
    std::vector<std::string> missing;
    for (int k = 1; k <= gamma_kmax(m, q); ++k) {
        auto hk = gamma_component_hom(t, m, q, k);
        if (hk.is_known())
            homs.push_back(*hk);
        else
            missing.push_back(hk.reason);
    }
    out.ker_gamma = joint_kernel(e.group, homs);
    // Unknown components can only shrink the kernel, so a trivial partial kernel is final.
    if (!missing.empty() && !out.ker_gamma.is_trivial())
        throw IncompleteData("Ker Gamma on pi_" + std::to_string(m) + "(S^" + std::to_string(q) +
                             ") is not decided: " + missing.front());

    auto hs = hopf_stab_hom(t, m, q, h);
    if (!hs.is_known())
        throw IncompleteData(hs.reason);
    out.ker_hopf_stab = kernel(*hs);

    if (!subgroup_contains(out.ker_hopf_stab, out.ker_gamma))
        throw std::logic_error("Ker Gamma is not contained in Ker(h E^infinity) on pi_" + std::to_string(m) + "(S^" +
                               std::to_string(q) + ")");
    return out;
}

}  // namespace nielsen
