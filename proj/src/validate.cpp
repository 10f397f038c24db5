// Internal consistency checks for a loaded table set.

#include <array>

#include "nielsen/homotopy_data.hpp"

namespace nielsen {

namespace {

class Checker {
public:
    explicit Checker(const TableSet& t) : t_(t) {}

    ValidationReport run()
    {
        products();
        for (const auto& [key, e] : t_.entries)
            entry(e);
        registry();
        return std::move(report_);
    }

private:
    void fail(std::string check, std::string path, std::string message)
    {
        report_.violations.push_back({std::move(check), std::move(path), std::move(message)});
    }

    template <class F>
    void guarded(const std::string& check, const std::string& path, F f)
    {
        try {
            f();
        } catch (const std::exception& ex) {
            fail(check, path, ex.what());
        }
    }

    static std::string group_name(int m, int q)
    {
        return "group " + std::to_string(m) + " " + std::to_string(q);
    }

    void products()
    {
        const StableRing& r = t_.ring;
        for (const auto& p : r.products()) {
            const std::string path = "prod " + p.left + " " + p.right;
            guarded("product", path, [&] {
                auto a = r.find_generator(p.left);
                auto b = r.find_generator(p.right);
                StableElement ea = r.named(p.left);
                StableElement eb = r.named(p.right);
                StableElement ab = r.element(p.degree, p.coeffs);
                // Graded commutativity against the reversed entry, when stored.
                for (const auto& q : r.products()) {
                    if (q.left == p.right && q.right == p.left && &q != &p) {
                        StableElement ba = r.element(q.degree, q.coeffs);
                        StableElement expect = (a->degree * b->degree) % 2 == 0 ? ba : ba.scale(-1);
                        if (ab != expect)
                            fail("graded-commutativity", path, "reversed product disagrees");
                    }
                }
                Int oa = order_or_zero(ea.value);
                Int ob = order_or_zero(eb.value);
                Int bound = checked::gcd(oa, ob);
                if (bound != 0 && !ab.value.scale(bound).is_zero())
                    fail("product-order", path, "order of product does not divide the orders of its factors");
            });
        }
    }

    void entry(const SphereGroupEntry& e)
    {
        const std::string base = group_name(e.m, e.q);
        for (std::size_t i = 0; i < e.generators.size(); ++i) {
            const GeneratorRecord& g = e.generators[i];
            const std::string path = base + " / gen " + g.name;
            const SphereElement x{e.m, e.q, e.group.generator(i)};
            guarded("degree", path, [&] { degrees(e, g, path); });
            guarded("stab-susp", path, [&] { stab_susp(x, g, path); });
            guarded("hopf-stable", path, [&] { hopf_stable(x, g, path); });
            guarded("antipodal", path, [&] { antipodal(e, x, g, path); });
        }
    }

    void degrees(const SphereGroupEntry& e, const GeneratorRecord& g, const std::string& path)
    {
        if (g.stab && g.stab->degree != e.m - e.q)
            fail("degree", path + " / stab", "stabilization has degree " + std::to_string(g.stab->degree));
        for (const auto& [k, c] : g.gamma)
            if (c.degree != gamma_degree(e.m, e.q, k) || k < 2 || k > gamma_kmax(e.m, e.q))
                fail("degree", path + " / gamma " + std::to_string(k), "component has degree " +
                                                                            std::to_string(c.degree));
    }

    // Stabilization is unchanged by one suspension.
    void stab_susp(const SphereElement& x, const GeneratorRecord& g, const std::string& path)
    {
        if (!g.stab || !g.susp)
            return;
        auto ex = t_.element(x.m + 1, x.q + 1, *g.susp);
        auto s = stabilize(t_, ex);
        if (!s.is_known())
            return;
        StableElement own = t_.ring.element(g.stab->degree, g.stab->coeffs);
        if (*s != own)
            fail("stab-susp", path, "stabilization " + t_.ring.describe(own) + " differs from stabilization " +
                                        t_.ring.describe(*s) + " of the suspension");
    }

    // h_K * E^infinity agrees on x and on its furthest known suspension, for each K.
    void hopf_stable(const SphereElement& x, const GeneratorRecord& g, const std::string& path)
    {
        if (!g.stab)
            return;
        SphereElement far = x;
        for (int step = 0; step < 64 && t_.covers(far.m + 1, far.q + 1); ++step) {
            auto s = suspend(t_, far);
            if (!s.is_known())
                break;
            far = *s;
        }
        if (far.m == x.m)
            return;
        auto sfar = stabilize(t_, far);
        if (!sfar.is_known())
            return;
        StableElement own = t_.ring.element(g.stab->degree, g.stab->coeffs);
        static const std::array<std::pair<const char*, const char*>, 3> fields{
            {{"R", "two"}, {"C", "eta"}, {"H", "nu"}}};
        for (const auto& [tag, hname] : fields) {
            StableElement h;
            try {
                h = t_.ring.named(hname);
            } catch (const LookupError&) {
                continue;
            }
            if (!t_.ring.has_stem(h.degree + own.degree))
                continue;
            auto a = t_.ring.multiply(h, own);
            auto b = t_.ring.multiply(h, *sfar);
            if (a && b && *a != *b)
                fail("hopf-stable", path + " / K=" + tag,
                     "h*E^infinity gives " + t_.ring.describe(*a) + " but " + t_.ring.describe(*b) +
                         " after suspension");
        }
    }

    void antipodal(const SphereGroupEntry& e, const SphereElement& x, const GeneratorRecord& g,
                   const std::string& path)
    {
        if (!g.antip)
            return;
        const SphereElement ax{e.m, e.q, e.group.element(*g.antip)};
        if (e.q % 2 == 1) {
            if (ax != x)
                fail("antipodal-odd", path, "antipodal action must be the identity for odd q");
            return;
        }
        auto aax = antipodal_compose(t_, ax);
        if (aax.is_known() && *aax != x)
            fail("antipodal-involution", path, "antipodal action is not an involution");
        auto s = stabilize(t_, x);
        auto sa = stabilize(t_, ax);
        if (s.is_known() && sa.is_known() && *sa != s->scale(-1))
            fail("antipodal-stable", path, "antipodal action must stabilize to the sign (-1)^(q+1)");
    }

    void registry()
    {
        for (const auto& n : t_.names) {
            const std::string path = "name " + n.name;
            guarded("registry", path, [&] { named(n, path); });
        }
    }

    void named(const NamedElementRecord& n, const std::string& path)
    {
        const SphereElement x = t_.element(n.m, n.q, n.coeffs);
        if (n.name.rfind("whitehead(", 0) == 0) {
            const int q = n.q;
            if (n.m != 2 * q - 1)
                fail("whitehead", path, "must lie in pi_{2q-1}(S^q)");
            if (q % 2 == 1 && !x.scale(2).is_zero())
                fail("whitehead", path, "order must divide 2 for odd q");
            const bool h_space = q == 1 || q == 3 || q == 7;
            if (h_space != x.is_zero())
                fail("whitehead", path, h_space ? "must vanish on an H-space sphere" : "must be nonzero");
            if (t_.covers(n.m + 1, q + 1)) {
                auto s = suspend(t_, x);
                if (s.is_known() && !s->is_zero())
                    fail("whitehead", path, "must suspend to zero");
            }
            if (q >= 2) {
                GammaValue gv = gamma(t_, x);
                if (q % 2 == 1 && gv.is_zero() == Tri::No)
                    fail("whitehead", path, "Gamma must vanish for odd q");
                if (q % 2 == 0 && gv.components.size() >= 2 && gv.components[1]) {
                    const StableElement& h2 = *gv.components[1];
                    if (h2 != t_.ring.element(0, {2}) && h2 != t_.ring.element(0, {-2}))
                        fail("whitehead", path, "Hopf invariant must be 2 up to sign for even q");
                }
            }
        } else if (n.name == "alpha1_3") {
            auto s = stabilize(t_, x);
            if (s.is_known()) {
                if (order_or_zero(s->value) != 3)
                    fail("alpha1_3", path, "stabilization must have order 3");
                try {
                    if (*s != t_.ring.named("einf_alpha1_3"))
                        fail("alpha1_3", path, "stabilization differs from einf_alpha1_3");
                } catch (const LookupError&) {
                }
            }
        } else if (n.name == "hopfC" || n.name == "hopfH" || n.name == "hopfR") {
            const char* expect = n.name == "hopfC" ? "eta" : n.name == "hopfH" ? "nu" : "two";
            auto s = stabilize(t_, x);
            try {
                if (s.is_known() && *s != t_.ring.named(expect))
                    fail("hopf", path, std::string("must stabilize to ") + expect);
            } catch (const LookupError&) {
            }
        }
    }

    const TableSet& t_;
    ValidationReport report_;
};

}  // namespace

ValidationReport validate(const TableSet& t)
{
    return Checker(t).run();
}

ValidationReport validate_source(std::string_view source)
{
    try {
        return validate(load_tables(source));
    } catch (const ParseError& e) {
        ValidationReport r;
        r.violations.push_back({"syntax", "line " + std::to_string(e.line()), e.what()});
        return r;
    } catch (const SemanticError& e) {
        ValidationReport r;
        r.violations.push_back({"structure", e.path(), e.what()});
        return r;
    } catch (const std::exception& e) {
        ValidationReport r;
        r.violations.push_back({"structure", "", e.what()});
        return r;
    }
}

}  // namespace nielsen
