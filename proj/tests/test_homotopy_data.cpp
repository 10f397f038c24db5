#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "nielsen/homotopy_data.hpp"
#include "support.hpp"

using namespace nielsen;

namespace {

const TableSet& T()
{
    return default_tables();
}

std::string replaced(std::string text, const std::string& from, const std::string& to)
{
    auto pos = text.find(from);
    REQUIRE_MESSAGE(pos != std::string::npos, "pattern not found: " << from);
    text.replace(pos, from.size(), to);
    return text;
}

std::string shipped()
{
    return std::string(embedded_tables());
}

std::vector<SphereElement> sample_elements(const TableSet& t, int m, int q, testsupport::Rng& rng, int count)
{
    SphereGroupEntry e = t.lookup(m, q);
    std::vector<SphereElement> out;
    if (e.group.is_finite() && e.group.order() <= 64) {
        for (const auto& v : testsupport::enumerate(e.group))
            out.push_back({m, q, v});
        return out;
    }
    for (int i = 0; i < count; ++i)
        out.push_back({m, q, testsupport::random_element(rng, e.group)});
    return out;
}

StableElement hopf(const std::string& name)
{
    return T().ring.named(name);
}

}  // namespace

TEST_CASE("lookup: tabulated and closed-form entries")
{
    CHECK(T().lookup(9, 3).group == FgAbGroup::cyclic(3));
    CHECK(T().lookup(6, 3).group == FgAbGroup::cyclic(12));
    CHECK(T().lookup(4, 3).group == FgAbGroup::cyclic(2));
    CHECK(T().lookup(3, 2).group == FgAbGroup::integers());
    CHECK(T().lookup(7, 4).group.to_string() == "Z + Z_12");

    SphereGroupEntry e55 = T().lookup(5, 5);
    CHECK(e55.group == FgAbGroup::integers());
    CHECK(e55.closed_form);
    CHECK(e55.generator_names() == std::vector<std::string>{"iota_5"});

    CHECK(T().lookup(1, 1).group == FgAbGroup::integers());
    CHECK(T().lookup(4, 1).group.is_trivial());
    CHECK(T().lookup(3, 0).group.is_trivial());
    CHECK(T().lookup(2, 6).group.is_trivial());
}

TEST_CASE("lookup: untabulated entries are errors, not trivial groups")
{
    CHECK_THROWS_AS(T().lookup(40, 5), OutOfTabulatedRange);
    CHECK_FALSE(T().covers(40, 5));
    CHECK(T().covers(9, 3));
}

TEST_CASE("coverage: (m,2) and (m,3) for 2 <= m <= 9 and the witness entries")
{
    for (int q : {2, 3})
        for (int m = 2; m <= 9; ++m) {
            CAPTURE(m);
            CAPTURE(q);
            REQUIRE(T().covers(m, q));
        }
    CHECK(T().covers(9, 5));
    CHECK(T().covers(7, 4));
    CHECK(T().covers(6, 3));
    CHECK(T().covers(8, 5));
}

TEST_CASE("round trip: parse, serialize, parse")
{
    TableSet a = load_tables(embedded_tables());
    std::string text = serialize_tables(a);
    TableSet b = load_tables(text);
    CHECK(a == b);
    CHECK(serialize_tables(b) == text);
}

TEST_CASE("load: small well-formed file")
{
    TableSet t = load_tables("stem 0 1 -\ngen iota\nstem 1 0 2\ngen eta\n"
                             "group 3 2 1 -\ngen eta_2\nstab 1 1\ngamma 2 0 1\n");
    CHECK(t.lookup(3, 2).group == FgAbGroup::integers());
    CHECK(t.lookup(3, 2).generator_names() == std::vector<std::string>{"eta_2"});
}

TEST_CASE("load: empty file gives an empty valid table set")
{
    TableSet t = load_tables("");
    CHECK(t.entries.empty());
    CHECK(t.names.empty());
    CHECK(validate(t).ok());
    CHECK(validate_source("").ok());
}

TEST_CASE("load: rejects a broken divisibility chain")
{
    CHECK_THROWS_AS(load_tables("group 8 4 0 4,2\n"), SemanticError);
}

TEST_CASE("load: syntax errors carry line and column")
{
    try {
        load_tables("stem 0 1 -\nstem x 0 2\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() >= 1);
    }
}

TEST_CASE("load: wrong vector length is a semantic error with a path")
{
    try {
        load_tables("stem 0 1 -\ngen iota\nstem 1 0 2\ngen eta\ngroup 3 2 1 -\ngen eta_2\nstab 1 1,1\n");
        FAIL("expected a semantic error");
    } catch (const SemanticError& e) {
        CHECK(e.path().find("3 2") != std::string::npos);
    }
}

TEST_CASE("load: missing file is reported")
{
    CHECK_THROWS(load_tables_file("/nonexistent/tables.txt"));
}

TEST_CASE("suspend")
{
    SphereElement h = T().named("hopfC");
    auto s = suspend(T(), h);
    REQUIRE(s.is_known());
    CHECK(s->m == 4);
    CHECK(s->q == 3);
    CHECK(s->value == T().lookup(4, 3).group.generator(0));

    auto z = suspend(T(), T().zero(6, 3));
    REQUIRE(z.is_known());
    CHECK(z->is_zero());

    for (int q : {3, 5}) {
        auto w = suspend(T(), T().named("whitehead(" + std::to_string(q) + ")"));
        if (T().covers(2 * q, q + 1)) {
            REQUIRE(w.is_known());
            CHECK(w->is_zero());
        }
    }
    auto w2 = suspend(T(), T().named("whitehead(2)"));
    REQUIRE(w2.is_known());
    CHECK(w2->is_zero());
}

TEST_CASE("stabilize")
{
    auto h = stabilize(T(), T().named("hopfC"));
    REQUIRE(h.is_known());
    CHECK(*h == hopf("eta"));

    auto hh = stabilize(T(), T().named("hopfH").scale(24));
    REQUIRE(hh.is_known());
    CHECK(hh->is_zero());

    auto nu = stabilize(T(), T().named("hopfH"));
    REQUIRE(nu.is_known());
    CHECK(*nu == hopf("nu"));

    for (int q = 1; q <= 7; ++q) {
        auto i = stabilize(T(), T().element(q, q, {1}));
        REQUIRE(i.is_known());
        CHECK(*i == T().ring.element(0, {1}));
    }
}

TEST_CASE("stabilize agrees with stabilize after suspend wherever both are known")
{
    for (const auto& [key, e] : T().entries) {
        if (!T().covers(e.m + 1, e.q + 1))
            continue;
        for (std::size_t i = 0; i < e.generators.size(); ++i) {
            SphereElement x{e.m, e.q, e.group.generator(i)};
            auto s = stabilize(T(), x);
            auto sx = suspend(T(), x);
            if (!s.is_known() || !sx.is_known())
                continue;
            auto ss = stabilize(T(), *sx);
            if (ss.is_known())
                CHECK(*s == *ss);
        }
    }
}

TEST_CASE("gamma: values")
{
    // pi_9(S^3) = Z_3 maps to a target without 3-torsion.
    for (const auto& v : testsupport::enumerate(T().lookup(9, 3).group)) {
        GammaValue g = gamma(T(), {9, 3, v});
        CHECK(g.is_zero() == Tri::Yes);
    }
    CHECK(gamma(T(), T().named("whitehead(5)")).is_zero() == Tri::Yes);

    GammaValue h = gamma(T(), T().named("hopfC"));
    CHECK(h.is_zero() == Tri::No);
    REQUIRE(h.components.size() == 2);
    REQUIRE(h.components[1]);
    CHECK(*h.components[1] == T().ring.element(0, {1}));
}

TEST_CASE("gamma: first component is stabilization")
{
    for (const auto& [key, e] : T().entries)
        for (std::size_t i = 0; i < e.generators.size(); ++i) {
            SphereElement x{e.m, e.q, e.group.generator(i)};
            if (e.q < 2 || e.m < e.q)
                continue;
            GammaValue g = gamma(T(), x);
            auto s = stabilize(T(), x);
            REQUIRE_FALSE(g.components.empty());
            CHECK(g.components[0].has_value() == s.is_known());
            if (s.is_known())
                CHECK(*g.components[0] == *s);
        }
}

TEST_CASE("gamma_kmax and degrees")
{
    CHECK(gamma_kmax(3, 2) == 2);
    CHECK(gamma_kmax(9, 2) == 8);
    CHECK(gamma_kmax(9, 3) == 4);
    CHECK(gamma_kmax(9, 5) == 2);
    CHECK(gamma_degree(3, 2, 2) == 0);
    CHECK(gamma_degree(9, 5, 2) == 0);
    CHECK(gamma_degree(9, 3, 1) == 6);
}

TEST_CASE("queries are linear")
{
    testsupport::Rng rng(17);
    for (const auto& [key, e] : T().entries) {
        auto xs = sample_elements(T(), e.m, e.q, rng, 6);
        for (std::size_t i = 0; i < xs.size() && i < 8; ++i)
            for (std::size_t j = 0; j < xs.size() && j < 8; ++j) {
                const SphereElement& a = xs[i];
                const SphereElement& b = xs[j];
                auto sa = stabilize(T(), a), sb = stabilize(T(), b), sab = stabilize(T(), a + b);
                if (sa.is_known() && sb.is_known() && sab.is_known())
                    CHECK(*sab == *sa + *sb);
                if (T().covers(e.m + 1, e.q + 1)) {
                    auto ua = suspend(T(), a), ub = suspend(T(), b), uab = suspend(T(), a + b);
                    if (ua.is_known() && ub.is_known() && uab.is_known())
                        CHECK(*uab == *ua + *ub);
                }
                auto aa = antipodal_compose(T(), a), ab = antipodal_compose(T(), b),
                     aab = antipodal_compose(T(), a + b);
                if (aa.is_known() && ab.is_known() && aab.is_known())
                    CHECK(*aab == *aa + *ab);
                if (e.q >= 2) {
                    GammaValue ga = gamma(T(), a), gb = gamma(T(), b), gab = gamma(T(), a + b);
                    for (std::size_t k = 0; k < gab.components.size(); ++k)
                        if (ga.components[k] && gb.components[k] && gab.components[k])
                            CHECK(*gab.components[k] == *ga.components[k] + *gb.components[k]);
                }
            }
    }
}

TEST_CASE("antipodal_compose")
{
    for (const auto& [key, e] : T().entries) {
        if (e.q % 2 == 0)
            continue;
        for (std::size_t i = 0; i < e.generators.size(); ++i) {
            SphereElement x{e.m, e.q, e.group.generator(i)};
            auto a = antipodal_compose(T(), x);
            REQUIRE(a.is_known());
            CHECK(*a == x);
        }
    }
    for (int q : {2, 4, 6})
        for (Int k : {-3, 1, 5}) {
            auto a = antipodal_compose(T(), T().element(q, q, {k}));
            REQUIRE(a.is_known());
            CHECK(*a == T().element(q, q, {-k}));
        }
    auto z = antipodal_compose(T(), T().zero(7, 4));
    REQUIRE(z.is_known());
    CHECK(z->is_zero());
}

TEST_CASE("suspension_image_contains")
{
    CHECK(suspension_image_contains(T(), T().zero(6, 3)) == Tri::Yes);
    CHECK(suspension_image_contains(T(), SphereElement{4, 3, T().lookup(4, 3).group.generator(0)}) == Tri::Yes);
    CHECK(suspension_image_contains(T(), T().named("whitehead(2)")) == Tri::No);
    CHECK(suspension_image_contains(T(), T().named("hopfC")) == Tri::No);
    CHECK(suspension_image_contains(T(), T().named("hopfH")) == Tri::No);
}

TEST_CASE("suspension_image_contains is closed under addition")
{
    testsupport::Rng rng(5);
    for (const auto& [key, e] : T().entries) {
        auto xs = sample_elements(T(), e.m, e.q, rng, 5);
        for (const auto& a : xs)
            for (const auto& b : xs)
                if (suspension_image_contains(T(), a) == Tri::Yes && suspension_image_contains(T(), b) == Tri::Yes)
                    CHECK(suspension_image_contains(T(), a + b) == Tri::Yes);
    }
}

TEST_CASE("kernel_chain: values")
{
    KernelChain c = kernel_chain(T(), 3, 2, hopf("eta"));
    CHECK(c.ker_gamma.is_trivial());

    KernelChain c9 = kernel_chain(T(), 9, 3, hopf("two"));
    CHECK(c9.ker_gamma.is_whole());
    CHECK(c9.whole.ambient() == FgAbGroup::cyclic(3));

    KernelChain t = kernel_chain(T(), 2, 5, hopf("two"));
    CHECK(t.ker_gamma.is_trivial());
    CHECK(t.ker_hopf_stab.is_trivial());
    CHECK(t.whole.is_trivial());
    CHECK(subgroup_cmp(t.ker_gamma, t.whole) == SubgroupRelation::Equal);
}

TEST_CASE("kernel_chain: nesting wherever the data decides it")
{
    int decided = 0;
    for (const auto& [key, e] : T().entries)
        for (const char* h : {"two", "eta", "nu"}) {
            StableElement hk = hopf(h);
            try {
                KernelChain c = kernel_chain(T(), e.m, e.q, hk);
                CHECK(subgroup_contains(c.ker_hopf_stab, c.ker_gamma));
                CHECK(subgroup_contains(c.whole, c.ker_hopf_stab));
                CHECK(c.whole.is_whole());
                ++decided;
            } catch (const IncompleteData&) {
            }
        }
    CHECK(decided > 20);
}

TEST_CASE("kernel_chain agrees with pointwise evaluation on finite groups")
{
    for (const auto& [key, e] : T().entries) {
        if (!e.group.is_finite() || e.q < 2)
            continue;
        for (const char* h : {"two", "eta", "nu"}) {
            StableElement hk = hopf(h);
            KernelChain c;
            try {
                c = kernel_chain(T(), e.m, e.q, hk);
            } catch (const IncompleteData&) {
                continue;
            }
            for (const auto& v : testsupport::enumerate(e.group)) {
                SphereElement x{e.m, e.q, v};
                GammaValue g = gamma(T(), x);
                CHECK(c.ker_gamma.contains(v) == (g.is_zero() == Tri::Yes));
                auto s = stabilize(T(), x);
                REQUIRE(s.is_known());
                auto p = T().ring.multiply(hk, *s);
                REQUIRE(p);
                CHECK(c.ker_hopf_stab.contains(v) == p->is_zero());
            }
        }
    }
}

TEST_CASE("kernel_chain: undecided data is reported, not guessed")
{
    TableSet t = load_tables("stem 0 1 -\ngen iota\nstem 1 0 2\ngen eta\n"
                             "group 3 2 1 -\ngen eta_2\n");
    CHECK_THROWS_AS(kernel_chain(t, 3, 2, t.ring.element(0, {2})), IncompleteData);
}

TEST_CASE("named elements")
{
    CHECK(T().named("hopfC") == T().element(3, 2, {1}));
    CHECK(T().named("alpha1_3").m == 6);
    CHECK(element_order(T().named("alpha1_3").value) == 3);
    CHECK(T().named("whitehead(3)").is_zero());
    CHECK(T().named("whitehead(7)").is_zero());
    CHECK_FALSE(T().named("whitehead(5)").is_zero());
    CHECK(T().named("whitehead(5)").scale(2).is_zero());
    CHECK_THROWS_AS(T().named("whitehead(99)"), LookupError);
}

TEST_CASE("validate: shipped dataset has no violations")
{
    ValidationReport r = validate(T());
    for (const auto& v : r.violations)
        MESSAGE(v.check << ": " << v.path << ": " << v.message);
    CHECK(r.ok());
    CHECK(validate_source(shipped()).ok());
}

TEST_CASE("validate: injected faults are each detected")
{
    struct Fault {
        const char* label;
        std::string text;
    };
    const Fault faults[] = {
        {"stabilization of the Hopf map set to zero",
         replaced(shipped(), "gen eta_2\nsusp 1\nstab 1 1", "gen eta_2\nsusp 1\nstab 1 0")},
        {"torsion chain 4,2", replaced(shipped(), "group 8 4 0 2,2", "group 8 4 0 4,2")},
        {"stabilization degree mismatch", replaced(shipped(), "gen eta_3\nsusp 1\nstab 1 1", "gen eta_3\nsusp 1\nstab 2 1")},
        {"non-identity antipodal action for odd q",
         replaced(shipped(), "gen eta_3\nsusp 1\nstab 1 1", "gen eta_3\nsusp 1\nstab 1 1\nantip 0")},
        {"Whitehead square of an H-space sphere set nonzero",
         replaced(shipped(), "name whitehead(3) 5 3 0", "name whitehead(3) 5 3 1")},
    };
    for (const auto& f : faults) {
        CAPTURE(f.label);
        ValidationReport r = validate_source(f.text);
        CHECK(r.violations.size() >= 1);
    }
}

TEST_CASE("validate: the Hopf-map fault is seen by the diagram check")
{
    ValidationReport r =
        validate_source(replaced(shipped(), "gen eta_2\nsusp 1\nstab 1 1", "gen eta_2\nsusp 1\nstab 1 0"));
    bool diagram = false;
    for (const auto& v : r.violations)
        diagram = diagram || v.check == "hopf-stable";
    CHECK(diagram);
}

TEST_CASE("file loading matches the embedded data")
{
    std::string path = (std::filesystem::temp_directory_path() / "nielsen_shipped_copy.txt").string();
    {
        std::ofstream out(path, std::ios::binary);
        out << shipped();
    }
    CHECK(load_tables_file(path) == T());
}
