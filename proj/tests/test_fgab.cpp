#include "doctest.h"

#include <limits>
#include <numeric>
#include <set>

#include "nielsen/fgab.hpp"
#include "support.hpp"

using namespace nielsen;
using testsupport::Rng;

namespace {

bool is_smith_diagonal(const IntMatrix& d)
{
    Int prev = 1;
    bool seen_zero = false;
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j) {
            if (i != j && d(i, j) != 0)
                return false;
        }
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) {
        Int v = d(i, i);
        if (v < 0)
            return false;
        if (v == 0) {
            seen_zero = true;
            continue;
        }
        if (seen_zero || v % prev != 0)
            return false;
        prev = v;
    }
    return true;
}

// Gcd of all entries, the first invariant factor.
Int content(const IntMatrix& m)
{
    Int g = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            g = std::gcd(g, m(i, j));
    return g;
}

}  // namespace

TEST_CASE("smith normal form of small examples")
{
    SmithForm s = smith_normal_form(IntMatrix{{2, 4}, {6, 8}});
    CHECK(s.D == IntMatrix{{2, 0}, {0, 4}});
    // Oracle: d1 is the gcd of the entries, d1 * d2 is |det|.
    IntMatrix m{{2, 4}, {6, 8}};
    CHECK(s.D(0, 0) == content(m));
    CHECK(s.D(0, 0) * s.D(1, 1) == std::abs(determinant(m)));

    CHECK(smith_normal_form(IntMatrix::identity(3)).D == IntMatrix::identity(3));
    CHECK(smith_normal_form(IntMatrix(2, 3)).D == IntMatrix(2, 3));
    CHECK(smith_normal_form(IntMatrix(2, 3)).rank == 0);

    SmithForm e = smith_normal_form(IntMatrix(0, 3));
    CHECK(e.D.rows() == 0);
    CHECK(e.V == IntMatrix::identity(3));
    SmithForm e2 = smith_normal_form(IntMatrix(2, 0));
    CHECK(e2.U == IntMatrix::identity(2));
}

TEST_CASE("smith normal form identity on random matrices")
{
    Rng rng(0x5eed01);
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t r = static_cast<std::size_t>(rng.uniform(0, 6));
        std::size_t c = static_cast<std::size_t>(rng.uniform(0, 6));
        IntMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                m(i, j) = rng.uniform(-9, 9);
        SmithForm s = smith_normal_form(m);
        // Transform entries can grow large, so the identity is checked in wide arithmetic.
        auto um = testsupport::big_product(testsupport::widen(s.U), testsupport::widen(m), r, c);
        auto umv = testsupport::big_product(um, testsupport::widen(s.V), c, c);
        CHECK(umv == testsupport::widen(s.D));
        CHECK(abs(testsupport::big_determinant(testsupport::widen(s.U))) == 1);
        CHECK(abs(testsupport::big_determinant(testsupport::widen(s.V))) == 1);
        CHECK(is_smith_diagonal(s.D));
        if (r > 0 && c > 0)
            CHECK(s.D(0, 0) == content(m));
    }
}

TEST_CASE("checked arithmetic reports overflow")
{
    const Int big = std::numeric_limits<Int>::max();
    CHECK_THROWS_AS(checked::add(big, 1), OverflowError);
    CHECK_THROWS_AS(checked::mul(big, 2), OverflowError);
    CHECK_THROWS_AS(checked::neg(std::numeric_limits<Int>::min()), OverflowError);
    IntMatrix m{{big, 1}, {1, big}};
    CHECK_THROWS_AS(m * m, OverflowError);
    CHECK(checked::mod(-1, 24) == 23);
}

TEST_CASE("group normalization")
{
    CHECK_THROWS_AS(FgAbGroup(0, {4, 2}), DomainError);
    CHECK_THROWS_AS(FgAbGroup(0, {1}), DomainError);
    CHECK_THROWS_AS(FgAbGroup(-1, {}), DomainError);
    CHECK(FgAbGroup().is_trivial());
    CHECK_FALSE(FgAbGroup::cyclic(2).is_trivial());
    CHECK(FgAbGroup::from_orders(0, std::vector<Int>{4, 2}) == FgAbGroup(0, {2, 4}));
    CHECK(FgAbGroup::from_orders(0, std::vector<Int>{1, 1}).is_trivial());
    CHECK(FgAbGroup(1, {2, 12}).to_string() == "Z + Z_2 + Z_12");
    CHECK(FgAbGroup().to_string() == "0");
}

TEST_CASE("element arithmetic")
{
    FgAbGroup z24 = FgAbGroup::cyclic(24);
    CHECK(z24.element({20}) + z24.element({8}) == z24.element({4}));

    FgAbGroup zz2(1, {2});
    CHECK((zz2.element({3, 1}) + zz2.element({-3, 1})).is_zero());

    FgAbGroup z12 = FgAbGroup::cyclic(12);
    CHECK(z12.element({4}).scale(3).is_zero());
    // Oracle: repeated addition.
    GroupElement acc = z12.zero();
    for (int i = 0; i < 3; ++i)
        acc = acc + z12.element({4});
    CHECK(acc.is_zero());

    CHECK(z12.element({-1}).coeffs()[0] == 11);
    CHECK(-z12.element({5}) == z12.element({7}));
    CHECK_THROWS_AS(z12.element({1}) + z24.element({1}), DomainError);
    CHECK_THROWS_AS(z12.element({1, 2}), DomainError);
}

TEST_CASE("element order")
{
    FgAbGroup z24 = FgAbGroup::cyclic(24);
    CHECK(element_order(z24.zero()) == 1);
    CHECK(element_order(z24.generator(0)) == 24);
    CHECK(element_order(z24.element({8})) == 3);
    CHECK(element_order(FgAbGroup(1, {2}).element({1, 0})) == std::nullopt);
    CHECK(element_order(FgAbGroup(0, {2, 12}).element({1, 4})) == 6);
}

TEST_CASE("kernels and images")
{
    FgAbGroup z24 = FgAbGroup::cyclic(24);
    CHECK(kernel(Homomorphism::identity(z24)).is_trivial());
    CHECK(subgroup_cmp(kernel(Homomorphism::identity(z24)), Subgroup::trivial(z24)) == SubgroupRelation::Equal);

    FgAbGroup z2 = FgAbGroup::cyclic(2);
    // Multiplication by 2 on Z_2 is the zero map.
    Homomorphism times2(z2, z2, IntMatrix{{2}});
    CHECK(times2.matrix() == IntMatrix{{0}});
    CHECK(kernel(times2).is_whole());

    FgAbGroup z3 = FgAbGroup::cyclic(3);
    Homomorphism to2(z3, FgAbGroup(1, {2}), IntMatrix(2, 1));
    CHECK(kernel(to2).is_whole());
    CHECK(hom_forced_zero(3, FgAbGroup(1, {2, 2})));
    CHECK_FALSE(hom_forced_zero(3, FgAbGroup(0, {6})));
    // Any nonzero column from Z_3 into Z + Z_2 is rejected.
    CHECK_THROWS_AS(Homomorphism(z3, FgAbGroup(1, {2}), IntMatrix{{1}, {0}}), DomainError);
    CHECK_THROWS_AS(Homomorphism(z3, FgAbGroup(1, {2}), IntMatrix{{0}, {1}}), DomainError);

    CHECK(subgroup_cmp(Subgroup::trivial(z2), Subgroup::whole(z2)) == SubgroupRelation::ProperSub);

    FgAbGroup z12 = FgAbGroup::cyclic(12);
    Subgroup four(z12, {z12.element({4})});
    Subgroup two(z12, {z12.element({2})});
    CHECK(subgroup_cmp(four, two) == SubgroupRelation::ProperSub);
    CHECK(subgroup_cmp(two, four) == SubgroupRelation::ProperSuper);
    CHECK(four.order() == 3);
    CHECK(two.order() == 6);
    Subgroup three(z12, {z12.element({3})});
    CHECK(subgroup_cmp(four, three) == SubgroupRelation::Incomparable);
    CHECK_THROWS_AS(subgroup_cmp(four, Subgroup::trivial(z24)), DomainError);

    // Z -> Z, x -> 2x: kernel trivial, image of index 2.
    FgAbGroup z = FgAbGroup::integers();
    Homomorphism dbl(z, z, IntMatrix{{2}});
    CHECK(kernel(dbl).is_trivial());
    CHECK_FALSE(image(dbl).contains(z.element({1})));
    CHECK(image(dbl).contains(z.element({-6})));
    CHECK(image(dbl).order() == std::nullopt);

    // Z -> Z_2 reduction: kernel 2Z.
    Homomorphism red(z, z2, IntMatrix{{1}});
    Subgroup k = kernel(red);
    CHECK(k.contains(z.element({4})));
    CHECK_FALSE(k.contains(z.element({3})));
}

TEST_CASE("composition, application and direct sums")
{
    FgAbGroup z2 = FgAbGroup::cyclic(2), z3 = FgAbGroup::cyclic(3);
    std::vector<FgAbGroup> parts{z2, z3};
    CHECK(direct_sum(parts) == FgAbGroup::cyclic(6));

    std::vector<FgAbGroup> gamma_target{FgAbGroup::cyclic(240), z2, FgAbGroup(), FgAbGroup(),
                                        FgAbGroup::cyclic(24), z2, z2, FgAbGroup::integers()};
    CHECK(direct_sum(gamma_target) == FgAbGroup(1, {2, 2, 2, 24, 240}));
    CHECK(direct_sum(gamma_target).order() == std::nullopt);
    std::vector<FgAbGroup> none;
    CHECK(direct_sum(none).is_trivial());

    FgAbGroup z6 = FgAbGroup::cyclic(6), z12 = FgAbGroup::cyclic(12);
    Homomorphism zero = Homomorphism::zero(z6, z12);
    CHECK(hom_apply(zero, z6.element({5})).is_zero());

    Homomorphism f(z6, z12, IntMatrix{{2}});
    Homomorphism g(z12, z6, IntMatrix{{5}});
    Homomorphism gf = hom_compose(g, f);
    for (Int x = 0; x < 6; ++x)
        CHECK(gf(z6.element({x})) == g(f(z6.element({x}))));
    CHECK_THROWS_AS(hom_compose(f, f), DomainError);

    // Empty groups pass through every operation.
    FgAbGroup triv;
    Homomorphism e = Homomorphism::zero(triv, z6);
    CHECK(kernel(e).is_trivial());
    CHECK(image(e).is_trivial());
    CHECK(kernel(Homomorphism::zero(z6, triv)).is_whole());
    CHECK(Subgroup::whole(triv).order() == 1);
}

TEST_CASE("group operations agree with enumeration on random finite groups")
{
    Rng rng(0x5eed02);
    for (int trial = 0; trial < 200; ++trial) {
        FgAbGroup g = testsupport::random_finite_group(rng, 10000);
        FgAbGroup h = testsupport::random_finite_group(rng, 200);
        auto elems = testsupport::enumerate(g);
        REQUIRE(static_cast<Int>(elems.size()) == g.order().value());

        // Canonical reduction is idempotent and addition matches coefficientwise arithmetic.
        GroupElement a = testsupport::random_element(rng, g);
        CHECK(g.element(a.coeffs()) == a);
        CHECK((a - a).is_zero());

        // Subgroup membership and order against closure.
        std::vector<GroupElement> gens;
        for (int i = 0, n = static_cast<int>(rng.uniform(0, 3)); i < n; ++i)
            gens.push_back(testsupport::random_element(rng, g));
        Subgroup s(g, gens);
        auto closure = testsupport::span_closure(g, gens);
        Int members = 0;
        for (const auto& x : elems) {
            bool in = s.contains(x);
            CHECK(in == (closure.count(x.coeffs()) == 1));
            members += in ? 1 : 0;
        }
        CHECK(s.order() == members);

        // Element orders against repeated addition.
        Int ord = 1;
        for (GroupElement acc = a; !acc.is_zero(); acc = acc + a)
            ++ord;
        CHECK(element_order(a) == ord);

        // Kernel and image of a random homomorphism.
        Homomorphism f(g, h, testsupport::random_hom_matrix(rng, g, h));
        Subgroup ker = kernel(f);
        auto ker_closure = testsupport::span_closure(g, ker.generators());
        Int ker_size = 0;
        for (const auto& x : elems) {
            bool zero = f(x).is_zero();
            ker_size += zero ? 1 : 0;
            CHECK(zero == (ker_closure.count(x.coeffs()) == 1));
        }
        CHECK(ker.order() == ker_size);

        std::set<std::vector<Int>> img;
        for (const auto& x : elems)
            img.insert(f(x).coeffs());
        Subgroup im = image(f);
        for (const auto& y : testsupport::enumerate(h))
            CHECK(im.contains(y) == (img.count(y.coeffs()) == 1));
        CHECK(im.order() == static_cast<Int>(img.size()));
        // First isomorphism theorem as a cross-check.
        CHECK(ker_size * static_cast<Int>(img.size()) == g.order().value());

        // Comparison against set inclusion.
        Subgroup t(g, {testsupport::random_element(rng, g)});
        auto t_closure = testsupport::span_closure(g, t.generators());
        bool s_in_t = std::includes(t_closure.begin(), t_closure.end(), closure.begin(), closure.end());
        bool t_in_s = std::includes(closure.begin(), closure.end(), t_closure.begin(), t_closure.end());
        SubgroupRelation expected = s_in_t && t_in_s ? SubgroupRelation::Equal
                                    : s_in_t         ? SubgroupRelation::ProperSub
                                    : t_in_s         ? SubgroupRelation::ProperSuper
                                                     : SubgroupRelation::Incomparable;
        CHECK(subgroup_cmp(s, t) == expected);
    }
}

TEST_CASE("well-definedness check rejects invalid columns")
{
    Rng rng(0x5eed03);
    int rejected = 0;
    for (int trial = 0; trial < 200; ++trial) {
        FgAbGroup g = testsupport::random_finite_group(rng, 500);
        FgAbGroup h = testsupport::random_finite_group(rng, 500);
        if (g.is_trivial() || h.is_trivial())
            continue;
        IntMatrix m = testsupport::random_hom_matrix(rng, g, h);
        std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<Int>(g.num_generators()) - 1));
        std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<Int>(h.num_generators()) - 1));
        m(i, j) += 1;
        // Oracle: generator order times the column must vanish in the codomain.
        bool valid = h.element(m.column(j)).scale(g.generator_order(j)).is_zero();
        if (valid) {
            CHECK_NOTHROW(Homomorphism(g, h, m));
        } else {
            CHECK_THROWS_AS(Homomorphism(g, h, m), DomainError);
            ++rejected;
        }
    }
    CHECK(rejected > 50);
}
