#include "doctest.h"
#include "helpers.hpp"

using namespace nhomega;
using testutil::Rng;

namespace {

Endo endo(const GradingGroup& g, size_t d, std::vector<int> vals, GroupElement deg) {
    RatMat m(d, d);
    for (size_t r = 0; r < d; ++r)
        for (size_t c = 0; c < d; ++c) m.at(r, c) = vals[r * d + c];
    return Endo(std::move(m), std::move(deg));
}

}  // namespace

TEST_CASE("sl2 structure table") {
    Algebra a = testutil::corpus("sl2").algebra;
    // bracket(h, e) = 2e
    RatVec h = a.basis_vector(2), e = a.basis_vector(0), f = a.basis_vector(1);
    CHECK(a.bracket({h, e}) == scale(2, e));
    CHECK(a.bracket({h, f}) == scale(-2, f));
    CHECK(a.bracket({e, f}) == a.basis_vector(2));
    CHECK(a.bracket({e, e}) == a.zero_vector());
}

TEST_CASE("bracket multilinearity with random rationals") {
    for (const char* name : {"sl2", "heis3", "super-osc", "filippov4"}) {
        Algebra a = testutil::corpus(name).algebra;
        Rng rng(42);
        for (int trial = 0; trial < 5; ++trial) {
            int n = a.arity;
            std::vector<RatVec> args(n);
            for (auto& v : args) {
                v = a.zero_vector();
                for (int i = 0; i < a.dim; ++i) v[i] = rng.rat();
            }
            RatVec u = a.zero_vector();
            for (int i = 0; i < a.dim; ++i) u[i] = rng.rat();
            Rat lam = rng.rat();
            for (int slot = 0; slot < n; ++slot) {
                auto lhs_args = args;
                lhs_args[slot] = add(scale(lam, args[slot]), u);
                auto rhs_args = args;
                rhs_args[slot] = u;
                RatVec lhs = a.bracket(lhs_args);
                RatVec rhs = add(scale(lam, a.bracket(args)), a.bracket(rhs_args));
                CHECK(lhs == rhs);
            }
        }
        // zero in any slot kills the bracket
        std::vector<RatVec> args(a.arity, a.basis_vector(0));
        args[0] = a.zero_vector();
        CHECK(is_zero(a.bracket(args)));
    }
}

TEST_CASE("validate accepts the corpus and flags broken structures") {
    for (const auto& name : corpus_names())
        CHECK(testutil::corpus(name).algebra.validate().empty());

    // break grading: give e3 = [e1,e2] the wrong degree
    Algebra bad = testutil::corpus("super-osc").algebra;
    bad.degrees[0] = {1};  // [e2,e2] has degree 0, value e1 now odd
    CHECK(!bad.validate().empty());

    // break multiplicativity of alpha
    Algebra bad2 = testutil::corpus("heis3").algebra;
    bad2.alpha.matrix.at(2, 2) = 5;  // alpha[e1,e2] = 5 e3 != [2e1,3e2] = 6 e3
    CHECK(!bad2.validate().empty());

    // break evenness of alpha
    Algebra bad3 = testutil::corpus("super-osc").algebra;
    bad3.alpha.matrix.at(0, 1) = 1;  // maps odd e2 into even e1
    CHECK(!bad3.validate().empty());
}

TEST_CASE("color commutator, trivial grading") {
    GradingGroup g({1});
    Bicharacter b(g, {{1}});
    Endo f = endo(g, 2, {1, 0, 0, 2}, {0});
    Endo e12 = endo(g, 2, {0, 1, 0, 0}, {0});
    Endo c = color_commutator(b, f, e12);
    CHECK(c.matrix == endo(g, 2, {0, -1, 0, 0}, {0}).matrix);
    CHECK(c.degree == GroupElement{0});

    // [f,f] = 0 in the even case
    CHECK(color_commutator(b, f, f).matrix.is_zero());
}

TEST_CASE("color commutator and Jordan product, super case") {
    GradingGroup g({2});
    Bicharacter b(g, {{-1}});
    // odd map on a (1|1)-graded 2-dim space
    Endo f = endo(g, 2, {0, 1, 1, 0}, {1});
    Endo anti = color_commutator(b, f, f);
    CHECK(anti.matrix == (f.matrix * f.matrix).scaled(2));  // anticommutator
    CHECK(anti.degree == GroupElement{0});

    Endo even = endo(g, 2, {1, 0, 0, 2}, {0});
    CHECK(jordan_product(b, even, even).matrix == even.matrix * even.matrix);
}

TEST_CASE("epsilon-antisymmetry and Jordan symmetry for operator products") {
    GradingGroup g({2});
    Bicharacter b(g, {{-1}});
    std::vector<Endo> maps = {
        endo(g, 2, {1, 0, 0, -3}, {0}),
        endo(g, 2, {2, 0, 0, 5}, {0}),
        endo(g, 2, {0, 1, 2, 0}, {1}),
        endo(g, 2, {0, -1, 1, 0}, {1}),
    };
    for (const Endo& f : maps)
        for (const Endo& gg : maps) {
            int eps = b.eps(*f.degree, *gg.degree);
            Endo lhs = color_commutator(b, f, gg);
            Endo rhs = color_commutator(b, gg, f);
            CHECK(lhs.matrix == rhs.matrix.scaled(-eps));
            Endo jl = jordan_product(b, f, gg);
            Endo jr = jordan_product(b, gg, f);
            CHECK(jl.matrix == jr.matrix.scaled(eps));
            // degree additivity
            CHECK(*lhs.degree == g.add(*f.degree, *gg.degree));
            CHECK(*jl.degree == g.add(*f.degree, *gg.degree));
        }
}

TEST_CASE("hom associator vanishes on an associative twist-free product") {
    // 2-dim algebra of "dual numbers": e0 unit, e1^2 = 0, alpha = id
    Algebra a;
    a.name = "dual";
    a.arity = 2;
    a.dim = 2;
    a.group = GradingGroup({1});
    a.degrees = {{0}, {0}};
    a.eps = Bicharacter(a.group, {{1}});
    a.alpha = Endo(RatMat::identity(2), GroupElement{0});
    a.structure[{0, 0}] = SparseVec{{0, 1}};
    a.structure[{0, 1}] = SparseVec{{1, 1}};
    a.structure[{1, 0}] = SparseVec{{1, 1}};
    REQUIRE(a.validate().empty());
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                CHECK(is_zero(hom_associator(a, a.basis_vector(i), a.basis_vector(j),
                                             a.basis_vector(k))));
}

TEST_CASE("endo power and degree bookkeeping") {
    GradingGroup g({1});
    Endo f = endo(g, 2, {2, 0, 0, 3}, {0});
    CHECK(f.power(0).matrix == RatMat::identity(2));
    CHECK(f.power(3).matrix == endo(g, 2, {8, 0, 0, 27}, {0}).matrix);
}

TEST_CASE("degree compatibility of matrices") {
    Algebra a = testutil::corpus("super-osc").algebra;  // deg e0 = 0, deg e1 = 1
    RatMat diag = RatMat::identity(2);
    CHECK(a.degree_compatible(diag, {0}));
    CHECK(!a.degree_compatible(diag, {1}));
    RatMat off(2, 2);
    off.at(0, 1) = 1;
    off.at(1, 0) = 2;
    CHECK(a.degree_compatible(off, {1}));
    CHECK(!a.degree_compatible(off, {0}));
}

TEST_CASE("alpha surjectivity detection") {
    CHECK(testutil::corpus("heis3").algebra.alpha_surjective());
    Algebra a = testutil::corpus("trivial2").algebra;
    a.alpha.matrix.at(0, 0) = 0;  // rank drops
    CHECK(!a.alpha_surjective());
}
