#include "doctest.h"
#include "group.hpp"

using namespace nhomega;

TEST_CASE("group arithmetic in Z_2 x Z_3") {
    GradingGroup g({2, 3});
    CHECK(g.rank() == 2);
    CHECK(g.order() == 6);
    CHECK(g.zero() == GroupElement{0, 0});
    CHECK(g.add({1, 2}, {1, 2}) == GroupElement{0, 1});
    CHECK(g.neg({1, 2}) == GroupElement{1, 1});
    CHECK(g.contains({1, 2}));
    CHECK(!g.contains({2, 0}));
    CHECK(!g.contains({0, -1}));
    CHECK(!g.contains({0}));

    auto elems = g.elements();
    CHECK(elems.size() == 6);
    CHECK(elems.front() == GroupElement{0, 0});
    CHECK(elems.back() == GroupElement{1, 2});
    // lexicographic and strictly increasing
    for (size_t i = 1; i < elems.size(); ++i) CHECK(elems[i - 1] < elems[i]);
}

TEST_CASE("trivial group") {
    GradingGroup g({1});
    CHECK(g.order() == 1);
    CHECK(g.elements() == std::vector<GroupElement>{{0}});
    CHECK(g.add({0}, {0}) == GroupElement{0});
}

TEST_CASE("bicharacter on Z_2 is the super sign") {
    GradingGroup g({2});
    Bicharacter b(g, {{-1}});
    CHECK(b.validate().empty());
    CHECK(b.eps({0}, {0}) == 1);
    CHECK(b.eps({0}, {1}) == 1);
    CHECK(b.eps({1}, {0}) == 1);
    CHECK(b.eps({1}, {1}) == -1);
    CHECK(!b.is_trivial());
}

TEST_CASE("bicharacter biadditivity and symmetry, full enumeration") {
    for (auto orders : std::vector<std::vector<int>>{{2}, {2, 2}, {2, 4}, {4, 2, 2}}) {
        GradingGroup g(orders);
        REQUIRE(g.order() <= 64);
        // alternate -1/+1 on generator pairs, keeping the matrix symmetric
        std::vector<std::vector<int>> vals(g.rank(), std::vector<int>(g.rank(), 1));
        for (int i = 0; i < g.rank(); ++i)
            for (int j = 0; j < g.rank(); ++j)
                if ((i + j) % 2 == 0 && g.cyclic_orders()[i] % 2 == 0 &&
                    g.cyclic_orders()[j] % 2 == 0)
                    vals[i][j] = -1;
        Bicharacter b(g, vals);
        REQUIRE(b.validate().empty());
        auto elems = g.elements();
        for (const auto& x : elems)
            for (const auto& y : elems) {
                CHECK(b.eps(x, y) * b.eps(y, x) == 1);
                for (const auto& z : elems) {
                    CHECK(b.eps(x, g.add(y, z)) == b.eps(x, y) * b.eps(x, z));
                    CHECK(b.eps(g.add(x, y), z) == b.eps(x, z) * b.eps(y, z));
                }
            }
    }
}

TEST_CASE("ill-defined bicharacter is rejected") {
    // -1 on a generator of odd order cannot extend to Z_3
    GradingGroup g({3});
    Bicharacter b(g, {{-1}});
    CHECK(!b.validate().empty());
}

TEST_CASE("trivial bicharacter") {
    GradingGroup g({2, 2});
    Bicharacter b(g, {{1, 1}, {1, 1}});
    CHECK(b.is_trivial());
    CHECK(b.validate().empty());
}
