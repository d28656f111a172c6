#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toricmon/cone.hpp"

#include <random>
#include <set>

using namespace toricmon;

namespace {

std::mt19937 rng(777);

Cone random_pointed_cone(std::size_t n, int max_coord, std::size_t max_rays) {
    std::uniform_int_distribution<int> d(-max_coord, max_coord);
    std::uniform_int_distribution<std::size_t> count(1, max_rays);
    while (true) {
        std::vector<IntVec> gens;
        std::size_t g = count(rng);
        for (std::size_t i = 0; i < g; ++i) {
            IntVec v(n);
            bool zero = true;
            for (auto& x : v) {
                x = d(rng);
                if (x != 0)
                    zero = false;
            }
            if (!zero)
                gens.push_back(v);
        }
        if (gens.empty())
            continue;
        Cone c(n, Side::N, gens);
        if (is_strongly_convex(c))
            return c;
    }
}

} // namespace

TEST_CASE("canonical generator storage") {
    Cone c(2, Side::N, {{2, 0}, {0, 3}, {1, 0}});
    CHECK(c.generators() == std::vector<IntVec>{{0, 1}, {1, 0}});
    CHECK_THROWS_AS(Cone(2, Side::N, {{0, 0}}), ValidationError);
    CHECK_THROWS_AS(Cone(2, Side::N, {{1, 0, 0}}), ValidationError);
}

TEST_CASE("dual cone fixed values") {
    Cone orthant(2, Side::N, {{1, 0}, {0, 1}});
    CHECK(dual_cone(orthant).generators() == std::vector<IntVec>{{0, 1}, {1, 0}});
    CHECK(dual_cone(orthant).side() == Side::M);

    Cone half(2, Side::N, {{1, 0}});
    CHECK(dual_cone(half).generators() == std::vector<IntVec>{{0, -1}, {0, 1}, {1, 0}});

    Cone slanted(2, Side::N, {{2, -1}, {0, 1}});
    CHECK(dual_cone(slanted).generators() == std::vector<IntVec>{{1, 0}, {1, 2}});

    Cone zero = Cone::zero(2, Side::N);
    CHECK(dual_cone(zero).generators() ==
          std::vector<IntVec>{{-1, 0}, {0, -1}, {0, 1}, {1, 0}});
}

TEST_CASE("double dual is the identity on random pointed cones") {
    for (int t = 0; t < 20; ++t) {
        std::size_t n = 2 + t % 2;
        Cone c = random_pointed_cone(n, 3, 5);
        Cone dd = dual_cone(dual_cone(c));
        CHECK(extreme_rays(dd) == extreme_rays(c));
    }
}

TEST_CASE("double dual membership for lower-dimensional cones") {
    Cone half(2, Side::N, {{1, 0}});
    Cone dd = dual_cone(dual_cone(half));
    std::uniform_int_distribution<int> d(-4, 4);
    for (int t = 0; t < 100; ++t) {
        IntVec v{d(rng), d(rng)};
        CHECK(contains(half, v) == contains(dd, v));
    }
}

TEST_CASE("extreme rays") {
    Cone c(2, Side::N, {{1, 0}, {1, 1}, {0, 1}});
    CHECK(extreme_rays(c) == std::vector<IntVec>{{0, 1}, {1, 0}});

    Cone ray(2, Side::N, {{1, 0}});
    CHECK(extreme_rays(ray) == std::vector<IntVec>{{1, 0}});

    Cone line(2, Side::N, {{1, 0}, {-1, 0}});
    CHECK_THROWS_AS(extreme_rays(line), ValidationError);
}

TEST_CASE("strong convexity") {
    CHECK(is_strongly_convex(Cone(2, Side::N, {{1, 0}, {0, 1}})));
    CHECK(!is_strongly_convex(Cone(2, Side::N, {{1, 0}, {-1, 0}})));
    CHECK(is_strongly_convex(Cone::zero(2, Side::N)));
    CHECK(!is_strongly_convex(Cone(2, Side::N, {{1, 0}, {-1, 1}, {0, -1}})));
}

TEST_CASE("containment") {
    Cone orthant(2, Side::N, {{1, 0}, {0, 1}});
    CHECK(contains(orthant, {3, 5}));
    CHECK(!contains(orthant, {-1, 0}));
    CHECK(contains(orthant, {0, 0}));
    Cone slanted(2, Side::N, {{0, 1}, {2, -1}});
    CHECK(contains(slanted, {1, 0}));
    CHECK(!contains(slanted, {1, -1}));
    CHECK_THROWS_AS(contains(orthant, {1, 2, 3}), ValidationError);
}

TEST_CASE("faces of the orthant") {
    Cone orthant(2, Side::N, {{1, 0}, {0, 1}});
    auto dim1 = faces_of_dimension(orthant, 1);
    REQUIRE(dim1.size() == 2);
    CHECK(dim1[0].ray_indices == std::vector<std::size_t>{0});
    CHECK(dim1[1].ray_indices == std::vector<std::size_t>{1});

    auto dim0 = faces_of_dimension(orthant, 0);
    REQUIRE(dim0.size() == 1);
    CHECK(dim0[0].ray_indices.empty());

    auto dim2 = faces_of_dimension(orthant, 2);
    REQUIRE(dim2.size() == 1);
    CHECK(dim2[0].ray_indices == std::vector<std::size_t>{0, 1});

    Cone orth3(3, Side::N, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(faces_of_dimension(orth3, 2).size() == 3);
    CHECK(faces_of_dimension(orth3, 1).size() == 3);
}

TEST_CASE("face intersections are faces") {
    Cone orth3(3, Side::N, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    std::set<std::vector<std::size_t>> all;
    for (std::size_t d = 0; d <= 3; ++d)
        for (const Face& f : faces_of_dimension(orth3, d))
            all.insert(f.ray_indices);
    for (const auto& a : all)
        for (const auto& b : all) {
            std::vector<std::size_t> inter;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(inter));
            CHECK(all.count(inter) == 1);
        }
}

TEST_CASE("make_face rejects non-faces") {
    Cone c(2, Side::N, {{1, 0}, {1, 2}});
    CHECK_NOTHROW(make_face(c, {0}));
    CHECK_NOTHROW(make_face(c, {}));
    CHECK_THROWS_AS(make_face(c, {42}), ValidationError);

    // square cone over z=1: opposite rays do not span a face
    Cone sq(3, Side::N, {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}});
    auto rays = extreme_rays(sq);
    REQUIRE(rays.size() == 4);
    CHECK(rays[0] == IntVec{-1, 0, 1});
    CHECK(rays[3] == IntVec{1, 0, 1});
    CHECK_THROWS_AS(make_face(sq, {0, 3}), ValidationError);
    CHECK_NOTHROW(make_face(sq, {0, 1}));
}

TEST_CASE("regular faces") {
    Cone orthant(2, Side::N, {{1, 0}, {0, 1}});
    Face tau = make_face(orthant, {1});
    CHECK(is_regular_face(tau));

    Cone skew(2, Side::N, {{1, 1}, {1, -1}});
    Face whole = make_face(skew, {0, 1});
    CHECK(!is_regular_face(whole));

    CHECK(is_regular_face(make_face(orthant, {})));
}

TEST_CASE("hilbert basis fixed values") {
    Cone orthant(2, Side::M, {{1, 0}, {0, 1}});
    CHECK(hilbert_basis(orthant).elements == std::vector<IntVec>{{0, 1}, {1, 0}});

    Cone a1(2, Side::M, {{0, 1}, {2, -1}});
    CHECK(hilbert_basis(a1).elements == std::vector<IntVec>{{0, 1}, {1, 0}, {2, -1}});

    Cone one(1, Side::M, {{1}});
    CHECK(hilbert_basis(one).elements == std::vector<IntVec>{{1}});

    CHECK_THROWS_AS(hilbert_basis(a1, Int(1)), ValidationError);
}

TEST_CASE("hilbert basis of a half-space product") {
    // dual of the ray cone((1,0)): lineality along the second axis
    Cone half(2, Side::M, {{0, -1}, {0, 1}, {1, 0}});
    auto hb = hilbert_basis(half);
    CHECK(hb.elements == std::vector<IntVec>{{0, -1}, {0, 1}, {1, 0}});
}

TEST_CASE("hilbert basis generates all boxed lattice points") {
    for (int t = 0; t < 8; ++t) {
        Cone c = random_pointed_cone(2, 3, 4);
        auto hb = hilbert_basis(c);
        for (const IntVec& h : hb.elements)
            CHECK(contains(c, h));
        // dynamic programming over the box: every contained point must be
        // reachable by adding basis elements starting from zero
        int bound = 6;
        std::set<IntVec> reach;
        reach.insert(IntVec{0, 0});
        bool grew = true;
        auto inside = [&](const IntVec& v) {
            for (const Int& x : v)
                if (abs_int(x) > bound)
                    return false;
            return contains(c, v);
        };
        while (grew) {
            grew = false;
            std::set<IntVec> next = reach;
            for (const IntVec& r : reach)
                for (const IntVec& h : hb.elements) {
                    IntVec s = vec_add(r, h);
                    if (inside(s) && next.insert(s).second)
                        grew = true;
                }
            reach = next;
        }
        for (Int x = -bound; x <= bound; ++x)
            for (Int y = -bound; y <= bound; ++y) {
                IntVec v{x, y};
                if (contains(c, v))
                    CHECK(reach.count(v) == 1);
            }
    }
}

TEST_CASE("hilbert basis elements are irreducible") {
    for (int t = 0; t < 6; ++t) {
        Cone c = random_pointed_cone(2, 3, 4);
        auto hb = hilbert_basis(c);
        for (const IntVec& a : hb.elements)
            for (const IntVec& b : hb.elements) {
                IntVec s = vec_add(a, b);
                for (const IntVec& h : hb.elements)
                    CHECK(h != s);
            }
    }
}
