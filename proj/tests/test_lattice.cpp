#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toricmon/lattice.hpp"

#include <random>

using namespace toricmon;

namespace {

std::mt19937 rng(20240517);

IntVec random_vec(std::size_t n, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntVec v(n);
    for (auto& x : v)
        x = d(rng);
    return v;
}

IntMat random_mat(std::size_t r, std::size_t c, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.at(i, j) = d(rng);
    return m;
}

IntMat random_unimodular(std::size_t n, int ops = 12) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    IntMat m = IntMat::identity(n);
    for (int t = 0; t < ops; ++t) {
        std::size_t i = pick(rng), j = pick(rng);
        if (i == j) {
            m.negate_row(i);
            continue;
        }
        m.add_row_multiple(i, j, coeff(rng));
    }
    return m;
}

} // namespace

TEST_CASE("pairing on fixed vectors") {
    CHECK(pairing({1, 0}, {0, 1}) == 0);
    CHECK(pairing({2, 3}, {1, 1}) == 5);
    CHECK(pairing({-1, 1}, {1, 0}) == -1);
    CHECK_THROWS_AS(pairing({1, 2}, {1, 2, 3}), ValidationError);
}

TEST_CASE("pairing is bilinear") {
    std::uniform_int_distribution<int> d(-9, 9);
    for (int t = 0; t < 50; ++t) {
        std::size_t n = 1 + t % 5;
        IntVec m1 = random_vec(n), m2 = random_vec(n), v = random_vec(n);
        Int a = d(rng), b = d(rng);
        IntVec lhs = vec_add(vec_scale(a, m1), vec_scale(b, m2));
        CHECK(pairing(lhs, v) == a * pairing(m1, v) + b * pairing(m2, v));
        CHECK(pairing(m1, v) == pairing(v, m1));
    }
}

TEST_CASE("primitive_part fixed values") {
    CHECK(primitive_part({2, 4}) == IntVec{1, 2});
    CHECK(primitive_part({3, 5}) == IntVec{3, 5});
    CHECK(primitive_part({-2, 4}) == IntVec{-1, 2});
    CHECK_THROWS_AS(primitive_part({0, 0}), ValidationError);
}

TEST_CASE("primitive_part is idempotent") {
    for (int t = 0; t < 50; ++t) {
        IntVec v = random_vec(1 + t % 4);
        if (is_zero_vec(v))
            continue;
        IntVec p = primitive_part(v);
        CHECK(primitive_part(p) == p);
        Int g = 0;
        for (const Int& x : p)
            g = gcd_int(g, x);
        CHECK(g == 1);
    }
}

TEST_CASE("smith normal form fixed values") {
    IntMat a = IntMat::from_rows({{2, 0}, {0, 3}});
    SmithResult s = smith_normal_form(a);
    CHECK(s.d.at(0, 0) == 1);
    CHECK(s.d.at(1, 1) == 6);
    CHECK(s.u * a * s.v == s.d);

    IntMat id = IntMat::identity(3);
    CHECK(smith_normal_form(id).d == id);

    IntMat b = IntMat::from_rows({{1, 2}, {3, 4}});
    SmithResult sb = smith_normal_form(b);
    CHECK(sb.d.at(0, 0) == 1);
    CHECK(sb.d.at(1, 1) == 2);
    CHECK(sb.u * b * sb.v == sb.d);
}

TEST_CASE("smith normal form properties on random matrices") {
    for (int t = 0; t < 60; ++t) {
        std::size_t r = 1 + t % 4, c = 1 + (t / 4) % 4;
        IntMat m = random_mat(r, c);
        SmithResult s = smith_normal_form(m);
        CHECK(s.u * m * s.v == s.d);
        CHECK(abs_int(det(s.u)) == 1);
        CHECK(abs_int(det(s.v)) == 1);
        for (std::size_t i = 0; i < std::min(r, c); ++i)
            for (std::size_t j = 0; j < std::min(r, c); ++j)
                if (i != j)
                    CHECK(s.d.at(i, j) == 0);
        auto f = s.invariant_factors();
        for (std::size_t i = 0; i + 1 < f.size(); ++i) {
            CHECK(f[i] > 0);
            CHECK(f[i + 1] % f[i] == 0);
        }
        CHECK(f.size() == rank_q(m));
    }
}

TEST_CASE("extend_to_basis fixed values") {
    AdaptedBasis one = extend_to_basis({{1, 0, 0}}, 3);
    CHECK(one.primal == std::vector<IntVec>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(one.dual == std::vector<IntVec>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});

    CHECK_THROWS_AS(extend_to_basis({{2, 0}}, 2), ValidationError);
    CHECK_THROWS_AS(extend_to_basis({{1, 0}, {1, 0}}, 2), ValidationError);

    AdaptedBasis two = extend_to_basis({{1, 1}, {0, 1}}, 2);
    CHECK(two.primal == std::vector<IntVec>{{1, 1}, {0, 1}});
    CHECK(two.dual == std::vector<IntVec>{{1, 0}, {-1, 1}});
}

TEST_CASE("extend_to_basis properties") {
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 2 + t % 3;
        std::size_t k = 1 + t % n;
        IntMat um = random_unimodular(n);
        std::vector<IntVec> inputs;
        for (std::size_t i = 0; i < k; ++i)
            inputs.push_back(um.row(i));
        AdaptedBasis ab = extend_to_basis(inputs, n);
        REQUIRE(ab.primal.size() == n);
        REQUIRE(ab.dual.size() == n);
        for (std::size_t i = 0; i < k; ++i)
            CHECK(ab.primal[i] == inputs[i]);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                CHECK(pairing(ab.dual[i], ab.primal[j]) == (i == j ? 1 : 0));
        CHECK(abs_int(det(IntMat::from_rows(ab.primal))) == 1);

        AdaptedBasis again = extend_to_basis(inputs, n);
        CHECK(again.primal == ab.primal);
        CHECK(again.dual == ab.dual);
    }
}

TEST_CASE("determinant and rank") {
    CHECK(det(IntMat::from_rows({{1, 2}, {3, 4}})) == -2);
    CHECK(det(IntMat::from_rows({{2, 0}, {0, 3}})) == 6);
    CHECK(det(IntMat::identity(4)) == 1);
    CHECK(det(IntMat::from_rows({{1, 2}, {2, 4}})) == 0);
    CHECK(rank_q(IntMat::from_rows({{1, 2}, {2, 4}})) == 1);
    CHECK(rank_q(IntMat::from_rows({{1, 0}, {0, 1}})) == 2);
    CHECK(rank_q(IntMat(2, 3)) == 0);
}

TEST_CASE("inverse_unimodular") {
    IntMat m = IntMat::from_rows({{1, 1}, {0, 1}});
    auto inv = inverse_unimodular(m);
    REQUIRE(inv.has_value());
    CHECK(*inv == IntMat::from_rows({{1, -1}, {0, 1}}));
    CHECK(!inverse_unimodular(IntMat::from_rows({{2, 0}, {0, 1}})).has_value());
    for (int t = 0; t < 20; ++t) {
        IntMat um = random_unimodular(3);
        auto i2 = inverse_unimodular(um);
        REQUIRE(i2.has_value());
        CHECK(um * *i2 == IntMat::identity(3));
    }
}

TEST_CASE("kernel_basis") {
    auto ker = kernel_basis(IntMat::from_rows({{1, 1, 1}}));
    REQUIRE(ker.size() == 2);
    for (const IntVec& v : ker)
        CHECK(pairing({1, 1, 1}, v) == 0);

    auto ker2 = kernel_basis(IntMat::from_rows({{2, 4}}));
    REQUIRE(ker2.size() == 1);
    CHECK(ker2[0] == IntVec{2, -1});

    CHECK(kernel_basis(IntMat::identity(2)).empty());

    for (int t = 0; t < 30; ++t) {
        std::size_t r = 1 + t % 3, c = 2 + t % 3;
        IntMat m = random_mat(r, c);
        auto k = kernel_basis(m);
        CHECK(k.size() == c - rank_q(m));
        for (const IntVec& v : k)
            CHECK(is_zero_vec(m.apply(v)));
        CHECK(kernel_basis(m) == k);
    }
}

TEST_CASE("saturated_row_basis") {
    auto full = saturated_row_basis(IntMat::from_rows({{2, 0}, {0, 2}}));
    CHECK(full == std::vector<IntVec>{{1, 0}, {0, 1}});

    auto line = saturated_row_basis(IntMat::from_rows({{2, 4}}));
    CHECK(line == std::vector<IntVec>{{1, 2}});
}

TEST_CASE("rational solve") {
    RatMat m = RatMat::from_int(IntMat::from_rows({{2, 1}, {1, 1}}));
    auto x = solve_rational(m, {Rat(3), Rat(2)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 1);

    RatMat sing = RatMat::from_int(IntMat::from_rows({{1, 1}, {1, 1}}));
    CHECK(!solve_rational(sing, {Rat(0), Rat(1)}).has_value());
    auto zero = solve_rational(sing, {Rat(1), Rat(1)});
    REQUIRE(zero.has_value());

    CHECK(primitive_from_rational({Rat(1, 2), Rat(3, 2)}) == IntVec{1, 3});
}

TEST_CASE("numeric helpers") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(rat_pow(Rat(2, 3), 3) == Rat(8, 27));
    CHECK(rat_pow(Rat(2), -2) == Rat(1, 4));
    CHECK(rat_pow(Rat(0), 0) == 1);
    CHECK(rat_to_string(Rat(-3, 7)) == "-3/7");
    CHECK(rat_to_string(Rat(5)) == "5");
    CHECK(rat_from_string("-3/7") == Rat(-3, 7));
    CHECK(rat_from_string("5") == Rat(5));
}
