#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gendo/error.hpp"
#include "gendo/matrix.hpp"

using namespace gendo;

namespace {

void check_axioms(const Field& f)
{
    const Elem q = f.order();
    for (Elem a = 0; a < q; ++a) {
        CHECK(f.add(a, 0) == a);
        CHECK(f.mul(a, 1) == a);
        CHECK(f.add(a, f.neg(a)) == 0);
        if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
        for (Elem b = 0; b < q; ++b) {
            CHECK(f.add(a, b) == f.add(b, a));
            CHECK(f.mul(a, b) == f.mul(b, a));
            for (Elem c = 0; c < q; ++c) {
                CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            }
        }
    }
}

}  // namespace

TEST_CASE("field axioms hold exhaustively")
{
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 101u}) check_axioms(Field::prime(p));
    check_axioms(Field::gf4());
    CHECK(Field::gf4().characteristic() == 2);
    CHECK(Field::gf4().order() == 4);
}

TEST_CASE("field parsing and rejection")
{
    CHECK(Field::parse("F5") == Field::prime(5));
    CHECK(Field::parse("2") == Field::prime(2));
    CHECK(Field::parse("GF4") == Field::gf4());
    CHECK_THROWS_AS(Field::prime(4), Error);
    CHECK_THROWS_AS(Field::parse("q"), Error);
    // a non-field: Z/4 tables
    std::vector<Elem> add(16), mul(16);
    for (Elem a = 0; a < 4; ++a)
        for (Elem b = 0; b < 4; ++b) {
            add[a * 4 + b] = (a + b) % 4;
            mul[a * 4 + b] = (a * b) % 4;
        }
    CHECK_THROWS_AS(Field::from_tables("Z4", 4, add, mul), Error);
}

TEST_CASE("kernel_basis examples")
{
    auto f2 = Field::prime(2);
    auto k = kernel_basis(Matrix(f2, 2, 2));
    REQUIRE(k.size() == 2);
    CHECK(rank(Matrix::from_columns(f2, 2, k)) == 2);

    CHECK(kernel_basis(Matrix::identity(Field::prime(5), 3)).empty());

    auto one_one = Matrix::from_rows(f2, {{1, 1}});
    auto k2 = kernel_basis(one_one);
    REQUIRE(k2.size() == 1);
    CHECK(k2[0] == Vec{1, 1});
}

TEST_CASE("solve examples")
{
    auto f3 = Field::prime(3);
    auto id = Matrix::identity(f3, 2);
    CHECK(solve(id, {2, 1}).value() == Vec{2, 1});
    CHECK_FALSE(solve(Matrix(f3, 2, 2), {1, 0}).has_value());
    auto m = Matrix::from_rows(f3, {{1, 1}, {0, 1}});
    CHECK(solve(m, {2, 1}).value() == Vec{1, 1});
    CHECK_THROWS_AS(solve(m, {1, 2, 0}), Error);
}

TEST_CASE("rank examples")
{
    auto g = Field::gf4();
    const Elem w = 2, w2 = 3;
    auto m = Matrix::from_rows(g, {{1, w}, {w, w2}});
    CHECK(rank(m) == 1);
    CHECK(rank(Matrix::identity(Field::prime(7), 4)) == 4);
    CHECK(rank(Matrix(Field::prime(7), 3, 5)) == 0);
}

TEST_CASE("entries outside the field are rejected")
{
    auto m = Matrix::from_rows(Field::prime(2), {{0, 1}});
    m(0, 1) = 3;
    CHECK_THROWS_AS(m.check_entries(), Error);
}

TEST_CASE("random matrices: rank, kernel, solve, inverse properties")
{
    Rng rng(12345);
    for (const auto& f : {Field::prime(2), Field::prime(3), Field::prime(5), Field::gf4()}) {
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
            auto m = Matrix::random(f, r, c, rng);
            if (trial % 3 == 0) {
                // force a dependency
                for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j);
            }
            auto rk = rank(m);
            CHECK(rk == rank(m.transpose()));
            auto k = kernel_basis(m);
            CHECK(k.size() + rk == c);
            for (const auto& v : k) CHECK(vec_is_zero(m.apply(v)));
            if (!k.empty()) CHECK(rank(Matrix::from_columns(f, c, k)) == k.size());

            Vec x(c);
            for (auto& e : x) e = static_cast<Elem>(rng() % f.order());
            auto b = m.apply(x);
            auto sol = solve(m, b);
            REQUIRE(sol.has_value());
            CHECK(m.apply(*sol) == b);

            if (r == c) {
                auto inv = inverse(m);
                CHECK(inv.has_value() == (rk == r));
                if (inv) CHECK((m * *inv).is_identity());
            }
        }
    }
}

TEST_CASE("subspace basis and complements")
{
    auto f = Field::prime(3);
    SubspaceBasis s(f, 3);
    CHECK(s.add({1, 2, 0}));
    CHECK(s.add({0, 1, 1}));
    CHECK_FALSE(s.add({1, 0, 1}));  // (1,2,0)+(0,1,1)
    CHECK(s.contains({2, 1, 0}));
    CHECK_FALSE(s.contains({0, 0, 1}));
    auto sub = Matrix::from_columns(f, 3, {{1, 2, 0}, {0, 1, 1}});
    auto comp = complement_columns(sub, 3);
    CHECK(comp.cols() == 1);
    CHECK(rank(Matrix::hstack(sub, comp)) == 3);
}

TEST_CASE("fitting power and nilpotency")
{
    auto f = Field::prime(2);
    auto n = Matrix::from_rows(f, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
    CHECK(is_nilpotent(n));
    CHECK_FALSE(is_nilpotent(Matrix::identity(f, 2)));
    CHECK(fitting_power(n).is_zero());
}
