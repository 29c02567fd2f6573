#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gendo/error.hpp"
#include "gendo/fixtures.hpp"
#include "gendo/invariants.hpp"

#include <map>

using namespace gendo;

namespace {

RightModule radical_power(const RightModule& m, std::size_t k)
{
    RightModule x = m;
    for (std::size_t i = 0; i < k; ++i) x = structure(x).radical.module;
    return x;
}

}  // namespace

TEST_CASE("penny-farthing with the simple at vertex 2")
{
    auto f = make_fixture("penny-farthing-gendo");
    auto g = make_gendo(f);
    CHECK(g->base_pool.complete);
    MESSAGE("base pool " << g->base_pool.modules.size() << ", endo pool " << g->endo_pool.size());
    CHECK(algebra_domdim(*g->endo_r).equals(3));
    auto gd = gorenstein_dims(*g->endo_r);
    CHECK(gd.right.equals(3));
    CHECK(gd.left.equals(3));
    CHECK(mueller_domdim(*g->base_r, f.summands).equals(3));
    CHECK(gendo_symmetric_check(*g->endo_r));

    auto n = radical_power(projective_module(f.base, 1), 2);
    CHECK(g->endo_r->domdim(g->endo.functor(n)).equals(4));
    CHECK(endo_fdomdim(*g).equals(4));

    auto ck = chen_koenig_injdim(*g->base_r, f.summands, *g->endo_r);
    CHECK(ck.z == 1);
    CHECK(ck.lhs == ck.rhs);
    CHECK(ck.lhs_left == ck.rhs_left);
}

TEST_CASE("(7,7,7) with e_0J^2")
{
    auto f = make_fixture("sym-777-gendo");
    auto g = make_gendo(f);
    CHECK(g->base_pool.complete);
    CHECK(g->base_pool.modules.size() == 21);
    CHECK(mueller_domdim(*g->base_r, f.summands).equals(3));
    CHECK(algebra_domdim(*g->endo_r).equals(3));
    auto ck = chen_koenig_injdim(*g->base_r, f.summands, *g->endo_r);
    CHECK(ck.lhs.is_infinite());
    CHECK(ck.rhs.is_infinite());
    CHECK(ck.lhs_left.is_infinite());
    CHECK(ck.rhs_left.is_infinite());
}

TEST_CASE("local algebra over GF(4)")
{
    auto f = make_fixture("gf4-local-gendo");
    auto g = make_gendo(f, {}, 20);
    CHECK_FALSE(g->base_pool.complete);
    CHECK(algebra_domdim(*g->endo_r).equals(2));
    auto gd = gorenstein_dims(*g->endo_r);
    CHECK(gd.right.equals(2));
    CHECK(gd.left.equals(2));
    CHECK(gendo_symmetric_check(*g->endo_r));

    const Elem w = 2;  // a generator of GF(4)*
    auto m = local_cyclic_quotient(f.base, 1, w);
    CHECK(m.dim() == 2);
    auto x = g->endo.functor(m);
    CHECK(gpi_test(*g->endo_r, x).yes());
    CHECK(g->endo_r->domdim(x).is_infinite());
    CHECK(g->endo_r->codomdim(x).is_infinite());
}

TEST_CASE("almost split sequences over (4,5,5)")
{
    NakAlgebra nak(validate_kupisch({4, 5, 5}, true));
    auto alg = from_kupisch(nak.series(), Field::prime(2));
    auto cat = ar_closure(alg, {}, 40);
    CHECK(cat.complete);
    CHECK(cat.modules.size() == nak.indecomposables().size());
    for (auto m : nak.indecomposables()) {
        if (nak.is_projective(m)) continue;
        INFO(m.to_string());
        auto x = to_module(alg, nak, m);
        auto s = almost_split_sequence(x);
        REQUIRE(s);
        auto v = almost_split_verify(*s, cat.modules, cat.complete);
        CHECK(v.ok);
        CHECK(v.reason.empty());
        // for uniserials the middle term is rad P (+) X/soc
        auto t = nak.tau(m);
        CHECK(s->e.dim() == 2 * m.k);
        (void)t;
    }
    CHECK_FALSE(almost_split_sequence(to_module(alg, nak, nak.projective(0))));
}

TEST_CASE("nearly Gorenstein Nakayama algebras")
{
    for (auto c : {std::vector<std::size_t>{4, 5, 5}, {5, 6}, {3, 4, 4}, {2, 3, 3, 2}}) {
        NakAlgebra a(validate_kupisch(c, true));
        auto r = nearly_gorenstein_check_nak(a, Field::prime(2));
        INFO(a.series().to_string() << " " << r.witness);
        CHECK(r.ok);
    }
}

TEST_CASE("Auslander algebras")
{
    for (std::size_t c : {2u, 3u}) {
        NakAlgebra nak(validate_kupisch({c}, true));
        auto alg = from_kupisch(nak.series(), Field::prime(3));
        std::vector<RightModule> all;
        for (auto m : nak.indecomposables()) all.push_back(to_module(alg, nak, m));
        auto endo = endo_algebra(all);
        Resolver base(alg), r(endo.algebra);
        CHECK(algebra_domdim(r).equals(2));
        CHECK(gorenstein_dims(r).right.equals(2));
        CHECK(mueller_domdim(base, all).equals(2));
        auto ck = chen_koenig_injdim(base, all, r);
        CHECK(ck.z == 0);
        CHECK(ck.lhs.equals(2));
        CHECK(ck.rhs.equals(2));
        CHECK(ck.lhs_left.equals(2));
        CHECK(ck.rhs_left.equals(2));
        CHECK(gendo_symmetric_check(r));
    }
    auto f = make_fixture("auslander-22");
    auto g = make_gendo(f);
    CHECK_FALSE(gendo_symmetric_check(*g->endo_r));
    CHECK(algebra_domdim(*g->endo_r).equals(2));
    CHECK_THROWS_AS(mueller_domdim(*g->base_r, f.summands), Error);
}

TEST_CASE("error paths")
{
    NakAlgebra nak(validate_kupisch({7, 7, 7}, true));
    auto alg = from_kupisch(nak.series(), Field::prime(2));
    Resolver base(alg);
    auto x = to_module(alg, nak, {2, 5});
    try {
        mueller_domdim(base, {projective_module(alg, 0), x});
        FAIL("expected NotGenerator");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotGenerator);
    }
    // End(A) = A is selfinjective
    auto endo = endo_algebra(projectives(alg));
    Resolver r(endo.algebra);
    CHECK(algebra_domdim(r).is_infinite());
    CHECK_THROWS_AS(chen_koenig_injdim(base, projectives(alg), r), Error);

    NakAlgebra b(validate_kupisch({4, 5, 5}, true));
    auto balg = from_kupisch(b.series(), Field::prime(2));
    Resolver br(balg);
    try {
        mueller_domdim(br, projectives(balg));
        FAIL("expected NotSymmetric");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotSymmetric);
    }
    CHECK_THROWS_AS(make_fixture("no-such-fixture"), Error);
    CHECK_THROWS_AS(make_fixture("kupisch-3s:0"), Error);

    // a split sequence is rejected or reported as split
    auto s = to_module(alg, nak, {0, 1});
    auto split = direct_sum_data(alg, {tau(s), s});
    ShortExact e{tau(s), split.module, s, split.incl[0], split.proj[1]};
    auto v = almost_split_verify(e, {}, true);
    CHECK_FALSE(v.ok);
    CHECK(v.reason == "sequence splits");
}

TEST_CASE("corner restriction")
{
    auto f = make_fixture("penny-farthing-gendo");
    auto g = make_gendo(f);
    auto v = projective_injective_vertices(g->endo.algebra);
    CHECK(v.size() == f.base->num_vertices());
    auto c = corner_algebra(*g->endo.algebra, v);
    CHECK(is_symmetric(*c.algebra).symmetric());
    // Hom(M, N) restricted to the corner is N again
    for (const auto& n : g->base_pool.modules) {
        auto y = restrict_to_corner(g->endo.functor(n), c);
        CHECK(y.dim() == n.dim());
    }
}

TEST_CASE("theorem suite")
{
    std::map<std::string, std::map<std::string, CheckResult::Status>> want = {
        {"gf4-local-gendo", {{"a", CheckResult::Status::Pass}, {"c", CheckResult::Status::Pass},
                             {"d", CheckResult::Status::Pass}, {"g", CheckResult::Status::Pass}}},
        {"penny-farthing-gendo", {{"e", CheckResult::Status::Pass}, {"f", CheckResult::Status::Pass}}},
        {"sym-777-gendo", {{"b", CheckResult::Status::Pass}, {"h", CheckResult::Status::Pass}}},
        {"auslander-22", {{"k", CheckResult::Status::Pass}, {"b", CheckResult::Status::Skipped}}},
        {"kupisch-455", {{"c", CheckResult::Status::Skipped}, {"i", CheckResult::Status::Pass}}},
    };
    for (const auto& name : fixture_names()) {
        auto f = make_fixture(name);
        auto res = theorem_suite(f);
        REQUIRE(res.size() == 11);
        for (const auto& r : res) {
            INFO(name << " " << r.id << " " << r.detail);
            CHECK(r.status != CheckResult::Status::Fail);
            if (want.count(name) && want[name].count(r.id)) CHECK(r.status == want[name][r.id]);
            if (name == "kupisch-455" && r.id == "c") CHECK(r.detail.find("(1,3)") != std::string::npos);
        }
    }
}

TEST_CASE("two-periodic module over a symmetric algebra")
{
    auto f = make_fixture("two-periodic-demo");
    auto g = make_gendo(f);
    CHECK(algebra_domdim(*g->endo_r).equals(2));
    auto gd = gorenstein_dims(*g->endo_r);
    CHECK(gd.right.equals(2));
    CHECK(gd.left.equals(2));
    auto s = f.summands.back();
    CHECK(isomorphic(syzygy(s, 2), s));
}

TEST_CASE("property suites")
{
    for (const auto& name : fixture_names()) {
        auto f = make_fixture(name);
        for (const auto& r : property_suite(f)) {
            INFO(name << ": " << r.name << " " << r.witness);
            CHECK(r.instances > 0);
            CHECK(r.failures == 0);
        }
    }
}
