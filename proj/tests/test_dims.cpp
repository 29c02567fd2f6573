#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gendo/dims.hpp"
#include "gendo/fixtures.hpp"

using namespace gendo;

namespace {

AlgebraPtr kupisch(std::vector<std::size_t> c, const Field& f = Field::prime(2))
{
    return from_kupisch(validate_kupisch(std::move(c), true), f);
}

RightModule radical_power(const AlgebraPtr& a, std::size_t i, std::size_t k)
{
    RightModule m = projective_module(a, i);
    for (std::size_t j = 0; j < k; ++j) m = structure(m).radical.module;
    return m;
}

RightModule uniserial(const AlgebraPtr& a, std::size_t i, std::size_t k)
{
    auto p = projective_module(a, i);
    auto r = structure(p).radical;
    // e_i J^k as the k-th radical, then the quotient
    SubQuot sub = r;
    RightModule cur = r.module;
    ModuleMap incl = r.map;
    for (std::size_t j = 1; j < k; ++j) {
        auto next = structure(cur).radical;
        incl = compose(incl, next.map);
        cur = next.module;
    }
    return cokernel(cur, p, incl).module;
}

/// Leading projective terms of the minimal injective coresolution, by
/// direct iteration without any decomposition.
std::optional<std::size_t> naive_domdim(const RightModule& m, std::size_t limit)
{
    RightModule x = m;
    for (std::size_t d = 0; d <= limit; ++d) {
        if (x.is_zero()) return std::nullopt;
        auto h = injective_hull(x);
        if (!is_projective(h.module)) return d;
        x = cokernel(x, h.module, h.map).module;
    }
    return std::nullopt;
}

std::optional<std::size_t> naive_projdim(const RightModule& m, std::size_t limit)
{
    RightModule x = m;
    for (std::size_t d = 0; d <= limit; ++d) {
        if (is_projective(x)) return d;
        x = syzygy(x);
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("dominant dimensions over (4,5,5)")
{
    auto a = kupisch({4, 5, 5});
    Resolver r(a);
    CHECK(r.domdim(uniserial(a, 0, 3)).equals(4));
    CHECK(r.domdim(uniserial(a, 1, 2)).equals(3));
    CHECK(r.domdim(uniserial(a, 1, 3)).equals(2));
    CHECK(r.domdim(projective_module(a, 0)).equals(2));
    CHECK(r.injdim(projective_module(a, 0)).equals(2));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 1; k <= (i == 0 ? 4u : 5u); ++k) {
            auto m = uniserial(a, i, k);
            auto d = r.domdim(m);
            auto nd = naive_domdim(m, 30);
            if (nd) {
                CHECK(d.equals(*nd));
            } else {
                CHECK(d.kind == HomologicalDim::Kind::Infinite);
            }
            auto p = r.projdim(m);
            auto np = naive_projdim(m, 30);
            if (np) {
                CHECK(p.equals(*np));
            } else {
                CHECK(p.kind == HomologicalDim::Kind::Infinite);
            }
        }
}

TEST_CASE("selfinjective and hereditary extremes")
{
    auto s = kupisch({3, 3});
    Resolver r(s);
    auto d = r.domdim(simple_module(s, 0));
    CHECK(d.is_infinite());
    CHECK(d.certified());
    CHECK(r.projdim(projective_module(s, 1)).equals(0));
    auto pd = r.projdim(simple_module(s, 0));
    REQUIRE(pd.kind == HomologicalDim::Kind::Infinite);
    CHECK(pd.certificate->kind == PeriodicityCertificate::Kind::Recurrence);
    CHECK(r.domdim(RightModule::zero(s)).kind == HomologicalDim::Kind::ZeroModule);

    auto a2 = a2_line(Field::prime(3));
    Resolver h(a2);
    std::size_t gl = 0;
    for (std::size_t v = 0; v < 2; ++v) {
        auto p = h.projdim(simple_module(a2, v));
        REQUIRE(p.is_finite());
        gl = std::max(gl, p.value);
    }
    CHECK(gl == 1);
    CHECK(h.injdim(regular_module(a2)).equals(1));
}

TEST_CASE("penny-farthing syzygy orbit")
{
    auto pf = penny_farthing(Field::prime(2));
    Resolver r(pf);
    auto s2 = simple_module(pf, 1);
    auto pd = r.projdim(s2);
    REQUIRE(pd.kind == HomologicalDim::Kind::Infinite);
    CHECK(pd.certificate->period == 3);
    CHECK(r.ext_nonvanishing(s2, s2).equals(2));
    auto j2 = radical_power(pf, 1, 2);
    CHECK(r.ext_nonvanishing(s2, j2).equals(3));
    CHECK(r.perp_regular(s2).is_infinite());
}

TEST_CASE("add(W)-resolution dimension")
{
    auto a = kupisch({7, 7, 7}, Field::prime(3));
    Resolver r(a);
    auto w = projectives(a);
    w.push_back(radical_power(a, 0, 2));
    auto rd = r.resdim(w, radical_power(a, 0, 5));
    REQUIRE(rd.kind == HomologicalDim::Kind::Infinite);
    CHECK(rd.certificate->direction == PeriodicityCertificate::Direction::Approximation);
    CHECK(rd.certificate->kind == PeriodicityCertificate::Kind::Recurrence);
    CHECK(r.resdim(w, w.back()).equals(0));
    CHECK(r.ext_nonvanishing(w.back(), w.back()).equals(2));

    auto b = kupisch({4, 5, 5});
    Resolver rb(b);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 1; k < 4; ++k) {
            auto m = uniserial(b, i, k);
            CHECK(rb.resdim(projectives(b), m) == rb.projdim(m));
        }
}

TEST_CASE("certificate descriptions")
{
    PeriodicityCertificate c;
    c.offset = 1;
    c.period = 3;
    CHECK(c.describe().find("period 3") != std::string::npos);
    CHECK(HomologicalDim::at_least(24).to_string() == ">=24");
    CHECK(HomologicalDim::zero_module().to_string() == "inf(zero)");
    CHECK(dim_min(HomologicalDim::finite(3), HomologicalDim::at_least(5)).equals(3));
    CHECK(dim_max(HomologicalDim::finite(3), HomologicalDim::infinite({})).kind == HomologicalDim::Kind::Infinite);
}
