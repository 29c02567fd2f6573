#include "gendo/error.hpp"
#include "gendo/invariants.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace gendo {

std::string to_string(CheckResult::Status s)
{
    switch (s) {
    case CheckResult::Status::Pass: return "PASS";
    case CheckResult::Status::Fail: return "FAIL";
    case CheckResult::Status::Skipped: return "SKIP";
    }
    return "";
}

namespace {

using Status = CheckResult::Status;

struct Ctx {
    const Fixture& f;
    DimOptions o;
    std::optional<NakAlgebra> nak;
    std::unique_ptr<Resolver> base_r;
    std::unique_ptr<GendoSetup> g;
    bool gendo_sym = false;
    std::optional<CornerAlgebra> corner;
    std::unique_ptr<Resolver> corner_r;
    std::map<std::size_t, bool> gpi_cache;  // endo pool index
};

CheckResult result(const char* id, const char* title, Status s, std::string detail = "")
{
    return {id, title, s, std::move(detail)};
}

bool at_least(const HomologicalDim& d, std::size_t n) { return d.is_infinite() || (d.is_finite() && d.value >= n); }

bool gpi_yes(Resolver& r, const RightModule& m, std::string* why)
{
    auto v = gpi_test(r, m);
    if (v.kind == GpVerdict::Kind::Unknown) throw Error(ErrorKind::BudgetExceeded, "GPI undecided: " + v.to_string());
    if (why) *why = v.to_string();
    return v.yes();
}

bool pool_gpi(Ctx& c, std::size_t i)
{
    auto it = c.gpi_cache.find(i);
    if (it != c.gpi_cache.end()) return it->second;
    return c.gpi_cache[i] = gpi_yes(*c.g->endo_r, c.g->endo_pool[i], nullptr);
}

/// GPI test summand by summand, reusing verdicts of pool modules.
bool gpi_module(Ctx& c, const RightModule& m, std::string* why)
{
    if (m.is_zero()) return true;
    Rng rng(c.o.seed);
    for (const auto& s : indecomposable_summands(m, rng)) {
        std::optional<std::size_t> hit;
        for (std::size_t i = 0; i < c.g->endo_pool.size() && !hit; ++i) {
            const auto& p = c.g->endo_pool[i];
            if (p.vdim == s.vdim && isomorphic(p, s, c.o.seed)) hit = i;
        }
        bool ok = hit ? pool_gpi(c, *hit) : gpi_yes(*c.g->endo_r, s, why);
        if (!ok) {
            if (why && hit) *why = "summand is pool module " + std::to_string(*hit);
            return false;
        }
    }
    return true;
}

/// Indecomposable nonprojective GPI modules of the endo pool.
std::vector<RightModule> nonprojective_gpi(Ctx& c)
{
    std::vector<RightModule> out;
    for (std::size_t i = 0; i < c.g->endo_pool.size(); ++i)
        if (!is_projective(c.g->endo_pool[i]) && pool_gpi(c, i)) out.push_back(c.g->endo_pool[i]);
    return out;
}

// (a) tau = Omega^2 over a symmetric algebra
CheckResult check_a(Ctx& c)
{
    const char* t = "tau and Omega^2 agree over a symmetric algebra";
    if (!c.f.base_symmetric) return result("a", t, Status::Skipped, "base algebra not symmetric");
    std::vector<RightModule> mods;
    if (c.g) {
        mods = c.g->base_pool.modules;
    } else {
        for (auto m : c.nak->indecomposables()) mods.push_back(to_module(c.f.base, *c.nak, m));
    }
    std::size_t n = 0;
    for (const auto& x : mods) {
        if (is_projective(x)) continue;
        if (!isomorphic(tau(x), syzygy(x, 2), c.o.seed))
            return result("a", t, Status::Fail, "dimension " + std::to_string(x.dim()) + " module");
        ++n;
    }
    return result("a", t, Status::Pass, std::to_string(n) + " nonprojective modules");
}

// (b) codomdim >= 2 iff tau M = Omega^2 M; domdim >= 2 iff tau^-1 M = Omega^-2 M
CheckResult check_b(Ctx& c)
{
    const char* t = "(co)dominant dimension two against tau and Omega^2";
    if (!c.g) return result("b", t, Status::Skipped, "no endomorphism algebra");
    if (!c.gendo_sym) return result("b", t, Status::Skipped, "not gendo-symmetric");
    auto& r = *c.g->endo_r;
    std::size_t n = 0;
    for (std::size_t i = 0; i < c.g->endo_pool.size(); ++i) {
        const auto& x = c.g->endo_pool[i];
        if (!is_projective(x)) {
            bool lhs = at_least(r.codomdim(x), 2);
            bool rhs = isomorphic(tau(x), syzygy(x, 2), c.o.seed);
            if (lhs != rhs) return result("b", t, Status::Fail, "pool module " + std::to_string(i) + " (codomdim side)");
            ++n;
        }
        if (!is_injective(x)) {
            bool lhs = at_least(r.domdim(x), 2);
            bool rhs = isomorphic(tau_inv(x), cosyzygy(x, 2), c.o.seed);
            if (lhs != rhs) return result("b", t, Status::Fail, "pool module " + std::to_string(i) + " (domdim side)");
            ++n;
        }
    }
    return result("b", t, Status::Pass, std::to_string(n) + " instances");
}

// (c) GPI iff domdim and codomdim are both infinite
CheckResult check_c(Ctx& c)
{
    const char* t = "GPI iff infinite dominant and codominant dimension";
    if (!c.g) {
        if (c.nak && !c.nak->selfinjective()) {
            for (auto m : gpi_indecs(*c.nak)) {
                auto d = domdim_nak(*c.nak, m);
                if (!c.nak->is_projective(m) && d.is_finite())
                    return result("c", t, Status::Skipped,
                                  "not gendo-symmetric; GPI " + m.to_string() + " has domdim " + d.to_string());
            }
        }
        return result("c", t, Status::Skipped, "no endomorphism algebra");
    }
    if (!c.gendo_sym) return result("c", t, Status::Skipped, "not gendo-symmetric");
    auto& r = *c.g->endo_r;
    std::size_t yes = 0;
    for (std::size_t i = 0; i < c.g->endo_pool.size(); ++i) {
        const auto& x = c.g->endo_pool[i];
        bool gpi = pool_gpi(c, i);
        auto d = r.domdim(x), cd = r.codomdim(x);
        if (!d.certified() || !cd.certified())
            return result("c", t, Status::Fail, "undecided dimensions for pool module " + std::to_string(i));
        if (gpi != (d.is_infinite() && cd.is_infinite()))
            return result("c", t, Status::Fail,
                          "pool module " + std::to_string(i) + ": GPI " + (gpi ? "yes" : "no") + ", domdim " + d.to_string() +
                              ", codomdim " + cd.to_string());
        yes += gpi;
    }
    return result("c", t, Status::Pass,
                  std::to_string(c.g->endo_pool.size()) + " modules, " + std::to_string(yes) + " GPI");
}

// (d) GPI closed under tau, tau^-1, Omega^2, Omega^-2 and AR middle terms
CheckResult check_d(Ctx& c)
{
    const char* t = "GPI closed under tau, Omega^2 and AR middle terms";
    if (!c.g) return result("d", t, Status::Skipped, "no endomorphism algebra");
    if (!c.gendo_sym) return result("d", t, Status::Skipped, "not gendo-symmetric");
    auto gpi = nonprojective_gpi(c);
    if (gpi.empty()) return result("d", t, Status::Skipped, "no nonprojective GPI module in the pool");
    std::size_t i = 0;
    for (const auto& x : gpi) {
        std::string why;
        const std::pair<const char*, RightModule> images[] = {
            {"tau", tau(x)}, {"tau^-1", tau_inv(x)}, {"Omega^2", syzygy(x, 2)}, {"Omega^-2", cosyzygy(x, 2)}};
        for (const auto& [name, y] : images)
            if (!gpi_module(c, y, &why))
                return result("d", t, Status::Fail, std::string(name) + " of GPI module " + std::to_string(i) + ": " + why);
        auto s = almost_split_sequence(x);
        if (!s) return result("d", t, Status::Fail, "no almost split sequence for GPI module " + std::to_string(i));
        auto v = almost_split_verify(*s, c.g->endo_pool, false, c.o.seed);
        if (!v.ok) return result("d", t, Status::Fail, "sequence " + std::to_string(i) + ": " + v.reason);
        if (!gpi_module(c, s->e, &why))
            return result("d", t, Status::Fail, "middle term for GPI module " + std::to_string(i) + ": " + why);
        ++i;
    }
    return result("d", t, Status::Pass, std::to_string(gpi.size()) + " nonprojective GPI modules");
}

// (e) CM-finite: no nonprojective GPI
CheckResult check_e(Ctx& c)
{
    const char* t = "CM-finite gendo-symmetric algebras have no nonprojective GPI";
    if (!c.g) return result("e", t, Status::Skipped, "no endomorphism algebra");
    if (!c.gendo_sym) return result("e", t, Status::Skipped, "not gendo-symmetric");
    if (!c.f.cm_finite) return result("e", t, Status::Skipped, "CM-finiteness not established");
    auto gpi = nonprojective_gpi(c);
    if (!gpi.empty())
        return result("e", t, Status::Fail, std::to_string(gpi.size()) + " nonprojective GPI modules");
    return result("e", t, Status::Pass, std::to_string(c.g->endo_pool.size()) + " modules");
}

// (f) fdomdim <= Gorenstein dimension + 1
CheckResult check_f(Ctx& c)
{
    const char* t = "finitistic dominant dimension at most gordim + 1";
    if (c.nak) {
        auto inv = algebra_invariants_nak(*c.nak);
        const std::string values = "fdomdim " + inv.fdomdim.to_string() + ", gordim " + inv.gordim_right.to_string();
        if (!inv.gordim_right.is_finite() || !(inv.gordim_right == inv.gordim_left))
            return result("f", t, Status::Skipped, "not Gorenstein");
        if (!gendo_symmetric_check(*c.base_r))
            return result("f", t, Status::Skipped, "not gendo-symmetric; " + values);
        bool ok = inv.fdomdim.value <= inv.gordim_right.value + 1;
        return result("f", t, ok ? Status::Pass : Status::Fail,
                      "fdomdim " + inv.fdomdim.to_string() + ", gordim " + inv.gordim_right.to_string());
    }
    if (!c.g) return result("f", t, Status::Skipped, "no endomorphism algebra");
    if (!c.gendo_sym) return result("f", t, Status::Skipped, "not gendo-symmetric");
    if (!c.f.cm_finite) return result("f", t, Status::Skipped, "CM-finiteness not established");
    auto gd = gorenstein_dims(*c.g->endo_r);
    if (!gd.gorenstein()) return result("f", t, Status::Skipped, "not Gorenstein");
    auto fd = endo_fdomdim(*c.g);
    std::string detail = "fdomdim " + fd.to_string() + ", gordim " + gd.right.to_string();
    if (!fd.is_finite()) return result("f", t, Status::Fail, detail + " (pool incomplete)");
    return result("f", t, fd.value <= gd.right.value + 1 ? Status::Pass : Status::Fail, detail);
}

void ensure_corner(Ctx& c)
{
    if (c.corner) return;
    c.corner = corner_algebra(*c.g->endo.algebra, projective_injective_vertices(c.g->endo.algebra));
    c.corner_r = std::make_unique<Resolver>(c.corner->algebra, c.o);
}

// (g) restriction to the corner sends GPI into perp(Ce) on both sides
CheckResult check_g(Ctx& c)
{
    const char* t = "corner restriction of GPI modules";
    if (!c.g) return result("g", t, Status::Skipped, "no endomorphism algebra");
    if (!c.gendo_sym) return result("g", t, Status::Skipped, "not gendo-symmetric");
    auto gd = gorenstein_dims(*c.g->endo_r);
    if (!c.f.cm_finite && !gd.gorenstein())
        return result("g", t, Status::Skipped, "nearly Gorenstein property not established");
    ensure_corner(c);
    auto ce = restrict_to_corner(regular_module(c.g->endo.algebra), *c.corner);
    std::vector<RightModule> gpi, images;
    for (std::size_t i = 0; i < c.g->endo_pool.size(); ++i)
        if (pool_gpi(c, i)) gpi.push_back(c.g->endo_pool[i]);
    for (std::size_t i = 0; i < gpi.size(); ++i) {
        auto y = restrict_to_corner(gpi[i], *c.corner);
        auto l = c.corner_r->ext_nonvanishing(y, ce);
        auto r = c.corner_r->ext_nonvanishing(ce, y);
        if (!l.certified() || !r.certified())
            return result("g", t, Status::Fail, "undecided Ext for GPI module " + std::to_string(i));
        if (l.is_finite() || r.is_finite())
            return result("g", t, Status::Fail,
                          "GPI module " + std::to_string(i) + ": Ext(Xe,Ce) from " + l.to_string() + ", Ext(Ce,Xe) from " +
                              r.to_string());
        for (std::size_t j = 0; j < images.size(); ++j)
            if (images[j].dim() == y.dim() && isomorphic(images[j], y, c.o.seed))
                return result("g", t, Status::Fail,
                              "GPI modules " + std::to_string(j) + " and " + std::to_string(i) + " restrict alike");
        images.push_back(y);
    }
    return result("g", t, Status::Pass, std::to_string(gpi.size()) + " GPI modules");
}

// (h) Ext over B and over the corner agree for n <= codomdim X + domdim Y - 2
CheckResult check_h(Ctx& c)
{
    const char* t = "Ext over the algebra and over its corner";
    if (!c.g) return result("h", t, Status::Skipped, "no endomorphism algebra");
    if (!c.gendo_sym) return result("h", t, Status::Skipped, "not gendo-symmetric");
    ensure_corner(c);
    auto& r = *c.g->endo_r;
    const std::size_t cap = 3;
    auto clip = [&](const HomologicalDim& d) { return d.is_finite() ? std::min(d.value, cap + 2) : cap + 2; };
    struct Item {
        RightModule x, xe;
        std::size_t co, dom;
    };
    std::vector<Item> sample;
    for (const auto& x : c.g->endo_pool) {
        if (sample.size() >= 10) break;
        auto d = r.domdim(x), cd = r.codomdim(x);
        if (!d.certified() || !cd.certified()) continue;
        sample.push_back({x, restrict_to_corner(x, *c.corner), clip(cd), clip(d)});
    }
    std::size_t n = 0;
    for (std::size_t i = 0; i < sample.size(); ++i)
        for (std::size_t j = 0; j < sample.size(); ++j) {
            const auto& x = sample[i];
            const auto& y = sample[j];
            if (x.co + y.dom < 2) continue;
            for (std::size_t k = 0; k <= std::min(x.co + y.dom - 2, cap); ++k) {
                auto lhs = k == 0 ? hom_dim(x.x, y.x) : ext_dim(x.x, y.x, k);
                auto rhs = k == 0 ? hom_dim(x.xe, y.xe) : ext_dim(x.xe, y.xe, k);
                if (lhs != rhs)
                    return result("h", t, Status::Fail,
                                  "pair (" + std::to_string(i) + "," + std::to_string(j) + ") degree " + std::to_string(k) +
                                      ": " + std::to_string(lhs) + " vs " + std::to_string(rhs));
                ++n;
            }
        }
    return result("h", t, Status::Pass, std::to_string(n) + " comparisons");
}

// (i) Dom_i = Omega^i(mod A) and Codom_i = Omega^-i(mod A) for i <= domdim A
CheckResult check_i(Ctx& c)
{
    const char* t = "Dom_i equals the i-th syzygies";
    if (!c.nak) return result("i", t, Status::Skipped, "not a Nakayama fixture");
    const auto& a = *c.nak;
    auto d = algebra_invariants_nak(a).domdim;
    const std::size_t top = d.is_finite() ? std::min<std::size_t>(d.value, 6) : 6;
    if (top == 0) return result("i", t, Status::Skipped, "domdim 0");
    std::set<NakModule> om, co;
    for (auto m : a.indecomposables()) {
        om.insert(m);
        co.insert(m);
    }
    for (std::size_t i = 1; i <= top; ++i) {
        std::set<NakModule> om2, co2;
        // summands of Omega of a sum: syzygies of the pieces and the projectives
        for (auto m : om)
            if (auto w = a.syzygy(m); !w.is_zero()) om2.insert(w);
        for (auto m : co)
            if (auto w = a.cosyzygy(m); !w.is_zero()) co2.insert(w);
        for (std::size_t v = 0; v < a.n(); ++v) {
            om2.insert(a.projective(v));
            co2.insert(a.injective(v));
        }
        om = om2;
        co = co2;
        for (auto m : a.indecomposables()) {
            bool dom = at_least(domdim_nak(a, m), i);
            if (dom != (om.count(m) > 0))
                return result("i", t, Status::Fail, "i = " + std::to_string(i) + " at " + m.to_string());
            bool codom = at_least(codomdim_nak(a, m), i);
            if (codom != (co.count(m) > 0))
                return result("i", t, Status::Fail, "codominant i = " + std::to_string(i) + " at " + m.to_string());
        }
    }
    return result("i", t, Status::Pass, "i <= " + std::to_string(top));
}

// (j) every module has Hom or some Ext into A nonzero
CheckResult check_j(Ctx& c)
{
    const char* t = "some Ext^i(M,A) with i >= 0 is nonzero";
    if (!c.nak) return result("j", t, Status::Skipped, "not a Nakayama fixture");
    if (c.nak->selfinjective()) return result("j", t, Status::Skipped, "selfinjective");
    auto d = algebra_invariants_nak(*c.nak).domdim;
    if (!d.is_finite()) return result("j", t, Status::Skipped, "infinite domdim");
    auto a = regular_module(c.f.base);
    for (auto m : c.nak->indecomposables()) {
        auto x = to_module(c.f.base, *c.nak, m);
        if (hom_dim(x, a) != 0) continue;
        auto e = c.base_r->perp_regular(x);
        if (!e.is_finite()) return result("j", t, Status::Fail, m.to_string() + " has Ext(-,A) " + e.to_string());
    }
    return result("j", t, Status::Pass, std::to_string(c.nak->indecomposables().size()) + " modules");
}

// (k) proj = Dom_d iff domdim = gldim = d iff M is maximal (d-2)-orthogonal
CheckResult check_k(Ctx& c)
{
    const char* t = "projectives as Dom_d, gldim = domdim, maximal orthogonality";
    if (!c.g) return result("k", t, Status::Skipped, "no endomorphism algebra");
    if (!c.g->base_pool.complete) return result("k", t, Status::Skipped, "base category not enumerated");
    auto& r = *c.g->endo_r;
    auto dd = algebra_domdim(r);
    if (!dd.is_finite() || dd.value < 2) return result("k", t, Status::Skipped, "domdim " + dd.to_string());
    const std::size_t d = dd.value;
    const auto& b = c.g->endo.algebra;

    // every module of domdim >= 2 is a Hom-image of the base pool
    bool p1 = true;
    for (const auto& n : c.g->base_pool.modules) {
        auto y = c.g->endo.functor(n);
        if (at_least(r.domdim(y), d) && !is_projective(y)) p1 = false;
    }
    std::vector<RightModule> simples;
    for (std::size_t v = 0; v < b->num_vertices(); ++v) simples.push_back(simple_module(b, v));
    auto gl = r.projdim(direct_sum(b, simples));
    bool p2 = gl.equals(d);
    bool p3 = true;
    auto m = direct_sum(c.f.base, c.f.summands);
    for (const auto& n : c.g->base_pool.modules) {
        bool in_add = false;
        for (const auto& s : c.f.summands)
            if (s.dim() == n.dim() && isomorphic(s, n, c.o.seed)) in_add = true;
        bool orth = true;
        for (std::size_t i = 1; i + 2 <= d && orth; ++i) orth = ext_dim(m, n, i) == 0;
        if (in_add != orth) p3 = false;
    }
    std::ostringstream s;
    s << "d = " << d << ", gldim " << gl.to_string() << ": " << p1 << p2 << p3;
    bool ok = p1 == p2 && p2 == p3;
    return result("k", t, ok ? Status::Pass : Status::Fail, s.str());
}

}  // namespace

std::vector<CheckResult> theorem_suite(const Fixture& f, const DimOptions& o)
{
    Ctx c{f, o, std::nullopt, nullptr, nullptr, false, std::nullopt, nullptr, {}};
    if (f.series) c.nak.emplace(*f.series);
    c.base_r = std::make_unique<Resolver>(f.base, o);
    if (!f.summands.empty()) {
        c.g = make_gendo(f, o);
        c.gendo_sym = gendo_symmetric_check(*c.g->endo_r);
    }
    using Fn = std::function<CheckResult(Ctx&)>;
    const std::vector<std::pair<const char*, Fn>> checks = {{"a", check_a}, {"b", check_b}, {"c", check_c},
                                                            {"d", check_d}, {"e", check_e}, {"f", check_f},
                                                            {"g", check_g}, {"h", check_h}, {"i", check_i},
                                                            {"j", check_j}, {"k", check_k}};
    std::vector<CheckResult> out;
    for (const auto& [id, fn] : checks) {
        try {
            out.push_back(fn(c));
        } catch (const Error& e) {
            out.push_back({id, "", CheckResult::Status::Fail, e.what()});
        }
    }
    return out;
}

}  // namespace gendo
