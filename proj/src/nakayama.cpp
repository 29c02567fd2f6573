#include "gendo/nakayama.hpp"

#include "gendo/error.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace gendo {

std::string NakModule::to_string() const
{
    if (k == 0) return "0";
    return "(" + std::to_string(i) + "," + std::to_string(k) + ")";
}

NakAlgebra::NakAlgebra(KupischSeries s) : s_(std::move(s))
{
    const std::size_t n = s_.n();
    d_.assign(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
        // longest uniserial with socle x; its top x - k + 1 must have c >= k
        std::size_t best = 0;
        const std::size_t bound = s_.cyclic ? *std::max_element(s_.c.begin(), s_.c.end()) : x + 1;
        for (std::size_t k = 1; k <= bound; ++k)
            if (s_.len(static_cast<long long>(x) - static_cast<long long>(k) + 1) >= k) best = k;
        d_[x] = best;
    }
}

bool NakAlgebra::selfinjective() const
{
    for (std::size_t i = 0; i < n(); ++i)
        if (!projective_is_injective(i)) return false;
    return true;
}

bool NakAlgebra::symmetric() const
{
    // selfinjective with soc(e_i A) = S_i
    if (!selfinjective()) return false;
    for (std::size_t i = 0; i < n(); ++i)
        if (socle(projective(i)) != i) return false;
    return true;
}

std::vector<NakModule> NakAlgebra::indecomposables() const
{
    std::vector<NakModule> out;
    for (std::size_t i = 0; i < n(); ++i)
        for (std::size_t k = 1; k <= c(i); ++k) out.push_back({i, k});
    return out;
}

bool NakAlgebra::injective_is_projective(std::size_t x) const { return is_projective(injective(x)); }

bool NakAlgebra::projective_is_injective(std::size_t i) const { return is_injective(projective(i)); }

NakModule NakAlgebra::injective(std::size_t x) const
{
    return {wrap(static_cast<long long>(x) - static_cast<long long>(d(x)) + 1), d(x)};
}

NakModule NakAlgebra::from_inj(const InjCoord& ic) const
{
    if (ic.y >= d(ic.x)) return {};
    return {injective(ic.x).i, d(ic.x) - ic.y};
}

std::optional<InjCoord> NakAlgebra::to_inj(const NakModule& m) const
{
    if (m.is_zero()) return std::nullopt;
    std::optional<InjCoord> best;
    for (std::size_t x = 0; x < n(); ++x) {
        auto inj = injective(x);
        if (inj.i != m.i || inj.k < m.k) continue;
        if (!best || d(x) < d(best->x)) best = InjCoord{x, d(x) - m.k};
    }
    return best;
}

NakModule NakAlgebra::syzygy(const NakModule& m) const
{
    if (m.is_zero() || is_projective(m)) return {};
    return {wrap(static_cast<long long>(m.i + m.k)), c(m.i) - m.k};
}

NakModule NakAlgebra::cosyzygy(const NakModule& m) const
{
    if (m.is_zero() || is_injective(m)) return {};
    // the hull D(Ae_s) modulo its bottom k factors
    return from_inj({socle(m), m.k});
}

std::optional<InjCoord> NakAlgebra::cosyzygy_inj(const InjCoord& ic) const
{
    if (ic.y == 0 || ic.y >= d(ic.x)) return std::nullopt;
    return InjCoord{wrap(static_cast<long long>(ic.x) - static_cast<long long>(ic.y)), d(ic.x) - ic.y};
}

NakModule NakAlgebra::tau(const NakModule& m) const
{
    if (m.is_zero() || is_projective(m)) return {};
    return {wrap(static_cast<long long>(m.i) + 1), m.k};
}

NakModule NakAlgebra::tau_inv(const NakModule& m) const
{
    if (m.is_zero() || is_injective(m)) return {};
    return {wrap(static_cast<long long>(m.i) - 1), m.k};
}

namespace {

using Step = std::function<NakModule(const NakModule&)>;
using Stop = std::function<bool(const NakModule&)>;

/// Walks m, f(m), f(f(m)), ... until stop holds (Finite(j)) or the orbit
/// repeats or dies out (Infinite).
HomologicalDim walk(const NakModule& m, const Step& f, const Stop& stop, PeriodicityCertificate::Direction dir,
                    bool recurrence)
{
    if (m.is_zero()) return HomologicalDim::zero_module();
    std::map<NakModule, std::size_t> seen;
    NakModule x = m;
    for (std::size_t j = 0;; ++j) {
        if (stop(x)) return HomologicalDim::finite(j);
        seen[x] = j;
        NakModule y = f(x);
        PeriodicityCertificate c;
        c.direction = dir;
        c.orbit_size = seen.size();
        if (y.is_zero()) {
            c.kind = PeriodicityCertificate::Kind::Terminates;
            c.offset = j + 1;
            return HomologicalDim::infinite(c);
        }
        if (auto it = seen.find(y); it != seen.end()) {
            c.kind = recurrence ? PeriodicityCertificate::Kind::Recurrence : PeriodicityCertificate::Kind::ClosedOrbit;
            c.offset = it->second;
            c.period = j + 1 - it->second;
            return HomologicalDim::infinite(c);
        }
        x = y;
    }
}

}  // namespace

HomologicalDim projdim_nak(const NakAlgebra& a, const NakModule& m)
{
    return walk(
        m, [&](const NakModule& x) { return a.syzygy(x); }, [&](const NakModule& x) { return a.is_projective(x); },
        PeriodicityCertificate::Direction::Syzygy, true);
}

HomologicalDim injdim_nak(const NakAlgebra& a, const NakModule& m)
{
    return walk(
        m, [&](const NakModule& x) { return a.cosyzygy(x); }, [&](const NakModule& x) { return a.is_injective(x); },
        PeriodicityCertificate::Direction::Cosyzygy, true);
}

HomologicalDim domdim_nak(const NakAlgebra& a, const NakModule& m)
{
    return walk(
        m, [&](const NakModule& x) { return a.cosyzygy(x); },
        [&](const NakModule& x) { return !a.injective_is_projective(a.socle(x)); },
        PeriodicityCertificate::Direction::Cosyzygy, false);
}

HomologicalDim codomdim_nak(const NakAlgebra& a, const NakModule& m)
{
    return walk(
        m, [&](const NakModule& x) { return a.syzygy(x); },
        [&](const NakModule& x) { return !a.projective_is_injective(x.i); }, PeriodicityCertificate::Direction::Syzygy,
        false);
}

NakDims dims_nak(const NakAlgebra& a, const NakModule& m)
{
    return {projdim_nak(a, m), injdim_nak(a, m), domdim_nak(a, m), codomdim_nak(a, m)};
}

ResolutionQuiver resolution_quiver(const NakAlgebra& a)
{
    if (!a.cyclic()) throw Error(ErrorKind::NotApplicable, "resolution quiver needs a cyclic Kupisch series");
    if (a.selfinjective()) throw Error(ErrorKind::NotApplicable, "resolution quiver of a selfinjective algebra");
    const std::size_t n = a.n();
    ResolutionQuiver q;
    q.successor.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto s = a.socle(a.projective(i));
        q.successor[i] = a.tau(a.simple(s)).i;
        auto pd = projdim_nak(a, a.simple(i));
        if (!pd.is_finite() || pd.value >= 2) q.black.insert(i);
    }
    // every vertex reaches exactly one cycle of the successor map
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t u = i;
        for (std::size_t t = 0; t < n; ++t) u = q.successor[u];
        std::vector<std::size_t> cycle{u};
        for (std::size_t v = q.successor[u]; v != u; v = q.successor[v]) cycle.push_back(v);
        bool all = true;
        for (auto v : cycle) all = all && q.black.count(v);
        if (!all) continue;
        for (auto v : cycle) q.cyclically_black.insert(v);
    }
    return q;
}

std::set<NakModule> gp_indecs(const NakAlgebra& a)
{
    std::set<NakModule> out;
    if (a.selfinjective()) {
        for (auto m : a.indecomposables()) out.insert(m);
        return out;
    }
    for (std::size_t i = 0; i < a.n(); ++i) out.insert(a.projective(i));
    if (!a.cyclic()) return out;  // finite global dimension
    auto q = resolution_quiver(a);
    for (auto m : a.indecomposables()) {
        if (a.is_projective(m)) continue;
        auto w = a.syzygy(m);
        if (q.cyclically_black.count(m.i) && q.cyclically_black.count(w.i)) out.insert(m);
    }
    return out;
}

std::set<NakModule> gi_indecs(const NakAlgebra& a)
{
    std::set<NakModule> out;
    for (std::size_t x = 0; x < a.n(); ++x) out.insert(a.injective(x));
    for (auto m : gp_indecs(a))
        if (!a.is_projective(m)) out.insert(a.tau(m));
    return out;
}

std::set<NakModule> gpi_indecs(const NakAlgebra& a)
{
    std::set<NakModule> out;
    auto gi = gi_indecs(a);
    for (auto m : gp_indecs(a))
        if (gi.count(m)) out.insert(m);
    return out;
}

std::set<NakModule> gorenstein_core(const NakAlgebra& a)
{
    std::set<NakModule> out;
    for (auto m : gp_indecs(a))
        if (!a.is_projective(m)) {
            out.insert(m);
            out.insert(a.projective(m.i));
        }
    return out;
}

NakInvariants algebra_invariants_nak(const NakAlgebra& a)
{
    NakInvariants r;
    r.domdim = HomologicalDim::zero_module();
    r.gordim_right = HomologicalDim::finite(0);
    r.gordim_left = HomologicalDim::finite(0);
    r.fdomdim = HomologicalDim::finite(0);
    for (std::size_t i = 0; i < a.n(); ++i) {
        r.domdim = dim_min(r.domdim, domdim_nak(a, a.projective(i)));
        r.gordim_right = dim_max(r.gordim_right, injdim_nak(a, a.projective(i)));
        r.gordim_left = dim_max(r.gordim_left, projdim_nak(a, a.injective(i)));
    }
    for (auto m : a.indecomposables()) {
        auto d = domdim_nak(a, m);
        if (d.is_finite() && d.value > r.fdomdim.value) r.fdomdim = d;
    }
    bool dom = r.domdim.is_infinite() || r.domdim.value >= 1;
    for (auto m : gorenstein_core(a)) {
        auto d = domdim_nak(a, m);
        if (d.is_finite() && d.value < 2) dom = false;
    }
    r.gorenstein_dominant = dom;
    r.cm_finite = true;
    return r;
}

RightModule to_module(const AlgebraPtr& alg, const NakAlgebra& a, const NakModule& m)
{
    if (alg->num_vertices() != a.n()) throw Error(ErrorKind::AlgebraMismatch, "vertex count differs");
    if (m.is_zero()) return RightModule::zero(alg);
    auto p = projective_module(alg, m.i);
    if (m.k >= a.c(m.i)) return p;
    const std::size_t n = a.n();
    const std::size_t v = a.wrap(static_cast<long long>(m.i + m.k));
    const auto& pc = alg->piece(m.i, v);
    // paths from i of length l = k (mod n) sit in vertex v ordered by length
    const std::size_t pos = m.k / n;
    if (pos >= pc.size()) throw Error(ErrorKind::InvalidModule, "no path of length " + std::to_string(m.k));
    std::vector<std::vector<Vec>> gens(n);
    Vec x(pc.size(), 0);
    x[pos] = 1;
    gens[v].push_back(x);
    return quotient(p, submodule(p, gens)).module;
}

}  // namespace gendo
