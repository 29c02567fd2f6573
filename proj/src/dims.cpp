#include "gendo/dims.hpp"

#include "gendo/error.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace gendo {

// ------------------------------------------------------------ IndecPool

IndecPool::IndecPool(AlgebraPtr a, std::uint64_t seed) : alg_(std::move(a)), rng_(seed) {}

std::optional<std::size_t> IndecPool::find(const RightModule& x)
{
    Key k{x.vdim, top_vector(x), socle_vector(x)};
    auto it = by_key_.find(k);
    if (it == by_key_.end()) return std::nullopt;
    for (auto i : it->second)
        if (iso(mods_[i], x, rng_).iso) return i;
    return std::nullopt;
}

IndecPool::Found IndecPool::intern(const RightModule& x)
{
    Key k{x.vdim, top_vector(x), socle_vector(x)};
    auto& bucket = by_key_[k];
    for (auto i : bucket) {
        auto r = iso(mods_[i], x, rng_);
        if (r.iso) return {i, false, std::move(r.witness)};
    }
    bucket.push_back(mods_.size());
    mods_.push_back(x);
    return {mods_.size() - 1, true, std::nullopt};
}

std::vector<IndecPool::Found> IndecPool::intern_summands(const RightModule& m)
{
    std::vector<Found> out;
    if (m.is_zero()) return out;
    for (const auto& s : indecomposable_summands(m, rng_)) out.push_back(intern(s));
    return out;
}

// ------------------------------------------------------------ Resolver

Resolver::Resolver(AlgebraPtr a, DimOptions opts) : alg_(a), opts_(opts), pool_(a, opts.seed)
{
    for (std::size_t v = 0; v < a->num_vertices(); ++v) inj_proj_.push_back(is_projective(injective_module(a, v)));
}

Resolver::~Resolver() = default;

Resolver& Resolver::dual_side()
{
    if (!dual_) dual_ = std::make_unique<Resolver>(opposite(alg_), opts_);
    return *dual_;
}

std::vector<std::size_t> Resolver::classes(const RightModule& m)
{
    std::vector<std::size_t> out;
    for (const auto& f : pool_.intern_summands(m)) out.push_back(f.index);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

std::vector<Edge> to_edges(std::vector<IndecPool::Found> found)
{
    std::vector<Edge> out;
    std::set<std::size_t> seen;
    for (auto& f : found)
        if (seen.insert(f.index).second) out.push_back({f.index, std::move(f.iso)});
    return out;
}

}  // namespace

bool Resolver::is_projective_node(std::size_t node)
{
    auto it = proj_flag_.find(node);
    if (it != proj_flag_.end()) return it->second;
    bool p = is_projective(pool_.module(node));
    proj_flag_[node] = p;
    return p;
}

bool Resolver::is_injective_node(std::size_t node)
{
    auto it = inj_flag_.find(node);
    if (it != inj_flag_.end()) return it->second;
    bool p = is_injective(pool_.module(node));
    inj_flag_[node] = p;
    return p;
}

bool Resolver::hull_projective(std::size_t node)
{
    auto soc = socle_vector(pool_.module(node));
    for (std::size_t v = 0; v < soc.size(); ++v)
        if (soc[v] && !inj_proj_[v]) return false;
    return true;
}

const std::vector<Edge>& Resolver::syzygy_edges(std::size_t node)
{
    auto it = syz_.find(node);
    if (it != syz_.end()) return it->second;
    std::vector<Edge> e;
    if (!is_projective_node(node)) {
        RightModule om = syzygy(pool_.module(node));
        e = to_edges(pool_.intern_summands(om));
    }
    return syz_[node] = std::move(e);
}

const std::vector<Edge>& Resolver::cosyzygy_edges(std::size_t node)
{
    auto it = cosyz_.find(node);
    if (it != cosyz_.end()) return it->second;
    std::vector<Edge> e;
    if (!is_injective_node(node)) {
        RightModule om = cosyzygy(pool_.module(node));
        e = to_edges(pool_.intern_summands(om));
    }
    return cosyz_[node] = std::move(e);
}

namespace {

std::vector<Matrix> witness_blocks(const IndecPool& pool, const Edge& e)
{
    if (e.iso) return e.iso->blocks;
    return identity_map(pool.module(e.to)).blocks;
}

}  // namespace

HomologicalDim Resolver::longest_path(const std::vector<std::size_t>& start, const Successors& next,
                                      PeriodicityCertificate::Direction dir)
{
    std::map<std::size_t, int> color;  // 1 gray, 2 black
    std::map<std::size_t, std::size_t> memo;
    std::vector<std::size_t> stack;
    bool overflow = false;
    std::optional<PeriodicityCertificate> cert;
    const std::size_t cutoff = opts_.cutoff;

    std::function<std::size_t(std::size_t)> dfs = [&](std::size_t u) -> std::size_t {
        if (auto it = memo.find(u); it != memo.end()) return it->second;
        if (stack.size() > cutoff) {
            overflow = true;
            return 0;
        }
        color[u] = 1;
        stack.push_back(u);
        std::size_t best = 0;
        const auto edges = next(u);
        for (const auto& e : edges) {
            if (cert || overflow) break;
            if (color[e.to] == 1) {
                auto pos = std::find(stack.begin(), stack.end(), e.to) - stack.begin();
                PeriodicityCertificate c;
                c.direction = dir;
                c.kind = PeriodicityCertificate::Kind::Recurrence;
                c.offset = static_cast<std::size_t>(pos);
                c.period = stack.size() - static_cast<std::size_t>(pos);
                c.iso = witness_blocks(pool_, e);
                cert = std::move(c);
                break;
            }
            best = std::max(best, dfs(e.to) + 1);
        }
        stack.pop_back();
        color[u] = 2;
        if (!cert && !overflow) memo[u] = best;
        return best;
    };

    std::size_t total = 0;
    for (auto s : start) {
        total = std::max(total, dfs(s));
        if (cert) return HomologicalDim::infinite(*cert);
        if (overflow) return HomologicalDim::at_least(cutoff);
    }
    return HomologicalDim::finite(total);
}

HomologicalDim Resolver::distance_to_bad(const std::vector<std::size_t>& start, const Successors& next,
                                         const Predicate& bad, PeriodicityCertificate::Direction dir)
{
    std::map<std::size_t, std::size_t> depth;
    std::deque<std::size_t> queue;
    for (auto s : start)
        if (depth.emplace(s, 0).second) queue.push_back(s);
    bool overflow = false;
    std::size_t max_depth = 0;
    while (!queue.empty()) {
        auto u = queue.front();
        queue.pop_front();
        const std::size_t d = depth[u];
        if (bad(u)) return HomologicalDim::finite(d);
        max_depth = std::max(max_depth, d);
        if (d >= opts_.cutoff) {
            if (!next(u).empty()) overflow = true;
            continue;
        }
        for (const auto& e : next(u))
            if (depth.emplace(e.to, d + 1).second) queue.push_back(e.to);
    }
    if (overflow) return HomologicalDim::at_least(opts_.cutoff + 1);
    // closed: a cycle among the visited nodes, or every path terminates
    std::map<std::size_t, int> color;
    bool cyclic = false;
    std::function<void(std::size_t)> dfs = [&](std::size_t u) {
        color[u] = 1;
        for (const auto& e : next(u)) {
            if (cyclic) return;
            if (color[e.to] == 1) {
                cyclic = true;
                return;
            }
            if (color[e.to] == 0) dfs(e.to);
        }
        color[u] = 2;
    };
    for (auto s : start)
        if (!cyclic && color[s] == 0) dfs(s);
    PeriodicityCertificate c;
    c.direction = dir;
    c.kind = cyclic ? PeriodicityCertificate::Kind::ClosedOrbit : PeriodicityCertificate::Kind::Terminates;
    c.orbit_size = depth.size();
    c.offset = max_depth + 1;
    return HomologicalDim::infinite(std::move(c));
}

HomologicalDim Resolver::projdim(const RightModule& m)
{
    if (m.is_zero()) return HomologicalDim::zero_module();
    return longest_path(
        classes(m), [this](std::size_t u) -> const std::vector<Edge>& { return syzygy_edges(u); },
        PeriodicityCertificate::Direction::Syzygy);
}

HomologicalDim Resolver::injdim(const RightModule& m)
{
    auto r = dual_side().projdim(dual(m));
    if (r.certificate) r.certificate->direction = PeriodicityCertificate::Direction::Cosyzygy;
    return r;
}

HomologicalDim Resolver::domdim(const RightModule& m)
{
    if (m.is_zero()) return HomologicalDim::zero_module();
    return distance_to_bad(
        classes(m), [this](std::size_t u) -> const std::vector<Edge>& { return cosyzygy_edges(u); },
        [this](std::size_t u) { return !hull_projective(u); }, PeriodicityCertificate::Direction::Cosyzygy);
}

HomologicalDim Resolver::codomdim(const RightModule& m)
{
    auto r = dual_side().domdim(dual(m));
    if (r.certificate) r.certificate->direction = PeriodicityCertificate::Direction::Syzygy;
    return r;
}

HomologicalDim Resolver::ext_nonvanishing(const RightModule& m, const RightModule& n)
{
    if (m.is_zero()) return HomologicalDim::zero_module();
    std::vector<std::size_t> targets = classes(n);
    if (targets.empty()) {
        PeriodicityCertificate c;
        c.kind = PeriodicityCertificate::Kind::Terminates;
        return HomologicalDim::infinite(c);
    }
    auto bad = [this, targets](std::size_t u) {
        for (auto t : targets) {
            auto key = std::make_pair(u, t);
            auto it = ext1_.find(key);
            if (it == ext1_.end())
                it = ext1_.emplace(key, ext_dim(pool_.module(u), pool_.module(t), 1) != 0).first;
            if (it->second) return true;
        }
        return false;
    };
    auto r = distance_to_bad(
        classes(m), [this](std::size_t u) -> const std::vector<Edge>& { return syzygy_edges(u); }, bad,
        PeriodicityCertificate::Direction::Syzygy);
    return dim_plus(r, 1);
}

HomologicalDim Resolver::perp_regular(const RightModule& m) { return ext_nonvanishing(m, regular_module(alg_)); }

HomologicalDim Resolver::perp_dual_regular(const RightModule& m)
{
    auto r = dual_side().perp_regular(dual(m));
    if (r.certificate) r.certificate->direction = PeriodicityCertificate::Direction::Cosyzygy;
    return r;
}

HomologicalDim Resolver::resdim(const std::vector<RightModule>& gens, const RightModule& x)
{
    if (x.is_zero()) return HomologicalDim::zero_module();
    std::vector<std::size_t> ids;
    for (const auto& g : gens) ids.push_back(pool_.intern(g).index);
    std::vector<std::size_t> key = ids;
    std::sort(key.begin(), key.end());
    auto& memo = approx_[key];
    std::set<std::size_t> terminal(ids.begin(), ids.end());
    auto next = [this, &memo, &terminal, &gens](std::size_t u) -> const std::vector<Edge>& {
        auto it = memo.find(u);
        if (it != memo.end()) return it->second;
        std::vector<Edge> e;
        if (!terminal.count(u)) {
            const auto& xm = pool_.module(u);
            auto ap = min_right_approx(gens, xm);
            auto k = kernel(ap.source, xm, ap.map).module;
            e = to_edges(pool_.intern_summands(k));
        }
        return memo[u] = std::move(e);
    };
    return longest_path(classes(x), next, PeriodicityCertificate::Direction::Approximation);
}

// ------------------------------------------------------------ one-shot helpers

HomologicalDim projdim(const RightModule& m, const DimOptions& o) { return Resolver(m.alg, o).projdim(m); }
HomologicalDim injdim(const RightModule& m, const DimOptions& o) { return Resolver(m.alg, o).injdim(m); }
HomologicalDim domdim(const RightModule& m, const DimOptions& o) { return Resolver(m.alg, o).domdim(m); }
HomologicalDim codomdim(const RightModule& m, const DimOptions& o) { return Resolver(m.alg, o).codomdim(m); }
HomologicalDim resdim(const std::vector<RightModule>& gens, const RightModule& x, const DimOptions& o)
{
    return Resolver(x.alg, o).resdim(gens, x);
}

}  // namespace gendo
