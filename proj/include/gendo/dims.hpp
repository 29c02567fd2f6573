#pragma once

#include "gendo/homdim.hpp"
#include "gendo/modrep.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace gendo {

struct DimOptions {
    std::size_t cutoff = 24;
    std::uint64_t seed = 7;
};

/// Iso classes of indecomposable modules over one algebra.
class IndecPool {
public:
    explicit IndecPool(AlgebraPtr a, std::uint64_t seed = 7);

    struct Found {
        std::size_t index;
        bool inserted;
        std::optional<ModuleMap> iso;  // representative -> x when already present
    };
    /// x must be indecomposable.
    Found intern(const RightModule& x);
    /// Decomposes m and interns each summand (with repetition).
    std::vector<Found> intern_summands(const RightModule& m);
    /// Index of x's class if present.
    std::optional<std::size_t> find(const RightModule& x);

    const RightModule& module(std::size_t i) const { return mods_[i]; }
    std::size_t size() const { return mods_.size(); }
    const AlgebraPtr& algebra() const { return alg_; }
    Rng& rng() { return rng_; }

private:
    struct Key {
        std::vector<std::size_t> vdim, top, soc;
        friend bool operator<(const Key& a, const Key& b)
        {
            return std::tie(a.vdim, a.top, a.soc) < std::tie(b.vdim, b.top, b.soc);
        }
    };
    AlgebraPtr alg_;
    Rng rng_;
    std::vector<RightModule> mods_;
    std::map<Key, std::vector<std::size_t>> by_key_;
};

/// A directed graph on pool indices whose successor lists are computed on
/// demand, with the iso witness of every edge that hit an existing class.
struct Edge {
    std::size_t to;
    std::optional<ModuleMap> iso;
};

/// Homological dimensions over one algebra, memoizing syzygies, cosyzygies
/// and approximation kernels of indecomposables.
class Resolver {
public:
    explicit Resolver(AlgebraPtr a, DimOptions opts = {});
    ~Resolver();

    const AlgebraPtr& algebra() const { return alg_; }
    const DimOptions& options() const { return opts_; }
    IndecPool& pool() { return pool_; }
    /// The resolver over the opposite algebra (created on first use).
    Resolver& dual_side();

    HomologicalDim projdim(const RightModule& m);
    HomologicalDim injdim(const RightModule& m);
    /// Number of leading projective terms of the minimal injective
    /// coresolution.
    HomologicalDim domdim(const RightModule& m);
    HomologicalDim codomdim(const RightModule& m);
    /// First i >= 1 with Ext^i(m, n) != 0; Infinite when all vanish.
    HomologicalDim ext_nonvanishing(const RightModule& m, const RightModule& n);
    /// First i >= 1 with Ext^i(m, A) != 0.
    HomologicalDim perp_regular(const RightModule& m);
    /// First i >= 1 with Ext^i(DA, m) != 0, via the opposite side.
    HomologicalDim perp_dual_regular(const RightModule& m);
    /// Length of the minimal add(gens)-resolution of x; gens must be
    /// pairwise non-isomorphic indecomposables containing no zero module.
    HomologicalDim resdim(const std::vector<RightModule>& gens, const RightModule& x);

    /// Pool indices of the summands of m.
    std::vector<std::size_t> classes(const RightModule& m);
    const std::vector<Edge>& syzygy_edges(std::size_t node);
    const std::vector<Edge>& cosyzygy_edges(std::size_t node);
    bool is_projective_node(std::size_t node);
    bool is_injective_node(std::size_t node);
    /// Whether the injective hull of the node is projective.
    bool hull_projective(std::size_t node);

    using Successors = std::function<const std::vector<Edge>&(std::size_t)>;
    using Predicate = std::function<bool(std::size_t)>;
    /// Longest path from the start nodes to a node without successors.
    HomologicalDim longest_path(const std::vector<std::size_t>& start, const Successors& next,
                                PeriodicityCertificate::Direction dir);
    /// Shortest distance from the start nodes to a bad node.
    HomologicalDim distance_to_bad(const std::vector<std::size_t>& start, const Successors& next, const Predicate& bad,
                                   PeriodicityCertificate::Direction dir);

private:
    AlgebraPtr alg_;
    DimOptions opts_;
    IndecPool pool_;
    std::unique_ptr<Resolver> dual_;
    std::vector<bool> inj_proj_;  // injective hull of S_v is projective
    std::map<std::size_t, std::vector<Edge>> syz_, cosyz_;
    std::map<std::size_t, int> proj_flag_, inj_flag_;
    std::map<std::pair<std::size_t, std::size_t>, bool> ext1_;  // (node, target class)
    std::map<std::vector<std::size_t>, std::map<std::size_t, std::vector<Edge>>> approx_;
};

/// One-shot helpers (fresh resolver each call).
HomologicalDim projdim(const RightModule& m, const DimOptions& o = {});
HomologicalDim injdim(const RightModule& m, const DimOptions& o = {});
HomologicalDim domdim(const RightModule& m, const DimOptions& o = {});
HomologicalDim codomdim(const RightModule& m, const DimOptions& o = {});
HomologicalDim resdim(const std::vector<RightModule>& gens, const RightModule& x, const DimOptions& o = {});

}  // namespace gendo
