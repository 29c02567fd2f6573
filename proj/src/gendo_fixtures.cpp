#include "gendo/error.hpp"
#include "gendo/fixtures.hpp"
#include "gendo/invariants.hpp"

namespace gendo {

namespace {

Fixture nakayama_fixture(const std::string& name, std::vector<std::size_t> c, bool cyclic = true)
{
    Fixture f;
    f.name = name;
    f.series = validate_kupisch(std::move(c), cyclic);
    f.base = from_kupisch(*f.series, Field::prime(2));
    f.base_symmetric = NakAlgebra(*f.series).symmetric();
    f.cm_finite = true;
    return f;
}

/// Projectives of a followed by the extra summands.
std::vector<RightModule> with_projectives(const AlgebraPtr& a, std::vector<RightModule> extra)
{
    auto out = projectives(a);
    for (auto& m : extra) out.push_back(std::move(m));
    return out;
}

}  // namespace

RightModule local_cyclic_quotient(const AlgebraPtr& a, Elem u, Elem v)
{
    auto p = projective_module(a, 0);
    const auto& pc = a->piece(0, 0);
    const auto& labels = a->presentation().basis_labels;
    Vec g(pc.size(), 0);
    for (std::size_t j = 0; j < pc.size(); ++j) {
        if (labels[pc[j]] == "x") g[j] = u;
        if (labels[pc[j]] == "y") g[j] = v;
    }
    std::vector<std::vector<Vec>> gens(1);
    gens[0].push_back(g);
    return quotient(p, submodule(p, gens)).module;
}

std::vector<std::string> fixture_names()
{
    return {"kupisch-455",  "kupisch-56",   "kupisch-3s:1",         "sym-777-gendo", "penny-farthing-gendo",
            "gf4-local-gendo", "a2-line", "auslander-22", "two-periodic-demo"};
}

Fixture make_fixture(const std::string& name, const DimOptions&)
{
    if (name == "kupisch-455") return nakayama_fixture(name, {4, 5, 5});
    if (name == "kupisch-56") return nakayama_fixture(name, {5, 6});
    if (name.rfind("kupisch-3s:", 0) == 0) {
        std::size_t s = 0;
        try {
            s = std::stoul(name.substr(11));
        } catch (const std::exception&) {
            throw Error(ErrorKind::NotApplicable, "bad parameter in " + name);
        }
        if (s == 0) throw Error(ErrorKind::NotApplicable, "s must be positive");
        return nakayama_fixture(name, {3 * s + 1, 3 * s + 2, 3 * s + 2});
    }
    if (name == "a2-line") {
        auto f = nakayama_fixture(name, {2, 1}, false);
        f.base = a2_line(Field::prime(2));
        return f;
    }

    Fixture f;
    f.name = name;
    if (name == "sym-777-gendo") {
        NakAlgebra nak(validate_kupisch({7, 7, 7}, true));
        f.base = from_kupisch(nak.series(), Field::prime(2));
        // e_0 J^2, uniserial of length 5 with top S_2
        f.summands = with_projectives(f.base, {to_module(f.base, nak, {2, 5})});
        f.base_symmetric = true;
        f.cm_finite = true;
        f.note = "A + e_0J^2 over the symmetric Nakayama algebra (7,7,7)";
    } else if (name == "penny-farthing-gendo") {
        f.base = penny_farthing(Field::prime(2));
        f.summands = with_projectives(f.base, {simple_module(f.base, 1)});
        f.base_symmetric = true;
        f.cm_finite = true;
        f.note = "A + S_2 over the penny-farthing algebra";
    } else if (name == "gf4-local-gendo") {
        f.base = commutative_local(Field::gf4());
        f.summands = with_projectives(f.base, {local_cyclic_quotient(f.base, 1, 1)});
        for (Elem v : {0u, 2u, 3u}) f.probes.push_back(local_cyclic_quotient(f.base, 1, v));
        f.probes.push_back(local_cyclic_quotient(f.base, 0, 1));
        f.base_symmetric = true;
        f.cm_finite = false;
        f.note = "A + A/(x+y)A over k[x,y]/(x^2,y^2), k = GF(4)";
    } else if (name == "auslander-22") {
        NakAlgebra nak(validate_kupisch({2, 2}, true));
        f.base = from_kupisch(nak.series(), Field::prime(2));
        for (auto m : nak.indecomposables()) f.summands.push_back(to_module(f.base, nak, m));
        f.base_symmetric = false;
        f.cm_finite = true;
        f.note = "Auslander algebra of the selfinjective Nakayama algebra (2,2)";
    } else if (name == "two-periodic-demo") {
        NakAlgebra nak(validate_kupisch({3}, true));
        f.base = from_kupisch(nak.series(), Field::prime(2));
        f.summands = with_projectives(f.base, {to_module(f.base, nak, {0, 1})});
        f.base_symmetric = true;
        f.cm_finite = true;
        f.note = "A + S over k[x]/(x^3); S has period 2";
    } else {
        throw Error(ErrorKind::NotApplicable, "unknown fixture " + name);
    }
    return f;
}

std::unique_ptr<GendoSetup> make_gendo(const Fixture& f, const DimOptions& o, std::size_t pool_limit)
{
    if (f.summands.empty()) throw Error(ErrorKind::NotApplicable, f.name + " has no generator summands");
    auto g = std::make_unique<GendoSetup>();
    g->fixture = &f;
    g->endo = endo_algebra(f.summands, f.name + "[End]");
    g->base_r = std::make_unique<Resolver>(f.base, o);
    g->endo_r = std::make_unique<Resolver>(g->endo.algebra, o);
    auto seeds = f.summands;
    seeds.insert(seeds.end(), f.probes.begin(), f.probes.end());
    // representation-infinite bases: the closure only samples
    if (!f.cm_finite) pool_limit = std::min<std::size_t>(pool_limit, 20);
    g->base_pool = ar_closure(f.base, seeds, pool_limit, o.seed);

    const auto& b = g->endo.algebra;
    IndecPool pool(b, o.seed);
    const std::size_t limit = 3 * pool_limit;
    auto add = [&](const RightModule& m) {
        if (m.is_zero()) return;
        for (const auto& s : indecomposable_summands(m, pool.rng())) {
            if (pool.size() >= limit) return;
            pool.intern(s);
        }
    };
    for (const auto& n : g->base_pool.modules) add(g->endo.functor(n));
    for (const auto& p : projectives(b)) add(p);
    for (const auto& i : injectives(b)) add(i);
    for (std::size_t v = 0; v < b->num_vertices(); ++v) add(simple_module(b, v));
    const std::size_t first = pool.size();
    for (std::size_t i = 0; i < first; ++i) {
        const RightModule x = pool.module(i);
        add(syzygy(x));
        add(cosyzygy(x));
    }
    for (std::size_t i = 0; i < pool.size(); ++i) g->endo_pool.push_back(pool.module(i));
    return g;
}

HomologicalDim endo_fdomdim(GendoSetup& g)
{
    std::size_t best = 0;
    for (const auto& m : g.endo_pool) {
        auto d = g.endo_r->domdim(m);
        if (d.is_finite()) best = std::max(best, d.value);
    }
    if (g.base_pool.complete && best >= 2) return HomologicalDim::finite(best);
    return HomologicalDim::at_least(best);
}

}  // namespace gendo
