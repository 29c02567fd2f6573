#include "gendo/invariants.hpp"

namespace gendo {

namespace {

struct Tally {
    PropertyResult r;
    explicit Tally(std::string name) { r.name = std::move(name); }
    void check(bool ok, const std::string& what)
    {
        ++r.instances;
        if (ok) return;
        if (r.failures++ == 0) r.witness = what;
    }
};

std::string pair_name(std::size_t i, std::size_t j, std::size_t k)
{
    return "(" + std::to_string(i) + "," + std::to_string(j) + ") degree " + std::to_string(k);
}

}  // namespace

std::vector<PropertyResult> property_suite(const Fixture& f, std::size_t max_degree, std::size_t sample,
                                           const DimOptions& o)
{
    std::vector<RightModule> mods;
    if (f.series) {
        NakAlgebra nak(*f.series);
        for (auto m : nak.indecomposables()) mods.push_back(to_module(f.base, nak, m));
    } else {
        auto seeds = f.summands;
        seeds.insert(seeds.end(), f.probes.begin(), f.probes.end());
        mods = ar_closure(f.base, seeds, f.cm_finite ? 60 : 20, o.seed).modules;
    }
    std::vector<RightModule> few(mods.begin(), mods.begin() + std::min(sample, mods.size()));
    std::vector<PropertyResult> out;

    if (f.base_symmetric) {
        Tally tau_t("tau = Omega^2"), ext_t("Ext^i = stable Hom(Omega^i M, N) = stable Hom(M, Omega^-i N)"),
            ar_t("Ext^1(M,N) = stable Hom(N, Omega^2 M) = stable Hom(Omega^-2 N, M)"),
            sh_t("stable Hom(M,N) = stable Hom(N, Omega M)");
        for (std::size_t i = 0; i < mods.size(); ++i)
            if (!is_projective(mods[i]))
                tau_t.check(isomorphic(tau(mods[i]), syzygy(mods[i], 2), o.seed), "module " + std::to_string(i));
        std::vector<std::vector<RightModule>> om(few.size()), co(few.size());
        for (std::size_t i = 0; i < few.size(); ++i)
            for (std::size_t k = 0; k <= max_degree; ++k) {
                om[i].push_back(k == 0 ? few[i] : syzygy(om[i].back(), 1));
                co[i].push_back(k == 0 ? few[i] : cosyzygy(co[i].back(), 1));
            }
        for (std::size_t i = 0; i < few.size(); ++i)
            for (std::size_t j = 0; j < few.size(); ++j) {
                const auto& m = few[i];
                const auto& n = few[j];
                for (std::size_t k = 1; k <= max_degree; ++k) {
                    auto e = ext_dim(m, n, k);
                    ext_t.check(e == stable_hom_dim(om[i][k], n) && e == stable_hom_dim(m, co[j][k]),
                                pair_name(i, j, k));
                }
                auto e1 = ext_dim(m, n, 1);
                ar_t.check(e1 == stable_hom_dim(n, om[i][2]) && e1 == stable_hom_dim(co[j][2], m), pair_name(i, j, 1));
                sh_t.check(stable_hom_dim(m, n) == stable_hom_dim(n, om[i][1]), pair_name(i, j, 0));
            }
        out.push_back(tau_t.r);
        out.push_back(ext_t.r);
        out.push_back(ar_t.r);
        out.push_back(sh_t.r);
    }

    Tally top_t("Ext^l(N,S) != 0 iff S is a quotient of P_l"), soc_t("Ext^l(S,N) != 0 iff S is a submodule of I_l");
    const std::size_t nv = f.base->num_vertices();
    for (std::size_t i = 0; i < few.size(); ++i) {
        RightModule w = few[i], c = few[i];
        for (std::size_t l = 0; l <= 5; ++l) {
            auto top = top_vector(w);
            auto soc = socle_vector(c);
            for (std::size_t v = 0; v < nv; ++v) {
                auto s = simple_module(f.base, v);
                auto e = l == 0 ? hom_dim(few[i], s) : ext_dim(few[i], s, l);
                top_t.check((e != 0) == (top[v] != 0), pair_name(i, v, l));
                auto e2 = l == 0 ? hom_dim(s, few[i]) : ext_dim(s, few[i], l);
                soc_t.check((e2 != 0) == (soc[v] != 0), pair_name(i, v, l));
            }
            w = syzygy(w, 1);
            c = cosyzygy(c, 1);
        }
    }
    out.push_back(top_t.r);
    out.push_back(soc_t.r);

    Tally dd_t("DD = id");
    for (std::size_t i = 0; i < mods.size(); ++i) dd_t.check(isomorphic(dual(dual(mods[i])), mods[i], o.seed), "module " + std::to_string(i));
    out.push_back(dd_t.r);

    if (!f.summands.empty() && f.base_symmetric) {
        Tally mu_t("mueller_domdim = domdim of the endomorphism algebra");
        Resolver base(f.base, o);
        auto endo = endo_algebra(f.summands);
        Resolver r(endo.algebra, o);
        auto a = mueller_domdim(base, f.summands);
        auto b = algebra_domdim(r);
        mu_t.check(a == b, a.to_string() + " vs " + b.to_string());
        out.push_back(mu_t.r);
    }
    return out;
}

}  // namespace gendo
