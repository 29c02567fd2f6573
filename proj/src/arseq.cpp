#include "gendo/error.hpp"
#include "gendo/invariants.hpp"

#include <deque>

namespace gendo {

namespace {

std::size_t flat_size(const RightModule& m, const RightModule& n)
{
    std::size_t s = 0;
    for (std::size_t v = 0; v < m.vdim.size(); ++v) s += m.vdim[v] * n.vdim[v];
    return s;
}

/// Coefficients x with sum x_j basis_j = target.
std::optional<Vec> coords_in(const Field& f, const std::vector<ModuleMap>& basis, const ModuleMap& target,
                             std::size_t len)
{
    std::vector<Vec> cols;
    for (const auto& b : basis) cols.push_back(flatten(b));
    Matrix a = Matrix::from_columns(f, len, cols);
    return solve(a, flatten(target));
}

ModuleMap combination(const Field& f, const std::vector<ModuleMap>& basis, const Vec& c, const RightModule& m,
                      const RightModule& n)
{
    ModuleMap out = zero_map(m, n);
    for (std::size_t j = 0; j < basis.size(); ++j)
        if (c[j] != 0) out = map_add(f, out, map_scale(f, c[j], basis[j]));
    return out;
}

/// Every map in targets factors as g o b for some b : n -> e.
bool factors_through(const RightModule& n, const RightModule& e, const RightModule& m, const ModuleMap& g,
                     const std::vector<ModuleMap>& targets, std::string* why)
{
    const Field& f = m.field();
    SubspaceBasis span(f, flat_size(n, m));
    for (const auto& b : hom_basis(n, e)) span.add(flatten(compose(g, b)));
    for (std::size_t j = 0; j < targets.size(); ++j)
        if (!span.contains(flatten(targets[j]))) {
            if (why) *why = "map " + std::to_string(j) + " does not factor";
            return false;
        }
    return true;
}

}  // namespace

std::optional<ShortExact> almost_split_sequence(const RightModule& m)
{
    if (m.is_zero() || is_projective(m)) return std::nullopt;
    const Field& f = m.field();
    const auto& alg = m.alg;
    auto cov = projective_cover(m);
    const RightModule& p = cov.module;
    const ModuleMap& pi = cov.map;
    auto ker = kernel(p, m, pi);
    const RightModule& k = ker.module;
    const ModuleMap& iota = ker.map;
    RightModule l = tau(m);

    auto hkl = hom_basis(k, l);
    const std::size_t len = flat_size(k, l);
    // Hom(K, L) modulo the maps that extend over P is Ext^1(M, L)
    SubspaceBasis ext0(f, len);
    for (const auto& psi : hom_basis(p, l)) ext0.add(flatten(compose(psi, iota)));

    // End(M) acts through liftings to K
    auto pp = hom_basis(p, p);
    auto kk = hom_basis(k, k);
    std::vector<ModuleMap> pi_pp, iota_kk;
    for (const auto& h : pp) pi_pp.push_back(compose(pi, h));
    for (const auto& h : kk) iota_kk.push_back(compose(iota, h));
    std::vector<ModuleMap> omega_rad;
    for (const auto& r : local_endomorphisms(m).radical) {
        auto c = coords_in(f, pi_pp, compose(r, pi), flat_size(p, m));
        if (!c) throw Error(ErrorKind::InvalidModule, "endomorphism does not lift to the projective cover");
        auto rt = combination(f, pp, *c, p, p);
        auto c2 = coords_in(f, iota_kk, compose(rt, iota), flat_size(k, p));
        if (!c2) throw Error(ErrorKind::InvalidModule, "lifted endomorphism does not restrict to the kernel");
        omega_rad.push_back(combination(f, kk, *c2, k, k));
    }

    // the socle: classes killed by every radical endomorphism
    const std::size_t nh = hkl.size();
    std::vector<Vec> rows;
    for (const auto& w : omega_rad) {
        std::vector<Vec> cols;
        for (const auto& h : hkl) cols.push_back(ext0.reduce(flatten(compose(h, w))));
        for (std::size_t i = 0; i < len; ++i) {
            Vec row(nh);
            for (std::size_t j = 0; j < nh; ++j) row[j] = cols[j][i];
            rows.push_back(row);
        }
    }
    std::vector<Vec> cand;
    if (rows.empty()) {
        for (std::size_t j = 0; j < nh; ++j) {
            Vec e(nh, 0);
            e[j] = 1;
            cand.push_back(e);
        }
    } else {
        cand = kernel_basis(Matrix::from_rows(f, rows));
    }
    std::optional<ModuleMap> phi;
    for (const auto& c : cand) {
        auto x = combination(f, hkl, c, k, l);
        if (!ext0.contains(flatten(x))) {
            phi = x;
            break;
        }
    }
    if (!phi) return std::nullopt;

    // pushout of P <- K -> L
    auto sum = direct_sum_data(alg, {p, l});
    auto u = map_add(f, compose(sum.incl[0], iota), map_scale(f, f.neg(1), compose(sum.incl[1], *phi)));
    auto cok = cokernel(k, sum.module, u);
    ShortExact s;
    s.l = l;
    s.e = cok.module;
    s.m = m;
    s.f = compose(cok.map, sum.incl[1]);
    auto em = hom_basis(s.e, m);
    std::vector<ModuleMap> gq;
    for (const auto& h : em) gq.push_back(compose(h, cok.map));
    auto c = coords_in(f, gq, compose(pi, sum.proj[0]), flat_size(sum.module, m));
    if (!c) throw Error(ErrorKind::InvalidModule, "pushout map does not descend");
    s.g = combination(f, em, *c, s.e, m);
    return s;
}

ArCheck almost_split_verify(const ShortExact& s, const std::vector<RightModule>& pool, bool pool_certified,
                            std::uint64_t seed)
{
    const Field& f = s.m.field();
    if (!is_homomorphism(s.l, s.e, s.f) || !is_homomorphism(s.e, s.m, s.g))
        throw Error(ErrorKind::InvalidModule, "sequence maps are not homomorphisms");
    if (!map_is_injective(s.f) || !map_is_surjective(s.g) || !map_is_zero(compose(s.g, s.f)) ||
        s.e.dim() != s.l.dim() + s.m.dim())
        throw Error(ErrorKind::InvalidModule, "sequence is not short exact");
    Rng rng(seed);
    if (s.m.is_zero() || is_projective(s.m) || !is_indecomposable(s.m, rng))
        throw Error(ErrorKind::InvalidModule, "end term must be indecomposable nonprojective");
    if (!isomorphic(s.l, tau(s.m), seed)) throw Error(ErrorKind::InvalidModule, "first term is not tau of the end term");

    ArCheck out;
    out.pool_certified = pool_certified;
    // split iff id_M = g o s for some s
    std::vector<ModuleMap> gs;
    for (const auto& h : hom_basis(s.m, s.e)) gs.push_back(compose(s.g, h));
    if (coords_in(f, gs, identity_map(s.m), flat_size(s.m, s.m))) {
        out.reason = "sequence splits";
        return out;
    }
    std::string why;
    if (!factors_through(s.m, s.e, s.m, s.g, local_endomorphisms(s.m).radical, &why)) {
        out.reason = "radical endomorphism: " + why;
        return out;
    }
    for (std::size_t i = 0; i < pool.size(); ++i) {
        const auto& n = pool[i];
        if (n.dim() == s.m.dim() && isomorphic(n, s.m, seed)) continue;
        if (!factors_through(n, s.e, s.m, s.g, hom_basis(n, s.m), &why)) {
            out.reason = "pool module " + std::to_string(i) + ": " + why;
            return out;
        }
    }
    out.ok = true;
    if (!pool_certified) out.reason = "PoolIncomplete";
    return out;
}

IndecCatalog ar_closure(const AlgebraPtr& a, const std::vector<RightModule>& seeds, std::size_t limit,
                        std::uint64_t seed)
{
    IndecPool pool(a, seed);
    std::deque<std::size_t> queue;
    bool overflow = false;
    auto add = [&](const RightModule& m) {
        if (m.is_zero()) return;
        for (const auto& fd : pool.intern_summands(m))
            if (fd.inserted) {
                if (pool.size() > limit) {
                    overflow = true;
                    return;
                }
                queue.push_back(fd.index);
            }
    };
    for (const auto& p : projectives(a)) add(p);
    for (const auto& s : seeds) add(s);
    while (!queue.empty() && !overflow) {
        const RightModule x = pool.module(queue.front());
        queue.pop_front();
        if (is_projective(x)) add(structure(x).radical.module);
        if (is_injective(x)) {
            auto st = structure(x);
            add(cokernel(st.socle.module, x, st.socle.map).module);
        } else {
            add(tau_inv(x));
        }
        if (!is_projective(x)) {
            add(tau(x));
            if (auto s = almost_split_sequence(x)) add(s->e);
        }
    }
    IndecCatalog out;
    for (std::size_t i = 0; i < pool.size() && i < limit; ++i) out.modules.push_back(pool.module(i));
    out.complete = !overflow;
    return out;
}

}  // namespace gendo
