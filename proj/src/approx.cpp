#include "gendo/error.hpp"
#include "gendo/modrep.hpp"

namespace gendo {

namespace {

std::size_t flat_len(const RightModule& m, const RightModule& n)
{
    std::size_t len = 0;
    for (std::size_t v = 0; v < m.vdim.size(); ++v) len += m.vdim[v] * n.vdim[v];
    return len;
}

/// Whether the span of the given endomorphisms generates a nilpotent algebra.
bool span_nilpotent(const RightModule& m, const std::vector<ModuleMap>& z)
{
    const std::size_t len = flat_len(m, m);
    std::vector<ModuleMap> power = z;
    for (std::size_t step = 0; step <= m.dim() + 1; ++step) {
        if (power.empty()) return true;
        SubspaceBasis next(m.field(), len);
        std::vector<ModuleMap> np;
        for (const auto& a : z)
            for (const auto& b : power) {
                auto c = compose(a, b);
                if (next.add(flatten(c))) np.push_back(std::move(c));
            }
        power = std::move(np);
    }
    return power.empty();
}

}  // namespace

Approximation min_right_approx(const std::vector<RightModule>& gens, const RightModule& x)
{
    const Field& f = x.field();
    const std::size_t r = gens.size();
    std::vector<std::vector<ModuleMap>> hx(r);
    for (std::size_t i = 0; i < r; ++i) hx[i] = hom_basis(gens[i], x);
    Approximation out;
    out.multiplicity.assign(r, 0);
    std::vector<RightModule> parts;
    std::vector<ModuleMap> chosen;
    for (std::size_t i = 0; i < r; ++i) {
        if (hx[i].empty()) continue;
        SubspaceBasis span(f, flat_len(gens[i], x));
        for (std::size_t j = 0; j < r; ++j) {
            if (hx[j].empty()) continue;
            std::vector<ModuleMap> radical;
            if (j == i)
                radical = local_endomorphisms(gens[i]).radical;
            else
                radical = hom_basis(gens[i], gens[j]);
            for (const auto& h : hx[j])
                for (const auto& rr : radical) span.add(flatten(compose(h, rr)));
        }
        for (const auto& h : hx[i])
            if (span.add(flatten(h))) {
                parts.push_back(gens[i]);
                chosen.push_back(h);
                ++out.multiplicity[i];
            }
    }
    auto sum = direct_sum_data(x.alg, parts);
    out.source = sum.module;
    out.map = zero_map(sum.module, x);
    for (std::size_t k = 0; k < chosen.size(); ++k) out.map = map_add(f, out.map, compose(chosen[k], sum.proj[k]));
    return out;
}

bool is_right_minimal(const RightModule& source, const RightModule& target, const ModuleMap& fmap)
{
    auto e = hom_basis(source, source);
    if (e.empty()) return true;
    std::vector<Vec> cols;
    for (const auto& x : e) cols.push_back(flatten(compose(fmap, x)));
    const std::size_t len = flat_len(source, target);
    std::vector<ModuleMap> z;
    if (len == 0) {
        z = e;
    } else {
        Matrix sys = Matrix::from_columns(source.field(), len, cols);
        for (const auto& c : kernel_basis(sys)) {
            ModuleMap y = zero_map(source, source);
            for (std::size_t k = 0; k < c.size(); ++k)
                if (c[k]) y = map_add(source.field(), y, map_scale(source.field(), c[k], e[k]));
            z.push_back(std::move(y));
        }
    }
    return span_nilpotent(source, z);
}

// ------------------------------------------------------------ End(X)

EndoAlgebra endo_algebra(const std::vector<RightModule>& summands, const std::string& name)
{
    if (summands.empty()) throw Error(ErrorKind::InvalidInput, "endomorphism algebra of the zero module");
    const Field& f = summands.front().field();
    const std::size_t r = summands.size();
    EndoAlgebra out;
    out.summands = summands;
    out.hom.assign(r, std::vector<std::vector<std::pair<std::size_t, ModuleMap>>>(r));
    AlgebraPresentation p;
    p.field = f;
    p.name = name.empty() ? "End(X)" : name;
    std::size_t next = 0;
    for (std::size_t s = 0; s < r; ++s)
        for (std::size_t t = 0; t < r; ++t) {
            std::vector<ModuleMap> maps;
            if (s == t) {
                maps.push_back(identity_map(summands[s]));
                for (auto& x : local_endomorphisms(summands[s]).radical) maps.push_back(std::move(x));
            } else {
                maps = hom_basis(summands[t], summands[s]);
            }
            for (std::size_t k = 0; k < maps.size(); ++k) {
                p.basis_labels.push_back(s == t && k == 0 ? "e" + std::to_string(s)
                                                          : "f" + std::to_string(s) + "_" + std::to_string(t) + "_" +
                                                                std::to_string(k));
                out.hom[s][t].emplace_back(next++, std::move(maps[k]));
            }
        }
    const std::size_t d = next;
    // coordinates per piece
    std::vector<std::vector<Coordinates>> coords(r, std::vector<Coordinates>(r));
    for (std::size_t s = 0; s < r; ++s)
        for (std::size_t t = 0; t < r; ++t) {
            std::vector<Vec> flat;
            for (const auto& [idx, m] : out.hom[s][t]) flat.push_back(flatten(m));
            coords[s][t] = Coordinates(f, flat, flat_len(summands[t], summands[s]));
        }
    p.mult.assign(d, std::vector<Vec>(d, Vec(d, 0)));
    for (std::size_t s = 0; s < r; ++s)
        for (std::size_t t = 0; t < r; ++t)
            for (std::size_t u = 0; u < r; ++u)
                for (const auto& [i, fm] : out.hom[s][t])
                    for (const auto& [j, gm] : out.hom[t][u]) {
                        auto c = coords[s][u](flatten(compose(fm, gm)));
                        for (std::size_t k = 0; k < c.size(); ++k) p.mult[i][j][out.hom[s][u][k].first] = c[k];
                    }
    p.unit.assign(d, 0);
    for (std::size_t s = 0; s < r; ++s) {
        Vec e(d, 0);
        e[out.hom[s][s].front().first] = 1;
        p.unit[out.hom[s][s].front().first] = 1;
        p.idempotents.push_back(std::move(e));
    }
    for (std::size_t s = 0; s < r; ++s)
        for (std::size_t t = 0; t < r; ++t)
            for (std::size_t k = (s == t ? 1 : 0); k < out.hom[s][t].size(); ++k) {
                Vec e(d, 0);
                e[out.hom[s][t][k].first] = 1;
                p.radical_generators.push_back(std::move(e));
            }
    out.algebra = validate(std::move(p));
    return out;
}

RightModule EndoAlgebra::functor(const RightModule& n) const
{
    const auto& b = *algebra;
    const std::size_t r = summands.size();
    std::vector<std::vector<ModuleMap>> h(r);
    std::vector<Coordinates> coords;
    RightModule m;
    m.alg = algebra;
    for (std::size_t s = 0; s < r; ++s) {
        h[s] = hom_basis(summands[s], n);
        m.vdim.push_back(h[s].size());
        std::vector<Vec> flat;
        for (const auto& x : h[s]) flat.push_back(flatten(x));
        coords.emplace_back(n.field(), flat, flat_len(summands[s], n));
    }
    m.act.resize(b.dim());
    for (std::size_t s = 0; s < r; ++s)
        for (std::size_t t = 0; t < r; ++t)
            for (const auto& [idx, fm] : hom[s][t]) {
                Matrix a(n.field(), m.vdim[t], m.vdim[s]);
                for (std::size_t k = 0; k < h[s].size(); ++k) {
                    auto c = coords[t](flatten(compose(h[s][k], fm)));
                    for (std::size_t i = 0; i < c.size(); ++i) a(i, k) = c[i];
                }
                m.act[idx] = std::move(a);
            }
    return m;
}

ModuleMap EndoAlgebra::functor_map(const RightModule& n, const RightModule& n2, const ModuleMap& g) const
{
    ModuleMap out;
    for (const auto& x : summands) {
        auto h1 = hom_basis(x, n), h2 = hom_basis(x, n2);
        std::vector<Vec> flat;
        for (const auto& y : h2) flat.push_back(flatten(y));
        Coordinates c2(n.field(), flat, flat_len(x, n2));
        Matrix blk(n.field(), h2.size(), h1.size());
        for (std::size_t k = 0; k < h1.size(); ++k) {
            auto c = c2(flatten(compose(g, h1[k])));
            for (std::size_t i = 0; i < c.size(); ++i) blk(i, k) = c[i];
        }
        out.blocks.push_back(std::move(blk));
    }
    return out;
}

}  // namespace gendo
