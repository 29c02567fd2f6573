#include "gendo/error.hpp"
#include "gendo/modrep.hpp"

#include <numeric>

namespace gendo {

namespace {

void same_algebra(const RightModule& m, const RightModule& n)
{
    if (m.alg.get() != n.alg.get())
        throw Error(ErrorKind::AlgebraMismatch, "modules over different algebras (" + m.alg->name() + ", " +
                                                    n.alg->name() + ")");
}

/// Position of each basis element inside its (source, target) piece.
std::vector<std::size_t> piece_positions(const BasedAlgebra& a)
{
    std::vector<std::size_t> pos(a.dim(), 0);
    for (std::size_t s = 0; s < a.num_vertices(); ++s)
        for (std::size_t t = 0; t < a.num_vertices(); ++t) {
            const auto& p = a.piece(s, t);
            for (std::size_t k = 0; k < p.size(); ++k) pos[p[k]] = k;
        }
    return pos;
}

/// Actions of the arrow generators, with their vertex pairs.
struct ArrowAction {
    std::size_t s, t;
    Matrix m;
};

std::vector<ArrowAction> arrow_actions(const RightModule& m)
{
    const auto& a = *m.alg;
    std::vector<ArrowAction> out;
    for (std::size_t k = 0; k < a.arrows().size(); ++k) {
        auto s = a.arrow_source(k), t = a.arrow_target(k);
        out.push_back({s, t, m.element_action(a.arrows()[k], s, t)});
    }
    return out;
}

Matrix columns_matrix(const Field& f, std::size_t rows, const std::vector<Vec>& cols)
{
    return Matrix::from_columns(f, rows, cols);
}

/// Module structure on subspaces U_v (columns, independent) assumed closed
/// under the action.
RightModule restrict_to(const RightModule& m, const std::vector<Matrix>& basis)
{
    const auto& a = *m.alg;
    RightModule r;
    r.alg = m.alg;
    const std::size_t n = a.num_vertices();
    r.vdim.resize(n);
    std::vector<Coordinates> coords;
    coords.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
        r.vdim[v] = basis[v].cols();
        coords.emplace_back(basis[v]);
    }
    r.act.resize(a.dim());
    for (std::size_t b = 0; b < a.dim(); ++b) {
        auto s = a.source(b), t = a.target(b);
        if (r.vdim[s] == 0 || r.vdim[t] == 0) {
            r.act[b] = Matrix(m.field(), r.vdim[t], r.vdim[s]);
            continue;
        }
        r.act[b] = coords[t].of_columns(m.act[b] * basis[s]);
    }
    return r;
}

}  // namespace

// ------------------------------------------------------------ RightModule

std::size_t RightModule::dim() const { return std::accumulate(vdim.begin(), vdim.end(), std::size_t{0}); }

std::size_t RightModule::offset(std::size_t v) const
{
    std::size_t o = 0;
    for (std::size_t u = 0; u < v; ++u) o += vdim[u];
    return o;
}

Matrix RightModule::full_action(std::size_t b) const
{
    Matrix m(field(), dim(), dim());
    auto s = alg->source(b), t = alg->target(b);
    m.set_block(offset(t), offset(s), act[b]);
    return m;
}

Matrix RightModule::element_action(const Vec& x, std::size_t s, std::size_t t) const
{
    Matrix m(field(), vdim[t], vdim[s]);
    for (auto b : alg->piece(s, t))
        if (x[b]) m.axpy(x[b], act[b]);
    return m;
}

RightModule RightModule::zero(const AlgebraPtr& a)
{
    RightModule m;
    m.alg = a;
    m.vdim.assign(a->num_vertices(), 0);
    m.act.reserve(a->dim());
    for (std::size_t b = 0; b < a->dim(); ++b) m.act.emplace_back(a->field(), 0, 0);
    return m;
}

void check_module(const RightModule& m)
{
    const auto& a = *m.alg;
    const Field& f = a.field();
    if (m.vdim.size() != a.num_vertices() || m.act.size() != a.dim())
        throw Error(ErrorKind::InvalidModule, "module shape does not match the algebra");
    for (std::size_t b = 0; b < a.dim(); ++b) {
        const auto& x = m.act[b];
        if (x.rows() != m.vdim[a.target(b)] || x.cols() != m.vdim[a.source(b)])
            throw Error(ErrorKind::InvalidModule, "action block of basis element " + std::to_string(b) + " has wrong shape",
                        {(long long)b});
        x.check_entries();
    }
    for (std::size_t v = 0; v < a.num_vertices(); ++v)
        if (!m.element_action(a.presentation().idempotents[v], v, v).is_identity())
            throw Error(ErrorKind::InvalidModule, "idempotent " + std::to_string(v) + " does not act as identity",
                        {(long long)v});
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (a.target(i) != a.source(j)) continue;
            Matrix lhs = m.act[j] * m.act[i];
            Matrix rhs(f, lhs.rows(), lhs.cols());
            for (const auto& t : a.product(i, j)) rhs.axpy(t.coef, m.act[t.index]);
            if (lhs != rhs)
                throw Error(ErrorKind::InvalidModule,
                            "action violates b" + std::to_string(i) + " * b" + std::to_string(j),
                            {(long long)i, (long long)j});
        }
}

RightModule module_from_actions(const AlgebraPtr& ap, std::size_t dim, const std::vector<Matrix>& actions)
{
    const auto& a = *ap;
    const Field& f = a.field();
    const std::size_t d = a.dim();
    if (actions.size() != d) throw Error(ErrorKind::InvalidModule, "need one action matrix per basis element");
    for (std::size_t b = 0; b < d; ++b) {
        if (actions[b].rows() != dim || actions[b].cols() != dim)
            throw Error(ErrorKind::InvalidModule, "action matrix " + std::to_string(b) + " is not dim x dim", {(long long)b});
        if (actions[b].field() != f) throw Error(ErrorKind::FieldMismatch, "action matrix over the wrong field");
        actions[b].check_entries();
    }
    auto combo = [&](const Vec& x) {
        Matrix m(f, dim, dim);
        for (std::size_t b = 0; b < d; ++b)
            if (x[b]) m.axpy(x[b], actions[b]);
        return m;
    };
    if (!combo(a.presentation().unit).is_identity())
        throw Error(ErrorKind::InvalidModule, "the unit does not act as the identity");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Matrix lhs = actions[j] * actions[i];
            Matrix rhs(f, dim, dim);
            for (const auto& t : a.product(i, j)) rhs.axpy(t.coef, actions[t.index]);
            if (lhs != rhs)
                throw Error(ErrorKind::InvalidModule, "action violates b" + std::to_string(i) + " * b" + std::to_string(j),
                            {(long long)i, (long long)j});
        }
    // adapted basis: images of the idempotent actions
    const std::size_t n = a.num_vertices();
    std::vector<Matrix> blocks;
    Matrix q(f, dim, 0);
    RightModule m;
    m.alg = ap;
    for (std::size_t v = 0; v < n; ++v) {
        blocks.push_back(column_basis(combo(a.presentation().idempotents[v])));
        m.vdim.push_back(blocks.back().cols());
        q = Matrix::hstack(q, blocks.back());
    }
    auto qi = inverse(q);
    if (!qi) throw Error(ErrorKind::InvalidModule, "idempotent images do not decompose the module");
    for (std::size_t b = 0; b < d; ++b) {
        Matrix full = *qi * actions[b] * q;
        m.act.push_back(full.block(m.offset(a.target(b)), m.offset(a.source(b)), m.vdim[a.target(b)], m.vdim[a.source(b)]));
    }
    return m;
}

// ------------------------------------------------------------ maps

ModuleMap zero_map(const RightModule& m, const RightModule& n)
{
    ModuleMap z;
    for (std::size_t v = 0; v < m.vdim.size(); ++v) z.blocks.emplace_back(m.field(), n.vdim[v], m.vdim[v]);
    return z;
}

ModuleMap identity_map(const RightModule& m)
{
    ModuleMap z;
    for (std::size_t v = 0; v < m.vdim.size(); ++v) z.blocks.push_back(Matrix::identity(m.field(), m.vdim[v]));
    return z;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f)
{
    ModuleMap h;
    for (std::size_t v = 0; v < f.blocks.size(); ++v) h.blocks.push_back(g.blocks[v] * f.blocks[v]);
    return h;
}

ModuleMap map_add(const Field&, const ModuleMap& a, const ModuleMap& b)
{
    ModuleMap h;
    for (std::size_t v = 0; v < a.blocks.size(); ++v) h.blocks.push_back(a.blocks[v] + b.blocks[v]);
    return h;
}

ModuleMap map_scale(const Field&, Elem s, const ModuleMap& a)
{
    ModuleMap h;
    for (const auto& b : a.blocks) h.blocks.push_back(b.scaled(s));
    return h;
}

bool map_is_zero(const ModuleMap& f)
{
    for (const auto& b : f.blocks)
        if (!b.is_zero()) return false;
    return true;
}

std::size_t map_rank(const ModuleMap& f)
{
    std::size_t r = 0;
    for (const auto& b : f.blocks) r += rank(b);
    return r;
}

bool map_is_iso(const ModuleMap& f)
{
    for (const auto& b : f.blocks)
        if (b.rows() != b.cols() || rank(b) != b.rows()) return false;
    return true;
}

bool map_is_injective(const ModuleMap& f)
{
    for (const auto& b : f.blocks)
        if (rank(b) != b.cols()) return false;
    return true;
}

bool map_is_surjective(const ModuleMap& f)
{
    for (const auto& b : f.blocks)
        if (rank(b) != b.rows()) return false;
    return true;
}

Vec flatten(const ModuleMap& f)
{
    Vec v;
    for (const auto& b : f.blocks) v.insert(v.end(), b.data().begin(), b.data().end());
    return v;
}

ModuleMap unflatten(const RightModule& m, const RightModule& n, const Vec& x)
{
    ModuleMap f;
    std::size_t pos = 0;
    for (std::size_t v = 0; v < m.vdim.size(); ++v) {
        Matrix b(m.field(), n.vdim[v], m.vdim[v]);
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) = x[pos++];
        f.blocks.push_back(std::move(b));
    }
    return f;
}

bool is_homomorphism(const RightModule& m, const RightModule& n, const ModuleMap& f)
{
    same_algebra(m, n);
    const auto& a = *m.alg;
    for (std::size_t v = 0; v < m.vdim.size(); ++v)
        if (f.blocks[v].rows() != n.vdim[v] || f.blocks[v].cols() != m.vdim[v]) return false;
    for (std::size_t b = 0; b < a.dim(); ++b) {
        auto s = a.source(b), t = a.target(b);
        if (n.act[b] * f.blocks[s] != f.blocks[t] * m.act[b]) return false;
    }
    return true;
}

Matrix full_matrix(const RightModule& m, const RightModule& n, const ModuleMap& f)
{
    Matrix x(m.field(), n.dim(), m.dim());
    for (std::size_t v = 0; v < m.vdim.size(); ++v) x.set_block(n.offset(v), m.offset(v), f.blocks[v]);
    return x;
}

// ------------------------------------------------------------ constructions

RightModule projective_module(const AlgebraPtr& ap, std::size_t i)
{
    const auto& a = *ap;
    const std::size_t n = a.num_vertices();
    auto pos = piece_positions(a);
    RightModule m;
    m.alg = ap;
    m.vdim.resize(n);
    for (std::size_t v = 0; v < n; ++v) m.vdim[v] = a.piece(i, v).size();
    for (std::size_t c = 0; c < a.dim(); ++c) {
        auto s = a.source(c), t = a.target(c);
        Matrix x(a.field(), m.vdim[t], m.vdim[s]);
        const auto& ps = a.piece(i, s);
        for (std::size_t col = 0; col < ps.size(); ++col)
            for (const auto& term : a.product(ps[col], c)) x(pos[term.index], col) = term.coef;
        m.act.push_back(std::move(x));
    }
    return m;
}

std::vector<RightModule> projectives(const AlgebraPtr& a)
{
    std::vector<RightModule> out;
    for (std::size_t v = 0; v < a->num_vertices(); ++v) out.push_back(projective_module(a, v));
    return out;
}

RightModule regular_module(const AlgebraPtr& a) { return direct_sum(a, projectives(a)); }

RightModule simple_module(const AlgebraPtr& ap, std::size_t v)
{
    const auto& a = *ap;
    RightModule m = RightModule::zero(ap);
    m.vdim[v] = 1;
    // b in e_v A e_v acts by the scalar lambda with b - lambda e_v in the radical
    std::vector<Vec> cols = a.radical_basis();
    cols.insert(cols.begin(), a.presentation().idempotents[v]);
    Matrix sys = Matrix::from_columns(a.field(), a.dim(), cols);
    for (std::size_t b = 0; b < a.dim(); ++b) {
        auto s = a.source(b), t = a.target(b);
        m.act[b] = Matrix(a.field(), m.vdim[t], m.vdim[s]);
        if (s == v && t == v) {
            Vec bv(a.dim(), 0);
            bv[b] = 1;
            auto x = solve(sys, bv);
            m.act[b](0, 0) = x ? (*x)[0] : 0;
        }
    }
    return m;
}

RightModule injective_module(const AlgebraPtr& a, std::size_t v) { return dual(projective_module(opposite(a), v)); }

std::vector<RightModule> injectives(const AlgebraPtr& a)
{
    std::vector<RightModule> out;
    for (std::size_t v = 0; v < a->num_vertices(); ++v) out.push_back(injective_module(a, v));
    return out;
}

SumData direct_sum_data(const AlgebraPtr& ap, const std::vector<RightModule>& parts)
{
    const auto& a = *ap;
    const Field& f = a.field();
    const std::size_t n = a.num_vertices();
    SumData s;
    s.module.alg = ap;
    s.module.vdim.assign(n, 0);
    for (const auto& p : parts) {
        if (p.alg.get() != ap.get()) throw Error(ErrorKind::AlgebraMismatch, "direct sum over different algebras");
        for (std::size_t v = 0; v < n; ++v) s.module.vdim[v] += p.vdim[v];
    }
    for (std::size_t b = 0; b < a.dim(); ++b) {
        auto src = a.source(b), tgt = a.target(b);
        Matrix x(f, s.module.vdim[tgt], s.module.vdim[src]);
        std::size_t r = 0, c = 0;
        for (const auto& p : parts) {
            x.set_block(r, c, p.act[b]);
            r += p.vdim[tgt];
            c += p.vdim[src];
        }
        s.module.act.push_back(std::move(x));
    }
    std::vector<std::size_t> off(n, 0);
    for (const auto& p : parts) {
        ModuleMap in, pr;
        for (std::size_t v = 0; v < n; ++v) {
            Matrix i(f, s.module.vdim[v], p.vdim[v]);
            Matrix q(f, p.vdim[v], s.module.vdim[v]);
            for (std::size_t k = 0; k < p.vdim[v]; ++k) {
                i(off[v] + k, k) = 1;
                q(k, off[v] + k) = 1;
            }
            off[v] += p.vdim[v];
            in.blocks.push_back(std::move(i));
            pr.blocks.push_back(std::move(q));
        }
        s.incl.push_back(std::move(in));
        s.proj.push_back(std::move(pr));
    }
    return s;
}

RightModule direct_sum(const AlgebraPtr& a, const std::vector<RightModule>& parts)
{
    return direct_sum_data(a, parts).module;
}

SubQuot kernel(const RightModule& m, const RightModule& n, const ModuleMap& f)
{
    same_algebra(m, n);
    std::vector<Matrix> basis;
    for (std::size_t v = 0; v < m.vdim.size(); ++v)
        basis.push_back(columns_matrix(m.field(), m.vdim[v], kernel_basis(f.blocks[v])));
    return {restrict_to(m, basis), ModuleMap{basis}};
}

SubQuot image(const RightModule& m, const RightModule& n, const ModuleMap& f)
{
    same_algebra(m, n);
    std::vector<Matrix> basis;
    for (std::size_t v = 0; v < m.vdim.size(); ++v) basis.push_back(column_basis(f.blocks[v]));
    return {restrict_to(n, basis), ModuleMap{basis}};
}

SubQuot cokernel(const RightModule& m, const RightModule& n, const ModuleMap& f)
{
    same_algebra(m, n);
    const auto& a = *n.alg;
    const Field& fl = n.field();
    const std::size_t nv = a.num_vertices();
    std::vector<Matrix> comp, proj;
    RightModule q;
    q.alg = n.alg;
    q.vdim.resize(nv);
    for (std::size_t v = 0; v < nv; ++v) {
        Matrix im = column_basis(f.blocks[v]);
        Matrix c = complement_columns(im, n.vdim[v]);
        Matrix full = Matrix::hstack(im, c);
        Matrix inv = full.rows() ? *inverse(full) : Matrix(fl, 0, 0);
        proj.push_back(inv.block(im.cols(), 0, c.cols(), n.vdim[v]));
        q.vdim[v] = c.cols();
        comp.push_back(std::move(c));
    }
    for (std::size_t b = 0; b < a.dim(); ++b) {
        auto s = a.source(b), t = a.target(b);
        q.act.push_back(proj[t] * n.act[b] * comp[s]);
    }
    return {std::move(q), ModuleMap{proj}};
}

SubQuot submodule(const RightModule& m, const std::vector<std::vector<Vec>>& gens)
{
    const std::size_t nv = m.vdim.size();
    std::vector<SubspaceBasis> span;
    for (std::size_t v = 0; v < nv; ++v) {
        span.emplace_back(m.field(), m.vdim[v]);
        for (const auto& g : gens[v]) span[v].add(g);
    }
    auto arrows = arrow_actions(m);
    // closure: apply arrows to new vectors until nothing changes
    std::vector<std::vector<Vec>> todo(nv);
    for (std::size_t v = 0; v < nv; ++v) todo[v] = span[v].rows();
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::vector<Vec>> next(nv);
        for (const auto& ar : arrows)
            for (const auto& x : todo[ar.s]) {
                Vec y = ar.m.apply(x);
                if (span[ar.t].add(y)) {
                    next[ar.t].push_back(y);
                    changed = true;
                }
            }
        todo = std::move(next);
    }
    std::vector<Matrix> basis;
    for (std::size_t v = 0; v < nv; ++v) basis.push_back(columns_matrix(m.field(), m.vdim[v], span[v].rows()));
    return {restrict_to(m, basis), ModuleMap{basis}};
}

SubQuot quotient(const RightModule& m, const SubQuot& sub) { return cokernel(sub.module, m, sub.map); }

// ------------------------------------------------------------ Hom

std::vector<ModuleMap> hom_basis(const RightModule& m, const RightModule& n)
{
    same_algebra(m, n);
    const Field& f = m.field();
    const std::size_t nv = m.vdim.size();
    std::vector<std::size_t> var(nv + 1, 0);
    for (std::size_t v = 0; v < nv; ++v) var[v + 1] = var[v] + n.vdim[v] * m.vdim[v];
    const std::size_t nvar = var[nv];
    if (nvar == 0) return {};
    auto am = arrow_actions(m), an = arrow_actions(n);
    std::size_t neq = 0;
    for (const auto& ar : am) neq += n.vdim[ar.t] * m.vdim[ar.s];
    if (neq == 0) {
        std::vector<ModuleMap> out;
        for (std::size_t k = 0; k < nvar; ++k) {
            Vec x(nvar, 0);
            x[k] = 1;
            out.push_back(unflatten(m, n, x));
        }
        return out;
    }
    Matrix sys(f, neq, nvar);
    std::size_t row = 0;
    for (std::size_t g = 0; g < am.size(); ++g) {
        const auto s = am[g].s, t = am[g].t;
        const Matrix& tm = am[g].m;  // m_t x m_s
        const Matrix& tn = an[g].m;  // n_t x n_s
        const std::size_t ms = m.vdim[s], mt = m.vdim[t], ns = n.vdim[s], nt = n.vdim[t];
        for (std::size_t i = 0; i < nt; ++i)
            for (std::size_t j = 0; j < ms; ++j, ++row) {
                // (tn * F_s)(i,j) - (F_t * tm)(i,j)
                for (std::size_t k = 0; k < ns; ++k)
                    if (tn(i, k)) {
                        auto& e = sys(row, var[s] + k * ms + j);
                        e = f.add(e, tn(i, k));
                    }
                for (std::size_t k = 0; k < mt; ++k)
                    if (tm(k, j)) {
                        auto& e = sys(row, var[t] + i * mt + k);
                        e = f.sub(e, tm(k, j));
                    }
            }
    }
    std::vector<ModuleMap> out;
    for (const auto& x : kernel_basis(sys)) out.push_back(unflatten(m, n, x));
    return out;
}

std::size_t hom_dim(const RightModule& m, const RightModule& n) { return hom_basis(m, n).size(); }

namespace {

/// Hom(e_v A, N) -> N e_v: the map sending e_v to x.
ModuleMap map_from_projective(const RightModule& p, const RightModule& n, std::size_t v, const Vec& x)
{
    const auto& a = *n.alg;
    ModuleMap f;
    for (std::size_t u = 0; u < a.num_vertices(); ++u) {
        const auto& pc = a.piece(v, u);
        Matrix blk(n.field(), n.vdim[u], pc.size());
        for (std::size_t k = 0; k < pc.size(); ++k) {
            Vec y = n.act[pc[k]].apply(x);
            for (std::size_t i = 0; i < y.size(); ++i) blk(i, k) = y[i];
        }
        f.blocks.push_back(std::move(blk));
    }
    (void)p;
    return f;
}

struct CoverParts {
    Cover cover;
    SumData parts;
};

CoverParts cover_parts(const RightModule& m)
{
    const auto& ap = m.alg;
    const auto& a = *ap;
    auto st = structure(m);
    const auto& rad = st.radical;
    std::vector<RightModule> pieces;
    std::vector<ModuleMap> maps;
    std::vector<std::size_t> verts;
    for (std::size_t v = 0; v < a.num_vertices(); ++v) {
        if (m.vdim[v] == rad.module.vdim[v]) continue;
        Matrix comp = complement_columns(rad.map.blocks[v], m.vdim[v]);
        auto p = projective_module(ap, v);
        for (std::size_t c = 0; c < comp.cols(); ++c) {
            maps.push_back(map_from_projective(p, m, v, comp.column(c)));
            pieces.push_back(p);
            verts.push_back(v);
        }
    }
    CoverParts out;
    out.parts = direct_sum_data(ap, pieces);
    ModuleMap total = zero_map(out.parts.module, m);
    for (std::size_t k = 0; k < maps.size(); ++k)
        total = map_add(m.field(), total, compose(maps[k], out.parts.proj[k]));
    out.cover = {out.parts.module, std::move(total), std::move(verts)};
    return out;
}

}  // namespace

std::vector<ModuleMap> projective_maps(const RightModule& m, const RightModule& n)
{
    auto c = projective_cover(n);
    std::vector<ModuleMap> out;
    for (const auto& h : hom_basis(m, c.module)) out.push_back(compose(c.map, h));
    return out;
}

std::size_t stable_hom_dim(const RightModule& m, const RightModule& n)
{
    std::size_t total = hom_dim(m, n);
    auto pm = projective_maps(m, n);
    if (pm.empty()) return total;
    std::vector<Vec> rows;
    for (const auto& p : pm) rows.push_back(flatten(p));
    if (rows.front().empty()) return total;
    return total - rank(Matrix::from_rows(m.field(), rows));
}

Structure structure(const RightModule& m)
{
    const std::size_t nv = m.vdim.size();
    auto arrows = arrow_actions(m);
    std::vector<std::vector<Vec>> radg(nv), socg(nv);
    std::vector<std::vector<Vec>> soc_rows(nv);
    for (const auto& ar : arrows)
        for (std::size_t j = 0; j < ar.m.cols(); ++j) radg[ar.t].push_back(ar.m.column(j));
    std::vector<Matrix> stacked(nv);
    for (std::size_t v = 0; v < nv; ++v) stacked[v] = Matrix(m.field(), 0, m.vdim[v]);
    for (const auto& ar : arrows) stacked[ar.s] = Matrix::vstack(stacked[ar.s], ar.m);
    for (std::size_t v = 0; v < nv; ++v) {
        if (stacked[v].rows() == 0) {
            for (std::size_t k = 0; k < m.vdim[v]; ++k) {
                Vec e(m.vdim[v], 0);
                e[k] = 1;
                socg[v].push_back(e);
            }
        } else {
            socg[v] = kernel_basis(stacked[v]);
        }
    }
    Structure s{submodule(m, radg), {}, submodule(m, socg)};
    s.top = quotient(m, s.radical);
    return s;
}

std::vector<std::size_t> top_vector(const RightModule& m)
{
    auto arrows = arrow_actions(m);
    std::vector<Matrix> img(m.vdim.size());
    for (std::size_t v = 0; v < m.vdim.size(); ++v) img[v] = Matrix(m.field(), m.vdim[v], 0);
    for (const auto& ar : arrows) img[ar.t] = Matrix::hstack(img[ar.t], ar.m);
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < m.vdim.size(); ++v) out.push_back(m.vdim[v] - rank(img[v]));
    return out;
}

std::vector<std::size_t> socle_vector(const RightModule& m)
{
    auto arrows = arrow_actions(m);
    std::vector<Matrix> st(m.vdim.size());
    for (std::size_t v = 0; v < m.vdim.size(); ++v) st[v] = Matrix(m.field(), 0, m.vdim[v]);
    for (const auto& ar : arrows) st[ar.s] = Matrix::vstack(st[ar.s], ar.m);
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < m.vdim.size(); ++v) out.push_back(m.vdim[v] - rank(st[v]));
    return out;
}

Cover projective_cover(const RightModule& m) { return cover_parts(m).cover; }

Cover injective_hull(const RightModule& m)
{
    auto c = projective_cover(dual(m));
    return {dual(c.module), dual_map(c.map), c.vertices};
}

RightModule syzygy(const RightModule& m, std::size_t k)
{
    RightModule x = m;
    for (std::size_t i = 0; i < k && !x.is_zero(); ++i) {
        auto c = projective_cover(x);
        x = kernel(c.module, x, c.map).module;
    }
    return x;
}

RightModule cosyzygy(const RightModule& m, std::size_t k)
{
    RightModule x = m;
    for (std::size_t i = 0; i < k && !x.is_zero(); ++i) {
        auto h = injective_hull(x);
        x = cokernel(x, h.module, h.map).module;
    }
    return x;
}

bool is_projective(const RightModule& m)
{
    auto top = top_vector(m);
    std::size_t d = 0;
    for (std::size_t v = 0; v < top.size(); ++v)
        if (top[v]) {
            std::size_t pv = 0;
            for (std::size_t u = 0; u < top.size(); ++u) pv += m.alg->piece(v, u).size();
            d += top[v] * pv;
        }
    return d == m.dim();
}

bool is_injective(const RightModule& m)
{
    auto soc = socle_vector(m);
    std::size_t d = 0;
    for (std::size_t v = 0; v < soc.size(); ++v)
        if (soc[v]) {
            std::size_t iv = 0;
            for (std::size_t u = 0; u < soc.size(); ++u) iv += m.alg->piece(u, v).size();
            d += soc[v] * iv;
        }
    return d == m.dim();
}

std::size_t ext_dim(const RightModule& m, const RightModule& n, std::size_t i)
{
    same_algebra(m, n);
    if (i == 0) return hom_dim(m, n);
    RightModule x = syzygy(m, i - 1);
    if (x.is_zero() || n.is_zero()) return 0;
    auto cp = cover_parts(x);
    auto k = kernel(cp.cover.module, x, cp.cover.map);
    if (k.module.is_zero()) return 0;
    const std::size_t hk = hom_dim(k.module, n);
    if (hk == 0) return 0;
    // maps K -> N that extend to P
    std::vector<Vec> rows;
    const auto& a = *m.alg;
    for (std::size_t j = 0; j < cp.cover.vertices.size(); ++j) {
        const std::size_t v = cp.cover.vertices[j];
        const auto& pj = cp.parts.proj[j];
        auto p = projective_module(m.alg, v);
        for (std::size_t e = 0; e < n.vdim[v]; ++e) {
            Vec x0(n.vdim[v], 0);
            x0[e] = 1;
            auto phi = compose(map_from_projective(p, n, v, x0), pj);
            rows.push_back(flatten(compose(phi, k.map)));
        }
    }
    (void)a;
    std::size_t r = rows.empty() || rows.front().empty() ? 0 : rank(Matrix::from_rows(m.field(), rows));
    return hk - r;
}

std::size_t ext_dim_dual(const RightModule& m, const RightModule& n, std::size_t i)
{
    return ext_dim(dual(n), dual(m), i);
}

// ------------------------------------------------------------ functors

RightModule dual(const RightModule& m)
{
    RightModule d;
    d.alg = opposite(m.alg);
    d.vdim = m.vdim;
    for (const auto& x : m.act) d.act.push_back(x.transpose());
    return d;
}

ModuleMap dual_map(const ModuleMap& f)
{
    ModuleMap d;
    for (const auto& b : f.blocks) d.blocks.push_back(b.transpose());
    return d;
}

namespace {

/// Left multiplication by b in e_s A e_t, as a map e_t A -> e_s A.
ModuleMap left_mult(const BasedAlgebra& a, std::size_t b)
{
    const auto s = a.source(b), t = a.target(b);
    auto pos = piece_positions(a);
    ModuleMap f;
    for (std::size_t u = 0; u < a.num_vertices(); ++u) {
        const auto& from = a.piece(t, u);
        Matrix blk(a.field(), a.piece(s, u).size(), from.size());
        for (std::size_t k = 0; k < from.size(); ++k)
            for (const auto& term : a.product(b, from[k])) blk(pos[term.index], k) = term.coef;
        f.blocks.push_back(std::move(blk));
    }
    return f;
}

struct RegularHoms {
    std::vector<std::vector<ModuleMap>> basis;  // per vertex v: basis of Hom(M, e_v A)
    std::vector<Coordinates> coords;
};

RegularHoms regular_homs(const RightModule& m)
{
    RegularHoms h;
    const auto& ap = m.alg;
    for (std::size_t v = 0; v < ap->num_vertices(); ++v) {
        auto p = projective_module(ap, v);
        h.basis.push_back(hom_basis(m, p));
        std::vector<Vec> flat;
        for (const auto& x : h.basis.back()) flat.push_back(flatten(x));
        std::size_t len = 0;
        for (std::size_t u = 0; u < m.vdim.size(); ++u) len += p.vdim[u] * m.vdim[u];
        h.coords.emplace_back(m.field(), flat, len);
    }
    return h;
}

}  // namespace

RightModule hom_to_regular(const RightModule& m)
{
    const auto& a = *m.alg;
    auto h = regular_homs(m);
    RightModule r;
    r.alg = opposite(m.alg);
    for (std::size_t v = 0; v < a.num_vertices(); ++v) r.vdim.push_back(h.basis[v].size());
    for (std::size_t b = 0; b < a.dim(); ++b) {
        const auto s = a.source(b), t = a.target(b);
        // over the opposite algebra b maps vertex t to vertex s
        Matrix x(m.field(), r.vdim[s], r.vdim[t]);
        if (r.vdim[s] && r.vdim[t]) {
            auto lb = left_mult(a, b);
            for (std::size_t k = 0; k < h.basis[t].size(); ++k) {
                auto c = h.coords[s](flatten(compose(lb, h.basis[t][k])));
                for (std::size_t i = 0; i < c.size(); ++i) x(i, k) = c[i];
            }
        }
        r.act.push_back(std::move(x));
    }
    return r;
}

ModuleMap hom_to_regular_map(const RightModule& m, const RightModule& n, const ModuleMap& f)
{
    auto hm = regular_homs(m), hn = regular_homs(n);
    ModuleMap out;
    for (std::size_t v = 0; v < m.vdim.size(); ++v) {
        Matrix blk(m.field(), hm.basis[v].size(), hn.basis[v].size());
        for (std::size_t k = 0; k < hn.basis[v].size(); ++k) {
            auto c = hm.coords[v](flatten(compose(hn.basis[v][k], f)));
            for (std::size_t i = 0; i < c.size(); ++i) blk(i, k) = c[i];
        }
        out.blocks.push_back(std::move(blk));
    }
    return out;
}

RightModule nu(const RightModule& m) { return dual(hom_to_regular(m)); }

RightModule nu_inv(const RightModule& m) { return hom_to_regular(dual(m)); }

namespace {

struct Presentation {
    RightModule p0, p1;
    ModuleMap d;  // P1 -> P0
};

Presentation minimal_presentation(const RightModule& m)
{
    auto c0 = projective_cover(m);
    auto k = kernel(c0.module, m, c0.map);
    auto c1 = projective_cover(k.module);
    return {c0.module, c1.module, compose(k.map, c1.map)};
}

}  // namespace

RightModule transpose_tr(const RightModule& m)
{
    auto pr = minimal_presentation(m);
    auto h0 = hom_to_regular(pr.p0), h1 = hom_to_regular(pr.p1);
    auto hd = hom_to_regular_map(pr.p1, pr.p0, pr.d);
    return cokernel(h0, h1, hd).module;
}

RightModule tau(const RightModule& m) { return dual(transpose_tr(m)); }

RightModule tau_inv(const RightModule& m) { return transpose_tr(dual(m)); }

RightModule tau_via_nu(const RightModule& m)
{
    auto pr = minimal_presentation(m);
    auto n0 = nu(pr.p0), n1 = nu(pr.p1);
    auto nd = dual_map(hom_to_regular_map(pr.p1, pr.p0, pr.d));
    return kernel(n1, n0, nd).module;
}

}  // namespace gendo
