#include "gendo/error.hpp"
#include "gendo/modrep.hpp"

#include <algorithm>
#include <set>

namespace gendo {

namespace {

ModuleMap shifted(const Field& f, const ModuleMap& x, Elem lambda)
{
    ModuleMap y = x;
    for (auto& b : y.blocks)
        for (std::size_t i = 0; i < b.rows(); ++i) b(i, i) = f.sub(b(i, i), lambda);
    return y;
}

bool map_is_nilpotent(const ModuleMap& x)
{
    for (const auto& b : x.blocks)
        if (!is_nilpotent(b)) return false;
    return true;
}

/// Monic minimal polynomial of u under a: coefficients c_0..c_{j-1}, c_j = 1.
Vec local_min_poly(const Matrix& a, const Vec& u)
{
    const Field& f = a.field();
    std::vector<Vec> krylov{u};
    while (true) {
        Vec next = a.apply(krylov.back());
        Matrix k = Matrix::from_columns(f, u.size(), krylov);
        auto sol = solve(k, next);
        if (sol) {
            Vec poly(krylov.size() + 1, 0);
            for (std::size_t i = 0; i < sol->size(); ++i) poly[i] = f.neg((*sol)[i]);
            poly.back() = 1;
            return poly;
        }
        krylov.push_back(std::move(next));
    }
}

Elem poly_eval(const Field& f, const Vec& p, Elem x)
{
    Elem r = 0;
    for (std::size_t i = p.size(); i-- > 0;) r = f.add(f.mul(r, x), p[i]);
    return r;
}

/// Eigenvalues in the ground field of the block-diagonal map x (a subset of
/// them; roots of local minimal polynomials of the standard basis vectors).
std::vector<Elem> eigenvalues(const Field& f, const ModuleMap& x)
{
    std::set<Elem> out;
    for (const auto& b : x.blocks) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Vec u(b.cols(), 0);
            u[j] = 1;
            auto p = local_min_poly(b, u);
            if (p.size() == 2) {
                out.insert(f.neg(p[0]));
                continue;
            }
            for (std::size_t e = 0; e < f.order(); ++e)
                if (poly_eval(f, p, static_cast<Elem>(e)) == 0) out.insert(static_cast<Elem>(e));
        }
    }
    return {out.begin(), out.end()};
}

/// lambda with x - lambda nilpotent, if there is one.
std::optional<Elem> nilpotent_shift(const Field& f, const ModuleMap& x)
{
    for (const auto& b : x.blocks) {
        if (b.rows() == 0) continue;
        Vec u(b.cols(), 0);
        u[0] = 1;
        auto p = local_min_poly(b, u);
        if (p.size() == 2) {
            Elem lambda = f.neg(p[0]);
            if (map_is_nilpotent(shifted(f, x, lambda))) return lambda;
            return std::nullopt;
        }
        for (std::size_t e = 0; e < f.order(); ++e)
            if (poly_eval(f, p, static_cast<Elem>(e)) == 0) {
                if (map_is_nilpotent(shifted(f, x, static_cast<Elem>(e)))) return static_cast<Elem>(e);
                return std::nullopt;
            }
        return std::nullopt;
    }
    return Elem{0};
}

bool splits(const ModuleMap& y) { return !map_is_iso(y) && !map_is_nilpotent(y); }

ModuleMap combination(const Field& f, const RightModule& m, const std::vector<ModuleMap>& basis, const Vec& c)
{
    ModuleMap x = zero_map(m, m);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (c[i]) x = map_add(f, x, map_scale(f, c[i], basis[i]));
    return x;
}

std::optional<ModuleMap> splitting_candidate(const Field& f, const ModuleMap& x)
{
    if (splits(x)) return x;
    for (auto lambda : eigenvalues(f, x)) {
        auto y = shifted(f, x, lambda);
        if (splits(y)) return y;
    }
    return std::nullopt;
}

std::optional<ModuleMap> find_splitting(const RightModule& m, const std::vector<ModuleMap>& e, Rng& rng, bool& exhausted)
{
    const Field& f = m.field();
    exhausted = false;
    for (const auto& x : e)
        if (auto y = splitting_candidate(f, x)) return y;
    std::uniform_int_distribution<std::size_t> pick(0, f.order() - 1);
    for (int draw = 0; draw < 50; ++draw) {
        Vec c(e.size());
        for (auto& v : c) v = static_cast<Elem>(pick(rng));
        if (auto y = splitting_candidate(f, combination(f, m, e, c))) return y;
    }
    double space = 1;
    for (std::size_t i = 0; i < e.size(); ++i) space *= static_cast<double>(f.order());
    if (space > double(1 << 20)) return std::nullopt;
    Vec c(e.size(), 0);
    const std::size_t q = f.order();
    for (std::size_t code = 0; code < static_cast<std::size_t>(space); ++code) {
        std::size_t r = code;
        for (auto& v : c) {
            v = static_cast<Elem>(r % q);
            r /= q;
        }
        auto x = combination(f, m, e, c);
        if (splits(x)) return x;
    }
    exhausted = true;
    return std::nullopt;
}

Decomposition single(const RightModule& m)
{
    return {{m}, {identity_map(m)}, {identity_map(m)}};
}

Decomposition decompose_rec(const RightModule& m, Rng& rng)
{
    if (m.is_zero()) return {};
    try {
        local_endomorphisms(m);
        return single(m);
    } catch (const Error& err) {
        if (err.kind() != ErrorKind::NonSplitEndomorphismRing) throw;
    }
    auto e = hom_basis(m, m);
    bool exhausted = false;
    auto y = find_splitting(m, e, rng, exhausted);
    if (!y) {
        if (exhausted) return single(m);  // local, residue field larger than K
        throw Error(ErrorKind::DecompositionInconclusive,
                    "no splitting endomorphism found for a module of dimension " + std::to_string(m.dim()));
    }
    ModuleMap yn;
    for (const auto& b : y->blocks) yn.blocks.push_back(fitting_power(b));
    auto ker = kernel(m, m, yn);
    auto im = image(m, m, yn);
    // projections: inverse of [incl_ker | incl_im] per vertex
    const Field& f = m.field();
    ModuleMap pk, pi;
    for (std::size_t v = 0; v < m.vdim.size(); ++v) {
        Matrix stacked = Matrix::hstack(ker.map.blocks[v], im.map.blocks[v]);
        Matrix inv = m.vdim[v] ? *inverse(stacked) : Matrix(f, 0, 0);
        const std::size_t kd = ker.map.blocks[v].cols();
        pk.blocks.push_back(inv.block(0, 0, kd, m.vdim[v]));
        pi.blocks.push_back(inv.block(kd, 0, m.vdim[v] - kd, m.vdim[v]));
    }
    Decomposition out;
    for (auto [part, incl, proj] : {std::tuple{&ker.module, &ker.map, &pk}, std::tuple{&im.module, &im.map, &pi}}) {
        auto d = decompose_rec(*part, rng);
        for (std::size_t k = 0; k < d.summands.size(); ++k) {
            out.summands.push_back(std::move(d.summands[k]));
            out.incl.push_back(compose(*incl, d.incl[k]));
            out.proj.push_back(compose(d.proj[k], *proj));
        }
    }
    return out;
}

}  // namespace

LocalEndo local_endomorphisms(const RightModule& m)
{
    const Field& f = m.field();
    if (m.is_zero()) throw Error(ErrorKind::NonSplitEndomorphismRing, "the zero module has no local endomorphism ring");
    auto e = hom_basis(m, m);
    std::size_t len = 0;
    for (auto d : m.vdim) len += d * d;
    SubspaceBasis span(f, len);
    std::vector<ModuleMap> rad;
    for (const auto& x : e) {
        auto lambda = nilpotent_shift(f, x);
        if (!lambda) throw Error(ErrorKind::NonSplitEndomorphismRing, "an endomorphism is not scalar plus nilpotent");
        auto n = shifted(f, x, *lambda);
        if (span.add(flatten(n))) rad.push_back(std::move(n));
    }
    if (rad.size() + 1 != e.size())
        throw Error(ErrorKind::NonSplitEndomorphismRing, "shifted basis does not have codimension one");
    // closed under composition, and nilpotent as an ideal
    std::vector<ModuleMap> power = rad;
    for (std::size_t step = 0; !power.empty(); ++step) {
        if (step > m.dim()) throw Error(ErrorKind::NonSplitEndomorphismRing, "radical candidate is not nilpotent");
        SubspaceBasis next(f, len);
        std::vector<ModuleMap> np;
        for (const auto& a : rad)
            for (const auto& b : power) {
                auto c = compose(a, b);
                auto fc = flatten(c);
                if (!span.contains(fc))
                    throw Error(ErrorKind::NonSplitEndomorphismRing, "radical candidate is not closed under composition");
                if (next.add(fc)) np.push_back(std::move(c));
            }
        power = std::move(np);
    }
    return {std::move(rad)};
}

bool is_indecomposable(const RightModule& m, Rng& rng)
{
    if (m.is_zero()) return false;
    try {
        local_endomorphisms(m);
        return true;
    } catch (const Error& err) {
        if (err.kind() != ErrorKind::NonSplitEndomorphismRing) throw;
    }
    bool exhausted = false;
    auto y = find_splitting(m, hom_basis(m, m), rng, exhausted);
    if (y) return false;
    if (exhausted) return true;
    throw Error(ErrorKind::DecompositionInconclusive, "could not decide indecomposability");
}

Decomposition decompose(const RightModule& m, Rng& rng) { return decompose_rec(m, rng); }

std::vector<RightModule> indecomposable_summands(const RightModule& m, Rng& rng) { return decompose(m, rng).summands; }

IsoResult iso(const RightModule& m, const RightModule& n, Rng& rng)
{
    IsoResult r;
    if (m.alg.get() != n.alg.get()) throw Error(ErrorKind::AlgebraMismatch, "iso test across algebras");
    if (m.vdim != n.vdim) return r;
    if (m.is_zero()) {
        r.iso = true;
        r.witness = zero_map(m, n);
        return r;
    }
    if (top_vector(m) != top_vector(n) || socle_vector(m) != socle_vector(n)) return r;
    auto h = hom_basis(m, n);
    if (h.size() != hom_dim(n, m) || h.empty()) return r;
    if (h.size() != hom_dim(m, m) || h.size() != hom_dim(n, n)) return r;
    const Field& f = m.field();
    for (const auto& x : h)
        if (map_is_iso(x)) {
            r.iso = true;
            r.witness = x;
            return r;
        }
    std::uniform_int_distribution<std::size_t> pick(0, f.order() - 1);
    auto combo = [&](const Vec& c) {
        ModuleMap x = zero_map(m, n);
        for (std::size_t i = 0; i < h.size(); ++i)
            if (c[i]) x = map_add(f, x, map_scale(f, c[i], h[i]));
        return x;
    };
    Vec c(h.size());
    for (int draw = 0; draw < 200; ++draw) {
        for (auto& v : c) v = static_cast<Elem>(pick(rng));
        auto x = combo(c);
        if (map_is_iso(x)) {
            r.iso = true;
            r.witness = std::move(x);
            return r;
        }
    }
    double space = 1;
    for (std::size_t i = 0; i < h.size(); ++i) space *= static_cast<double>(f.order());
    if (space > double(1 << 20)) {
        r.low_confidence = true;
        return r;
    }
    const std::size_t q = f.order();
    for (std::size_t code = 0; code < static_cast<std::size_t>(space); ++code) {
        std::size_t rem = code;
        for (auto& v : c) {
            v = static_cast<Elem>(rem % q);
            rem /= q;
        }
        auto x = combo(c);
        if (map_is_iso(x)) {
            r.iso = true;
            r.witness = std::move(x);
            return r;
        }
    }
    return r;
}

bool isomorphic(const RightModule& m, const RightModule& n, std::uint64_t seed)
{
    Rng rng(seed);
    return iso(m, n, rng).iso;
}

}  // namespace gendo
