#include "gendo/invariants.hpp"

#include "gendo/error.hpp"

namespace gendo {

HomologicalDim algebra_domdim(Resolver& r) { return r.domdim(regular_module(r.algebra())); }

HomologicalDim algebra_codomdim(Resolver& r) { return r.codomdim(direct_sum(r.algebra(), injectives(r.algebra()))); }

GorensteinDims gorenstein_dims(Resolver& r)
{
    GorensteinDims g;
    g.right = r.injdim(regular_module(r.algebra()));
    g.left = r.dual_side().injdim(regular_module(r.dual_side().algebra()));
    return g;
}

std::string GpVerdict::to_string() const
{
    switch (kind) {
    case Kind::Yes: return "yes";
    case Kind::No: return "no (" + condition + " != 0 in degree " + std::to_string(degree) + ")";
    case Kind::Unknown: return "unknown (cutoff " + std::to_string(degree) + ")";
    }
    return "";
}

namespace {

/// Folds one vanishing computation into the verdict; false when decided.
bool absorb(GpVerdict& v, const HomologicalDim& d, const char* what, std::size_t cutoff,
            std::optional<PeriodicityCertificate>& slot)
{
    if (d.is_finite()) {
        v.kind = GpVerdict::Kind::No;
        v.degree = d.value;
        v.condition = what;
        return false;
    }
    if (d.kind == HomologicalDim::Kind::AtLeast) {
        v.kind = GpVerdict::Kind::Unknown;
        v.degree = cutoff;
        v.condition = what;
        return false;
    }
    slot = d.certificate;
    return true;
}

}  // namespace

GpVerdict gp_test(Resolver& r, const RightModule& m)
{
    GpVerdict v;
    const std::size_t cutoff = r.options().cutoff;
    if (!absorb(v, r.perp_regular(m), "Ext(M,A)", cutoff, v.certificate)) return v;
    auto tr = transpose_tr(m);
    if (!tr.is_zero() && !absorb(v, r.dual_side().perp_regular(tr), "Ext(TrM,A)", cutoff, v.tr_certificate))
        return v;
    v.kind = GpVerdict::Kind::Yes;
    return v;
}

GpVerdict gi_test(Resolver& r, const RightModule& m) { return gp_test(r.dual_side(), dual(m)); }

GpVerdict gpi_test(Resolver& r, const RightModule& m)
{
    auto p = gp_test(r, m);
    if (!p.yes()) return p;
    auto i = gi_test(r, m);
    if (!i.yes()) return i;
    return p;
}

std::vector<std::size_t> projective_injective_vertices(const AlgebraPtr& a)
{
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < a->num_vertices(); ++v)
        if (is_injective(projective_module(a, v))) out.push_back(v);
    return out;
}

HomologicalDim mueller_domdim(Resolver& base, const std::vector<RightModule>& summands)
{
    const auto& a = base.algebra();
    if (!is_symmetric(*a).symmetric()) throw Error(ErrorKind::NotSymmetric, "base algebra is not symmetric");
    for (std::size_t v = 0; v < a->num_vertices(); ++v) {
        auto p = projective_module(a, v);
        bool found = false;
        for (const auto& s : summands)
            if (s.dim() == p.dim() && isomorphic(s, p, base.options().seed)) found = true;
        if (!found)
            throw Error(ErrorKind::NotGenerator, "projective at vertex " + std::to_string(v) + " is missing",
                        {(long long)v});
    }
    auto m = direct_sum(a, summands);
    return dim_plus(base.ext_nonvanishing(m, m), 1);
}

ChenKoenig chen_koenig_injdim(Resolver& base, const std::vector<RightModule>& summands, Resolver& endo)
{
    auto d = algebra_domdim(endo);
    if (!d.is_finite() || d.value < 2)
        throw Error(ErrorKind::NotApplicable, "endomorphism algebra has dominant dimension " + d.to_string());
    ChenKoenig ck;
    ck.z = d.value - 2;
    const auto& a = base.algebra();
    auto m = direct_sum(a, summands);
    auto om = ck.z == 0 ? m : syzygy(m, ck.z);
    auto x = direct_sum(a, {tau(om), direct_sum(a, injectives(a))});
    ck.rhs = dim_plus(base.resdim(summands, x), ck.z + 2);
    ck.lhs = endo.injdim(regular_module(endo.algebra()));

    auto co = ck.z == 0 ? m : cosyzygy(m, ck.z);
    auto y = direct_sum(a, {tau_inv(co), regular_module(a)});
    std::vector<RightModule> dual_gens;
    for (const auto& s : summands) dual_gens.push_back(dual(s));
    ck.rhs_left = dim_plus(base.dual_side().resdim(dual_gens, dual(y)), ck.z + 2);
    ck.lhs_left = endo.dual_side().injdim(regular_module(endo.dual_side().algebra()));
    return ck;
}

bool gendo_symmetric_check(Resolver& r)
{
    auto d = algebra_domdim(r);
    if (d.is_finite() && d.value < 2) return false;
    auto v = projective_injective_vertices(r.algebra());
    if (v.empty()) return false;
    auto c = corner_algebra(*r.algebra(), v);
    return is_symmetric(*c.algebra).symmetric();
}

RightModule restrict_to_corner(const RightModule& m, const CornerAlgebra& c)
{
    RightModule out;
    out.alg = c.algebra;
    for (auto v : c.vertices) out.vdim.push_back(m.vdim[v]);
    for (auto b : c.basis_map) out.act.push_back(m.act[b]);
    check_module(out);
    return out;
}

NearlyGorenstein nearly_gorenstein_check_nak(const NakAlgebra& a, const Field& f, const DimOptions& o)
{
    NearlyGorenstein out;
    auto alg = from_kupisch(a.series(), f);
    Resolver r(alg, o);
    auto gp = gp_indecs(a);
    auto gi = gi_indecs(a);
    for (auto m : a.indecomposables()) {
        auto x = to_module(alg, a, m);
        auto p = r.perp_regular(x);
        auto q = r.perp_dual_regular(x);
        if (!p.certified() || !q.certified()) {
            out.ok = false;
            out.witness = m.to_string() + ": Ext vanishing undecided at cutoff " + std::to_string(o.cutoff);
            return out;
        }
        if (p.is_infinite() != (gp.count(m) > 0)) {
            out.ok = false;
            out.witness = m.to_string() + (p.is_infinite() ? " lies in perp(A) but is not GP" : " is GP but not in perp(A)");
            return out;
        }
        if (q.is_infinite() != (gi.count(m) > 0)) {
            out.ok = false;
            out.witness = m.to_string() + (q.is_infinite() ? " lies in D(A)perp but is not GI" : " is GI but not in D(A)perp");
            return out;
        }
    }
    return out;
}

}  // namespace gendo
