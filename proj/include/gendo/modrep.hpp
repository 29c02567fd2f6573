#pragma once

#include "gendo/algebra.hpp"
#include "gendo/homdim.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace gendo {

/// A right module in an idempotent-adapted basis: M = (+)_v M e_v, block v of
/// dimension vdim[v]. For a basis element b with vertex pair (s, t),
/// act[b] is the dim(M_t) x dim(M_s) matrix of m -> m.b (column vectors),
/// so the action of b_i b_j is act[b_j] * act[b_i].
struct RightModule {
    AlgebraPtr alg;
    std::vector<std::size_t> vdim;
    std::vector<Matrix> act;

    std::size_t dim() const;
    std::size_t offset(std::size_t v) const;
    bool is_zero() const { return dim() == 0; }
    const Field& field() const { return alg->field(); }
    /// dim x dim action matrix of basis element b in the adapted basis.
    Matrix full_action(std::size_t b) const;
    /// Action of an arbitrary homogeneous element x in e_s A e_t.
    Matrix element_action(const Vec& x, std::size_t s, std::size_t t) const;

    static RightModule zero(const AlgebraPtr& a);
};

/// Builds a module from one dim x dim matrix per basis element (column
/// convention: v.b = act[b] v). Throws InvalidModule on a failed axiom.
RightModule module_from_actions(const AlgebraPtr& a, std::size_t dim, const std::vector<Matrix>& actions);

/// Verifies the axioms of an adapted module; throws InvalidModule.
void check_module(const RightModule& m);

/// Block-diagonal intertwiner; blocks[v] is dim(N_v) x dim(M_v).
struct ModuleMap {
    std::vector<Matrix> blocks;
};

ModuleMap zero_map(const RightModule& m, const RightModule& n);
ModuleMap identity_map(const RightModule& m);
/// g o f
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);
ModuleMap map_add(const Field& f, const ModuleMap& a, const ModuleMap& b);
ModuleMap map_scale(const Field& f, Elem s, const ModuleMap& a);
bool map_is_zero(const ModuleMap& f);
bool map_is_iso(const ModuleMap& f);
bool map_is_injective(const ModuleMap& f);
bool map_is_surjective(const ModuleMap& f);
std::size_t map_rank(const ModuleMap& f);
Vec flatten(const ModuleMap& f);
ModuleMap unflatten(const RightModule& m, const RightModule& n, const Vec& v);
bool is_homomorphism(const RightModule& m, const RightModule& n, const ModuleMap& f);
/// The matrix of f in the adapted bases (dim n x dim m).
Matrix full_matrix(const RightModule& m, const RightModule& n, const ModuleMap& f);

// ------------------------------------------------------------ constructions

RightModule projective_module(const AlgebraPtr& a, std::size_t v);
std::vector<RightModule> projectives(const AlgebraPtr& a);
RightModule regular_module(const AlgebraPtr& a);
RightModule simple_module(const AlgebraPtr& a, std::size_t v);
/// D(A e_v), the injective hull of the simple S_v.
RightModule injective_module(const AlgebraPtr& a, std::size_t v);
std::vector<RightModule> injectives(const AlgebraPtr& a);

struct SumData {
    RightModule module;
    std::vector<ModuleMap> incl;
    std::vector<ModuleMap> proj;
};
SumData direct_sum_data(const AlgebraPtr& a, const std::vector<RightModule>& parts);
RightModule direct_sum(const AlgebraPtr& a, const std::vector<RightModule>& parts);

/// A module with its structure map: an inclusion for kernels and
/// submodules, a projection for cokernels and quotients.
struct SubQuot {
    RightModule module;
    ModuleMap map;
};
SubQuot kernel(const RightModule& m, const RightModule& n, const ModuleMap& f);
SubQuot cokernel(const RightModule& m, const RightModule& n, const ModuleMap& f);
SubQuot image(const RightModule& m, const RightModule& n, const ModuleMap& f);
/// Submodule generated by the given vectors (one list per vertex, vectors
/// of length vdim[v]).
SubQuot submodule(const RightModule& m, const std::vector<std::vector<Vec>>& gens);
SubQuot quotient(const RightModule& m, const SubQuot& sub);

// ------------------------------------------------------------ Hom

std::vector<ModuleMap> hom_basis(const RightModule& m, const RightModule& n);
std::size_t hom_dim(const RightModule& m, const RightModule& n);
/// Maps M -> N factoring through a projective, as a spanning set.
std::vector<ModuleMap> projective_maps(const RightModule& m, const RightModule& n);
std::size_t stable_hom_dim(const RightModule& m, const RightModule& n);

/// Radical, top and socle with their structure maps.
struct Structure {
    SubQuot radical;
    SubQuot top;
    SubQuot socle;
};
Structure structure(const RightModule& m);
/// Multiplicity of each simple in top / socle.
std::vector<std::size_t> top_vector(const RightModule& m);
std::vector<std::size_t> socle_vector(const RightModule& m);

struct Cover {
    RightModule module;  // projective or injective
    ModuleMap map;       // P -> M, or M -> I
    std::vector<std::size_t> vertices;
};
Cover projective_cover(const RightModule& m);
Cover injective_hull(const RightModule& m);

RightModule syzygy(const RightModule& m, std::size_t k = 1);
RightModule cosyzygy(const RightModule& m, std::size_t k = 1);
bool is_projective(const RightModule& m);
bool is_injective(const RightModule& m);

/// dim Ext^i(M, N), from the minimal projective resolution of M.
std::size_t ext_dim(const RightModule& m, const RightModule& n, std::size_t i);
/// dim Ext^i(M, N) = dim Ext^i_{A^op}(DN, DM), i.e. via injective coresolutions of N.
std::size_t ext_dim_dual(const RightModule& m, const RightModule& n, std::size_t i);

// ------------------------------------------------------------ functors

/// D = Hom_K(-, K); the result lives over opposite(alg).
RightModule dual(const RightModule& m);
/// D(f) : D(N) -> D(M) for f : M -> N.
ModuleMap dual_map(const ModuleMap& f);
/// Hom_A(M, A) as a right module over the opposite algebra.
RightModule hom_to_regular(const RightModule& m);
/// h -> h o f, from Hom(N, A) to Hom(M, A), for f : M -> N.
ModuleMap hom_to_regular_map(const RightModule& m, const RightModule& n, const ModuleMap& f);
RightModule nu(const RightModule& m);
RightModule nu_inv(const RightModule& m);
/// Transpose from a minimal projective presentation; lives over the opposite.
RightModule transpose_tr(const RightModule& m);
RightModule tau(const RightModule& m);
RightModule tau_inv(const RightModule& m);
/// tau as the kernel of nu(P_1) -> nu(P_0); independent cross-check of D Tr.
RightModule tau_via_nu(const RightModule& m);

// ------------------------------------------------------------ iso, decompose

struct IsoResult {
    bool iso = false;
    bool low_confidence = false;
    std::optional<ModuleMap> witness;
};
/// Prefilters, basis elements, random combinations, then exhaustive search
/// when the field and Hom space are small.
IsoResult iso(const RightModule& m, const RightModule& n, Rng& rng);
bool isomorphic(const RightModule& m, const RightModule& n, std::uint64_t seed = 7);

struct Decomposition {
    std::vector<RightModule> summands;
    std::vector<ModuleMap> incl;
    std::vector<ModuleMap> proj;
};
/// Throws DecompositionInconclusive when Fitting splitting finds no
/// idempotent and exhaustive search is infeasible.
Decomposition decompose(const RightModule& m, Rng& rng);
std::vector<RightModule> indecomposable_summands(const RightModule& m, Rng& rng);

/// End(M) for indecomposable M with End/rad = K: basis = id followed by a
/// basis of the radical. Throws NonSplitEndomorphismRing otherwise.
struct LocalEndo {
    std::vector<ModuleMap> radical;
};
LocalEndo local_endomorphisms(const RightModule& m);
/// True when End(M) is local (checked, deterministic when split).
bool is_indecomposable(const RightModule& m, Rng& rng);

// ------------------------------------------------------------ approximations

struct Approximation {
    RightModule source;
    ModuleMap map;
    std::vector<std::size_t> multiplicity;  // copies of each generator
};
/// Minimal right add(gens)-approximation; gens must be pairwise
/// non-isomorphic indecomposables.
Approximation min_right_approx(const std::vector<RightModule>& gens, const RightModule& x);
/// Whether every psi with f psi = 0 is nilpotent, i.e. f is right minimal.
bool is_right_minimal(const RightModule& source, const RightModule& target, const ModuleMap& f);

// ------------------------------------------------------------ endomorphism algebras

/// B = End_A(X) for X = (+) summands (pairwise non-isomorphic
/// indecomposables). Vertex i of B is summand i; the basis element f in
/// Hom(X_t, X_s) has vertex pair (s, t), and products are compositions.
struct EndoAlgebra {
    AlgebraPtr algebra;
    std::vector<RightModule> summands;
    /// basis index ranges per vertex pair: hom[s][t] lists (basis index, map)
    std::vector<std::vector<std::vector<std::pair<std::size_t, ModuleMap>>>> hom;

    /// Hom_A(X, N) as a right B-module.
    RightModule functor(const RightModule& n) const;
    /// Hom_A(X, f) for f : N -> N'.
    ModuleMap functor_map(const RightModule& n, const RightModule& n2, const ModuleMap& f) const;
};
EndoAlgebra endo_algebra(const std::vector<RightModule>& summands, const std::string& name = "");

}  // namespace gendo
