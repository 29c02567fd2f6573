#pragma once

#include "gendo/dims.hpp"
#include "gendo/modrep.hpp"
#include "gendo/nakayama.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gendo {

// ------------------------------------------------------------ algebra level

/// domdim of the regular module.
HomologicalDim algebra_domdim(Resolver& r);
/// codomdim of D(A) = domdim of A^op.
HomologicalDim algebra_codomdim(Resolver& r);

struct GorensteinDims {
    HomologicalDim right;  // injdim A_A
    HomologicalDim left;   // injdim of A over the opposite
    bool gorenstein() const { return right.is_finite() && left.is_finite() && right.value == left.value; }
};
GorensteinDims gorenstein_dims(Resolver& r);

// ------------------------------------------------------------ Gorenstein tests

struct GpVerdict {
    enum class Kind { Yes, No, Unknown };
    Kind kind = Kind::Unknown;
    /// Yes: vanishing certificates for Ext(M, A) and Ext(Tr M, A).
    std::optional<PeriodicityCertificate> certificate, tr_certificate;
    /// No: the failing degree; Unknown: the cutoff.
    std::size_t degree = 0;
    /// No: "Ext(M,A)" or "Ext(TrM,A)".
    std::string condition;

    bool yes() const { return kind == Kind::Yes; }
    std::string to_string() const;
};

GpVerdict gp_test(Resolver& r, const RightModule& m);
/// gp_test of D(m) over the opposite.
GpVerdict gi_test(Resolver& r, const RightModule& m);
/// Yes iff both are Yes; otherwise the first non-Yes verdict.
GpVerdict gpi_test(Resolver& r, const RightModule& m);

// ------------------------------------------------------------ gendo-symmetric

/// inf{i >= 1 : Ext^i(M, M) != 0} + 1 over a symmetric algebra, M the sum of
/// the summands. Throws NotSymmetric, NotGenerator.
HomologicalDim mueller_domdim(Resolver& base, const std::vector<RightModule>& summands);

struct ChenKoenig {
    std::size_t z = 0;       // domdim(B) = z + 2
    HomologicalDim lhs;      // injdim B_B
    HomologicalDim rhs;      // z + 2 + M-resdim(tau Omega^z M (+) DA)
    HomologicalDim lhs_left; // injdim of B over the opposite
    HomologicalDim rhs_left; // z + 2 + M-coresdim(tau^-1 Omega^-z M (+) A)
};
/// endo must be the resolver over endo_algebra(summands). Throws
/// NotApplicable when domdim(B) < 2.
ChenKoenig chen_koenig_injdim(Resolver& base, const std::vector<RightModule>& summands, Resolver& endo);

/// domdim >= 2 and the corner at the projective-injective vertices is symmetric.
bool gendo_symmetric_check(Resolver& r);

/// Vertices v with e_v A injective.
std::vector<std::size_t> projective_injective_vertices(const AlgebraPtr& a);

/// Me as a module over the corner algebra.
RightModule restrict_to_corner(const RightModule& m, const CornerAlgebra& c);

struct NearlyGorenstein {
    bool ok = true;
    std::string witness;  // first disagreement
};
/// Ext-perpendicular categories against the Ringel GP / GI sets, over the
/// bridged algebra.
NearlyGorenstein nearly_gorenstein_check_nak(const NakAlgebra& a, const Field& f, const DimOptions& o = {});

// ------------------------------------------------------------ AR sequences

/// 0 -> l -f-> e -g-> m -> 0
struct ShortExact {
    RightModule l, e, m;
    ModuleMap f, g;
};

/// The almost split sequence ending in m, built as the pushout of
/// 0 -> Omega m -> P -> m -> 0 along a socle element of Ext^1(m, tau m).
/// nullopt for projective or zero m. m must be indecomposable.
std::optional<ShortExact> almost_split_sequence(const RightModule& m);

struct ArCheck {
    bool ok = false;
    bool pool_certified = false;  // false: PoolIncomplete
    std::string reason;
};
/// Throws InvalidModule when the sequence is not exact, m is not an
/// indecomposable nonprojective, or l is not tau m.
ArCheck almost_split_verify(const ShortExact& s, const std::vector<RightModule>& pool, bool pool_certified,
                            std::uint64_t seed = 7);

struct IndecCatalog {
    std::vector<RightModule> modules;
    /// the closure finished: every indecomposable is listed
    bool complete = false;
};
/// Closes the projectives and seeds under tau, tau^-1, AR middle terms,
/// radicals of projectives and injectives modulo socle. Stops at limit.
IndecCatalog ar_closure(const AlgebraPtr& a, const std::vector<RightModule>& seeds, std::size_t limit,
                        std::uint64_t seed = 7);

// ------------------------------------------------------------ fixtures

/// A/(ux + vy)A over commutative_local.
RightModule local_cyclic_quotient(const AlgebraPtr& a, Elem u, Elem v);

struct Fixture {
    std::string name;
    /// Nakayama fixtures carry their series; endo fixtures a base algebra
    /// and generator summands.
    std::optional<KupischSeries> series;
    AlgebraPtr base;
    std::vector<RightModule> summands;
    /// extra base modules seeding the pool
    std::vector<RightModule> probes;
    bool base_symmetric = false;
    /// base representation-finite, so the endo algebra is CM-finite
    bool cm_finite = false;
    std::string note;
};

std::vector<std::string> fixture_names();
/// Throws NotApplicable for unknown names. "kupisch-3s:<s>" gives the
/// series (3s+1, 3s+2, 3s+2).
Fixture make_fixture(const std::string& name, const DimOptions& o = {});

/// An endo fixture with its resolvers and module pools.
struct GendoSetup {
    const Fixture* fixture = nullptr;
    EndoAlgebra endo;
    std::unique_ptr<Resolver> base_r, endo_r;
    IndecCatalog base_pool;
    /// Hom-images of the base pool, projectives and injectives of B, and
    /// their syzygies and cosyzygies (indecomposable, deduplicated).
    std::vector<RightModule> endo_pool;
};
/// pool_limit is capped at 20 when the base is not known to be
/// representation-finite.
std::unique_ptr<GendoSetup> make_gendo(const Fixture& f, const DimOptions& o = {}, std::size_t pool_limit = 60);

/// sup of finite domdim over Hom-images of the base pool (every module of
/// domdim >= 2 is one); certified when the base pool is complete.
HomologicalDim endo_fdomdim(GendoSetup& g);

// ------------------------------------------------------------ theorem suite

struct CheckResult {
    enum class Status { Pass, Fail, Skipped };
    std::string id;      // "a" .. "k"
    std::string title;
    Status status = Status::Skipped;
    std::string detail;  // witness or reason
};
std::string to_string(CheckResult::Status s);

std::vector<CheckResult> theorem_suite(const Fixture& f, const DimOptions& o = {});

// ------------------------------------------------------------ property suites

struct PropertyResult {
    std::string name;
    std::size_t instances = 0;
    std::size_t failures = 0;
    std::string witness;  // first failure
};
/// Symmetric-algebra identities (tau, stable Hom against Ext) up to
/// max_degree, the simple-top/socle criterion for Ext against minimal
/// resolutions up to degree 5, DD = id, and mueller_domdim against the
/// endomorphism algebra. Runs over the indecomposables of the fixture's base
/// (the Nakayama list or the AR closure); at most sample modules per pair loop.
std::vector<PropertyResult> property_suite(const Fixture& f, std::size_t max_degree = 6, std::size_t sample = 12,
                                           const DimOptions& o = {});

}  // namespace gendo
