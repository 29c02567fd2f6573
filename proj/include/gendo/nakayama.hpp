#pragma once

#include "gendo/homdim.hpp"
#include "gendo/kupisch.hpp"
#include "gendo/modrep.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace gendo {

/// e_i A / e_i J^k; k = 0 is the zero module.
struct NakModule {
    std::size_t i = 0;
    std::size_t k = 0;

    bool is_zero() const { return k == 0; }
    std::string to_string() const;
    friend bool operator==(const NakModule& a, const NakModule& b) { return a.i == b.i && a.k == b.k; }
    friend bool operator!=(const NakModule& a, const NakModule& b) { return !(a == b); }
    friend bool operator<(const NakModule& a, const NakModule& b) { return a.i != b.i ? a.i < b.i : a.k < b.k; }
};

/// [x, y] = D(J^y e_x): the injective D(Ae_x) modulo its bottom y factors.
struct InjCoord {
    std::size_t x = 0;
    std::size_t y = 0;
    friend bool operator==(const InjCoord& a, const InjCoord& b) { return a.x == b.x && a.y == b.y; }
};

class NakAlgebra {
public:
    explicit NakAlgebra(KupischSeries s);

    const KupischSeries& series() const { return s_; }
    std::size_t n() const { return s_.n(); }
    std::size_t c(long long i) const { return s_.c[s_.wrap(i)]; }
    /// Length of the injective D(Ae_x).
    std::size_t d(long long x) const { return d_[s_.wrap(x)]; }
    const std::vector<std::size_t>& injective_lengths() const { return d_; }
    bool cyclic() const { return s_.cyclic; }
    bool selfinjective() const;
    bool symmetric() const;

    std::size_t wrap(long long i) const { return s_.wrap(i); }
    /// Every indecomposable, ordered by (i, k).
    std::vector<NakModule> indecomposables() const;

    std::size_t top(const NakModule& m) const { return m.i; }
    std::size_t socle(const NakModule& m) const { return wrap(static_cast<long long>(m.i + m.k) - 1); }
    bool is_projective(const NakModule& m) const { return m.k == c(m.i); }
    bool is_injective(const NakModule& m) const { return m.k == d(socle(m)); }
    /// D(Ae_x) is projective.
    bool injective_is_projective(std::size_t x) const;
    /// e_i A is injective.
    bool projective_is_injective(std::size_t i) const;

    NakModule projective(std::size_t i) const { return {i, c(i)}; }
    NakModule injective(std::size_t x) const;
    NakModule simple(std::size_t i) const { return {i, 1}; }

    NakModule from_inj(const InjCoord& ic) const;
    /// [x, y] with D(Ae_x) the shortest injective having m as a quotient, if any.
    std::optional<InjCoord> to_inj(const NakModule& m) const;

    NakModule syzygy(const NakModule& m) const;
    NakModule cosyzygy(const NakModule& m) const;
    /// [x, y] -> [x - y, d_x - y]
    std::optional<InjCoord> cosyzygy_inj(const InjCoord& ic) const;
    NakModule tau(const NakModule& m) const;
    NakModule tau_inv(const NakModule& m) const;

private:
    KupischSeries s_;
    std::vector<std::size_t> d_;
};

struct NakDims {
    HomologicalDim projdim, injdim, domdim, codomdim;
};
NakDims dims_nak(const NakAlgebra& a, const NakModule& m);
HomologicalDim projdim_nak(const NakAlgebra& a, const NakModule& m);
HomologicalDim injdim_nak(const NakAlgebra& a, const NakModule& m);
HomologicalDim domdim_nak(const NakAlgebra& a, const NakModule& m);
HomologicalDim codomdim_nak(const NakAlgebra& a, const NakModule& m);

struct ResolutionQuiver {
    std::vector<std::size_t> successor;
    std::set<std::size_t> black;
    std::set<std::size_t> cyclically_black;
};
/// Throws NotApplicable for selfinjective or linear algebras.
ResolutionQuiver resolution_quiver(const NakAlgebra& a);

/// Projectives plus the nonprojectives whose top and top of the first
/// syzygy are cyclically black. Selfinjective: everything.
std::set<NakModule> gp_indecs(const NakAlgebra& a);
/// Injectives plus tau of the nonprojective Gorenstein projectives.
std::set<NakModule> gi_indecs(const NakAlgebra& a);
std::set<NakModule> gpi_indecs(const NakAlgebra& a);
/// Nonprojective Gorenstein projectives and their projective covers.
std::set<NakModule> gorenstein_core(const NakAlgebra& a);

struct NakInvariants {
    HomologicalDim domdim, gordim_right, gordim_left, fdomdim;
    bool gorenstein_dominant = false;
    bool cm_finite = true;
};
NakInvariants algebra_invariants_nak(const NakAlgebra& a);

/// The bridge to the generic engine: e_i A / e_i J^k over from_kupisch.
RightModule to_module(const AlgebraPtr& alg, const NakAlgebra& a, const NakModule& m);

}  // namespace gendo
