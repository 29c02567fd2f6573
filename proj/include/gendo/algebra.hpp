#pragma once

#include "gendo/matrix.hpp"

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gendo {

struct KupischSeries;

/// Raw structure-constant presentation of a finite-dimensional algebra.
/// `mult[i][j]` is the coordinate vector of b_i * b_j.
struct AlgebraPresentation {
    Field field = Field::prime(2);
    std::vector<std::string> basis_labels;
    std::vector<std::vector<Vec>> mult;
    Vec unit;
    std::vector<Vec> idempotents;
    /// Must span the Jacobson radical.
    std::vector<Vec> radical_generators;
    std::string name;
};

class BasedAlgebra;
using AlgebraPtr = std::shared_ptr<const BasedAlgebra>;

/// A validated elementary algebra whose basis is homogeneous: every basis
/// element b satisfies b = e_s b e_t for exactly one pair of vertices.
/// Right modules and paths read left to right: b_i b_j is "b_i then b_j".
class BasedAlgebra {
public:
    struct Term {
        std::size_t index;
        Elem coef;
    };

    const AlgebraPresentation& presentation() const { return pres_; }
    const Field& field() const { return pres_.field; }
    const std::string& name() const { return pres_.name; }
    std::size_t dim() const { return pres_.basis_labels.size(); }
    std::size_t num_vertices() const { return pres_.idempotents.size(); }

    /// Vertex pair (s, t) with b = e_s b e_t.
    std::size_t source(std::size_t b) const { return src_[b]; }
    std::size_t target(std::size_t b) const { return tgt_[b]; }

    const std::vector<Term>& product(std::size_t i, std::size_t j) const { return sparse_[i * dim() + j]; }
    Vec multiply(const Vec& x, const Vec& y) const;

    /// Homogeneous lifts of a basis of rad/rad^2: they generate the radical.
    const std::vector<Vec>& arrows() const { return arrows_; }
    std::size_t arrow_source(std::size_t k) const { return arrow_src_[k]; }
    std::size_t arrow_target(std::size_t k) const { return arrow_tgt_[k]; }

    /// Basis of the radical (row-reduced).
    const std::vector<Vec>& radical_basis() const { return radical_; }
    /// Basis element indices b with source(b)=s and target(b)=t, ascending.
    const std::vector<std::size_t>& piece(std::size_t s, std::size_t t) const { return pieces_[s * num_vertices() + t]; }

    bool connected() const { return connected_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

    /// Nilpotency index of the radical (Loewy length of A_A).
    std::size_t loewy_length() const { return loewy_; }

private:
    friend AlgebraPtr validate(AlgebraPresentation p);
    friend AlgebraPtr opposite(const AlgebraPtr& a);

    AlgebraPresentation pres_;
    std::vector<std::vector<Term>> sparse_;
    std::vector<std::size_t> src_, tgt_;
    std::vector<Vec> arrows_;
    std::vector<std::size_t> arrow_src_, arrow_tgt_;
    std::vector<Vec> radical_;
    std::vector<std::vector<std::size_t>> pieces_;
    bool connected_ = true;
    std::size_t loewy_ = 1;
    std::vector<std::string> warnings_;

    mutable std::mutex op_mutex_;
    mutable std::shared_ptr<const BasedAlgebra> op_strong_;
    mutable std::weak_ptr<const BasedAlgebra> op_weak_;
};

/// Checks every axiom and builds the caches. Errors name witnessing basis
/// indices; a disconnected or semisimple algebra only yields warnings.
AlgebraPtr validate(AlgebraPresentation p);

/// Structure constants transposed; cached, so opposite(opposite(a)) == a.
AlgebraPtr opposite(const AlgebraPtr& a);

/// (i, j) -> dim e_i A e_j.
std::vector<std::vector<std::size_t>> cartan_matrix(const BasedAlgebra& a);

struct SymmetryVerdict {
    enum class Status { Symmetric, NotSymmetric, ProbablyNotSymmetric };
    Status status = Status::NotSymmetric;
    std::optional<Vec> form;   // the linear form lambda when symmetric
    std::size_t central_forms_dim = 0;
    bool symmetric() const { return status == Status::Symmetric; }
};

/// Searches the space of forms with lambda(ab) = lambda(ba) for a
/// nondegenerate one.
SymmetryVerdict is_symmetric(const BasedAlgebra& a, std::uint64_t seed = 1);

struct CornerAlgebra {
    AlgebraPtr algebra;
    std::vector<std::size_t> vertices;    // selected vertices of the big algebra
    std::vector<std::size_t> basis_map;   // corner basis index -> big basis index
};

/// e A e for e the sum of the selected primitive idempotents.
CornerAlgebra corner_algebra(const BasedAlgebra& a, const std::vector<std::size_t>& vertices);

// ---------------------------------------------------------------- quivers

struct QuiverArrow {
    std::size_t source;
    std::size_t target;
    std::string label;
};

struct PathTerm {
    Elem coef;
    std::vector<std::size_t> arrows;  // arrow indices, composed left to right
};

using Relation = std::vector<PathTerm>;

struct QuiverPresentation {
    Field field = Field::prime(2);
    std::vector<std::string> vertices;
    std::vector<QuiverArrow> arrows;
    std::vector<Relation> relations;
    std::size_t step_budget = 10000;
    std::size_t max_path_length = 64;
    std::string name;
};

/// Bound quiver algebra kQ/I. Relations are completed to a confluent
/// rewriting system (length-then-lex order on arrow labels, largest term
/// rewritten) and the normal-form paths become the basis.
AlgebraPresentation from_quiver(const QuiverPresentation& q);

/// The Nakayama algebra of a Kupisch series, basis p(i,l) = path of length
/// l starting at vertex i, 0 <= l < c_i.
AlgebraPtr from_kupisch(const KupischSeries& series, const Field& field);

}  // namespace gendo
