#pragma once

#include "gendo/field.hpp"

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

namespace gendo {

using Vec = std::vector<Elem>;
using Rng = std::mt19937_64;

/// Dense matrix over a small finite field, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, std::size_t rows, std::size_t cols) : f_(std::move(f)), r_(rows), c_(cols), a_(rows * cols, 0) {}

    static Matrix identity(const Field& f, std::size_t n);
    static Matrix from_rows(const Field& f, const std::vector<std::vector<Elem>>& rows);
    /// Columns given as vectors of equal length `rows`.
    static Matrix from_columns(const Field& f, std::size_t rows, const std::vector<Vec>& cols);
    static Matrix random(const Field& f, std::size_t rows, std::size_t cols, Rng& rng);

    const Field& field() const { return f_; }
    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    bool empty() const { return r_ == 0 || c_ == 0; }

    Elem operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
    Elem& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const std::vector<Elem>& data() const { return a_; }

    Vec row(std::size_t i) const;
    Vec column(std::size_t j) const;

    Matrix transpose() const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
    Matrix select_columns(const std::vector<std::size_t>& idx) const;
    Matrix select_rows(const std::vector<std::size_t>& idx) const;

    Vec apply(const Vec& v) const;
    Matrix scaled(Elem s) const;
    /// this += s * other
    void axpy(Elem s, const Matrix& other);

    bool is_zero() const;
    bool is_identity() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    static Matrix hstack(const Matrix& a, const Matrix& b);
    static Matrix vstack(const Matrix& a, const Matrix& b);

    /// Throws FieldMismatch when an entry is not an element of the field.
    void check_entries() const;

private:
    Field f_ = Field::prime(2);
    std::size_t r_ = 0, c_ = 0;
    std::vector<Elem> a_;
};

struct Echelon {
    Matrix reduced;                   // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination with first-nonzero pivoting.
Echelon rref(Matrix m);

std::size_t rank(const Matrix& m);

/// Basis of {v : m v = 0}; exactly cols - rank vectors.
std::vector<Vec> kernel_basis(const Matrix& m);

/// One solution of m x = b, or nullopt when the system is inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// One solution X of a X = b (matrix right-hand side).
std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);

/// A maximal independent subset of the columns, as a matrix.
Matrix column_basis(const Matrix& m);

/// Extends the independent columns of `sub` (n x k) to a basis of F^n;
/// returns only the added columns.
Matrix complement_columns(const Matrix& sub, std::size_t n);

/// m^N with N = rows(m) (Fitting power).
Matrix fitting_power(const Matrix& m);
bool is_nilpotent(const Matrix& m);

Vec vec_add(const Field& f, const Vec& a, const Vec& b);
Vec vec_scale(const Field& f, Elem s, const Vec& a);
bool vec_is_zero(const Vec& v);

/// Incrementally maintained row-echelon basis of a subspace of F^n.
class SubspaceBasis {
public:
    SubspaceBasis(Field f, std::size_t n) : f_(std::move(f)), n_(n) {}

    /// Reduces v by the basis; returns the remainder.
    Vec reduce(Vec v) const;
    bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }
    /// Adds v if independent; returns whether it was added.
    bool add(const Vec& v);
    std::size_t dim() const { return rows_.size(); }
    std::size_t ambient() const { return n_; }
    const std::vector<Vec>& rows() const { return rows_; }

private:
    Field f_;
    std::size_t n_;
    std::vector<Vec> rows_;           // each row has leading 1 at pivots_[k]
    std::vector<std::size_t> pivots_;
};

/// Coordinates with respect to a fixed list of independent vectors, via an
/// invertible square subsystem on pivot positions.
class Coordinates {
public:
    Coordinates() = default;
    Coordinates(const Field& f, const std::vector<Vec>& basis, std::size_t n);
    /// Columns of `basis` as an n x k matrix.
    Coordinates(const Matrix& basis);

    std::size_t size() const { return k_; }
    /// Assumes v lies in the span.
    Vec operator()(const Vec& v) const;
    /// Coordinates, or nullopt when v is outside the span.
    std::optional<Vec> try_coords(const Vec& v) const;
    /// X with basis * X = Y for every column of Y in the span.
    Matrix of_columns(const Matrix& y) const;

private:
    Field f_ = Field::prime(2);
    std::size_t n_ = 0, k_ = 0;
    Matrix basis_;
    std::vector<std::size_t> rows_;
    Matrix inv_;
};

}  // namespace gendo
