#include "gendo/matrix.hpp"

#include "gendo/error.hpp"

namespace gendo {

namespace {

void require_same(const Matrix& a, const Matrix& b)
{
    if (a.field() != b.field()) throw Error(ErrorKind::FieldMismatch, "matrices over different fields");
}

}  // namespace

Matrix Matrix::identity(const Field& f, std::size_t n)
{
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<std::vector<Elem>>& rows)
{
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    Matrix m(f, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw Error(ErrorKind::DimensionMismatch, "ragged rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    m.check_entries();
    return m;
}

Matrix Matrix::from_columns(const Field& f, std::size_t rows, const std::vector<Vec>& cols)
{
    Matrix m(f, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw Error(ErrorKind::DimensionMismatch, "column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Matrix Matrix::random(const Field& f, std::size_t rows, std::size_t cols, Rng& rng)
{
    Matrix m(f, rows, cols);
    std::uniform_int_distribution<Elem> d(0, f.order() - 1);
    for (auto& x : m.a_) x = d(rng);
    return m;
}

Vec Matrix::row(std::size_t i) const
{
    return Vec(a_.begin() + static_cast<std::ptrdiff_t>(i * c_), a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * c_));
}

Vec Matrix::column(std::size_t j) const
{
    Vec v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
}

Matrix Matrix::transpose() const
{
    Matrix t(f_, c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    Matrix b(f_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b)
{
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& idx) const
{
    Matrix m(f_, r_, idx.size());
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
    return m;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const
{
    Matrix m(f_, idx.size(), c_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < c_; ++j) m(i, j) = (*this)(idx[i], j);
    return m;
}

Vec Matrix::apply(const Vec& v) const
{
    if (v.size() != c_) throw Error(ErrorKind::DimensionMismatch, "apply: vector length");
    Vec out(r_, 0);
    for (std::size_t i = 0; i < r_; ++i) {
        Elem s = 0;
        for (std::size_t j = 0; j < c_; ++j) {
            Elem x = a_[i * c_ + j];
            if (x && v[j]) s = f_.add(s, f_.mul(x, v[j]));
        }
        out[i] = s;
    }
    return out;
}

Matrix Matrix::scaled(Elem s) const
{
    Matrix m = *this;
    for (auto& x : m.a_) x = f_.mul(x, s);
    return m;
}

void Matrix::axpy(Elem s, const Matrix& other)
{
    require_same(*this, other);
    if (other.r_ != r_ || other.c_ != c_) throw Error(ErrorKind::DimensionMismatch, "axpy shape");
    if (s == 0) return;
    for (std::size_t k = 0; k < a_.size(); ++k)
        if (other.a_[k]) a_[k] = f_.add(a_[k], f_.mul(s, other.a_[k]));
}

bool Matrix::is_zero() const
{
    for (auto x : a_)
        if (x) return false;
    return true;
}

bool Matrix::is_identity() const
{
    if (r_ != c_) return false;
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j)
            if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    require_same(a, b);
    if (a.c_ != b.r_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape");
    const Field& f = a.f_;
    Matrix m(f, a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
        for (std::size_t k = 0; k < a.c_; ++k) {
            Elem x = a.a_[i * a.c_ + k];
            if (!x) continue;
            const Elem* brow = &b.a_[k * b.c_];
            Elem* mrow = &m.a_[i * b.c_];
            for (std::size_t j = 0; j < b.c_; ++j)
                if (brow[j]) mrow[j] = f.add(mrow[j], f.mul(x, brow[j]));
        }
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
    Matrix m = a;
    m.axpy(1, b);
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b)
{
    Matrix m = a;
    m.axpy(a.f_.neg(1), b);
    return m;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b)
{
    if (a.r_ != b.r_) throw Error(ErrorKind::DimensionMismatch, "hstack rows");
    Matrix m(a.f_, a.r_, a.c_ + b.c_);
    m.set_block(0, 0, a);
    m.set_block(0, a.c_, b);
    return m;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b)
{
    if (a.c_ != b.c_) throw Error(ErrorKind::DimensionMismatch, "vstack cols");
    Matrix m(a.f_, a.r_ + b.r_, a.c_);
    m.set_block(0, 0, a);
    m.set_block(a.r_, 0, b);
    return m;
}

void Matrix::check_entries() const
{
    for (std::size_t k = 0; k < a_.size(); ++k)
        if (!f_.contains(a_[k]))
            throw Error(ErrorKind::FieldMismatch, "entry " + std::to_string(a_[k]) + " is not in " + f_.name(),
                        {static_cast<long long>(k / (c_ ? c_ : 1)), static_cast<long long>(k % (c_ ? c_ : 1))});
}

Echelon rref(Matrix m)
{
    m.check_entries();
    const Field& f = m.field();
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && m(p, c) == 0) ++p;
        if (p == R) continue;
        if (p != r)
            for (std::size_t j = 0; j < C; ++j) std::swap(m(p, j), m(r, j));
        Elem iv = f.inv(m(r, c));
        if (iv != 1)
            for (std::size_t j = c; j < C; ++j) m(r, j) = f.mul(m(r, j), iv);
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r) continue;
            Elem x = m(i, c);
            if (!x) continue;
            Elem nx = f.neg(x);
            for (std::size_t j = c; j < C; ++j)
                if (m(r, j)) m(i, j) = f.add(m(i, j), f.mul(nx, m(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vec> kernel_basis(const Matrix& m)
{
    auto e = rref(m);
    const std::size_t C = m.cols();
    std::vector<bool> is_pivot(C, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    const Field& f = m.field();
    for (std::size_t free = 0; free < C; ++free) {
        if (is_pivot[free]) continue;
        Vec v(C, 0);
        v[free] = 1;
        for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = f.neg(e.reduced(k, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b)
{
    if (b.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "solve: rhs length");
    Matrix bm(m.field(), b.size(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) bm(i, 0) = b[i];
    auto x = solve_matrix(m, bm);
    if (!x) return std::nullopt;
    return x->column(0);
}

std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "solve: row mismatch");
    const std::size_t C = a.cols();
    auto e = rref(Matrix::hstack(a, b));
    Matrix x(a.field(), C, b.cols());
    for (std::size_t k = 0; k < e.pivots.size(); ++k) {
        if (e.pivots[k] >= C) return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[k], j) = e.reduced(k, C + j);
    }
    return x;
}

std::optional<Matrix> inverse(const Matrix& m)
{
    if (m.rows() != m.cols()) return std::nullopt;
    const std::size_t n = m.rows();
    auto e = rref(Matrix::hstack(m, Matrix::identity(m.field(), n)));
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
    return e.reduced.block(0, n, n, n);
}

Matrix column_basis(const Matrix& m)
{
    auto e = rref(m);
    return m.select_columns(e.pivots);
}

Matrix complement_columns(const Matrix& sub, std::size_t n)
{
    Matrix full = Matrix::hstack(sub, Matrix::identity(sub.field(), n));
    auto e = rref(full);
    std::vector<std::size_t> extra;
    for (auto p : e.pivots)
        if (p >= sub.cols()) extra.push_back(p);
    return full.select_columns(extra);
}

Matrix fitting_power(const Matrix& m)
{
    Matrix p = Matrix::identity(m.field(), m.rows());
    Matrix b = m;
    std::size_t e = m.rows();
    while (e) {
        if (e & 1) p = p * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return p;
}

bool is_nilpotent(const Matrix& m) { return fitting_power(m).is_zero(); }

Vec vec_add(const Field& f, const Vec& a, const Vec& b)
{
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
    return r;
}

Vec vec_scale(const Field& f, Elem s, const Vec& a)
{
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(s, a[i]);
    return r;
}

bool vec_is_zero(const Vec& v)
{
    for (auto x : v)
        if (x) return false;
    return true;
}

Vec SubspaceBasis::reduce(Vec v) const
{
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        Elem x = v[pivots_[k]];
        if (!x) continue;
        Elem nx = f_.neg(x);
        const Vec& r = rows_[k];
        for (std::size_t j = pivots_[k]; j < n_; ++j)
            if (r[j]) v[j] = f_.add(v[j], f_.mul(nx, r[j]));
    }
    return v;
}

bool SubspaceBasis::add(const Vec& v)
{
    if (v.size() != n_) throw Error(ErrorKind::DimensionMismatch, "subspace: vector length");
    Vec r = reduce(v);
    std::size_t p = 0;
    while (p < n_ && r[p] == 0) ++p;
    if (p == n_) return false;
    Elem iv = f_.inv(r[p]);
    for (auto& x : r) x = f_.mul(x, iv);
    // keep earlier rows reduced at the new pivot
    for (auto& row : rows_) {
        Elem x = row[p];
        if (!x) continue;
        Elem nx = f_.neg(x);
        for (std::size_t j = p; j < n_; ++j)
            if (r[j]) row[j] = f_.add(row[j], f_.mul(nx, r[j]));
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
}

}  // namespace gendo

namespace gendo {

Coordinates::Coordinates(const Field& f, const std::vector<Vec>& basis, std::size_t n)
    : Coordinates(Matrix::from_columns(f, n, basis))
{
}

Coordinates::Coordinates(const Matrix& basis) : f_(basis.field()), n_(basis.rows()), k_(basis.cols()), basis_(basis)
{
    auto e = rref(basis.transpose());
    if (e.pivots.size() != k_) throw Error(ErrorKind::InvalidInput, "coordinates: basis vectors are dependent");
    rows_ = e.pivots;
    auto inv = inverse(basis.select_rows(rows_));
    inv_ = *inv;
}

Vec Coordinates::operator()(const Vec& v) const
{
    Vec sub(k_);
    for (std::size_t i = 0; i < k_; ++i) sub[i] = v[rows_[i]];
    return inv_.apply(sub);
}

std::optional<Vec> Coordinates::try_coords(const Vec& v) const
{
    if (v.size() != n_) throw Error(ErrorKind::DimensionMismatch, "coordinates: vector length");
    Vec x = (*this)(v);
    if (basis_.apply(x) != v) return std::nullopt;
    return x;
}

Matrix Coordinates::of_columns(const Matrix& y) const
{
    if (k_ == 0) return Matrix(f_, 0, y.cols());
    return inv_ * y.select_rows(rows_);
}

}  // namespace gendo
