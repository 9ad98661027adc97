#include "siltkit/linalg.hpp"

namespace silt {

PrimeField::PrimeField(uint32_t modulus) : p(modulus) {
    if (p < 2) throw MathError("field modulus must be a prime >= 2");
    for (uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            throw MathError("field modulus " + std::to_string(p) + " is not prime");
}

uint32_t PrimeField::inv(uint32_t a) const {
    if (a == 0) throw MathError("division by zero in GF(p)");
    // extended Euclid on (a, p)
    int64_t t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
        int64_t q = r / newr;
        int64_t tmp = t - q * newt;
        t = newt; newt = tmp;
        tmp = r - q * newr;
        r = newr; newr = tmp;
    }
    if (t < 0) t += p;
    return static_cast<uint32_t>(t);
}

uint32_t PrimeField::pow(uint32_t a, uint64_t e) const {
    uint32_t r = 1 % p;
    uint32_t base = a % p;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

Matrix Matrix::identity(PrimeField f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1 % f.p;
    return m;
}

bool Matrix::is_zero() const {
    for (uint32_t v : a_)
        if (v) return false;
    return true;
}

Matrix Matrix::mul(const Matrix& o) const {
    if (cols_ != o.rows_) throw InternalError("matrix product shape mismatch");
    Matrix r(f_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            uint64_t v = (*this)(i, k);
            if (!v) continue;
            const size_t orow = size_t(k) * o.cols_;
            const size_t rrow = size_t(i) * o.cols_;
            for (int j = 0; j < o.cols_; ++j) {
                r.a_[rrow + j] = static_cast<uint32_t>(
                    (r.a_[rrow + j] + v * o.a_[orow + j]) % f_.p);
            }
        }
    }
    return r;
}

Vec Matrix::mul_vec(const Vec& v) const {
    if ((int)v.size() != cols_) throw InternalError("matrix-vector shape mismatch");
    Vec r(rows_, 0);
    for (int i = 0; i < rows_; ++i) {
        uint64_t acc = 0;
        const size_t row = size_t(i) * cols_;
        for (int j = 0; j < cols_; ++j) {
            acc += (uint64_t)a_[row + j] * v[j] % f_.p;
        }
        r[i] = static_cast<uint32_t>(acc % f_.p);
    }
    return r;
}

Matrix Matrix::add(const Matrix& o) const {
    Matrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.add(a_[i], o.a_[i]);
    return r;
}

Matrix Matrix::sub(const Matrix& o) const {
    Matrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.sub(a_[i], o.a_[i]);
    return r;
}

Matrix Matrix::scaled(uint32_t c) const {
    Matrix r = *this;
    for (auto& v : r.a_) v = f_.mul(v, c);
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(f_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

Matrix Matrix::hstack(const Matrix& o) const {
    if (rows_ != o.rows_) throw InternalError("hstack row mismatch");
    Matrix r(f_, rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
        for (int j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
    }
    return r;
}

Matrix Matrix::vstack(const Matrix& o) const {
    if (cols_ != o.cols_) throw InternalError("vstack col mismatch");
    Matrix r(f_, rows_ + o.rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    for (int i = 0; i < o.rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(rows_ + i, j) = o(i, j);
    return r;
}

Matrix Matrix::col(int c) const {
    Matrix r(f_, rows_, 1);
    for (int i = 0; i < rows_; ++i) r(i, 0) = (*this)(i, c);
    return r;
}

Vec Matrix::col_vec(int c) const {
    Vec v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
    return v;
}

void Matrix::set_col(int c, const Vec& v) {
    for (int i = 0; i < rows_; ++i) (*this)(i, c) = v[i];
}

Echelon::Echelon(const Matrix& m)
    : f_(m.field()), cols_(m.cols()), r_(m),
      u_(Matrix::identity(m.field(), m.rows())), rank_(0) {
    const int rows = m.rows();
    int row = 0;
    for (int col = 0; col < cols_ && row < rows; ++col) {
        int piv = -1;
        for (int i = row; i < rows; ++i)
            if (r_(i, col)) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row) {
            for (int j = 0; j < cols_; ++j) std::swap(r_(piv, j), r_(row, j));
            for (int j = 0; j < u_.cols(); ++j) std::swap(u_(piv, j), u_(row, j));
        }
        const uint32_t inv = f_.inv(r_(row, col));
        if (inv != 1) {
            for (int j = 0; j < cols_; ++j) r_(row, j) = f_.mul(r_(row, j), inv);
            for (int j = 0; j < u_.cols(); ++j) u_(row, j) = f_.mul(u_(row, j), inv);
        }
        for (int i = 0; i < rows; ++i) {
            if (i == row) continue;
            const uint32_t c = r_(i, col);
            if (!c) continue;
            for (int j = 0; j < cols_; ++j)
                r_(i, j) = f_.sub(r_(i, j), f_.mul(c, r_(row, j)));
            for (int j = 0; j < u_.cols(); ++j)
                u_(i, j) = f_.sub(u_(i, j), f_.mul(c, u_(row, j)));
        }
        pivots_.push_back(col);
        ++row;
    }
    rank_ = row;
}

std::optional<Vec> Echelon::solve(const Vec& b) const {
    Vec c = u_.mul_vec(b);
    for (int i = rank_; i < (int)c.size(); ++i)
        if (c[i]) return std::nullopt;
    Vec x(cols_, 0);
    for (int i = 0; i < rank_; ++i) x[pivots_[i]] = c[i];
    return x;
}

bool Echelon::contains(const Vec& b) const { return solve(b).has_value(); }

Matrix Echelon::kernel_basis() const {
    std::vector<char> is_pivot(cols_, 0);
    for (int c : pivots_) is_pivot[c] = 1;
    const int dim = cols_ - rank_;
    Matrix k(f_, cols_, dim);
    int out = 0;
    for (int j = 0; j < cols_; ++j) {
        if (is_pivot[j]) continue;
        k(j, out) = 1;
        for (int i = 0; i < rank_; ++i)
            k(pivots_[i], out) = f_.neg(r_(i, j));
        ++out;
    }
    return k;
}

int Matrix::rank() const { return Echelon(*this).rank(); }

uint32_t Matrix::det() const {
    if (rows_ != cols_) throw InternalError("det of non-square matrix");
    Matrix w = *this;
    uint32_t d = 1 % f_.p;
    for (int col = 0; col < cols_; ++col) {
        int piv = -1;
        for (int i = col; i < rows_; ++i)
            if (w(i, col)) { piv = i; break; }
        if (piv < 0) return 0;
        if (piv != col) {
            for (int j = 0; j < cols_; ++j) std::swap(w(piv, j), w(col, j));
            d = f_.neg(d);
        }
        d = f_.mul(d, w(col, col));
        const uint32_t inv = f_.inv(w(col, col));
        for (int i = col + 1; i < rows_; ++i) {
            const uint32_t c = f_.mul(w(i, col), inv);
            if (!c) continue;
            for (int j = col; j < cols_; ++j)
                w(i, j) = f_.sub(w(i, j), f_.mul(c, w(col, j)));
        }
    }
    return d;
}

Matrix Matrix::kernel_basis() const { return Echelon(*this).kernel_basis(); }

Matrix Matrix::image_basis() const {
    Echelon e(*this);
    Matrix img(f_, rows_, e.rank());
    for (int k = 0; k < e.rank(); ++k)
        for (int i = 0; i < rows_; ++i) img(i, k) = (*this)(i, e.pivots()[k]);
    return img;
}

std::optional<Vec> Matrix::solve(const Vec& b) const { return Echelon(*this).solve(b); }

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    Echelon e(*this);
    if (e.rank() != rows_) return std::nullopt;
    Matrix inv(f_, rows_, cols_);
    for (int j = 0; j < cols_; ++j) {
        Vec unit(rows_, 0);
        unit[j] = 1;
        auto x = e.solve(unit);
        if (!x) return std::nullopt;
        inv.set_col(j, *x);
    }
    return inv;
}

std::vector<int> extend_column_basis(const Matrix& base, const Matrix& candidates) {
    const PrimeField f = candidates.field();
    const int rows = candidates.rows();
    Matrix work(f, rows, base.cols() + candidates.cols());
    for (int j = 0; j < base.cols(); ++j)
        for (int i = 0; i < rows; ++i) work(i, j) = base(i, j);
    for (int j = 0; j < candidates.cols(); ++j)
        for (int i = 0; i < rows; ++i) work(i, base.cols() + j) = candidates(i, j);
    Echelon e(work);
    std::vector<int> picked;
    for (int c : e.pivots())
        if (c >= base.cols()) picked.push_back(c - base.cols());
    return picked;
}

Matrix random_matrix(PrimeField f, int rows, int cols, Rng& rng) {
    Matrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rng.below(f.p);
    return m;
}

}  // namespace silt
