#pragma once

#include <optional>
#include <vector>

#include "siltkit/common.hpp"

namespace silt {

using Vec = std::vector<uint32_t>;

// Arithmetic in GF(p), p prime. Primality is checked once at construction;
// all other routines assume it.
struct PrimeField {
    uint32_t p = 0;

    PrimeField() = default;
    explicit PrimeField(uint32_t modulus);

    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const {
        return a >= b ? a - b : a + p - b;
    }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p - a; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>((uint64_t)a * b % p);
    }
    uint32_t inv(uint32_t a) const;
    uint32_t pow(uint32_t a, uint64_t e) const;
    uint32_t from_int(long long v) const {
        long long r = v % (long long)p;
        if (r < 0) r += p;
        return static_cast<uint32_t>(r);
    }
    bool operator==(const PrimeField& o) const { return p == o.p; }
};

// Dense row-major matrix over GF(p).
class Matrix {
public:
    Matrix() = default;
    Matrix(PrimeField f, int rows, int cols)
        : f_(f), rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {}

    static Matrix identity(PrimeField f, int n);

    PrimeField field() const { return f_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    uint32_t operator()(int r, int c) const { return a_[size_t(r) * cols_ + c]; }
    uint32_t& operator()(int r, int c) { return a_[size_t(r) * cols_ + c]; }

    bool is_zero() const;
    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    Matrix mul(const Matrix& o) const;
    Vec mul_vec(const Vec& v) const;
    Matrix add(const Matrix& o) const;
    Matrix sub(const Matrix& o) const;
    Matrix scaled(uint32_t c) const;
    Matrix transpose() const;

    // Stack columns of o to the right / rows of o below.
    Matrix hstack(const Matrix& o) const;
    Matrix vstack(const Matrix& o) const;
    Matrix col(int c) const;
    Vec col_vec(int c) const;
    void set_col(int c, const Vec& v);

    int rank() const;
    uint32_t det() const;
    // Columns span the right kernel {x : Mx = 0}; rank + kernel cols = cols.
    Matrix kernel_basis() const;
    // Columns of M at the pivot positions of the echelon form.
    Matrix image_basis() const;
    std::optional<Vec> solve(const Vec& b) const;
    std::optional<Matrix> inverse() const;

private:
    PrimeField f_;
    int rows_ = 0, cols_ = 0;
    Vec a_;

    friend class Echelon;
};

// Reduced row echelon form with enough bookkeeping to answer membership and
// solve queries repeatedly against the same matrix.
class Echelon {
public:
    explicit Echelon(const Matrix& m);

    int rank() const { return rank_; }
    const std::vector<int>& pivots() const { return pivots_; }
    const Matrix& rref() const { return r_; }

    // Solve Mx = b; nullopt when inconsistent.
    std::optional<Vec> solve(const Vec& b) const;
    bool contains(const Vec& b) const;  // b in column span of M
    Matrix kernel_basis() const;

private:
    PrimeField f_;
    int cols_;
    Matrix r_;               // rref of M
    Matrix u_;               // row transform, u * M = r
    std::vector<int> pivots_;
    int rank_;
};

// Independent columns of `candidates` that extend the column span of `base`.
// Returns the selected candidate column indices, in order.
std::vector<int> extend_column_basis(const Matrix& base, const Matrix& candidates);

Matrix random_matrix(PrimeField f, int rows, int cols, Rng& rng);

}  // namespace silt
