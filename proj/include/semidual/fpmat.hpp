#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace semidual {

using FpVec = std::vector<uint8_t>;

int fp_inv(int a, int p);

// Dense matrix over the prime field F_p, entries stored as bytes in [0, p).
class FpMat {
public:
    FpMat() = default;
    FpMat(int rows, int cols, int p);
    static FpMat identity(int n, int p);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int p() const { return p_; }

    uint8_t operator()(int r, int c) const { return data_[size_t(r) * cols_ + c]; }
    void set(int r, int c, int v) { data_[size_t(r) * cols_ + c] = uint8_t(((v % p_) + p_) % p_); }
    const uint8_t* row(int r) const { return data_.data() + size_t(r) * cols_; }
    uint8_t* row(int r) { return data_.data() + size_t(r) * cols_; }

    bool operator==(const FpMat& o) const = default;

    FpMat operator*(const FpMat& o) const;
    FpMat operator+(const FpMat& o) const;
    FpMat operator-(const FpMat& o) const;
    FpMat scaled(int c) const;
    FpMat transposed() const;
    bool is_zero() const;
    bool is_identity() const;

    FpVec apply(const FpVec& v) const; // A v

    // In-place reduced row echelon form; returns rank, fills pivot columns.
    int rref(std::vector<int>* pivots = nullptr);
    int rank() const;
    // Rows form a basis of { x : A x = 0 }; each row carries a 1 at its own
    // free column and 0 at the other free columns.
    FpMat kernel_basis(std::vector<int>* free_cols = nullptr) const;
    std::optional<FpMat> inverse() const;

    // Appends the rows of o (same column count).
    void stack(const FpMat& o);

private:
    int rows_ = 0, cols_ = 0, p_ = 2;
    std::vector<uint8_t> data_;
};

FpMat random_matrix(int rows, int cols, int p, std::mt19937_64& rng);

// Row space held in reduced echelon form with incremental insertion.
class RowSpace {
public:
    RowSpace(int cols, int p) : cols_(cols), p_(p) {}

    // Returns true if v enlarged the span.
    bool insert(FpVec v);
    bool contains(const FpVec& v) const;
    // Remainder of v after elimination against the stored rows; if coeffs is
    // non-null it receives the coefficient of each stored row used.
    FpVec reduce(const FpVec& v, FpVec* coeffs = nullptr) const;

    int dim() const { return int(rows_.size()); }
    int cols() const { return cols_; }
    const std::vector<FpVec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

private:
    int cols_, p_;
    std::vector<FpVec> rows_;
    std::vector<int> pivots_;
};

} // namespace semidual
