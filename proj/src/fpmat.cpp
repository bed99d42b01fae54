#include "semidual/fpmat.hpp"

#include <cassert>
#include <stdexcept>

namespace semidual {

int fp_inv(int a, int p) {
    a = ((a % p) + p) % p;
    if (a == 0)
        throw std::domain_error("fp_inv: zero");
    for (int x = 1; x < p; ++x)
        if (a * x % p == 1)
            return x;
    throw std::domain_error("fp_inv: p not prime?");
}

namespace {

// r += c * s (mod P), the single hot loop of the library.
template <int P>
void axpy_impl(uint8_t* r, const uint8_t* s, int c, size_t n) {
    if constexpr (P == 2) {
        for (size_t k = 0; k < n; ++k)
            r[k] ^= s[k];
    } else {
        for (size_t k = 0; k < n; ++k)
            r[k] = uint8_t((r[k] + c * s[k]) % P);
    }
}

void axpy(uint8_t* r, const uint8_t* s, int c, size_t n, int p) {
    c %= p;
    if (c == 0)
        return;
    switch (p) {
        case 2: axpy_impl<2>(r, s, c, n); break;
        case 3: axpy_impl<3>(r, s, c, n); break;
        case 5: axpy_impl<5>(r, s, c, n); break;
        default:
            for (size_t k = 0; k < n; ++k)
                r[k] = uint8_t((r[k] + c * s[k]) % p);
    }
}

void scale_row(uint8_t* r, int c, size_t n, int p) {
    c %= p;
    if (c == 1)
        return;
    for (size_t k = 0; k < n; ++k)
        r[k] = uint8_t(r[k] * c % p);
}

} // namespace

FpMat::FpMat(int rows, int cols, int p) : rows_(rows), cols_(cols), p_(p) {
    assert(rows >= 0 && cols >= 0 && p >= 2);
    data_.assign(size_t(rows) * cols, 0);
}

FpMat FpMat::identity(int n, int p) {
    FpMat m(n, n, p);
    for (int i = 0; i < n; ++i)
        m.set(i, i, 1);
    return m;
}

FpMat FpMat::operator*(const FpMat& o) const {
    assert(cols_ == o.rows_ && p_ == o.p_);
    FpMat out(rows_, o.cols_, p_);
    for (int i = 0; i < rows_; ++i) {
        const uint8_t* a = row(i);
        uint8_t* r = out.row(i);
        for (int k = 0; k < cols_; ++k)
            if (a[k])
                axpy(r, o.row(k), a[k], size_t(o.cols_), p_);
    }
    return out;
}

FpMat FpMat::operator+(const FpMat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_);
    FpMat out = *this;
    axpy(out.data_.data(), o.data_.data(), 1, out.data_.size(), p_);
    return out;
}

FpMat FpMat::operator-(const FpMat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_);
    FpMat out = *this;
    axpy(out.data_.data(), o.data_.data(), p_ - 1, out.data_.size(), p_);
    return out;
}

FpMat FpMat::scaled(int c) const {
    FpMat out = *this;
    c = ((c % p_) + p_) % p_;
    scale_row(out.data_.data(), c == 0 ? 0 : c, out.data_.size(), p_);
    if (c == 0)
        out.data_.assign(out.data_.size(), 0);
    return out;
}

FpMat FpMat::transposed() const {
    FpMat out(cols_, rows_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            out.set(j, i, (*this)(i, j));
    return out;
}

bool FpMat::is_zero() const {
    for (uint8_t v : data_)
        if (v)
            return false;
    return true;
}

bool FpMat::is_identity() const {
    if (rows_ != cols_)
        return false;
    return *this == identity(rows_, p_);
}

FpVec FpMat::apply(const FpVec& v) const {
    assert(int(v.size()) == cols_);
    FpVec out(rows_, 0);
    for (int i = 0; i < rows_; ++i) {
        const uint8_t* a = row(i);
        int acc = 0;
        for (int k = 0; k < cols_; ++k)
            acc += a[k] * v[k];
        out[i] = uint8_t(acc % p_);
    }
    return out;
}

int FpMat::rref(std::vector<int>* pivots) {
    int rank = 0;
    if (pivots)
        pivots->clear();
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int piv = -1;
        for (int r = rank; r < rows_; ++r)
            if ((*this)(r, col)) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        if (piv != rank)
            for (int c = 0; c < cols_; ++c)
                std::swap(row(piv)[c], row(rank)[c]);
        scale_row(row(rank), fp_inv((*this)(rank, col), p_), size_t(cols_), p_);
        for (int r = 0; r < rows_; ++r)
            if (r != rank && (*this)(r, col))
                axpy(row(r), row(rank), p_ - (*this)(r, col), size_t(cols_), p_);
        if (pivots)
            pivots->push_back(col);
        ++rank;
    }
    return rank;
}

int FpMat::rank() const {
    FpMat copy = *this;
    return copy.rref();
}

FpMat FpMat::kernel_basis(std::vector<int>* free_cols) const {
    FpMat red = *this;
    std::vector<int> pivots;
    int rank = red.rref(&pivots);
    std::vector<char> is_pivot(cols_, 0);
    for (int c : pivots)
        is_pivot[c] = 1;
    FpMat out(cols_ - rank, cols_, p_);
    if (free_cols)
        free_cols->clear();
    int k = 0;
    for (int free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col])
            continue;
        out.set(k, free_col, 1);
        for (int r = 0; r < rank; ++r)
            out.set(k, pivots[r], p_ - red(r, free_col));
        if (free_cols)
            free_cols->push_back(free_col);
        ++k;
    }
    return out;
}

std::optional<FpMat> FpMat::inverse() const {
    if (rows_ != cols_)
        return std::nullopt;
    FpMat work(rows_, 2 * cols_, p_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j)
            work.set(i, j, (*this)(i, j));
        work.set(i, cols_ + i, 1);
    }
    if (work.rref() < rows_)
        return std::nullopt;
    // rref may have full rank using the identity half; check left half pivots
    for (int i = 0; i < rows_; ++i)
        if (work(i, i) != 1)
            return std::nullopt;
    FpMat inv(rows_, cols_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            inv.set(i, j, work(i, cols_ + j));
    return inv;
}

void FpMat::stack(const FpMat& o) {
    assert(cols_ == o.cols_ && p_ == o.p_);
    data_.insert(data_.end(), o.data_.begin(), o.data_.end());
    rows_ += o.rows_;
}

FpMat random_matrix(int rows, int cols, int p, std::mt19937_64& rng) {
    FpMat m(rows, cols, p);
    std::uniform_int_distribution<int> dist(0, p - 1);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m.set(i, j, dist(rng));
    return m;
}

bool RowSpace::insert(FpVec v) {
    FpVec r = reduce(v);
    int piv = -1;
    for (int c = 0; c < cols_; ++c)
        if (r[c]) {
            piv = c;
            break;
        }
    if (piv < 0)
        return false;
    scale_row(r.data(), fp_inv(r[piv], p_), r.size(), p_);
    for (size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i][piv])
            axpy(rows_[i].data(), r.data(), p_ - rows_[i][piv], r.size(), p_);
    // keep rows ordered by pivot column
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv)
        ++pos;
    rows_.insert(rows_.begin() + pos, std::move(r));
    pivots_.insert(pivots_.begin() + pos, piv);
    return true;
}

bool RowSpace::contains(const FpVec& v) const {
    FpVec r = reduce(v);
    for (uint8_t x : r)
        if (x)
            return false;
    return true;
}

FpVec RowSpace::reduce(const FpVec& v, FpVec* coeffs) const {
    assert(int(v.size()) == cols_);
    FpVec r = v;
    if (coeffs)
        coeffs->assign(rows_.size(), 0);
    for (size_t i = 0; i < rows_.size(); ++i) {
        uint8_t c = r[pivots_[i]];
        if (c) {
            axpy(r.data(), rows_[i].data(), p_ - c, r.size(), p_);
            if (coeffs)
                (*coeffs)[i] = c;
        }
    }
    return r;
}

} // namespace semidual
