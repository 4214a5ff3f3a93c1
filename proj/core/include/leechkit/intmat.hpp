#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "leechkit/numeric.hpp"

namespace leechkit {

// Dense row-major matrix of arbitrary-precision integers.
class IntMat {
public:
    IntMat() = default;
    IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    IntMat(std::initializer_list<std::initializer_list<Int>> rows);

    static IntMat identity(std::size_t n);
    static IntMat from_rows(std::vector<IntVec> rows, std::size_t cols_if_empty = 0);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const IntMat& o) const = default;

    IntVec row(std::size_t i) const;
    void set_row(std::size_t i, const IntVec& v);
    IntMat transposed() const;
    bool is_zero() const;
    bool is_symmetric() const;
    bool is_square() const { return rows_ == cols_; }

    void swap_rows(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    // row_i += c * row_j
    void add_row_multiple(std::size_t i, std::size_t j, const Int& c);
    void swap_cols(std::size_t i, std::size_t j);
    void negate_col(std::size_t i);
    void add_col_multiple(std::size_t i, std::size_t j, const Int& c);

    // fraction-free Bareiss determinant; empty matrix has det 1
    Int det() const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    IntVec e_;
};

IntMat operator*(const IntMat& a, const IntMat& b);
IntMat operator+(const IntMat& a, const IntMat& b);
IntMat operator-(const IntMat& a, const IntMat& b);
IntMat operator*(const Int& c, const IntMat& a);
IntVec operator*(const IntVec& x, const IntMat& a);

// stack b below a (same column count)
IntMat vstack(const IntMat& a, const IntMat& b);
// place b to the right of a (same row count)
IntMat hstack(const IntMat& a, const IntMat& b);

Int dot(const IntVec& a, const IntVec& b);
IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec scale(const Int& c, const IntVec& a);
IntVec neg(const IntVec& a);
bool is_zero(const IntVec& a);
// v * G * w^T for a symmetric Gram G
Int pair_with_gram(const IntMat& gram, const IntVec& v, const IntVec& w);

// Dense matrix of exact rationals (entries kept canonical by mpq_class).
class RatMat {
public:
    RatMat() = default;
    RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    explicit RatMat(const IntMat& m);

    static RatMat identity(std::size_t n);
    static RatMat from_rows(std::vector<RatVec> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const RatMat& o) const = default;

    RatVec row(std::size_t i) const;
    RatMat transposed() const;
    bool is_integral() const;
    IntMat to_int() const;  // faults if any entry is non-integral

    // Gauss-Jordan inverse; faults on singular input
    RatMat inverse() const;
    // rank over the rationals
    std::size_t rank() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    RatVec e_;
};

RatMat operator*(const RatMat& a, const RatMat& b);
RatMat operator-(const RatMat& a, const RatMat& b);
RatVec operator*(const RatVec& x, const RatMat& a);
Rat dot(const RatVec& a, const RatVec& b);
RatVec to_rat(const IntVec& v);
Rat pair_with_gram(const RatMat& gram, const RatVec& v, const RatVec& w);

// solve x * A = b over the rationals; nullopt if inconsistent
std::optional<RatVec> solve_rational(const RatMat& a, const RatVec& b);

std::string to_string(const IntVec& v);
std::string to_string(const RatVec& v);

}  // namespace leechkit
