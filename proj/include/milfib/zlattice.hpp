#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace milfib {

using Integer = boost::multiprecision::cpp_int;

/// Dense rectangular matrix of arbitrary-precision integers, row-major.
/// Empty matrices (0 rows and/or 0 columns) are permitted and have rank 0.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_empty() const { return rows_ == 0 || cols_ == 0; }

    const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    const std::vector<Integer>& entries() const { return entries_; }

    bool operator==(const IntMatrix& other) const = default;

    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    IntMatrix operator+(const IntMatrix& rhs) const;

    bool is_zero() const;
    bool is_identity() const;

    /// Columns of `rhs` appended on the right; row counts must agree.
    IntMatrix concat_cols(const IntMatrix& rhs) const;

    /// Signed determinant (square matrices only), fraction-free elimination.
    Integer det() const;

    std::string to_string() const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);
    /// row i += c * row j
    void add_row_multiple(std::size_t i, std::size_t j, const Integer& c);
    /// col i += c * col j
    void add_col_multiple(std::size_t i, std::size_t j, const Integer& c);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> entries_;
};

/// Smith normal form of an integer matrix M: unimodular U, V with
/// U * M * V = diag(d_1, ..., d_r) padded with zeros, d_1 | d_2 | ... | d_r,
/// all d_k >= 1. Deterministic for identical input.
struct SmithForm {
    std::vector<Integer> invariant_factors;
    std::size_t rank = 0;
    IntMatrix left_transform;   // rows x rows, unimodular
    IntMatrix right_transform;  // cols x cols, unimodular

    /// The padded diagonal U * M * V, for verification.
    IntMatrix padded_diagonal(std::size_t rows, std::size_t cols) const;
};

/// Finitely generated abelian group Z^free_rank (+) Z/d_1 (+) ... (+) Z/d_k
/// with 2 <= d_1 | d_2 | ... | d_k. Unit factors are dropped, so equality of
/// groups is structural equality.
struct AbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;

    bool operator==(const AbelianGroup& other) const = default;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool is_free() const { return torsion.empty(); }

    static AbelianGroup free(std::size_t rank) { return AbelianGroup{rank, {}}; }
    static AbelianGroup trivial() { return AbelianGroup{0, {}}; }

    /// "0", "Z", "Z^2", "Z/2", "Z^2 + Z/2 + Z/6", ...
    std::string to_string() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Rank over Q (equivalently, number of invariant factors).
std::size_t rank(const IntMatrix& m);

/// Cokernel of the map Z^cols -> Z^rows represented by m, i.e. Z^rows / Im(m).
AbelianGroup cokernel(const IntMatrix& m);

/// Quotient of Z^ambient_rank by the sum of the images of the given matrices
/// (computed as the cokernel of their column-wise concatenation).
/// Throws DimensionError if some matrix does not have ambient_rank rows.
AbelianGroup cokernel_multi(std::size_t ambient_rank, const std::vector<IntMatrix>& matrices);

/// Rank of the kernel of the map represented by m: cols - rank(m).
std::size_t kernel_rank(const IntMatrix& m);

/// Rank of m with entries reduced mod p. Throws ArgumentError unless p is a
/// prime below 2^31 (larger moduli are out of scope).
std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p);

bool is_prime_u64(std::uint64_t n);

/// Exact inverse of a unimodular integer matrix.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// m raised to a non-negative power.
IntMatrix matrix_power(const IntMatrix& m, unsigned long long e);

/// A primitive integer row vector v (1 x rows) with v * m = 0, taken from the
/// left transform of the Smith form; requires rank(m) < rows. The induced map
/// Z^rows / Im(m) -> Z is surjective.
IntMatrix primitive_left_annihilator(const IntMatrix& m);

}  // namespace milfib
