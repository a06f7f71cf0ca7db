#include "milfib/zlattice.hpp"

#include "milfib/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace milfib {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw DimensionError("entry list has length " + std::to_string(entries_.size()) +
                             ", expected " + std::to_string(rows_ * cols_));
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw DimensionError("ragged initializer: row has " + std::to_string(row.size()) +
                                 " entries, expected " + std::to_string(cols_));
        for (long long v : row)
            entries_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw DimensionError("cannot multiply " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                             " by " + std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& a = (*this)(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out(i, j) += a * rhs(k, j);
        }
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionError("shape mismatch in matrix subtraction");
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] = entries_[i] - rhs.entries_[i];
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionError("shape mismatch in matrix addition");
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] = entries_[i] + rhs.entries_[i];
    return out;
}

bool IntMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Integer& e) { return e == 0; });
}

bool IntMatrix::is_identity() const {
    if (!is_square())
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0))
                return false;
    return true;
}

IntMatrix IntMatrix::concat_cols(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_)
        throw DimensionError("cannot concatenate: " + std::to_string(rows_) + " rows vs " +
                             std::to_string(rhs.rows_) + " rows");
    IntMatrix out(rows_, cols_ + rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j)
            out(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < rhs.cols_; ++j)
            out(i, cols_ + j) = rhs(i, j);
    }
    return out;
}

Integer IntMatrix::det() const {
    if (!is_square())
        throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = rows_;
    if (n == 0)
        return 1;
    // Bareiss fraction-free elimination.
    IntMatrix a = *this;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a(piv, k) == 0)
                ++piv;
            if (piv == n)
                return 0;
            a.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " [");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j == 0 ? "" : ", ") << (*this)(i, j);
        os << "]" << (i + 1 == rows_ ? "" : ",");
    }
    os << "]";
    return os.str();
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c)
        (*this)(i, c) = -(*this)(i, c);
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, j) = -(*this)(r, j);
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t j, const Integer& c) {
    if (c == 0)
        return;
    for (std::size_t k = 0; k < cols_; ++k)
        (*this)(i, k) += c * (*this)(j, k);
}

void IntMatrix::add_col_multiple(std::size_t i, std::size_t j, const Integer& c) {
    if (c == 0)
        return;
    for (std::size_t k = 0; k < rows_; ++k)
        (*this)(k, i) += c * (*this)(k, j);
}

IntMatrix SmithForm::padded_diagonal(std::size_t rows, std::size_t cols) const {
    IntMatrix d(rows, cols);
    for (std::size_t k = 0; k < invariant_factors.size(); ++k)
        d(k, k) = invariant_factors[k];
    return d;
}

std::string AbelianGroup::to_string() const {
    if (is_trivial())
        return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank == 1) {
        os << "Z";
        first = false;
    } else if (free_rank > 1) {
        os << "Z^" << free_rank;
        first = false;
    }
    for (const Integer& d : torsion) {
        if (!first)
            os << " + ";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

namespace {

// First smallest-magnitude nonzero entry of d in the trailing submatrix
// starting at (t, t), scanned in row-major order. Returns false if the
// submatrix is zero.
bool find_pivot(const IntMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            if (d(i, j) == 0)
                continue;
            Integer mag = abs(d(i, j));
            if (!found || mag < best) {
                found = true;
                best = std::move(mag);
                pi = i;
                pj = j;
                if (best == 1)
                    return true;
            }
        }
    return found;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    SmithForm out;
    out.left_transform = IntMatrix::identity(rows);
    out.right_transform = IntMatrix::identity(cols);

    IntMatrix d = m;
    IntMatrix& u = out.left_transform;
    IntMatrix& v = out.right_transform;

    const std::size_t nmin = std::min(rows, cols);
    for (std::size_t t = 0; t < nmin; ++t) {
        std::size_t pi = t, pj = t;
        if (!find_pivot(d, t, pi, pj))
            break;
        for (;;) {
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            // Clear the pivot column and row with truncated division; any
            // nonzero remainder is strictly smaller than the pivot, so
            // re-selecting the pivot makes strict progress.
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (d(i, t) == 0)
                    continue;
                Integer q = d(i, t) / d(t, t);
                d.add_row_multiple(i, t, -q);
                u.add_row_multiple(i, t, -q);
                if (d(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (d(t, j) == 0)
                    continue;
                Integer q = d(t, j) / d(t, t);
                d.add_col_multiple(j, t, -q);
                v.add_col_multiple(j, t, -q);
                if (d(t, j) != 0)
                    clean = false;
            }
            if (clean) {
                // Pivot is lone; force it to divide the remaining submatrix.
                bool divides_all = true;
                for (std::size_t i = t + 1; i < rows && divides_all; ++i)
                    for (std::size_t j = t + 1; j < cols; ++j)
                        if (d(i, j) % d(t, t) != 0) {
                            d.add_row_multiple(t, i, 1);
                            u.add_row_multiple(t, i, 1);
                            divides_all = false;
                            break;
                        }
                if (divides_all)
                    break;
            }
            find_pivot(d, t, pi, pj);
        }
        if (d(t, t) < 0) {
            d.negate_row(t);
            u.negate_row(t);
        }
    }

    for (std::size_t k = 0; k < nmin; ++k) {
        if (d(k, k) == 0)
            break;
        out.invariant_factors.push_back(d(k, k));
    }
    out.rank = out.invariant_factors.size();
    return out;
}

std::size_t rank(const IntMatrix& m) {
    return smith_normal_form(m).rank;
}

AbelianGroup cokernel(const IntMatrix& m) {
    SmithForm snf = smith_normal_form(m);
    AbelianGroup g;
    g.free_rank = m.rows() - snf.rank;
    for (const Integer& f : snf.invariant_factors)
        if (f > 1)
            g.torsion.push_back(f);
    return g;
}

AbelianGroup cokernel_multi(std::size_t ambient_rank, const std::vector<IntMatrix>& matrices) {
    IntMatrix concat(ambient_rank, 0);
    for (std::size_t k = 0; k < matrices.size(); ++k) {
        if (matrices[k].rows() != ambient_rank)
            throw DimensionError("matrix #" + std::to_string(k) + " has " +
                                 std::to_string(matrices[k].rows()) + " rows, ambient rank is " +
                                 std::to_string(ambient_rank));
        concat = concat.concat_cols(matrices[k]);
    }
    return cokernel(concat);
}

std::size_t kernel_rank(const IntMatrix& m) {
    return m.cols() - rank(m);
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 31))
        throw ArgumentError("modulus " + std::to_string(p) +
                            " exceeds the supported machine-word range (< 2^31)");
    if (!is_prime_u64(p))
        throw ArgumentError("modulus " + std::to_string(p) + " is not prime");

    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::uint64_t> a(rows * cols);
    const Integer pz = p;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            Integer r = m(i, j) % pz;
            if (r < 0)
                r += pz;
            a[i * cols + j] = r.convert_to<std::uint64_t>();
        }

    auto inv_mod = [p](std::uint64_t x) {
        // Fermat inverse; p prime.
        std::uint64_t e = p - 2, acc = 1, base = x % p;
        while (e) {
            if (e & 1)
                acc = acc * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return acc;
    };

    std::size_t rk = 0;
    for (std::size_t col = 0; col < cols && rk < rows; ++col) {
        std::size_t piv = rk;
        while (piv < rows && a[piv * cols + col] == 0)
            ++piv;
        if (piv == rows)
            continue;
        if (piv != rk)
            for (std::size_t j = col; j < cols; ++j)
                std::swap(a[piv * cols + j], a[rk * cols + j]);
        const std::uint64_t inv = inv_mod(a[rk * cols + col]);
        for (std::size_t i = rk + 1; i < rows; ++i) {
            const std::uint64_t f = a[i * cols + col];
            if (f == 0)
                continue;
            const std::uint64_t c = f * inv % p;
            for (std::size_t j = col; j < cols; ++j)
                a[i * cols + j] = (a[i * cols + j] + (p - c) * a[rk * cols + j]) % p;
        }
        ++rk;
    }
    return rk;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
    if (!m.is_square())
        throw DimensionError("inverse of a non-square matrix");
    SmithForm snf = smith_normal_form(m);
    if (snf.rank != m.rows() ||
        std::any_of(snf.invariant_factors.begin(), snf.invariant_factors.end(),
                    [](const Integer& f) { return f != 1; }))
        throw ArgumentError("matrix is not unimodular, no integer inverse");
    // U m V = I  =>  m^{-1} = V U.
    return snf.right_transform * snf.left_transform;
}

IntMatrix matrix_power(const IntMatrix& m, unsigned long long e) {
    if (!m.is_square())
        throw DimensionError("power of a non-square matrix");
    IntMatrix acc = IntMatrix::identity(m.rows());
    IntMatrix base = m;
    while (e) {
        if (e & 1)
            acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

IntMatrix primitive_left_annihilator(const IntMatrix& m) {
    SmithForm snf = smith_normal_form(m);
    if (snf.rank >= m.rows())
        throw ArgumentError("matrix has full row rank, left kernel is trivial");
    // Row `rank` of the left transform annihilates m and, being a row of a
    // unimodular matrix, is primitive.
    IntMatrix v(1, m.rows());
    for (std::size_t j = 0; j < m.rows(); ++j)
        v(0, j) = snf.left_transform(snf.rank, j);
    return v;
}

}  // namespace milfib
