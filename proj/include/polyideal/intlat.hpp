#pragma once

// Exact integer linear algebra: Hermite and Smith normal forms with their
// unimodular transforms, integer kernels and lattice membership.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace polyideal::lat {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVector row(std::size_t r) const;
    void append_row(const IntVector& v);
    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    void negate_row(std::size_t r);

    IntMatrix transpose() const;
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& m);

struct HermiteForm {
    IntMatrix h;  // row echelon, positive pivots, entries above pivots in [0, pivot)
    IntMatrix u;  // unimodular, u * m == h
    std::vector<std::size_t> pivot_cols;
    std::size_t rank() const { return pivot_cols.size(); }
};

HermiteForm hermite_normal_form(const IntMatrix& m);

struct SmithForm {
    IntMatrix d;      // diagonal, d_k | d_{k+1}, nonnegative
    IntMatrix left;   // unimodular
    IntMatrix right;  // unimodular, left * m * right == d
    std::vector<Integer> invariant_factors;  // the nonzero diagonal entries
};

SmithForm smith_normal_form(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

// Rows are the basis vectors, linearly independent over Q.
struct LatticeBasis {
    IntMatrix vectors;

    std::size_t rank() const { return vectors.rows(); }
    std::size_t ambient_dimension() const { return vectors.cols(); }
};

// Basis of the integer kernel {v : m v = 0}, in Hermite normal form.
LatticeBasis kernel_basis(const IntMatrix& m);

// Integer x with x * basis == v, or nullopt when v is outside the lattice.
std::optional<IntVector> lattice_coordinates(const LatticeBasis& basis, const IntVector& v);

// The quotient Z^n / L is torsion free.
bool is_saturated(const LatticeBasis& basis);

}  // namespace polyideal::lat
