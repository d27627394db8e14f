#include "polyideal/intlat.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace polyideal::lat {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntMatrix m(0, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

IntVector IntMatrix::row(std::size_t r) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void IntMatrix::append_row(const IntVector& v) {
    if (v.size() != cols_) throw std::invalid_argument("row length does not match column count");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimensions do not agree");
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(r, k) == 0) continue;
            for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += a(r, k) * b(k, c);
        }
    return out;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string IntMatrix::to_string() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        out << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cols_; ++c) out << (c ? "," : "") << (*this)(r, c).get_str();
        out << "]";
    }
    out << "]";
    return out.str();
}

Integer determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && a(r, k) == 0) ++r;
            if (r == n) return 0;
            a.swap_rows(k, r);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = v;
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

namespace {

// Floor division, so remainders land in [0, |d|) for positive d.
Integer floor_div(const Integer& a, const Integer& d) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return q;
}

}  // namespace

HermiteForm hermite_normal_form(const IntMatrix& m) {
    HermiteForm out{m, IntMatrix::identity(m.rows()), {}};
    IntMatrix& h = out.h;
    IntMatrix& u = out.u;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < h.cols() && pivot_row < h.rows(); ++c) {
        // Euclid on column c below pivot_row until one nonzero entry remains.
        while (true) {
            std::size_t best = h.rows();
            for (std::size_t r = pivot_row; r < h.rows(); ++r)
                if (h(r, c) != 0 && (best == h.rows() || abs(h(r, c)) < abs(h(best, c)))) best = r;
            if (best == h.rows()) break;
            h.swap_rows(pivot_row, best);
            u.swap_rows(pivot_row, best);
            bool done = true;
            for (std::size_t r = pivot_row + 1; r < h.rows(); ++r) {
                if (h(r, c) == 0) continue;
                Integer q = h(r, c) / h(pivot_row, c);  // truncating
                h.add_row_multiple(r, pivot_row, -q);
                u.add_row_multiple(r, pivot_row, -q);
                if (h(r, c) != 0) done = false;
            }
            if (done) break;
        }
        if (h(pivot_row, c) == 0) continue;
        if (h(pivot_row, c) < 0) {
            h.negate_row(pivot_row);
            u.negate_row(pivot_row);
        }
        for (std::size_t r = 0; r < pivot_row; ++r) {
            Integer q = floor_div(h(r, c), h(pivot_row, c));
            h.add_row_multiple(r, pivot_row, -q);
            u.add_row_multiple(r, pivot_row, -q);
        }
        out.pivot_cols.push_back(c);
        ++pivot_row;
    }
    return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
    SmithForm out{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()), {}};
    IntMatrix& d = out.d;
    const std::size_t rows = d.rows(), cols = d.cols();
    bool exhausted = false;
    for (std::size_t t = 0; t < std::min(rows, cols) && !exhausted; ++t) {
        while (true) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            std::size_t pr = rows, pc = cols;
            for (std::size_t r = t; r < rows; ++r)
                for (std::size_t c = t; c < cols; ++c)
                    if (d(r, c) != 0 && (pr == rows || abs(d(r, c)) < abs(d(pr, pc)))) {
                        pr = r;
                        pc = c;
                    }
            if (pr == rows) {
                exhausted = true;
                break;
            }
            d.swap_rows(t, pr);
            out.left.swap_rows(t, pr);
            d.swap_cols(t, pc);
            out.right.swap_cols(t, pc);

            bool clean = true;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (d(r, t) == 0) continue;
                Integer q = d(r, t) / d(t, t);
                d.add_row_multiple(r, t, -q);
                out.left.add_row_multiple(r, t, -q);
                clean &= d(r, t) == 0;
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (d(t, c) == 0) continue;
                Integer q = d(t, c) / d(t, t);
                d.add_col_multiple(c, t, -q);
                out.right.add_col_multiple(c, t, -q);
                clean &= d(t, c) == 0;
            }
            if (!clean) continue;

            // Divisibility: fold in any row whose entries the pivot misses.
            std::size_t offender = rows;
            for (std::size_t r = t + 1; r < rows && offender == rows; ++r)
                for (std::size_t c = t + 1; c < cols; ++c)
                    if (d(r, c) % d(t, t) != 0) {
                        offender = r;
                        break;
                    }
            if (offender == rows) break;
            d.add_row_multiple(t, offender, 1);
            out.left.add_row_multiple(t, offender, 1);
        }
        if (exhausted) break;
        if (d(t, t) < 0) {
            d.negate_row(t);
            out.left.negate_row(t);
        }
    }
    for (std::size_t k = 0; k < std::min(rows, cols); ++k)
        if (d(k, k) != 0) out.invariant_factors.push_back(d(k, k));
    return out;
}

std::size_t rank(const IntMatrix& m) { return hermite_normal_form(m).rank(); }

LatticeBasis kernel_basis(const IntMatrix& m) {
    // Rows of U beyond the rank of U * m^T = H are exactly the kernel.
    HermiteForm hf = hermite_normal_form(m.transpose());
    IntMatrix kernel(0, m.cols());
    for (std::size_t r = hf.rank(); r < hf.u.rows(); ++r) kernel.append_row(hf.u.row(r));
    if (kernel.rows() == 0) return LatticeBasis{kernel};
    return LatticeBasis{hermite_normal_form(kernel).h};
}

std::optional<IntVector> lattice_coordinates(const LatticeBasis& basis, const IntVector& v) {
    const IntMatrix& b = basis.vectors;
    if (v.size() != b.cols()) throw std::invalid_argument("vector dimension does not match the lattice");
    HermiteForm hf = hermite_normal_form(b);
    IntVector residual = v;
    IntVector y(hf.rank());
    for (std::size_t k = 0; k < hf.rank(); ++k) {
        const std::size_t c = hf.pivot_cols[k];
        if (residual[c] % hf.h(k, c) != 0) return std::nullopt;
        y[k] = residual[c] / hf.h(k, c);
        for (std::size_t j = 0; j < b.cols(); ++j) residual[j] -= y[k] * hf.h(k, j);
    }
    if (std::any_of(residual.begin(), residual.end(), [](const Integer& x) { return x != 0; })) return std::nullopt;
    // x * b = y * u * b = y * h
    IntVector x(b.rows());
    for (std::size_t k = 0; k < hf.rank(); ++k)
        for (std::size_t r = 0; r < b.rows(); ++r) x[r] += y[k] * hf.u(k, r);
    return x;
}

bool is_saturated(const LatticeBasis& basis) {
    SmithForm s = smith_normal_form(basis.vectors);
    return std::all_of(s.invariant_factors.begin(), s.invariant_factors.end(),
                       [](const Integer& d) { return d == 1; });
}

}  // namespace polyideal::lat
