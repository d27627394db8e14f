#pragma once

// Polyomino ideals: inner minors, the cell lattice, admissible labelings
// and their lattice, and the balanced / prime / dimension decisions.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "polyideal/grid.hpp"
#include "polyideal/groebner.hpp"
#include "polyideal/intlat.hpp"

namespace polyideal {

// Variable index of a vertex is its position in Polyomino::vertices().
alg::VariableNamer vertex_namer(const Polyomino& p);

// Integer labels on V(P), indexed like Polyomino::vertices().
class Labeling {
public:
    Labeling() = default;
    explicit Labeling(std::size_t vertex_count) : values_(vertex_count, 0) {}
    explicit Labeling(std::vector<std::int64_t> values) : values_(std::move(values)) {}
    // Throws Error(InvalidArgument) for points outside V(P).
    static Labeling from_points(const Polyomino& p, const std::map<Point, std::int64_t>& values);
    static Labeling from_vector(const lat::IntVector& v);

    std::size_t size() const { return values_.size(); }
    std::int64_t operator[](std::size_t k) const { return values_[k]; }
    std::int64_t& operator[](std::size_t k) { return values_[k]; }
    const std::vector<std::int64_t>& values() const { return values_; }
    bool is_zero() const;

    std::map<Point, std::int64_t> by_point(const Polyomino& p) const;
    lat::IntVector to_vector() const;

    friend Labeling operator+(const Labeling& a, const Labeling& b);
    friend Labeling operator-(const Labeling& a, const Labeling& b);
    friend Labeling operator*(std::int64_t k, const Labeling& a);
    friend bool operator==(const Labeling&, const Labeling&) = default;

private:
    std::vector<std::int64_t> values_;
};

// x_lower * x_upper - x_(lower.i, upper.j) * x_(upper.i, lower.j)
alg::Polynomial inner_minor(const Polyomino& p, const InnerInterval& interval);
alg::IdealGens inner_minors(const Polyomino& p);

// One row b_C per cell, in cell order, over the vertex coordinates.
lat::LatticeBasis cell_lattice_basis(const Polyomino& p);

// Coordinates of v in the cell basis by triangular elimination: processing
// vertices lexicographically (by i, then j), the first vertex of b_C is the
// lower left corner of C.
std::optional<lat::IntVector> cell_coordinates(const Polyomino& p, const lat::IntVector& v);

// One 0/1 row per maximal horizontal, then vertical, edge interval.
lat::IntMatrix admissible_matrix(const Polyomino& p);

bool is_admissible(const Polyomino& p, const Labeling& alpha);

// Labeling whose binomial is the inner minor of a single cell.
Labeling cell_labeling(const Polyomino& p, Point cell);

// f_alpha = prod_{alpha>0} x^alpha - prod_{alpha<0} x^-alpha.
// Throws Error(ZeroLabeling).
alg::Polynomial labeling_binomial(const Labeling& alpha);

// Inverse of labeling_binomial for pure difference binomials with coprime
// terms. Throws Error(InvalidArgument) otherwise.
Labeling binomial_to_labeling(const alg::Polynomial& f, std::size_t nvars);

// Saturated integer kernel of the admissible matrix.
lat::LatticeBasis admissible_lattice(const Polyomino& p);

// Saturation of (f_b : b in basis) by all variables.
alg::IdealGens lattice_ideal(const Polyomino& p, const lat::LatticeBasis& basis,
                             const alg::GroebnerOptions& options = {});

struct BalancedReport {
    enum class Witness { RankMismatch, GeneratorOutside, SharedBasis };

    bool balanced = false;
    Witness witness = Witness::RankMismatch;
    std::size_t admissible_rank = 0;
    std::size_t cell_count = 0;
    // Set for GeneratorOutside.
    std::optional<alg::Polynomial> outside_generator;
    // Set for SharedBasis: the common reduced canonical basis.
    std::vector<alg::Polynomial> shared_basis;
};

BalancedReport is_balanced(const Polyomino& p, const alg::GroebnerOptions& options = {});

struct PrimeReport {
    bool prime = false;
    std::size_t ideal_basis_size = 0;
    std::size_t saturation_basis_size = 0;
    // An element of the saturation outside I_P when not prime.
    std::optional<alg::Polynomial> witness;
};

// I_P is prime iff it equals its saturation by the product of all variables.
PrimeReport primality(const Polyomino& p, const alg::GroebnerOptions& options = {});
inline bool is_prime(const Polyomino& p) { return primality(p).prime; }

// Krull dimension of K[P], read off the canonical initial ideal.
std::size_t dimension(const Polyomino& p, const alg::GroebnerOptions& options = {});

}  // namespace polyideal
