#pragma once

// Explicit membership proofs f_alpha in I_P for tree-like polyominoes,
// replaying the good-leaf induction one inner minor at a time.

#include <vector>

#include "polyideal/grid.hpp"
#include "polyideal/polyideal.hpp"

namespace polyideal {

struct CertificateStep {
    int sign = 1;
    alg::Monomial multiplier;
    InnerInterval minor;  // in the coordinates of P
};

// f_alpha = sum over steps of sign * multiplier * inner_minor(P, minor).
struct Certificate {
    Labeling alpha;
    alg::Polynomial target;  // f_alpha, or zero for the zero labeling
    std::vector<CertificateStep> steps;
};

// Throws Error(NotTreeLike) or Error(NotAdmissible).
Certificate balanced_certificate_treelike(const Polyomino& p, const Labeling& alpha);

// The right-hand side of the certificate, summed out.
alg::Polynomial expand_certificate(const Polyomino& p, const Certificate& cert);

}  // namespace polyideal
