#pragma once

#include <Eigen/Core>

#include "localspectral/graph.hpp"

namespace lsp {

/// A generalized eigenpair L w = value * D w with w^T D w = 1.
struct Eigenpair {
    double value = 0.0;
    Vector vector;
    double residual = 0.0;  // ||L w - value * D w||
    int iterations = 0;
};

/// Complete generalized spectrum of (L, D): eigenvalues ascending starting at
/// 0, eigenvector columns D-orthonormal.
struct GeneralizedSpectrum {
    Vector eigenvalues;
    Eigen::MatrixXd eigenvectors;  // column i is w_i
};

/// Smallest nontrivial generalized eigenpair (lambda_2, v_2), computed by
/// inverse iteration on D^{-1/2} L D^{-1/2} with the trivial direction
/// deflated, plus Rayleigh-quotient polish. Sign is fixed so the
/// largest-magnitude coordinate of v_2 is positive.
Eigenpair lambda2_v2(const Graph& g, double tol = 1e-10);

/// Dense generalized spectrum; refuses n > 2000.
GeneralizedSpectrum full_spectrum(const Graph& g);

}  // namespace lsp
