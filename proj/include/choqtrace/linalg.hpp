#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "choqtrace/errors.hpp"

namespace choqtrace {

using cplx = std::complex<double>;

/// Dense complex square matrix, row-major. Plain storage for unitaries and
/// other non-Hermitian intermediates.
struct ComplexMatrix {
    std::size_t size = 0;
    std::vector<cplx> entries; // size*size, row-major

    cplx operator()(std::size_t i, std::size_t j) const { return entries[i * size + j]; }
    cplx& operator()(std::size_t i, std::size_t j) { return entries[i * size + j]; }
};

ComplexMatrix identity_matrix(std::size_t n);

/// Hermitian matrix with the self-adjointness invariant checked on construction
/// (|a_ij - conj(a_ji)| <= 1e-12) and then enforced exactly by symmetrizing.
class HermitianMatrix {
public:
    explicit HermitianMatrix(std::size_t size); // zero matrix
    HermitianMatrix(std::size_t size, std::vector<cplx> entries);

    static HermitianMatrix diagonal(const std::vector<double>& d);

    std::size_t size() const { return size_; }
    cplx operator()(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }
    const std::vector<cplx>& entries() const { return entries_; }

    double frobenius_norm() const;
    double max_abs() const;
    /// Sum of diagonal entries (real part; imaginary part vanishes by construction).
    double trace() const;

private:
    std::size_t size_;
    std::vector<cplx> entries_;
};

/// Eigenvalues in non-increasing order with multiplicity.
struct SpectralData {
    std::vector<double> eigenvalues;
    std::size_t size = 0;
};

/// Full Hermitian eigendecomposition: eigenvalues non-increasing, the columns
/// of `vectors` are the matching orthonormal eigenvectors.
struct EigenDecomposition {
    std::vector<double> eigenvalues;
    ComplexMatrix vectors;
};

/// Cyclic Jacobi eigensolver for Hermitian matrices. Convergence: off-diagonal
/// Frobenius norm <= 1e-13*(1+||m||_F), at most 60 sweeps, non-convergence is
/// a hard error.
EigenDecomposition eigh(const HermitianMatrix& m);

SpectralData eigvalsh(const HermitianMatrix& m);

/// True iff the smallest eigenvalue is >= -tol. Callers treat eigenvalues in
/// [-tol, 0) as 0.
bool is_positive(const HermitianMatrix& m, double tol);

/// Distinct spectral values after merging tolerance-level gaps, plus cumulative
/// multiplicity counts. cumulative_counts[j] = #eigenvalues in clusters 0..j.
struct ClusteredSpectrum {
    std::vector<double> distinct;                 // decreasing
    std::vector<std::size_t> cumulative_counts;   // strictly increasing, ends at size
};

/// Gap rule: consecutive sorted eigenvalues with gap <= tol fall into one
/// cluster, represented by the cluster's leading (largest) value.
ClusteredSpectrum cluster_spectrum(const SpectralData& s, double tol);

/// Deterministic Haar-like unitary: QR of a seeded complex Gaussian matrix.
ComplexMatrix random_unitary(std::size_t size, std::uint64_t seed);

/// Deterministic random positive semidefinite matrix, operator norm <= norm_bound.
HermitianMatrix random_psd(std::size_t size, std::uint64_t seed, double norm_bound);

/// Rebuilds V * diag(values) * V^* as a Hermitian matrix.
HermitianMatrix assemble_hermitian(const ComplexMatrix& vectors, const std::vector<double>& values);

/// max_ij |UU^* - I|; unitarity defect used in validation and tests.
double unitarity_defect(const ComplexMatrix& u);

} // namespace choqtrace
