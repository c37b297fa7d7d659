#pragma once

#include <optional>
#include <string>
#include <vector>

#include "entangle/numerics.hpp"

namespace entangle {

inline constexpr double kDefaultEpsCluster = 1e-8;  // phase gap, in cycles
inline constexpr double kDefaultEpsRes = 1e-8;      // |z*w - 1| tolerance
inline constexpr double kNearResonanceWarn = 1e-6;

struct SpectralCluster {
    double phase;       // eigenvalue = exp(2*pi*i*phase), phase in [0,1)
    int multiplicity;
    Matrix projection;  // orthogonal projection onto the eigenspace
};

/// Clustered point spectrum of a unitary: orthogonal spectral projections,
/// the subset whose conjugate eigenvalue is also present, and the pairing
/// between an eigenvalue and its conjugate.
struct SpectralDecomposition {
    int dim = 0;
    double epsCluster = kDefaultEpsCluster;
    double epsRes = kDefaultEpsRes;
    std::vector<SpectralCluster> clusters;    // ascending phase
    std::vector<int> adjointPart;             // ascending cluster indices
    std::vector<std::optional<int>> partner;  // involution on adjointPart
    double resonanceGap = 0.0;  // min |z_c z_c' - 1| over non-partnered pairs
    bool illConditionedClustering = false;
    std::vector<std::string> warnings;

    Complex clusterValue(int c) const { return unitPhase(clusters.at(c).phase); }
    int clusterCount() const { return static_cast<int>(clusters.size()); }
    /// sum_c z_c P_c
    Matrix reconstruct() const;
};

/// Groups eigenphases by single-linkage on the circle (wraparound at 1->0)
/// with gap threshold epsCluster; each cluster's projection is the sum of
/// v v† over its orthonormal eigenvectors.
SpectralDecomposition clusterSpectrum(const EigenPairs& ep,
                                      double epsCluster = kDefaultEpsCluster,
                                      double epsRes = kDefaultEpsRes);

struct AdjointPart {
    std::vector<int> indices;
    std::vector<std::optional<int>> partner;
    double resonanceGap = 0.0;
};

/// Clusters c such that some c' satisfies |z_c z_c' - 1| <= epsRes, with the
/// (unique) partner map. Throws ConfigError when epsRes is too coarse for
/// the decomposition's cluster separation to keep partners unambiguous.
AdjointPart adjointSpectrumPart(const SpectralDecomposition& sd, double epsRes);

/// eigUnitary followed by clusterSpectrum.
SpectralDecomposition decomposeUnitary(const Matrix& u,
                                       double tol = kDefaultUnitaryTol,
                                       double epsCluster = kDefaultEpsCluster,
                                       double epsRes = kDefaultEpsRes);

/// S_A = sum over the adjoint part of E_z A E_{conj(z)}.
Matrix sA(const SpectralDecomposition& sd, const Matrix& a);

/// Norm of sum_{c in subset} E_c A E_{partner(c)} x. Checks the Pythagoras
/// identity against the per-term norms (orthogonal ranges) at 1e-9.
double partialSumNorm(const SpectralDecomposition& sd, const Matrix& a,
                      const std::vector<int>& subset, const Vector& x);

}  // namespace entangle
