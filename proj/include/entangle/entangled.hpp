#pragma once

#include <vector>

#include "entangle/partition.hpp"
#include "entangle/spectral.hpp"

namespace entangle {

/// Cost ceilings for the tuple sums. The time-domain engine is gated on an
/// estimated flop count, the spectral engines on the number of cluster
/// assignments enumerated.
struct CostCeilings {
    double flopCeiling = 1e9;
    double tupleCeiling = 1e7;

    /// Applies the ERGODIC_ENTANGLE_CEILING environment override, if set.
    static CostCeilings fromEnv(CostCeilings base = {});
};

/// One problem instance: a decomposed unitary, the operator tuple
/// A_1..A_{m-1}, and the partition tying the U-exponents together.
struct EntangledSystem {
    SpectralDecomposition sd;
    std::vector<Matrix> ops;
    Partition partition;
};

/// Validates dimensions (all ops d x d, ops count = m - 1) and returns the
/// assembled system.
EntangledSystem makeSystem(SpectralDecomposition sd, std::vector<Matrix> ops,
                           Partition partition);

/// A cluster assignment (one cluster per U-position) together with its
/// per-class eigenvalue products.
struct ResonanceTuple {
    std::vector<int> assignment;
    std::vector<Complex> classProducts;
};

/// K_N(mu) = (1/N) sum_{n<N} mu^n. Closed form away from mu = 1, compensated
/// direct summation near it. Requires |mu| within 1e-6 of 1.
Complex cesaroKernel(Complex mu, long n);

/// Literal evaluation of the multiple Cesaro mean
///   (1/N^k) sum_{n_1..n_k < N} U^{n_a(1)} A_1 U^{n_a(2)} ... A_{m-1} U^{n_a(m)}
/// from precomputed powers of U.
Matrix averageTimeDomain(const EntangledSystem& sys, const Matrix& u, long n,
                         const CostCeilings& ceilings = CostCeilings::fromEnv());

/// The same average evaluated spectrally: sum over cluster assignments of
/// prod_j K_N(mu_j) times the projection chain E_{c_1} A_1 ... A_{m-1} E_{c_m}.
Matrix averageKernel(const EntangledSystem& sys, long n,
                     const CostCeilings& ceilings = CostCeilings::fromEnv());

/// Closed-form weak limit for pair partitions: the sum over k-tuples from
/// the adjoint part of the spectrum of projection chains where the first
/// occurrence of class j carries E_{z_j} and the second E_{conj(z_j)}.
Matrix limitPairPartition(const EntangledSystem& sys,
                          const CostCeilings& ceilings = CostCeilings::fromEnv());

struct GeneralLimit {
    Matrix limit;
    std::vector<ResonanceTuple> tuples;  // the resonant assignments
};

/// Weak limit for arbitrary partitions: only assignments whose class
/// products all lie within epsRes of 1 survive.
GeneralLimit limitGeneral(const EntangledSystem& sys, double epsRes = kDefaultEpsRes,
                          const CostCeilings& ceilings = CostCeilings::fromEnv());

/// Triangle-inequality bound: sum over all assignments of
/// |prod_j K_N(mu_j) - indicator(resonant)| * ||chain||_F. Dominates
/// ||averageKernel(N) - limitGeneral|| exactly.
double analyticErrorBound(const EntangledSystem& sys, long n,
                          double epsRes = kDefaultEpsRes,
                          const CostCeilings& ceilings = CostCeilings::fromEnv());

/// Minimum |1 - mu_j| over non-resonant class products; +inf when every
/// assignment is resonant. Controls the 1/N convergence constant.
double nonResonantGap(const EntangledSystem& sys, double epsRes = kDefaultEpsRes,
                      const CostCeilings& ceilings = CostCeilings::fromEnv());

struct BoundCheck {
    double lhs;  // |<S_alpha x, y>|
    double rhs;  // ||x|| ||y|| prod_j ||A_j||_op
};

/// The uniform sesquilinear bound for pair partitions; lhs <= rhs up to
/// 1e-6 relative slack.
BoundCheck lemma1BoundCheck(const EntangledSystem& sys, const Vector& x,
                            const Vector& y);

/// Result of deleting the pair class that contains the last position, with
/// E_{conj(z0)} folded in. The sesquilinear identity reads
///   <S_orig x, y> = <S_reduced (xTransform x), yTransform y>
/// for every x in the eigenspace identified by eigIndex.
struct ReducedSystem {
    EntangledSystem system;
    Matrix xTransform;
    Matrix yTransform;
};

ReducedSystem reducePartition(const EntangledSystem& sys, int eigIndex);

/// Residuals of the three four-element pair-partition factorizations in the
/// almost periodic case:
///   (1,1,2,2) -> sA(A) B sA(C)
///   (1,2,2,1) -> sA(A sA(B) C)
///   (1,2,1,2) -> sum_{z,w} E_z A E_w B E_conj(z) C E_conj(w)
struct QperReport {
    double residual1122;
    double residual1221;
    double residual1212;
    double maxResidual() const;
};

QperReport qperIdentities(const SpectralDecomposition& sd, const Matrix& a,
                          const Matrix& b, const Matrix& c);

}  // namespace entangle
