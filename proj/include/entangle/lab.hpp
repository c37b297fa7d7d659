#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "entangle/entangled.hpp"

namespace entangle {

/// Exact carrier for an eigenphase num/den (mod 1), gcd-reduced with
/// 0 <= num < den. Used to decide resonance without any tolerance.
struct PhaseRational {
    long long num = 0;
    long long den = 1;

    PhaseRational() = default;
    PhaseRational(long long num, long long den);
    static PhaseRational parse(std::string_view text);  // "p/q" or "p"

    double phase() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const PhaseRational& o) const { return num == o.num && den == o.den; }
};

Matrix genDiagonalUnitary(const std::vector<double>& phases);
Matrix genDiagonalUnitary(const std::vector<PhaseRational>& phases);

/// Cyclic shift e_a -> e_{a+1 mod d}; spectrum = d-th roots of unity.
Matrix genShiftUnitary(int d);

/// Haar-distributed unitary: QR of a seeded complex Gaussian matrix with the
/// R diagonal phases absorbed into Q. Deterministic per seed
/// (mt19937_64 + Box-Muller).
Matrix genHaarUnitary(int d, std::uint64_t seed);

enum class OperatorKind { RankOne, Dense, Hermitian };
OperatorKind parseOperatorKind(std::string_view name);

/// Seeded random operator of the requested kind, normalized so that
/// opNormEstimate is 1 within 1e-6.
Matrix genOperator(int d, OperatorKind kind, std::uint64_t seed);

/// The exact set of resonant assignments for a rational-phase diagonal
/// spectrum: class product = 1 iff the scaled numerators sum to 0 mod the
/// common denominator. Throws RangeError when the lcm exceeds 2^31.
std::vector<ResonanceTuple> resonanceTuplesExact(const std::vector<PhaseRational>& phases,
                                                 const Partition& partition);

struct ConvergenceReport {
    std::vector<long> schedule;
    std::vector<double> distances;  // ||averageKernel(N) - limitGeneral||_F
    std::vector<double> bounds;     // analyticErrorBound(N)
    std::optional<double> fittedSlope;  // log-log slope over the tail half
    double resonanceGap = 0.0;
    bool dominationPass = true;  // distances[i] <= bounds[i] for all i
};

std::vector<long> defaultSchedule();  // 8 * 2^i, i = 0..7

ConvergenceReport convergenceStudy(const EntangledSystem& sys,
                                   const std::vector<long>& schedule,
                                   double epsRes = kDefaultEpsRes,
                                   const CostCeilings& ceilings = CostCeilings::fromEnv());

struct SuiteConfig {
    int trials = 100;
    int maxDim = 6;
    int maxPairClasses = 3;
    double epsCluster = kDefaultEpsCluster;
    double epsRes = kDefaultEpsRes;
    std::uint64_t seed = 20681;
    bool negativeControl = false;  // run only the deliberately misclassified config
    CostCeilings ceilings = CostCeilings::fromEnv();
};

struct PropertyResult {
    std::string name;
    bool pass = true;
    double worstResidual = 0.0;
    int trials = 0;
    std::string failingCase;  // serialized seed/inputs for replay, empty if pass
};

struct SuiteReport {
    std::string generator = "mt19937_64+box-muller";
    SuiteConfig config;
    std::vector<PropertyResult> properties;
    bool allPass = true;
};

/// Runs every invariant of the library over seeded instances: spectral
/// resolution, engine agreement, bound domination, pair/general equality,
/// the Lemma-1 bound, the reduction identity, the qper identities, and
/// exact-vs-float resonance agreement (with a negative control).
SuiteReport verifySuite(const SuiteConfig& config);

/// Deterministic random source used by all generators.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    double uniform();   // [0,1)
    double gaussian();  // standard normal, Box-Muller
    Complex gaussianComplex();
    std::uint64_t nextRaw();
    /// Derives an independent stream (for per-trial seeding).
    std::uint64_t deriveSeed(std::uint64_t salt);

  private:
    std::uint64_t splitmix();
    std::uint64_t state_;
    bool haveSpare_ = false;
    double spare_ = 0.0;
};

}  // namespace entangle
