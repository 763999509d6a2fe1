#pragma once

#include "fieldpair/two_party.hpp"

#include <cstdint>

namespace fieldpair {

/// One simulated pair.
struct TrialRecord {
  JointSetting setting;
  Axis u; ///< axis of the field form used for this draw
  SurfacePoint r1;
  Outcome epsilon1;
  Outcome epsilon2;

  SurfacePoint r2() const { return r1.reflected(); }
};

/// Which wing is rewritten into its no-perturbation form.
enum class AnchorPolicy { FairCoin, First, Second };

/// Source axis used by the factorizable baseline.
struct UPolicy {
  enum class Kind { Fixed, Uniform };
  Kind kind = Kind::Uniform;
  Axis u{0.0};

  static UPolicy fixed(Axis u) { return {Kind::Fixed, u}; }
  static UPolicy uniform() { return {Kind::Uniform, Axis{0.0}}; }
};

/// Model draw: r1 uniform, r2 = -r1, anchor outcome from the particle
/// hemisphere, the other wing from the conditional table.
TrialRecord sample_pair(const JointSetting &s, Rng &rng, AnchorPolicy anchor = AnchorPolicy::FairCoin,
                        ConditionalReading reading = ConditionalReading::Corrected);

/// Factorizable baseline: each wing draws independently from the conditional
/// table relative to the shared source axis and its own hemisphere.
TrialRecord naive_baseline_pair(const JointSetting &s, const UPolicy &policy, Rng &rng);

/// Closed-form correlation of the baseline.
double naive_correlation(const JointSetting &s, const UPolicy &policy);

enum class SamplerKind { Model, Naive };

struct RunOptions {
  SamplerKind kind = SamplerKind::Model;
  AnchorPolicy anchor = AnchorPolicy::FairCoin;
  UPolicy u_policy = UPolicy::uniform();
  ConditionalReading reading = ConditionalReading::Corrected;
  unsigned threads = 0; ///< 0 picks std::thread::hardware_concurrency()
};

struct RunStats {
  JointSetting setting;
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  std::array<std::array<std::uint64_t, 2>, 2> counts{}; ///< [eps1][eps2], index 0 is +1

  std::uint64_t count(Outcome e1, Outcome e2) const {
    return counts[JointDistribution::index(e1)][JointDistribution::index(e2)];
  }
  JointDistribution joint() const;
  /// Binomial standard error of each joint entry.
  JointDistribution standard_errors() const;
  std::array<double, 2> marginal(Wing wing) const;
  double marginal_standard_error(Wing wing) const;
  double correlation() const;
  double correlation_standard_error() const;
};

/// Trials per random substream. Substream k covers trials
/// [k * kBlockTrials, (k + 1) * kBlockTrials) whatever the thread count.
inline constexpr std::uint64_t kBlockTrials = std::uint64_t{1} << 16;

/// Independent stream for block `block` of a run seeded with `seed`.
Rng block_stream(std::uint64_t seed, std::uint64_t block);

/// Throws std::invalid_argument for n == 0.
RunStats run_experiment(const JointSetting &s, std::uint64_t n, std::uint64_t seed, const RunOptions &options = {});

/// Every trial of run_experiment(s, n, seed, options) in trial order, drawn
/// from the same block substreams.
std::vector<TrialRecord> generate_trials(const JointSetting &s, std::uint64_t n, std::uint64_t seed,
                                         const RunOptions &options = {});

struct ChshAngles {
  Axis a;
  Axis a2;
  Axis b;
  Axis b2;

  /// Settings in the order (a,b), (a,b2), (a2,b), (a2,b2).
  std::array<JointSetting, 4> settings() const { return {{{a, b}, {a, b2}, {a2, b}, {a2, b2}}}; }
};

enum class ChshMode { Analytic, MonteCarlo };

struct ChshResult {
  std::array<double, 4> correlations{}; ///< E(a,b), E(a,b2), E(a2,b), E(a2,b2)
  std::array<double, 4> standard_errors{};
  double s = 0.0;
  double s_standard_error = 0.0;
};

double chsh_value(const std::array<double, 4> &e);

/// S = |E(a,b) - E(a,b2)| + |E(a2,b) + E(a2,b2)|. Analytic mode ignores n
/// and seed. Setting k of a Monte Carlo run uses seed derive_seed(seed, k).
ChshResult chsh(const ChshAngles &angles, ChshMode mode, std::uint64_t n = 0, std::uint64_t seed = 0,
                const RunOptions &options = {});

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

inline constexpr double kBellBound = 2.0;
inline constexpr double kTsirelsonBound = 2.0 * std::numbers::sqrt2;

} // namespace fieldpair
