#include "fieldpair/sampler.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

namespace fieldpair {

namespace {

Outcome draw(double p_plus, Rng &rng) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  return u01(rng) < p_plus ? Outcome::Plus : Outcome::Minus;
}

double binomial_se(double p, std::uint64_t n) { return std::sqrt(std::max(0.0, p * (1.0 - p)) / n); }

} // namespace

TrialRecord sample_pair(const JointSetting &s, Rng &rng, AnchorPolicy anchor, ConditionalReading reading) {
  Wing wing = Wing::First;
  switch (anchor) {
  case AnchorPolicy::FairCoin:
    wing = std::bernoulli_distribution(0.5)(rng) ? Wing::First : Wing::Second;
    break;
  case AnchorPolicy::First:
    wing = Wing::First;
    break;
  case AnchorPolicy::Second:
    wing = Wing::Second;
    break;
  }
  const SurfacePoint r1 = uniform_sample(rng);
  const SurfacePoint r2 = r1.reflected();
  if (wing == Wing::First) {
    const Outcome e1 = elementary_outcome(s.a, Particle{r1});
    const Outcome e2 = draw(alpha_conditional({s.a, s.b, branch_of(s.a, r2)}, reading), rng);
    return TrialRecord{s, s.a, r1, e1, e2};
  }
  const Outcome e2 = elementary_outcome(s.b, Particle{r2});
  const Outcome e1 = draw(alpha_conditional({s.b, s.a, branch_of(s.b, r1)}, reading), rng);
  return TrialRecord{s, s.b, r1, e1, e2};
}

TrialRecord naive_baseline_pair(const JointSetting &s, const UPolicy &policy, Rng &rng) {
  Axis u = policy.u;
  if (policy.kind == UPolicy::Kind::Uniform) {
    u = Axis(std::uniform_real_distribution<double>(0.0, 2.0 * kPi)(rng));
  }
  const SurfacePoint r1 = uniform_sample(rng);
  const SurfacePoint r2 = r1.reflected();
  const Outcome e1 = draw(alpha_conditional({u, s.a, branch_of(u, r1)}), rng);
  const Outcome e2 = draw(alpha_conditional({u, s.b, branch_of(u, r2)}), rng);
  return TrialRecord{s, u, r1, e1, e2};
}

double naive_correlation(const JointSetting &s, const UPolicy &policy) {
  if (policy.kind == UPolicy::Kind::Uniform) {
    return -0.5 * std::cos(s.a.theta() - s.b.theta());
  }
  const double u = policy.u.theta();
  return -std::cos(u - s.a.theta()) * std::cos(u - s.b.theta());
}

JointDistribution RunStats::joint() const {
  JointDistribution d;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      d.p[i][j] = static_cast<double>(counts[i][j]) / static_cast<double>(n);
    }
  }
  return d;
}

JointDistribution RunStats::standard_errors() const {
  const JointDistribution d = joint();
  JointDistribution se;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      se.p[i][j] = binomial_se(d.p[i][j], n);
    }
  }
  return se;
}

std::array<double, 2> RunStats::marginal(Wing wing) const {
  const JointDistribution d = joint();
  if (wing == Wing::First) {
    return {d.p[0][0] + d.p[0][1], d.p[1][0] + d.p[1][1]};
  }
  return {d.p[0][0] + d.p[1][0], d.p[0][1] + d.p[1][1]};
}

double RunStats::marginal_standard_error(Wing wing) const { return binomial_se(marginal(wing)[0], n); }

double RunStats::correlation() const { return joint().correlation(); }

double RunStats::correlation_standard_error() const {
  const double e = correlation();
  return std::sqrt(std::max(0.0, 1.0 - e * e) / static_cast<double>(n));
}

Rng block_stream(std::uint64_t seed, std::uint64_t block) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
  return Rng(seq);
}

namespace {

TrialRecord draw_trial(const JointSetting &s, Rng &rng, const RunOptions &options) {
  return options.kind == SamplerKind::Model ? sample_pair(s, rng, options.anchor, options.reading)
                                            : naive_baseline_pair(s, options.u_policy, rng);
}

} // namespace

std::vector<TrialRecord> generate_trials(const JointSetting &s, std::uint64_t n, std::uint64_t seed,
                                         const RunOptions &options) {
  if (n == 0) {
    throw std::invalid_argument("generate_trials: need at least one trial");
  }
  std::vector<TrialRecord> out;
  out.reserve(n);
  for (std::uint64_t block = 0; block * kBlockTrials < n; ++block) {
    Rng rng = block_stream(seed, block);
    const std::uint64_t end = std::min(n, (block + 1) * kBlockTrials);
    for (std::uint64_t i = block * kBlockTrials; i < end; ++i) {
      out.push_back(draw_trial(s, rng, options));
    }
  }
  return out;
}

RunStats run_experiment(const JointSetting &s, std::uint64_t n, std::uint64_t seed, const RunOptions &options) {
  if (n == 0) {
    throw std::invalid_argument("run_experiment: need at least one trial");
  }
  const std::uint64_t blocks = (n + kBlockTrials - 1) / kBlockTrials;
  unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, blocks));

  RunStats stats;
  stats.setting = s;
  stats.n = n;
  stats.seed = seed;

  std::atomic<std::uint64_t> next_block{0};
  std::mutex merge_mutex;
  auto worker = [&] {
    std::array<std::array<std::uint64_t, 2>, 2> local{};
    for (std::uint64_t block = next_block++; block < blocks; block = next_block++) {
      Rng rng = block_stream(seed, block);
      const std::uint64_t begin = block * kBlockTrials;
      const std::uint64_t end = std::min(n, begin + kBlockTrials);
      for (std::uint64_t i = begin; i < end; ++i) {
        const TrialRecord t = draw_trial(s, rng, options);
        ++local[JointDistribution::index(t.epsilon1)][JointDistribution::index(t.epsilon2)];
      }
    }
    std::lock_guard lock(merge_mutex);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        stats.counts[i][j] += local[i][j];
      }
    }
  };

  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back(worker);
    }
  }
  return stats;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double chsh_value(const std::array<double, 4> &e) { return std::abs(e[0] - e[1]) + std::abs(e[2] + e[3]); }

ChshResult chsh(const ChshAngles &angles, ChshMode mode, std::uint64_t n, std::uint64_t seed,
                const RunOptions &options) {
  ChshResult r;
  const auto settings = angles.settings();
  for (std::size_t k = 0; k < settings.size(); ++k) {
    if (mode == ChshMode::Analytic) {
      r.correlations[k] = options.kind == SamplerKind::Model ? correlation(settings[k])
                                                             : naive_correlation(settings[k], options.u_policy);
    } else {
      const RunStats stats = run_experiment(settings[k], n, derive_seed(seed, k), options);
      r.correlations[k] = stats.correlation();
      r.standard_errors[k] = stats.correlation_standard_error();
    }
  }
  r.s = chsh_value(r.correlations);
  double var = 0.0;
  for (double se : r.standard_errors) {
    var += se * se;
  }
  r.s_standard_error = std::sqrt(var);
  return r;
}

} // namespace fieldpair
