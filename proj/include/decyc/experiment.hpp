#pragma once

// Random-graph harness: samples configuration-model cubic graphs and counts
// how many are upper-embeddable and admit stable and coherent partitions.

#include "decyc/decycling.hpp"
#include "decyc/generators.hpp"

#include <chrono>
#include <future>
#include <thread>

namespace decyc {

struct ExperimentCounts {
  int samples = 0;
  int connected = 0;
  int classified = 0;  // embeddability decided
  int upper_embeddable = 0;
  int stable_found = 0;
  int coherent_found = 0;
  int coherent_none = 0;     // proven absent
  int coherent_unknown = 0;  // budget ran out

  ExperimentCounts& operator+=(const ExperimentCounts& o) {
    samples += o.samples;
    connected += o.connected;
    classified += o.classified;
    upper_embeddable += o.upper_embeddable;
    stable_found += o.stable_found;
    coherent_found += o.coherent_found;
    coherent_none += o.coherent_none;
    coherent_unknown += o.coherent_unknown;
    return *this;
  }

  friend bool operator==(const ExperimentCounts&, const ExperimentCounts&) = default;

  bool monotone() const {
    return coherent_found <= stable_found && stable_found <= upper_embeddable && upper_embeddable <= classified &&
           classified <= connected && connected <= samples;
  }
};

struct ExperimentReport {
  int n = 0;
  std::uint64_t first_seed = 0;
  std::uint64_t last_seed = 0;
  ExperimentCounts counts;
  double total_ms = 0;
  double max_sample_ms = 0;

  double upper_fraction() const { return counts.samples ? double(counts.upper_embeddable) / counts.samples : 0; }
  double coherent_fraction() const { return counts.samples ? double(counts.coherent_found) / counts.samples : 0; }
};

struct ExperimentOptions {
  int n = 12;
  int samples = 100;
  std::uint64_t seed = 0;
  int workers = 0;  // 0 = hardware concurrency
  PartitionOptions partition;
};

namespace detail {

inline ExperimentCounts run_sample(int n, std::uint64_t seed, const PartitionOptions& opt) {
  ExperimentCounts c;
  c.samples = 1;
  CubicGraph g = random_cubic(n, seed, true);
  if (!is_connected(g)) return c;
  c.connected = 1;
  auto cls = classify_upper_embeddable(g, opt.genus);
  if (cls.face == FaceClass::Unknown) return c;
  c.classified = 1;
  if (cls.face == FaceClass::NotUpperEmbeddable) return c;
  c.upper_embeddable = 1;
  auto st = find_stable_partition(g, opt);
  if (st.status != SearchStatus::Found) return c;
  c.stable_found = 1;
  auto co = find_coherent_partition(g, opt);
  if (co.status == SearchStatus::Found) c.coherent_found = 1;
  else if (co.status == SearchStatus::NoneExists) c.coherent_none = 1;
  else c.coherent_unknown = 1;
  return c;
}

}  // namespace detail

/// Sample i uses seed + i; workers take interleaved indices and the counts
/// are summed, so the report does not depend on the worker count.
inline ExperimentReport run_experiment(const ExperimentOptions& opt) {
  require(opt.samples >= 0, Errc::InvalidArgument, "sample count must be nonnegative");
  require(opt.n >= 4 && opt.n % 2 == 0, Errc::InvalidArgument, "n must be even and at least 4");
  int workers = opt.workers > 0 ? opt.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = std::max(1, std::min(workers, opt.samples));
  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::future<std::pair<ExperimentCounts, double>>> jobs;
  for (int w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&opt, w, workers] {
      ExperimentCounts c;
      double worst = 0;
      for (int i = w; i < opt.samples; i += workers) {
        auto s0 = std::chrono::steady_clock::now();
        c += detail::run_sample(opt.n, opt.seed + static_cast<std::uint64_t>(i), opt.partition);
        worst = std::max(worst, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - s0).count());
      }
      return std::pair{c, worst};
    }));
  }
  ExperimentReport r;
  r.n = opt.n;
  r.first_seed = opt.seed;
  r.last_seed = opt.samples ? opt.seed + opt.samples - 1 : opt.seed;
  for (auto& j : jobs) {
    auto [c, worst] = j.get();
    r.counts += c;
    r.max_sample_ms = std::max(r.max_sample_ms, worst);
  }
  r.total_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace decyc
