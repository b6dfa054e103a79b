#pragma once

#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lcsm {

// Analytic FLOP charges. These are size formulas, not hardware counters:
// a direct tile costs 2*L1*L2 per channel-lane, a DFT of order n costs
// 5*n*log2(n) per channel-lane; pointwise complex products cost 6 per element.
std::uint64_t dft_flops(std::size_t order);

/// Exact counters for one run. Histograms are indexed by q = log2(tile side).
/// Count updates are atomic so concurrent gray tiles may share a ledger;
/// timers are single-writer (the engine's orchestration thread).
class Ledger {
 public:
  static constexpr std::size_t kMaxQ = 48;

  void count_tau(std::size_t side, std::uint64_t channel_lanes, std::uint64_t flops);
  void count_dft(std::size_t order, std::uint64_t lanes);
  void count_strip_macs(std::uint64_t macs);  // lazy/eager, per channel-lane granularity
  void count_red(std::uint64_t channel_lanes);
  void count_positions(std::uint64_t n);
  void count_block_flops(std::uint64_t flops);
  void report_scratch_peak(std::uint64_t live_doubles);

  void add_timer_ns(const std::string& name, std::uint64_t ns);
  std::uint64_t timer_ns(const std::string& name) const;

  // Plain-value snapshot of the counters.
  struct Counts {
    std::map<std::size_t, std::uint64_t> tau_invocations;    // side -> batched calls
    std::map<std::size_t, std::uint64_t> tau_channel_calls;  // side -> per channel-lane calls
    std::uint64_t dft_calls = 0;
    std::uint64_t mixer_flops = 0;
    std::uint64_t block_flops = 0;
    std::uint64_t strip_macs = 0;
    std::uint64_t red_updates = 0;
    std::uint64_t positions_accessed = 0;
    std::uint64_t scratch_peak = 0;
    std::map<std::string, std::uint64_t> timers_ns;

    std::uint64_t total_tau_invocations() const;
  };
  Counts snapshot() const;

 private:
  std::array<std::atomic<std::uint64_t>, kMaxQ> tau_invocations_{};
  std::array<std::atomic<std::uint64_t>, kMaxQ> tau_channel_calls_{};
  std::atomic<std::uint64_t> dft_calls_{0};
  std::atomic<std::uint64_t> mixer_flops_{0};
  std::atomic<std::uint64_t> block_flops_{0};
  std::atomic<std::uint64_t> strip_macs_{0};
  std::atomic<std::uint64_t> red_updates_{0};
  std::atomic<std::uint64_t> positions_accessed_{0};
  std::atomic<std::uint64_t> scratch_peak_{0};
  std::map<std::string, std::uint64_t> timers_ns_;
};

/// Monotonic stopwatch accumulating into a raw nanosecond counter.
class StopWatch {
 public:
  void start() { t0_ = std::chrono::steady_clock::now(); }
  std::uint64_t stop() {
    const auto t1 = std::chrono::steady_clock::now();
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0_).count());
  }

 private:
  std::chrono::steady_clock::time_point t0_{};
};

/// One row per generated token.
struct BenchRecord {
  std::string run_id;
  std::string mode;
  std::string impl;
  std::uint64_t B = 0, M = 0, D = 0, L = 0;
  std::uint64_t token_index = 0;
  std::uint64_t tile_side = 0;  // 0 on the final token (no gray tile)
  std::uint64_t mixer_duration = 0;  // ns
  std::uint64_t block_duration = 0;  // ns
  std::uint64_t total_duration = 0;  // ns
  std::uint64_t flops_cumulative = 0;

  bool operator==(const BenchRecord&) const = default;
};

void write_records_csv(std::ostream& os, const std::vector<BenchRecord>& records);
void write_records_jsonl(std::ostream& os, const std::vector<BenchRecord>& records);
std::vector<BenchRecord> parse_records_csv(std::istream& is);

enum class RunKind { Relaxed, Lazy, Eager };

struct AuditReport {
  bool pass = false;
  std::string table;  // expected-vs-actual rows on failure, summary on success
};

/// Checks the ledger against the exact per-side call counts: relaxed runs must
/// show M * 2^(P-1-q) invocations of side 2^q (and channels_per_call times
/// that many channel calls); lazy/eager runs must show zero tau calls and
/// M * channels_per_call * L(L+1)/2 strip multiply-adds.
AuditReport audit_counts(const Ledger::Counts& counts, std::size_t L, std::size_t M,
                         std::size_t channels_per_call, RunKind kind);

}  // namespace lcsm
