#include "lcsm/instrument.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "lcsm/fft.hpp"

namespace lcsm {

std::uint64_t dft_flops(std::size_t order) {
  return 5ull * order * log2_exact(order);
}

void Ledger::count_tau(std::size_t side, std::uint64_t channel_lanes, std::uint64_t flops) {
  const std::size_t q = log2_exact(side);
  tau_invocations_[q].fetch_add(1, std::memory_order_relaxed);
  tau_channel_calls_[q].fetch_add(channel_lanes, std::memory_order_relaxed);
  mixer_flops_.fetch_add(flops, std::memory_order_relaxed);
}

void Ledger::count_dft(std::size_t order, std::uint64_t lanes) {
  (void)order;
  dft_calls_.fetch_add(lanes, std::memory_order_relaxed);
}

void Ledger::count_strip_macs(std::uint64_t macs) {
  strip_macs_.fetch_add(macs, std::memory_order_relaxed);
  mixer_flops_.fetch_add(2 * macs, std::memory_order_relaxed);
}

void Ledger::count_red(std::uint64_t channel_lanes) {
  red_updates_.fetch_add(1, std::memory_order_relaxed);
  mixer_flops_.fetch_add(2 * channel_lanes, std::memory_order_relaxed);
}

void Ledger::count_positions(std::uint64_t n) {
  positions_accessed_.fetch_add(n, std::memory_order_relaxed);
}

void Ledger::count_block_flops(std::uint64_t flops) {
  block_flops_.fetch_add(flops, std::memory_order_relaxed);
}

void Ledger::report_scratch_peak(std::uint64_t live_doubles) {
  std::uint64_t cur = scratch_peak_.load(std::memory_order_relaxed);
  while (cur < live_doubles &&
         !scratch_peak_.compare_exchange_weak(cur, live_doubles, std::memory_order_relaxed)) {
  }
}

void Ledger::add_timer_ns(const std::string& name, std::uint64_t ns) { timers_ns_[name] += ns; }

std::uint64_t Ledger::timer_ns(const std::string& name) const {
  auto it = timers_ns_.find(name);
  return it == timers_ns_.end() ? 0 : it->second;
}

std::uint64_t Ledger::Counts::total_tau_invocations() const {
  std::uint64_t t = 0;
  for (const auto& [side, n] : tau_invocations) t += n;
  return t;
}

Ledger::Counts Ledger::snapshot() const {
  Counts c;
  for (std::size_t q = 0; q < kMaxQ; ++q) {
    const std::uint64_t inv = tau_invocations_[q].load(std::memory_order_relaxed);
    if (inv) c.tau_invocations[std::size_t{1} << q] = inv;
    const std::uint64_t ch = tau_channel_calls_[q].load(std::memory_order_relaxed);
    if (ch) c.tau_channel_calls[std::size_t{1} << q] = ch;
  }
  c.dft_calls = dft_calls_.load(std::memory_order_relaxed);
  c.mixer_flops = mixer_flops_.load(std::memory_order_relaxed);
  c.block_flops = block_flops_.load(std::memory_order_relaxed);
  c.strip_macs = strip_macs_.load(std::memory_order_relaxed);
  c.red_updates = red_updates_.load(std::memory_order_relaxed);
  c.positions_accessed = positions_accessed_.load(std::memory_order_relaxed);
  c.scratch_peak = scratch_peak_.load(std::memory_order_relaxed);
  c.timers_ns = timers_ns_;
  return c;
}

namespace {

constexpr const char* kCsvHeader =
    "run_id,mode,impl,B,M,D,L,token_index,tile_side,mixer_duration,block_duration,"
    "total_duration,flops_cumulative";

}  // namespace

void write_records_csv(std::ostream& os, const std::vector<BenchRecord>& records) {
  os << kCsvHeader << '\n';
  for (const auto& r : records) {
    os << r.run_id << ',' << r.mode << ',' << r.impl << ',' << r.B << ',' << r.M << ',' << r.D
       << ',' << r.L << ',' << r.token_index << ',' << r.tile_side << ',' << r.mixer_duration
       << ',' << r.block_duration << ',' << r.total_duration << ',' << r.flops_cumulative << '\n';
  }
}

void write_records_jsonl(std::ostream& os, const std::vector<BenchRecord>& records) {
  for (const auto& r : records) {
    os << "{\"run_id\":\"" << r.run_id << "\",\"mode\":\"" << r.mode << "\",\"impl\":\"" << r.impl
       << "\",\"B\":" << r.B << ",\"M\":" << r.M << ",\"D\":" << r.D << ",\"L\":" << r.L
       << ",\"token_index\":" << r.token_index << ",\"tile_side\":" << r.tile_side
       << ",\"mixer_duration\":" << r.mixer_duration << ",\"block_duration\":" << r.block_duration
       << ",\"total_duration\":" << r.total_duration << ",\"flops_cumulative\":" << r.flops_cumulative
       << "}\n";
  }
}

std::vector<BenchRecord> parse_records_csv(std::istream& is) {
  std::vector<BenchRecord> out;
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("records csv: missing header");
  if (line != kCsvHeader) throw std::runtime_error("records csv: unexpected header: " + line);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 13) throw std::runtime_error("records csv: bad row: " + line);
    BenchRecord r;
    r.run_id = fields[0];
    r.mode = fields[1];
    r.impl = fields[2];
    r.B = std::stoull(fields[3]);
    r.M = std::stoull(fields[4]);
    r.D = std::stoull(fields[5]);
    r.L = std::stoull(fields[6]);
    r.token_index = std::stoull(fields[7]);
    r.tile_side = std::stoull(fields[8]);
    r.mixer_duration = std::stoull(fields[9]);
    r.block_duration = std::stoull(fields[10]);
    r.total_duration = std::stoull(fields[11]);
    r.flops_cumulative = std::stoull(fields[12]);
    out.push_back(std::move(r));
  }
  return out;
}

AuditReport audit_counts(const Ledger::Counts& counts, std::size_t L, std::size_t M,
                         std::size_t channels_per_call, RunKind kind) {
  AuditReport rep;
  std::ostringstream os;
  bool ok = true;

  if (kind == RunKind::Relaxed) {
    const std::size_t P = log2_exact(L);
    os << "side  expected_inv  actual_inv  expected_chan  actual_chan\n";
    for (std::size_t q = 0; q < P; ++q) {
      const std::size_t side = std::size_t{1} << q;
      const std::uint64_t want_inv = static_cast<std::uint64_t>(M) << (P - 1 - q);
      const std::uint64_t want_chan = want_inv * channels_per_call;
      const auto it_inv = counts.tau_invocations.find(side);
      const auto it_chan = counts.tau_channel_calls.find(side);
      const std::uint64_t got_inv = it_inv == counts.tau_invocations.end() ? 0 : it_inv->second;
      const std::uint64_t got_chan = it_chan == counts.tau_channel_calls.end() ? 0 : it_chan->second;
      if (got_inv != want_inv || got_chan != want_chan) ok = false;
      os << side << "  " << want_inv << "  " << got_inv << "  " << want_chan << "  " << got_chan
         << '\n';
    }
    // No tile sides outside {1 .. L/2}.
    for (const auto& [side, n] : counts.tau_invocations) {
      if (side >= L && n != 0) {
        ok = false;
        os << "unexpected side " << side << " with " << n << " invocations\n";
      }
    }
    const std::uint64_t want_total = static_cast<std::uint64_t>(M) * (L - 1);
    if (counts.total_tau_invocations() != want_total) {
      ok = false;
      os << "total invocations " << counts.total_tau_invocations() << " != " << want_total << '\n';
    }
  } else {
    if (counts.total_tau_invocations() != 0) {
      ok = false;
      os << "baseline run recorded " << counts.total_tau_invocations() << " tau invocations\n";
    }
    const std::uint64_t want_macs =
        static_cast<std::uint64_t>(M) * channels_per_call * L * (L + 1) / 2;
    if (counts.strip_macs != want_macs) {
      ok = false;
      os << "strip multiply-adds " << counts.strip_macs << " != " << want_macs << '\n';
    } else {
      os << "strip multiply-adds " << counts.strip_macs << " (exact)\n";
    }
  }

  rep.pass = ok;
  rep.table = os.str();
  return rep;
}

}  // namespace lcsm
