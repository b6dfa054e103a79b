#include "lcsm/fft.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace lcsm {

std::size_t next_power_of_two(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

std::size_t log2_exact(std::size_t n) {
  if (!is_power_of_two(n)) throw std::invalid_argument("log2_exact: not a power of two");
  std::size_t q = 0;
  while ((std::size_t{1} << q) < n) ++q;
  return q;
}

FftPlan::FftPlan(std::size_t order) : order_(order) {
  if (!is_power_of_two(order)) throw std::invalid_argument("FftPlan: order must be a power of two");
  twiddles_.resize(order / 2);
  for (std::size_t k = 0; k < order / 2; ++k) {
    const double ang = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(order);
    twiddles_[k] = cplx(std::cos(ang), std::sin(ang));
  }
  bitrev_.resize(order);
  const std::size_t bits = log2_exact(order);
  for (std::size_t i = 0; i < order; ++i) {
    std::size_t r = 0;
    for (std::size_t b = 0; b < bits; ++b)
      if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (bits - 1 - b);
    bitrev_[i] = static_cast<std::uint32_t>(r);
  }
}

void FftPlan::permute(cplx* data) const {
  for (std::size_t i = 0; i < order_; ++i) {
    const std::size_t j = bitrev_[i];
    if (i < j) std::swap(data[i], data[j]);
  }
}

void FftPlan::forward(cplx* data) const {
  permute(data);
  for (std::size_t m = 2; m <= order_; m <<= 1) {
    const std::size_t half = m / 2;
    const std::size_t step = order_ / m;  // twiddle stride for this stage
    for (std::size_t base = 0; base < order_; base += m) {
      for (std::size_t k = 0; k < half; ++k) {
        const cplx w = twiddles_[k * step];
        const cplx t = w * data[base + k + half];
        const cplx u = data[base + k];
        data[base + k] = u + t;
        data[base + k + half] = u - t;
      }
    }
  }
}

void FftPlan::inverse(cplx* data) const {
  permute(data);
  for (std::size_t m = 2; m <= order_; m <<= 1) {
    const std::size_t half = m / 2;
    const std::size_t step = order_ / m;
    for (std::size_t base = 0; base < order_; base += m) {
      for (std::size_t k = 0; k < half; ++k) {
        const cplx w = std::conj(twiddles_[k * step]);
        const cplx t = w * data[base + k + half];
        const cplx u = data[base + k];
        data[base + k] = u + t;
        data[base + k + half] = u - t;
      }
    }
  }
  const double scale = 1.0 / static_cast<double>(order_);
  for (std::size_t i = 0; i < order_; ++i) data[i] *= scale;
}

const FftPlan& plan_for(std::size_t order) {
  static std::mutex mu;
  static std::map<std::size_t, std::unique_ptr<FftPlan>> plans;
  std::lock_guard<std::mutex> lock(mu);
  auto it = plans.find(order);
  if (it == plans.end()) it = plans.emplace(order, std::make_unique<FftPlan>(order)).first;
  return *it->second;
}

namespace {

template <typename T>
Spectrum forward_impl(std::span<const T> x, std::size_t order) {
  if (!is_power_of_two(order)) throw std::invalid_argument("forward_dft: order must be a power of two");
  if (x.size() > order) throw std::invalid_argument("forward_dft: input longer than order");
  Spectrum s;
  s.values.assign(order, cplx{});
  for (std::size_t i = 0; i < x.size(); ++i) s.values[i] = x[i];
  plan_for(order).forward(s.values.data());
  return s;
}

}  // namespace

Spectrum forward_dft(std::span<const double> x, std::size_t order) { return forward_impl(x, order); }
Spectrum forward_dft(std::span<const cplx> x, std::size_t order) { return forward_impl(x, order); }

std::vector<cplx> inverse_dft(const Spectrum& s) {
  if (!is_power_of_two(s.order())) throw std::invalid_argument("inverse_dft: malformed spectrum");
  std::vector<cplx> out(s.values);
  plan_for(s.order()).inverse(out.data());
  return out;
}

std::vector<double> cyclic_convolve(std::span<const double> a, std::span<const double> b,
                                    std::size_t n) {
  if (!is_power_of_two(n)) throw std::invalid_argument("cyclic_convolve: n must be a power of two");
  if (a.size() > n || b.size() > n) throw std::invalid_argument("cyclic_convolve: input longer than n");
  Spectrum fa = forward_dft(a, n);
  const Spectrum fb = forward_dft(b, n);
  for (std::size_t k = 0; k < n; ++k) fa.values[k] *= fb.values[k];
  plan_for(n).inverse(fa.values.data());
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = fa.values[k].real();
  return out;
}

std::vector<double> linear_convolve(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("linear_convolve: empty input");
  const std::size_t out_len = a.size() + b.size() - 1;
  const std::size_t n = next_power_of_two(out_len);
  Spectrum fa = forward_dft(a, n);
  const Spectrum fb = forward_dft(b, n);
  for (std::size_t k = 0; k < n; ++k) fa.values[k] *= fb.values[k];
  plan_for(n).inverse(fa.values.data());
  std::vector<double> out(out_len);
  for (std::size_t k = 0; k < out_len; ++k) out[k] = fa.values[k].real();
  return out;
}

}  // namespace lcsm
