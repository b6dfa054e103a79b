#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lcsm {

using cplx = std::complex<double>;

constexpr bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_power_of_two(std::size_t n);

/// log2 of an exact power of two.
std::size_t log2_exact(std::size_t n);

/// Frequency-domain image of a power-of-two DFT.
struct Spectrum {
  std::vector<cplx> values;

  std::size_t order() const { return values.size(); }
};

/// Precomputed twiddle factors and bit-reversal permutation for one
/// power-of-two order. Immutable after construction; safe for concurrent use.
class FftPlan {
 public:
  explicit FftPlan(std::size_t order);

  std::size_t order() const { return order_; }

  // In-place radix-2 transforms. forward() applies no scaling; inverse()
  // scales by 1/order so inverse(forward(x)) == x.
  void forward(cplx* data) const;
  void inverse(cplx* data) const;

 private:
  void permute(cplx* data) const;

  std::size_t order_;
  std::vector<cplx> twiddles_;  // exp(-2*pi*i*k/order), k < order/2
  std::vector<std::uint32_t> bitrev_;
};

/// Shared plan registry; plans are built once per order and never evicted.
const FftPlan& plan_for(std::size_t order);

Spectrum forward_dft(std::span<const double> x, std::size_t order);
Spectrum forward_dft(std::span<const cplx> x, std::size_t order);
std::vector<cplx> inverse_dft(const Spectrum& s);

/// c[k] = sum_j a[j] * b[(k - j) mod n]; n must be a power of two.
std::vector<double> cyclic_convolve(std::span<const double> a, std::span<const double> b,
                                    std::size_t n);

/// Full linear convolution, length |a| + |b| - 1, via zero-padded FFT.
std::vector<double> linear_convolve(std::span<const double> a, std::span<const double> b);

}  // namespace lcsm
