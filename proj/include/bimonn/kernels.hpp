#ifndef BIMONN_KERNELS_HPP
#define BIMONN_KERNELS_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "bimonn/image.hpp"

namespace bimonn {

/// Square window of real coefficients over offsets [-n, n]^2, origin centered.
/// Side length 2n+1 is always odd.
struct KernelWindow {
  int n = 0;
  std::vector<double> values;  // row-major over (a, b), a = row offset

  KernelWindow() = default;
  explicit KernelWindow(int halfwidth, double fill = 0.0)
      : n(halfwidth),
        values(static_cast<std::size_t>(2 * halfwidth + 1) *
                   (2 * halfwidth + 1),
               fill) {
    if (halfwidth < 0) throw std::invalid_argument("KernelWindow: n < 0");
  }

  int side() const { return 2 * n + 1; }
  std::size_t size() const { return values.size(); }

  double& at(int a, int b) {
    return values[static_cast<std::size_t>(a + n) * side() + (b + n)];
  }
  double at(int a, int b) const {
    return values[static_cast<std::size_t>(a + n) * side() + (b + n)];
  }

  /// Point reflection through the origin: k'(a,b) = k(-a,-b).
  KernelWindow reflected() const {
    KernelWindow out(n);
    for (int a = -n; a <= n; ++a)
      for (int b = -n; b <= n; ++b) out.at(a, b) = at(-a, -b);
    return out;
  }
};

enum class PadMode { Zero };

// "Same"-size cross-correlation with zero padding:
//   out(i,j) = sum_{a,b in [-n,n]} x(i+a, j+b) * k(a,b).
// The parallel version partitions output rows; per-pixel summation order is
// identical to the serial reference, so results are bit-exact.
RealImage correlate2d(const RealImage& x, const KernelWindow& k,
                      PadMode pad = PadMode::Zero);

namespace reference {
/// Serial implementation kept as the comparison baseline for tests/benchmarks.
RealImage correlate2d(const RealImage& x, const KernelWindow& k,
                      PadMode pad = PadMode::Zero);
}  // namespace reference

/// Gradients of correlate2d: given d(loss)/d(out), returns d/d(x) and d/d(k).
/// grad_x is the correlation of grad_out with the point-reflected kernel;
/// grad_k(a,b) = sum_{i,j} grad_out(i,j) * x(i+a, j+b).
std::pair<RealImage, KernelWindow> correlate2d_backward(
    const RealImage& grad_out, const RealImage& x, const KernelWindow& k);

}  // namespace bimonn

#endif  // BIMONN_KERNELS_HPP
