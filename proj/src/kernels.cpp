#include "bimonn/kernels.hpp"

namespace bimonn {

namespace {

void check_dims(const RealImage& x, const KernelWindow& k) {
  if (k.side() > x.height() || k.side() > x.width())
    throw std::invalid_argument("correlate2d: kernel larger than image");
}

inline double correlate_pixel(const RealImage& x, const KernelWindow& k,
                              int i, int j) {
  const int n = k.n;
  double acc = 0.0;
  for (int a = -n; a <= n; ++a) {
    const int r = i + a;
    if (r < 0 || r >= x.height()) continue;  // zero padding
    for (int b = -n; b <= n; ++b) {
      const int c = j + b;
      if (c < 0 || c >= x.width()) continue;
      acc += x(r, c) * k.at(a, b);
    }
  }
  return acc;
}

}  // namespace

RealImage correlate2d(const RealImage& x, const KernelWindow& k, PadMode) {
  check_dims(x, k);
  RealImage out(x.height(), x.width());
#pragma omp parallel for schedule(static)
  for (int i = 0; i < x.height(); ++i)
    for (int j = 0; j < x.width(); ++j) out(i, j) = correlate_pixel(x, k, i, j);
  return out;
}

namespace reference {

RealImage correlate2d(const RealImage& x, const KernelWindow& k, PadMode) {
  check_dims(x, k);
  RealImage out(x.height(), x.width());
  for (int i = 0; i < x.height(); ++i)
    for (int j = 0; j < x.width(); ++j) out(i, j) = correlate_pixel(x, k, i, j);
  return out;
}

}  // namespace reference

std::pair<RealImage, KernelWindow> correlate2d_backward(
    const RealImage& grad_out, const RealImage& x, const KernelWindow& k) {
  check_dims(x, k);
  if (!grad_out.same_shape(x))
    throw std::invalid_argument("correlate2d_backward: shape mismatch");

  RealImage grad_x = correlate2d(grad_out, k.reflected());

  KernelWindow grad_k(k.n);
  const int n = k.n;
#pragma omp parallel for collapse(2) schedule(static)
  for (int a = -n; a <= n; ++a)
    for (int b = -n; b <= n; ++b) {
      double acc = 0.0;
      for (int i = 0; i < x.height(); ++i) {
        const int r = i + a;
        if (r < 0 || r >= x.height()) continue;
        for (int j = 0; j < x.width(); ++j) {
          const int c = j + b;
          if (c < 0 || c >= x.width()) continue;
          acc += grad_out(i, j) * x(r, c);
        }
      }
      grad_k.at(a, b) = acc;
    }
  return {std::move(grad_x), std::move(grad_k)};
}

}  // namespace bimonn
