#ifndef BIMONN_BISE_HPP
#define BIMONN_BISE_HPP

#include <optional>
#include <string>
#include <vector>

#include "bimonn/image.hpp"
#include "bimonn/kernels.hpp"
#include "bimonn/morphology.hpp"

namespace bimonn {

/// Certified gap of an almost-binary image: no pixel value lies strictly
/// inside (u, v).
struct AlmostBinaryBounds {
  double u = 0.0;
  double v = 1.0;
};

struct AlmostBinaryImage {
  RealImage image;
  AlmostBinaryBounds bounds;
};

bool verify_almost_binary(const RealImage& img, const AlmostBinaryBounds& b);

/// Raw parameters of one learnable erosion/dilation neuron.
/// Effective weights are xi(w_raw) in (0,1); effective bias softplus_half(
/// b_raw) > 0.5; p scales the output threshold sharpness.
struct BiseParams {
  int n = 1;
  std::vector<double> w_raw;  // (2n+1)^2, row-major over offsets
  double b_raw = 2.0;
  double p = 4.0;

  BiseParams() = default;
  explicit BiseParams(int halfwidth);

  int side() const { return 2 * n + 1; }
  std::size_t window_size() const { return w_raw.size(); }

  KernelWindow effective_weights() const;
  double effective_bias() const;
};

struct BiseCache {
  RealImage input;
  RealImage pre_activation;  // correlate2d(x, xi(W)) - f+(b), before p scaling
  KernelWindow w_eff;
  double b_eff = 0.0;
  double p = 0.0;
  bool valid = false;
};

/// out = xi(p * (correlate2d(x, xi(W)) - f+(b))). Input expected in [0,1].
RealImage bise_forward(const RealImage& x, const BiseParams& params,
                       BiseCache* cache = nullptr);

/// Hard-threshold semantics (p -> infinity): fires where the correlation
/// strictly exceeds the effective bias. Independent of p for p > 0.
BinaryImage bise_hard_forward(const RealImage& x, const BiseParams& params);

struct BiseGrads {
  RealImage x;
  std::vector<double> w_raw;
  double b_raw = 0.0;
  double p = 0.0;
};

/// Exact chain rule through bise_forward. grad_p is always computed, even
/// when training keeps p frozen.
BiseGrads bise_backward(const RealImage& grad_out, const BiseParams& params,
                        const BiseCache& cache);

/// Half-open admissible bias interval [lo, hi) for a certificate over the
/// weight-support set. The certificate holds iff lo <= b < hi.
struct BiasInterval {
  double lo = 0.0;
  double hi = 0.0;
  bool valid() const { return lo < hi; }
};

// Certificate intervals evaluated on effective weights, for inputs whose
// values avoid (u, v). `support` indexes weight offsets, not the displayed
// structuring element.
//   dilation: [ sum_{off} w + u * sum_S w ,  v * min_S w )
//   erosion:  [ sum_all w - (1-u) * min_S w ,  v * sum_S w )
// The erosion lower bound counts off-support mass: a window may light up
// every off-support pixel, so the worst non-fitting correlation is
// sum_{i != j} w_i + u*w_j, maximized over j in S.
BiasInterval dilation_bias_interval(const KernelWindow& w_eff,
                                    const StructuringElement& support,
                                    const AlmostBinaryBounds& bounds);
BiasInterval erosion_bias_interval(const KernelWindow& w_eff,
                                   const StructuringElement& support,
                                   const AlmostBinaryBounds& bounds);

struct ActivationCheck {
  bool is_dilation = false;
  bool is_erosion = false;
  double dilation_margin = 0.0;  // distance of b to the nearer interval end
  double erosion_margin = 0.0;
};

/// Checks whether the neuron, hard-thresholded, equals dilation and/or
/// erosion by `se` (oracle display convention: the dilation branch tests the
/// reflected weight support, so a Dilation verdict means the thresholded
/// forward equals dilate(x, se) exactly).
ActivationCheck check_activation(const BiseParams& params,
                                 const StructuringElement& se,
                                 const AlmostBinaryBounds& bounds);

enum class MorphOpKind { Dilation, Erosion };

struct ActivationStatus {
  enum class Kind { Dilation, Erosion, NotActivated };
  Kind kind = Kind::NotActivated;
  StructuringElement se;  // display convention; empty when NotActivated
  double margin = 0.0;

  bool activated() const { return kind != Kind::NotActivated; }
};

std::string to_string(ActivationStatus::Kind k);

/// Threshold search: dilation candidate tau = b/v, erosion candidate
/// tau = (sum W - b)/(1-u); each candidate support is validated against its
/// certificate. Runs in O(window) arithmetic without sorting. The optional
/// counter reports elementary weight visits (for complexity tests).
ActivationStatus find_activation(const BiseParams& params,
                                 const AlmostBinaryBounds& bounds,
                                 std::size_t* visit_count = nullptr);

/// Erosion bias interval obtained from the dilation one of the same weights
/// by complement duality: v_e = sum(w) - u_d, u_e = sum(w) - v_d.
struct DualBounds {
  double u_e = 0.0;
  double v_e = 0.0;
  bool degenerate = false;  // no representable bias (> 0.5) fits the interval
};

DualBounds dual_bounds(const KernelWindow& w_eff, double u_d, double v_d);

/// Output gap of an activated neuron: off pixels reach at most the interval's
/// lower end L, on pixels at least the upper end V, so the output avoids
/// ( xi(p*(L-b)), xi(p*(V-b)) ).
AlmostBinaryBounds propagate_bounds(const BiseParams& params,
                                    const ActivationStatus& status,
                                    const AlmostBinaryBounds& in_bounds);

struct BinarizedBise {
  MorphOpKind op;
  StructuringElement se;
};

/// Exact morphological replacement for an activated neuron; nullopt when the
/// neuron is not activated for the given input bounds.
std::optional<BinarizedBise> binarize_bise(const BiseParams& params,
                                           const AlmostBinaryBounds& bounds);

/// Saturated parameterization that realizes the target operator exactly:
/// raw weights +/- magnitude on/off the support, bias centered in the
/// certificate interval.
BiseParams make_ideal_bise(MorphOpKind op, const StructuringElement& se,
                           int window_halfwidth, double magnitude = 8.0,
                           double p = 4.0);

}  // namespace bimonn

#endif  // BIMONN_BISE_HPP
