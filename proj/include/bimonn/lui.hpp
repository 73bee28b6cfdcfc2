#ifndef BIMONN_LUI_HPP
#define BIMONN_LUI_HPP

#include <span>
#include <string>
#include <vector>

#include "bimonn/bise.hpp"
#include "bimonn/image.hpp"

namespace bimonn {

/// Thresholded nonnegative linear combination of channels; realizes set
/// union or intersection over a learned channel subset.
/// Effective coefficients are softplus(beta_raw) >= 0; effective bias
/// softplus_half(b_raw) > 0.5.
struct LuiParams {
  std::vector<double> beta_raw;
  double b_raw = 2.0;
  double p = 4.0;

  LuiParams() = default;
  explicit LuiParams(int channels);

  int channels() const { return static_cast<int>(beta_raw.size()); }
  std::vector<double> effective_betas() const;
  double effective_bias() const;
};

struct LuiCache {
  std::vector<RealImage> inputs;
  RealImage pre_activation;  // sum_k beta_k x_k - f+(b)
  std::vector<double> betas;
  double b_eff = 0.0;
  double p = 0.0;
  bool valid = false;
};

/// out = xi(p * (sum_k beta_k x_k - f+(b))), pixelwise over same-shape
/// channels.
RealImage lui_forward(std::span<const RealImage> channels,
                      const LuiParams& params, LuiCache* cache = nullptr);

BinaryImage lui_hard_forward(std::span<const RealImage> channels,
                             const LuiParams& params);

struct LuiGrads {
  std::vector<RealImage> channels;
  std::vector<double> beta_raw;
  double b_raw = 0.0;
  double p = 0.0;
};

LuiGrads lui_backward(const RealImage& grad_out, const LuiParams& params,
                      const LuiCache& cache);

struct LuiActivationCheck {
  bool is_intersection = false;
  bool is_union = false;
  double intersection_margin = 0.0;
  double union_margin = 0.0;
};

// Certificate intervals over a channel subset C, channels bounded by
// (u_k, v_k):
//   intersection: [ sum_all beta - min_C((1-u_k) beta_k) , sum_C beta_k v_k )
//   union:        [ sum_C beta_k u_k + sum_notC beta_k , min_C(beta_k v_k) )
BiasInterval intersection_bias_interval(
    std::span<const double> betas, std::span<const int> c_set,
    std::span<const AlmostBinaryBounds> bounds);
BiasInterval union_bias_interval(std::span<const double> betas,
                                 std::span<const int> c_set,
                                 std::span<const AlmostBinaryBounds> bounds);

LuiActivationCheck check_lui_activation(
    const LuiParams& params, std::span<const int> c_set,
    std::span<const AlmostBinaryBounds> bounds);

struct LuiStatus {
  enum class Kind { Intersection, Union, NotActivated };
  Kind kind = Kind::NotActivated;
  std::vector<int> channels;  // the subset C, ascending
  double margin = 0.0;

  bool activated() const { return kind != Kind::NotActivated; }
};

std::string to_string(LuiStatus::Kind k);

/// Candidate subsets come from sorting the coefficients and sweeping prefix
/// thresholds; each candidate is validated against both certificates.
LuiStatus find_lui_activation(const LuiParams& params,
                              std::span<const AlmostBinaryBounds> bounds);

/// Output gap of an activated combination (analogue of the neuron case).
AlmostBinaryBounds propagate_lui_bounds(
    const LuiParams& params, const LuiStatus& status,
    std::span<const AlmostBinaryBounds> in_bounds);

enum class SetOpKind { Intersection, Union };

/// Saturated coefficients realizing the target set operation over `c_set`.
LuiParams make_ideal_lui(SetOpKind op, std::span<const int> c_set,
                         int channels, double p = 4.0);

}  // namespace bimonn

#endif  // BIMONN_LUI_HPP
