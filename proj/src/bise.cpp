#include "bimonn/bise.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bimonn/scalar_funcs.hpp"

namespace bimonn {

bool verify_almost_binary(const RealImage& img, const AlmostBinaryBounds& b) {
  if (!(b.u < b.v)) throw std::invalid_argument("bounds: need u < v");
  for (double x : img.raw())
    if (x > b.u && x < b.v) return false;
  return true;
}

BiseParams::BiseParams(int halfwidth)
    : n(halfwidth),
      w_raw(static_cast<std::size_t>(2 * halfwidth + 1) * (2 * halfwidth + 1),
            0.0) {
  if (halfwidth < 0) throw std::invalid_argument("BiseParams: n < 0");
}

KernelWindow BiseParams::effective_weights() const {
  KernelWindow k(n);
  for (std::size_t i = 0; i < w_raw.size(); ++i) k.values[i] = xi(w_raw[i]);
  return k;
}

double BiseParams::effective_bias() const { return softplus_half(b_raw); }

RealImage bise_forward(const RealImage& x, const BiseParams& params,
                       BiseCache* cache) {
  const KernelWindow w_eff = params.effective_weights();
  const double b_eff = params.effective_bias();
  RealImage pre = correlate2d(x, w_eff);
  for (double& v : pre.raw()) v -= b_eff;

  RealImage out(x.height(), x.width());
  for (std::size_t i = 0; i < pre.size(); ++i)
    out.raw()[i] = xi(params.p * pre.raw()[i]);

  if (cache) {
    cache->input = x;
    cache->pre_activation = pre;
    cache->w_eff = w_eff;
    cache->b_eff = b_eff;
    cache->p = params.p;
    cache->valid = true;
  }
  return out;
}

BinaryImage bise_hard_forward(const RealImage& x, const BiseParams& params) {
  const RealImage c = correlate2d(x, params.effective_weights());
  const double b_eff = params.effective_bias();
  BinaryImage out(x.height(), x.width());
  for (std::size_t i = 0; i < c.size(); ++i)
    out.raw()[i] = c.raw()[i] > b_eff ? 1 : 0;
  return out;
}

BiseGrads bise_backward(const RealImage& grad_out, const BiseParams& params,
                        const BiseCache& cache) {
  if (!cache.valid || cache.w_eff.n != params.n || cache.p != params.p ||
      cache.b_eff != params.effective_bias() ||
      cache.w_eff.values != params.effective_weights().values)
    throw std::logic_error("bise_backward: cache does not match parameters");
  if (!grad_out.same_shape(cache.pre_activation))
    throw std::invalid_argument("bise_backward: gradient shape mismatch");

  const std::size_t npix = grad_out.size();
  RealImage grad_c(grad_out.height(), grad_out.width());
  double grad_p = 0.0;
  double grad_b_eff = 0.0;
  for (std::size_t i = 0; i < npix; ++i) {
    const double pre = cache.pre_activation.raw()[i];
    const double gz = grad_out.raw()[i] * xi_grad(cache.p * pre);
    grad_p += gz * pre;
    grad_b_eff -= cache.p * gz;
    grad_c.raw()[i] = cache.p * gz;
  }

  auto [grad_x, grad_w_eff] =
      correlate2d_backward(grad_c, cache.input, cache.w_eff);

  BiseGrads g;
  g.x = std::move(grad_x);
  g.w_raw.resize(params.w_raw.size());
  for (std::size_t i = 0; i < params.w_raw.size(); ++i)
    g.w_raw[i] = grad_w_eff.values[i] * xi_grad(params.w_raw[i]);
  g.b_raw = grad_b_eff * softplus_half_grad(params.b_raw);
  g.p = grad_p;
  return g;
}

namespace {

struct SupportStats {
  double sum_all = 0.0;
  double sum_on = 0.0;
  double min_on = std::numeric_limits<double>::infinity();
  std::size_t on_count = 0;
};

SupportStats support_stats(const KernelWindow& w,
                           const StructuringElement& support) {
  if (w.n != support.n)
    throw std::invalid_argument("support window size mismatch");
  SupportStats st;
  for (std::size_t i = 0; i < w.values.size(); ++i) {
    st.sum_all += w.values[i];
    if (support.mask[i]) {
      st.sum_on += w.values[i];
      st.min_on = std::min(st.min_on, w.values[i]);
      ++st.on_count;
    }
  }
  if (st.on_count == 0)
    throw std::invalid_argument("empty support");
  return st;
}

double interval_margin(const BiasInterval& iv, double b) {
  return std::min(b - iv.lo, iv.hi - b);
}

bool in_interval(const BiasInterval& iv, double b) {
  return iv.lo <= b && b < iv.hi;
}

}  // namespace

BiasInterval dilation_bias_interval(const KernelWindow& w_eff,
                                    const StructuringElement& support,
                                    const AlmostBinaryBounds& bounds) {
  const SupportStats st = support_stats(w_eff, support);
  BiasInterval iv;
  iv.lo = (st.sum_all - st.sum_on) + bounds.u * st.sum_on;
  iv.hi = bounds.v * st.min_on;
  return iv;
}

BiasInterval erosion_bias_interval(const KernelWindow& w_eff,
                                   const StructuringElement& support,
                                   const AlmostBinaryBounds& bounds) {
  const SupportStats st = support_stats(w_eff, support);
  BiasInterval iv;
  iv.lo = st.sum_all - (1.0 - bounds.u) * st.min_on;
  iv.hi = bounds.v * st.sum_on;
  return iv;
}

ActivationCheck check_activation(const BiseParams& params,
                                 const StructuringElement& se,
                                 const AlmostBinaryBounds& bounds) {
  if (se.count() == 0) throw std::invalid_argument("check_activation: empty SE");
  if (!(bounds.u < bounds.v))
    throw std::invalid_argument("check_activation: need u < v");
  const KernelWindow w_eff = params.effective_weights();
  const double b = params.effective_bias();

  // The no-flip correlation reads offsets forward, so a neuron acting as a
  // dilation by `se` carries its weight mass on the reflected support.
  const BiasInterval dil =
      dilation_bias_interval(w_eff, se.reflected(), bounds);
  const BiasInterval ero = erosion_bias_interval(w_eff, se, bounds);

  ActivationCheck out;
  out.is_dilation = in_interval(dil, b);
  out.is_erosion = in_interval(ero, b);
  out.dilation_margin = interval_margin(dil, b);
  out.erosion_margin = interval_margin(ero, b);
  return out;
}

std::string to_string(ActivationStatus::Kind k) {
  switch (k) {
    case ActivationStatus::Kind::Dilation:
      return "dilation";
    case ActivationStatus::Kind::Erosion:
      return "erosion";
    default:
      return "not_activated";
  }
}

ActivationStatus find_activation(const BiseParams& params,
                                 const AlmostBinaryBounds& bounds,
                                 std::size_t* visit_count) {
  const KernelWindow w_eff = params.effective_weights();
  const double b = params.effective_bias();
  const std::size_t wsize = w_eff.values.size();
  std::size_t visits = 0;

  double sum_all = 0.0;
  for (double v : w_eff.values) sum_all += v;
  visits += wsize;

  const auto threshold_support = [&](double tau) {
    StructuringElement s(params.n);
    std::size_t cnt = 0;
    for (std::size_t i = 0; i < wsize; ++i) {
      if (w_eff.values[i] >= tau) {
        s.mask[i] = 1;
        ++cnt;
      }
    }
    visits += wsize;
    return std::make_pair(s, cnt);
  };

  ActivationStatus status;

  // Dilation candidate: support = weights >= b / v.
  {
    const double tau_d = b / bounds.v;
    auto [support, cnt] = threshold_support(tau_d);
    if (cnt > 0) {
      const BiasInterval iv = dilation_bias_interval(w_eff, support, bounds);
      visits += wsize;
      if (in_interval(iv, b)) {
        status.kind = ActivationStatus::Kind::Dilation;
        status.se = support.reflected();
        status.margin = interval_margin(iv, b);
        if (visit_count) *visit_count = visits;
        return status;
      }
    }
  }

  // Erosion candidate: support = weights >= (sum W - b) / (1 - u).
  {
    const double tau_e = (sum_all - b) / (1.0 - bounds.u);
    auto [support, cnt] = threshold_support(tau_e);
    if (cnt > 0) {
      const BiasInterval iv = erosion_bias_interval(w_eff, support, bounds);
      visits += wsize;
      if (in_interval(iv, b)) {
        status.kind = ActivationStatus::Kind::Erosion;
        status.se = support;
        status.margin = interval_margin(iv, b);
        if (visit_count) *visit_count = visits;
        return status;
      }
    }
  }

  status.kind = ActivationStatus::Kind::NotActivated;
  if (visit_count) *visit_count = visits;
  return status;
}

DualBounds dual_bounds(const KernelWindow& w_eff, double u_d, double v_d) {
  double sum = 0.0;
  for (double v : w_eff.values) sum += v;
  DualBounds out;
  out.v_e = sum - u_d;
  out.u_e = sum - v_d;
  out.degenerate = !(out.u_e < out.v_e) || out.v_e <= 0.5;
  return out;
}

AlmostBinaryBounds propagate_bounds(const BiseParams& params,
                                    const ActivationStatus& status,
                                    const AlmostBinaryBounds& in_bounds) {
  if (!status.activated())
    throw std::invalid_argument("propagate_bounds: neuron not activated");
  const KernelWindow w_eff = params.effective_weights();
  const double b = params.effective_bias();
  const BiasInterval iv =
      status.kind == ActivationStatus::Kind::Dilation
          ? dilation_bias_interval(w_eff, status.se.reflected(), in_bounds)
          : erosion_bias_interval(w_eff, status.se, in_bounds);
  // Off pixels correlate to at most iv.lo, on pixels to at least iv.hi.
  AlmostBinaryBounds out;
  out.u = xi(params.p * (iv.lo - b));
  out.v = xi(params.p * (iv.hi - b));
  return out;
}

std::optional<BinarizedBise> binarize_bise(const BiseParams& params,
                                           const AlmostBinaryBounds& bounds) {
  const ActivationStatus st = find_activation(params, bounds);
  if (!st.activated()) return std::nullopt;
  BinarizedBise out;
  out.op = st.kind == ActivationStatus::Kind::Dilation ? MorphOpKind::Dilation
                                                       : MorphOpKind::Erosion;
  out.se = st.se;
  return out;
}

BiseParams make_ideal_bise(MorphOpKind op, const StructuringElement& se,
                           int window_halfwidth, double magnitude, double p) {
  if (se.n > window_halfwidth)
    throw std::invalid_argument("make_ideal_bise: SE exceeds window");
  // Embed the (possibly smaller) SE into the window.
  StructuringElement support(window_halfwidth);
  for (int a = -se.n; a <= se.n; ++a)
    for (int b = -se.n; b <= se.n; ++b)
      if (se.at(a, b)) support.at(a, b) = 1;
  if (op == MorphOpKind::Dilation) support = support.reflected();

  BiseParams params(window_halfwidth);
  for (std::size_t i = 0; i < params.w_raw.size(); ++i)
    params.w_raw[i] = support.mask[i] ? magnitude : -magnitude;
  params.p = p;

  const KernelWindow w_eff = params.effective_weights();
  const AlmostBinaryBounds binary{0.0, 1.0};
  const BiasInterval iv = op == MorphOpKind::Dilation
                              ? dilation_bias_interval(w_eff, support, binary)
                              : erosion_bias_interval(w_eff, support, binary);
  if (!iv.valid())
    throw std::invalid_argument("make_ideal_bise: no admissible bias");
  double b_eff = op == MorphOpKind::Dilation ? iv.lo + 0.75 * (iv.hi - iv.lo)
                                             : iv.lo + 0.5 * (iv.hi - iv.lo);
  // The effective bias is constrained above 0.5; pull into range if needed.
  if (b_eff <= 0.5) {
    if (iv.hi <= 0.5)
      throw std::invalid_argument("make_ideal_bise: interval below bias floor");
    b_eff = 0.5 + 0.5 * (iv.hi - 0.5);
  }
  params.b_raw = softplus_half_inverse(b_eff);
  return params;
}

}  // namespace bimonn
