#ifndef BIMONN_MORPHOLOGY_HPP
#define BIMONN_MORPHOLOGY_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bimonn/image.hpp"
#include "bimonn/kernels.hpp"

namespace bimonn {

/// Boolean mask over an odd-sided window, origin at the center.
/// Must contain at least one set entry.
struct StructuringElement {
  int n = 0;
  std::vector<std::uint8_t> mask;  // row-major over offsets (a, b) in [-n, n]^2

  StructuringElement() = default;
  explicit StructuringElement(int halfwidth)
      : n(halfwidth),
        mask(static_cast<std::size_t>(2 * halfwidth + 1) * (2 * halfwidth + 1),
             0) {
    if (halfwidth < 0) throw std::invalid_argument("StructuringElement: n < 0");
  }

  int side() const { return 2 * n + 1; }

  std::uint8_t& at(int a, int b) {
    return mask[static_cast<std::size_t>(a + n) * side() + (b + n)];
  }
  bool at(int a, int b) const {
    return mask[static_cast<std::size_t>(a + n) * side() + (b + n)] != 0;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto v : mask) c += v ? 1 : 0;
    return c;
  }

  /// Point reflection through the origin.
  StructuringElement reflected() const {
    StructuringElement out(n);
    for (int a = -n; a <= n; ++a)
      for (int b = -n; b <= n; ++b) out.at(a, b) = at(-a, -b) ? 1 : 0;
    return out;
  }

  KernelWindow indicator() const {
    KernelWindow k(n);
    for (std::size_t i = 0; i < mask.size(); ++i)
      k.values[i] = mask[i] ? 1.0 : 0.0;
    return k;
  }

  friend bool operator==(const StructuringElement& a,
                         const StructuringElement& b) {
    return a.n == b.n && a.mask == b.mask;
  }
};

enum class StickOrientation { Horizontal, Vertical };

/// Shape family for the standard experiment targets.
struct SeShape {
  enum class Kind { Disk, Stick, Cross };
  Kind kind = Kind::Disk;
  int radius = 1;  // Disk: Euclidean radius
  int length = 3;  // Stick/Cross: full segment length
  StickOrientation orientation = StickOrientation::Horizontal;
  bool diagonal = true;  // Cross: diagonal arms instead of axis-aligned

  static SeShape disk(int radius) {
    SeShape s;
    s.kind = Kind::Disk;
    s.radius = radius;
    return s;
  }
  static SeShape stick(int length,
                       StickOrientation o = StickOrientation::Horizontal) {
    SeShape s;
    s.kind = Kind::Stick;
    s.length = length;
    s.orientation = o;
    return s;
  }
  static SeShape cross(int length, bool diagonal = true) {
    SeShape s;
    s.kind = Kind::Cross;
    s.length = length;
    s.diagonal = diagonal;
    return s;
  }
};

/// Renders the shape into an odd `side` x `side` window.
/// Disk fills {(a,b) : a^2 + b^2 <= r^2}; sticks and crosses are centered
/// segments of the given length.
StructuringElement make_se(const SeShape& shape, int side);

/// Canonical experiment target for a named shape: disk of radius (side-1)/2,
/// horizontal stick of full length, diagonal cross of full length.
StructuringElement make_named_se(const std::string& name, int side);

// Set-definition binary morphology, the ground-truth reference path.
// Out-of-bounds pixels read as background.
BinaryImage dilate(const BinaryImage& x, const StructuringElement& s);
BinaryImage erode(const BinaryImage& x, const StructuringElement& s);
BinaryImage open(const BinaryImage& x, const StructuringElement& s);
BinaryImage close(const BinaryImage& x, const StructuringElement& s);
BinaryImage complement(const BinaryImage& x);

// Correlation-threshold path: dilation fires on count >= 1, erosion on
// count >= |S|. With the no-flip correlation convention the dilation side
// correlates against the reflected indicator. Integer counts are compared
// with a 1/4 slack to absorb float error.
BinaryImage dilate_via_conv(const BinaryImage& x, const StructuringElement& s);
BinaryImage erode_via_conv(const BinaryImage& x, const StructuringElement& s);

/// Evaluates the adjunction biconditional  x <= erode(y) <=> dilate(x) <= y.
/// A correct implementation makes this true for every triple.
bool adjunction_check(const BinaryImage& x, const BinaryImage& y,
                      const StructuringElement& s);

bool is_subset(const BinaryImage& a, const BinaryImage& b);

/// Plain-text 0/1 grid, one row per line.
std::string se_to_text(const StructuringElement& s);
StructuringElement se_from_text(const std::string& text);

}  // namespace bimonn

#endif  // BIMONN_MORPHOLOGY_HPP
