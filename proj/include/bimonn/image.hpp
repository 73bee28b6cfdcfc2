#ifndef BIMONN_IMAGE_HPP
#define BIMONN_IMAGE_HPP

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace bimonn {

/// Dense row-major 2-D grid. Foreground convention for binary grids: 1 = set.
template <typename T>
class Image2D {
 public:
  Image2D() = default;
  Image2D(int height, int width, T fill = T{})
      : height_(height), width_(width),
        data_(static_cast<std::size_t>(height) * width, fill) {
    if (height <= 0 || width <= 0)
      throw std::invalid_argument("Image2D: dimensions must be positive");
  }

  int height() const { return height_; }
  int width() const { return width_; }
  std::size_t size() const { return data_.size(); }

  T& operator()(int r, int c) {
    assert(in_bounds(r, c));
    return data_[static_cast<std::size_t>(r) * width_ + c];
  }
  const T& operator()(int r, int c) const {
    assert(in_bounds(r, c));
    return data_[static_cast<std::size_t>(r) * width_ + c];
  }

  bool in_bounds(int r, int c) const {
    return r >= 0 && r < height_ && c >= 0 && c < width_;
  }

  /// Out-of-bounds reads as `fallback` (zero padding by default).
  T at_or(int r, int c, T fallback = T{}) const {
    return in_bounds(r, c) ? (*this)(r, c) : fallback;
  }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }
  std::vector<T>& raw() { return data_; }
  const std::vector<T>& raw() const { return data_; }

  bool same_shape(const Image2D& o) const {
    return height_ == o.height_ && width_ == o.width_;
  }

  friend bool operator==(const Image2D& a, const Image2D& b) {
    return a.height_ == b.height_ && a.width_ == b.width_ && a.data_ == b.data_;
  }

 private:
  int height_ = 0;
  int width_ = 0;
  std::vector<T> data_;
};

using RealImage = Image2D<double>;
using BinaryImage = Image2D<std::uint8_t>;

inline RealImage to_real(const BinaryImage& b) {
  RealImage r(b.height(), b.width());
  for (std::size_t i = 0; i < b.size(); ++i)
    r.raw()[i] = b.raw()[i] ? 1.0 : 0.0;
  return r;
}

/// Hard threshold: strictly above 0.5 counts as foreground.
inline BinaryImage threshold_at_half(const RealImage& x) {
  BinaryImage out(x.height(), x.width());
  for (std::size_t i = 0; i < x.size(); ++i)
    out.raw()[i] = x.raw()[i] > 0.5 ? 1 : 0;
  return out;
}

inline std::size_t count_foreground(const BinaryImage& x) {
  std::size_t n = 0;
  for (auto v : x.raw()) n += v ? 1 : 0;
  return n;
}

}  // namespace bimonn

#endif  // BIMONN_IMAGE_HPP
