#include "bimonn/morphology.hpp"

#include <cmath>
#include <sstream>

namespace bimonn {

namespace {

void require_nonempty(const StructuringElement& s) {
  if (s.count() == 0)
    throw std::invalid_argument("structuring element has no set entry");
}

}  // namespace

StructuringElement make_se(const SeShape& shape, int side) {
  if (side < 1 || side % 2 == 0)
    throw std::invalid_argument("make_se: side must be odd and positive");
  const int n = (side - 1) / 2;
  StructuringElement se(n);
  switch (shape.kind) {
    case SeShape::Kind::Disk: {
      const int r2 = shape.radius * shape.radius;
      for (int a = -n; a <= n; ++a)
        for (int b = -n; b <= n; ++b)
          if (a * a + b * b <= r2) se.at(a, b) = 1;
      break;
    }
    case SeShape::Kind::Stick: {
      const int half = (shape.length - 1) / 2;
      if (half > n) throw std::invalid_argument("make_se: stick exceeds window");
      for (int t = -half; t <= half; ++t) {
        if (shape.orientation == StickOrientation::Horizontal)
          se.at(0, t) = 1;
        else
          se.at(t, 0) = 1;
      }
      break;
    }
    case SeShape::Kind::Cross: {
      const int half = (shape.length - 1) / 2;
      if (half > n) throw std::invalid_argument("make_se: cross exceeds window");
      for (int t = -half; t <= half; ++t) {
        if (shape.diagonal) {
          se.at(t, t) = 1;
          se.at(t, -t) = 1;
        } else {
          se.at(0, t) = 1;
          se.at(t, 0) = 1;
        }
      }
      break;
    }
  }
  require_nonempty(se);
  return se;
}

StructuringElement make_named_se(const std::string& name, int side) {
  const int n = (side - 1) / 2;
  if (name == "disk") return make_se(SeShape::disk(n), side);
  if (name == "stick") return make_se(SeShape::stick(side), side);
  if (name == "cross") return make_se(SeShape::cross(side, true), side);
  throw std::invalid_argument("unknown structuring element name: " + name);
}

BinaryImage dilate(const BinaryImage& x, const StructuringElement& s) {
  require_nonempty(s);
  BinaryImage out(x.height(), x.width());
  const int n = s.n;
  for (int i = 0; i < x.height(); ++i)
    for (int j = 0; j < x.width(); ++j) {
      std::uint8_t hit = 0;
      for (int a = -n; a <= n && !hit; ++a)
        for (int b = -n; b <= n; ++b)
          if (s.at(a, b) && x.at_or(i - a, j - b)) {
            hit = 1;
            break;
          }
      out(i, j) = hit;
    }
  return out;
}

BinaryImage erode(const BinaryImage& x, const StructuringElement& s) {
  require_nonempty(s);
  BinaryImage out(x.height(), x.width());
  const int n = s.n;
  for (int i = 0; i < x.height(); ++i)
    for (int j = 0; j < x.width(); ++j) {
      std::uint8_t fit = 1;
      for (int a = -n; a <= n && fit; ++a)
        for (int b = -n; b <= n; ++b)
          if (s.at(a, b) && !x.at_or(i + a, j + b)) {
            fit = 0;
            break;
          }
      out(i, j) = fit;
    }
  return out;
}

BinaryImage open(const BinaryImage& x, const StructuringElement& s) {
  return dilate(erode(x, s), s);
}

BinaryImage close(const BinaryImage& x, const StructuringElement& s) {
  return erode(dilate(x, s), s);
}

BinaryImage complement(const BinaryImage& x) {
  BinaryImage out(x.height(), x.width());
  for (std::size_t i = 0; i < x.size(); ++i)
    out.raw()[i] = x.raw()[i] ? 0 : 1;
  return out;
}

BinaryImage dilate_via_conv(const BinaryImage& x, const StructuringElement& s) {
  require_nonempty(s);
  const RealImage counts = correlate2d(to_real(x), s.reflected().indicator());
  BinaryImage out(x.height(), x.width());
  for (std::size_t i = 0; i < counts.size(); ++i)
    out.raw()[i] = counts.raw()[i] >= 0.75 ? 1 : 0;
  return out;
}

BinaryImage erode_via_conv(const BinaryImage& x, const StructuringElement& s) {
  require_nonempty(s);
  const RealImage counts = correlate2d(to_real(x), s.indicator());
  const double want = static_cast<double>(s.count()) - 0.25;
  BinaryImage out(x.height(), x.width());
  for (std::size_t i = 0; i < counts.size(); ++i)
    out.raw()[i] = counts.raw()[i] >= want ? 1 : 0;
  return out;
}

bool is_subset(const BinaryImage& a, const BinaryImage& b) {
  if (!a.same_shape(b)) throw std::invalid_argument("is_subset: shape mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.raw()[i] && !b.raw()[i]) return false;
  return true;
}

bool adjunction_check(const BinaryImage& x, const BinaryImage& y,
                      const StructuringElement& s) {
  const bool lhs = is_subset(x, erode(y, s));
  const bool rhs = is_subset(dilate(x, s), y);
  return lhs == rhs;
}

std::string se_to_text(const StructuringElement& s) {
  std::ostringstream os;
  for (int a = -s.n; a <= s.n; ++a) {
    for (int b = -s.n; b <= s.n; ++b) os << (s.at(a, b) ? '1' : '0');
    os << '\n';
  }
  return os.str();
}

StructuringElement se_from_text(const std::string& text) {
  std::istringstream is(text);
  std::vector<std::string> rows;
  std::string line;
  while (std::getline(is, line))
    if (!line.empty()) rows.push_back(line);
  if (rows.empty() || rows.size() % 2 == 0)
    throw std::invalid_argument("se_from_text: need an odd number of rows");
  const int side = static_cast<int>(rows.size());
  StructuringElement se((side - 1) / 2);
  for (int r = 0; r < side; ++r) {
    if (static_cast<int>(rows[r].size()) != side)
      throw std::invalid_argument("se_from_text: ragged rows");
    for (int c = 0; c < side; ++c)
      se.mask[static_cast<std::size_t>(r) * side + c] = rows[r][c] == '1';
  }
  require_nonempty(se);
  return se;
}

}  // namespace bimonn
