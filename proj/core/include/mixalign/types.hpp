#pragma once

#include <Eigen/Core>
#include <cmath>
#include <cstdint>
#include <vector>

#include "mixalign/errors.hpp"

namespace mixalign {

/// An ordered set of p 2-D landmark points, flattened to a length-2p
/// vector with layout (x1, y1, ..., xp, yp), coordinates in pixels.
struct Shape {
  Eigen::VectorXd xy;

  Shape() = default;
  explicit Shape(Eigen::VectorXd coords) : xy(std::move(coords)) {}

  int landmarks() const { return static_cast<int>(xy.size()) / 2; }

  Eigen::Vector2d point(int i) const { return {xy[2 * i], xy[2 * i + 1]}; }
  void set_point(int i, const Eigen::Vector2d& p) {
    xy[2 * i] = p.x();
    xy[2 * i + 1] = p.y();
  }

  Eigen::Vector2d centroid() const;

  /// Root-mean-square distance of the landmarks from their centroid.
  double rms_radius() const;

  bool is_finite() const { return xy.allFinite(); }
};

/// Validates 2p layout, p >= min_points and finite coordinates.
void check_shape(const Shape& s, int min_points = 3);

/// 2-D affine map q = linear * p + translation. Acts on points directly
/// and on images by inverse warping.
struct AffineTransform {
  Eigen::Matrix2d linear = Eigen::Matrix2d::Identity();
  Eigen::Vector2d translation = Eigen::Vector2d::Zero();

  static AffineTransform identity() { return {}; }

  static AffineTransform translate(double tx, double ty) {
    AffineTransform t;
    t.translation = {tx, ty};
    return t;
  }

  static AffineTransform scale(double s) {
    AffineTransform t;
    t.linear = Eigen::Matrix2d::Identity() * s;
    return t;
  }

  static AffineTransform rotation(double radians) {
    AffineTransform t;
    const double c = std::cos(radians), s = std::sin(radians);
    t.linear << c, -s, s, c;
    return t;
  }

  Eigen::Vector2d apply(const Eigen::Vector2d& p) const {
    return linear * p + translation;
  }

  /// Applies only the linear part; the correct action on difference
  /// vectors (displacements), where translations cancel.
  Eigen::Vector2d apply_linear(const Eigen::Vector2d& v) const {
    return linear * v;
  }

  double det() const { return linear.determinant(); }
};

/// Grayscale image, row-major, intensities in [0, 1].
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<float> pixels;

  GrayImage() = default;
  GrayImage(int w, int h, float fill = 0.0f);

  float at(int x, int y) const { return pixels[static_cast<size_t>(y) * width + x]; }
  float& at(int x, int y) { return pixels[static_cast<size_t>(y) * width + x]; }

  bool contains(int x, int y) const {
    return x >= 0 && x < width && y >= 0 && y < height;
  }

  /// Bilinear sample at continuous coordinates; pixels outside the
  /// image read as 0, so the value decays smoothly across the border.
  double sample(double x, double y) const;
};

/// Axis-aligned rectangle, (left, top) inclusive corner semantics in
/// continuous image coordinates.
struct Rect {
  double left = 0, top = 0, right = 0, bottom = 0;

  double width() const { return right - left; }
  double height() const { return bottom - top; }
  double area() const { return width() * height(); }
  Eigen::Vector2d center() const {
    return {0.5 * (left + right), 0.5 * (top + bottom)};
  }
};

/// Bounding box of a shape's landmarks.
Rect shape_bounds(const Shape& s);

}  // namespace mixalign
