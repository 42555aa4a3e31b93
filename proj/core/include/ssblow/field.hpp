#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace ssblow {

/// Scalar samples on a uniform rectangular grid. Node (i, j) sits at
/// (x0 + i*hx, y0 + j*hy); storage is row-major with j fastest.
class ScalarField2D {
 public:
  ScalarField2D() = default;
  ScalarField2D(std::size_t nx, std::size_t ny, double x0, double y0, double hx, double hy,
                double fill = 0.0);

  /// Samples f at every node.
  static ScalarField2D sample(std::size_t nx, std::size_t ny, double x0, double y0, double hx,
                              double hy, const std::function<double(double, double)>& f);

  std::size_t nx() const { return nx_; }
  std::size_t ny() const { return ny_; }
  std::size_t size() const { return data_.size(); }
  double x0() const { return x0_; }
  double y0() const { return y0_; }
  double hx() const { return hx_; }
  double hy() const { return hy_; }
  double x(std::size_t i) const { return x0_ + static_cast<double>(i) * hx_; }
  double y(std::size_t j) const { return y0_ + static_cast<double>(j) * hy_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * ny_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * ny_ + j]; }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  /// Same layout and spacing as `other`.
  bool same_shape(const ScalarField2D& other) const;

  double max_abs() const;

 private:
  std::size_t nx_ = 0;
  std::size_t ny_ = 0;
  double x0_ = 0.0;
  double y0_ = 0.0;
  double hx_ = 1.0;
  double hy_ = 1.0;
  std::vector<double> data_;
};

}  // namespace ssblow
