#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "adcnn/error.hpp"

namespace adcnn {

/// Dense N-dimensional array of 64-bit floats, row-major.
/// product(shape) always equals data().size(); indexed access is
/// bounds-checked. Kernels that validated their shapes up front may work on
/// the raw data pointer.
class Tensor {
 public:
  Tensor() = default;

  explicit Tensor(std::vector<std::size_t> shape, double fill = 0.0);

  static Tensor from_data(std::vector<std::size_t> shape, std::vector<double> data);

  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t rank() const { return shape_.size(); }
  std::size_t size() const { return data_.size(); }
  std::size_t dim(std::size_t axis) const;

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  /// Bounds-checked element access; index count must equal rank().
  template <typename... Ix>
  double& at(Ix... ix) {
    const long long idx[] = {static_cast<long long>(ix)...};
    return data_[offset_checked(idx, sizeof...(ix))];
  }
  template <typename... Ix>
  double at(Ix... ix) const {
    const long long idx[] = {static_cast<long long>(ix)...};
    return data_[offset_checked(idx, sizeof...(ix))];
  }

  double& flat(std::size_t i);
  double flat(std::size_t i) const;

  /// Same data, new shape; element count must match.
  Tensor reshaped(std::vector<std::size_t> shape) const;

  void fill(double v);
  double min_value() const;
  double max_value() const;
  double sum() const;
  bool all_finite() const;

  bool operator==(const Tensor& other) const {
    return shape_ == other.shape_ && data_ == other.data_;
  }

  std::string shape_string() const;

 private:
  std::size_t offset_checked(const long long* idx, std::size_t count) const;

  std::vector<std::size_t> shape_;
  std::vector<double> data_;
};

/// Throws ShapeError unless the tensor has exactly the given shape.
void require_shape(const Tensor& t, std::initializer_list<std::size_t> shape,
                   const std::string& what);

/// Throws ShapeError unless the tensor has the given rank.
void require_rank(const Tensor& t, std::size_t rank, const std::string& what);

}  // namespace adcnn
