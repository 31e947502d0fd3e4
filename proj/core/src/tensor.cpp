#include "adcnn/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace adcnn {

namespace {

std::size_t element_count(const std::vector<std::size_t>& shape) {
  std::size_t n = 1;
  for (std::size_t d : shape) {
    if (d == 0) throw ShapeError("tensor dimensions must be positive");
    n *= d;
  }
  return n;
}

}  // namespace

Tensor::Tensor(std::vector<std::size_t> shape, double fill)
    : shape_(std::move(shape)), data_(element_count(shape_), fill) {}

Tensor Tensor::from_data(std::vector<std::size_t> shape, std::vector<double> data) {
  if (element_count(shape) != data.size()) {
    std::ostringstream os;
    os << "data length " << data.size() << " does not match shape product "
       << element_count(shape);
    throw ShapeError(os.str());
  }
  Tensor t;
  t.shape_ = std::move(shape);
  t.data_ = std::move(data);
  return t;
}

std::size_t Tensor::dim(std::size_t axis) const {
  if (axis >= shape_.size()) throw IndexError("tensor axis out of range");
  return shape_[axis];
}

std::size_t Tensor::offset_checked(const long long* idx, std::size_t count) const {
  if (count != shape_.size()) {
    std::ostringstream os;
    os << "index count " << count << " does not match tensor rank " << shape_.size();
    throw IndexError(os.str());
  }
  std::size_t off = 0;
  for (std::size_t a = 0; a < count; ++a) {
    if (idx[a] < 0 || static_cast<std::size_t>(idx[a]) >= shape_[a]) {
      std::ostringstream os;
      os << "index " << idx[a] << " out of range for axis " << a << " of shape "
         << shape_string();
      throw IndexError(os.str());
    }
    off = off * shape_[a] + static_cast<std::size_t>(idx[a]);
  }
  return off;
}

double& Tensor::flat(std::size_t i) {
  if (i >= data_.size()) throw IndexError("flat index out of range");
  return data_[i];
}

double Tensor::flat(std::size_t i) const {
  if (i >= data_.size()) throw IndexError("flat index out of range");
  return data_[i];
}

Tensor Tensor::reshaped(std::vector<std::size_t> shape) const {
  if (element_count(shape) != data_.size()) {
    throw ShapeError("reshape must preserve the element count (" + shape_string() + ")");
  }
  Tensor t;
  t.shape_ = std::move(shape);
  t.data_ = data_;
  return t;
}

void Tensor::fill(double v) { std::fill(data_.begin(), data_.end(), v); }

double Tensor::min_value() const {
  if (data_.empty()) throw DataError("min of empty tensor");
  return *std::min_element(data_.begin(), data_.end());
}

double Tensor::max_value() const {
  if (data_.empty()) throw DataError("max of empty tensor");
  return *std::max_element(data_.begin(), data_.end());
}

double Tensor::sum() const {
  double s = 0.0;
  for (double v : data_) s += v;
  return s;
}

bool Tensor::all_finite() const {
  for (double v : data_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

std::string Tensor::shape_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < shape_.size(); ++i) {
    if (i) os << 'x';
    os << shape_[i];
  }
  os << ']';
  return os.str();
}

void require_shape(const Tensor& t, std::initializer_list<std::size_t> shape,
                   const std::string& what) {
  if (t.shape() != std::vector<std::size_t>(shape)) {
    Tensor wanted;
    std::ostringstream os;
    os << what << ": expected shape [";
    bool first = true;
    for (std::size_t d : shape) {
      if (!first) os << 'x';
      os << d;
      first = false;
    }
    os << "], got " << t.shape_string();
    throw ShapeError(os.str());
  }
}

void require_rank(const Tensor& t, std::size_t rank, const std::string& what) {
  if (t.rank() != rank) {
    std::ostringstream os;
    os << what << ": expected rank " << rank << ", got " << t.shape_string();
    throw ShapeError(os.str());
  }
}

}  // namespace adcnn
