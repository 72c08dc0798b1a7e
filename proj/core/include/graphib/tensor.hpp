#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace graphib {

// Dense row-major matrix of doubles. Rank is at most 2: scalars are 1x1,
// row vectors 1xc, column vectors rx1. All model math is 64-bit; Gram-matrix
// eigenvalue entropies are too precision-sensitive for float.
class Tensor {
 public:
  Tensor() = default;
  Tensor(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Tensor scalar(double v) {
    Tensor t(1, 1);
    t(0, 0) = v;
    return t;
  }
  static Tensor identity(std::size_t n) {
    Tensor t(n, n);
    for (std::size_t i = 0; i < n; ++i) t(i, i) = 1.0;
    return t;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  double& at_flat(std::size_t k) { return data_[k]; }
  double at_flat(std::size_t k) const { return data_[k]; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  std::span<const double> flat() const { return data_; }
  std::span<double> flat() { return data_; }

  bool same_shape(const Tensor& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

  bool operator==(const Tensor& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Plain (non-differentiated) kernels. The autodiff tape wraps these same
// routines, so tape forward values and direct evaluation agree bit-exactly.
Tensor matmul(const Tensor& a, const Tensor& b);
Tensor transpose(const Tensor& a);
Tensor add(const Tensor& a, const Tensor& b);       // same shape, or b is 1xc / rx1
Tensor subtract(const Tensor& a, const Tensor& b);  // same shape
Tensor hadamard(const Tensor& a, const Tensor& b);  // same shape, or b is 1xc / rx1
Tensor scale(const Tensor& a, double s);
Tensor relu(const Tensor& a);
Tensor tanh_elem(const Tensor& a);
Tensor log_elem(const Tensor& a);
Tensor exp_elem(const Tensor& a);
Tensor row_softmax(const Tensor& a);
Tensor l2_normalize_rows(const Tensor& a);
Tensor concat_rows(std::span<const Tensor* const> parts);
double sum(const Tensor& a);
double mean(const Tensor& a);

bool all_finite(const Tensor& a);
bool is_symmetric(const Tensor& a, double tol);
double max_abs_diff(const Tensor& a, const Tensor& b);
double frobenius_norm(const Tensor& a);

}  // namespace graphib
