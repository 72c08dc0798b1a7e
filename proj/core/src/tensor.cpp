#include "graphib/tensor.hpp"

#include <cmath>
#include <string>

#include "graphib/error.hpp"

namespace graphib {

namespace {

std::string shape_str(const Tensor& t) {
  return std::to_string(t.rows()) + "x" + std::to_string(t.cols());
}

[[noreturn]] void shape_error(const char* op, const Tensor& a, const Tensor& b) {
  fail(Errc::dimension_mismatch,
       std::string(op) + ": incompatible shapes " + shape_str(a) + " and " + shape_str(b));
}

}  // namespace

Tensor matmul(const Tensor& a, const Tensor& b) {
  if (a.cols() != b.rows()) shape_error("matmul", a, b);
  const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
  Tensor out(n, m);
  // i-k-j order keeps the inner loop contiguous in both b and out.
  for (std::size_t i = 0; i < n; ++i) {
    double* out_row = out.data() + i * m;
    for (std::size_t p = 0; p < k; ++p) {
      const double aip = a(i, p);
      if (aip == 0.0) continue;
      const double* b_row = b.data() + p * m;
      for (std::size_t j = 0; j < m; ++j) out_row[j] += aip * b_row[j];
    }
  }
  return out;
}

Tensor transpose(const Tensor& a) {
  Tensor out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

namespace {

enum class Bcast { same, row, col };

Bcast broadcast_kind(const char* op, const Tensor& a, const Tensor& b) {
  if (a.same_shape(b)) return Bcast::same;
  if (b.rows() == 1 && b.cols() == a.cols()) return Bcast::row;
  if (b.cols() == 1 && b.rows() == a.rows()) return Bcast::col;
  shape_error(op, a, b);
}

template <typename F>
Tensor broadcast_binary(const char* op, const Tensor& a, const Tensor& b, F f) {
  const Bcast kind = broadcast_kind(op, a, b);
  Tensor out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double bv = kind == Bcast::same ? b(i, j) : kind == Bcast::row ? b(0, j) : b(i, 0);
      out(i, j) = f(a(i, j), bv);
    }
  return out;
}

}  // namespace

Tensor add(const Tensor& a, const Tensor& b) {
  return broadcast_binary("add", a, b, [](double x, double y) { return x + y; });
}

Tensor subtract(const Tensor& a, const Tensor& b) {
  if (!a.same_shape(b)) shape_error("subtract", a, b);
  Tensor out(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.size(); ++k) out.at_flat(k) = a.at_flat(k) - b.at_flat(k);
  return out;
}

Tensor hadamard(const Tensor& a, const Tensor& b) {
  return broadcast_binary("hadamard", a, b, [](double x, double y) { return x * y; });
}

Tensor scale(const Tensor& a, double s) {
  Tensor out(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.size(); ++k) out.at_flat(k) = a.at_flat(k) * s;
  return out;
}

Tensor relu(const Tensor& a) {
  Tensor out(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.size(); ++k) out.at_flat(k) = a.at_flat(k) > 0.0 ? a.at_flat(k) : 0.0;
  return out;
}

Tensor tanh_elem(const Tensor& a) {
  Tensor out(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.size(); ++k) out.at_flat(k) = std::tanh(a.at_flat(k));
  return out;
}

Tensor log_elem(const Tensor& a) {
  Tensor out(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.size(); ++k) out.at_flat(k) = std::log(a.at_flat(k));
  return out;
}

Tensor exp_elem(const Tensor& a) {
  Tensor out(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.size(); ++k) out.at_flat(k) = std::exp(a.at_flat(k));
  return out;
}

Tensor row_softmax(const Tensor& a) {
  Tensor out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double mx = a(i, 0);
    for (std::size_t j = 1; j < a.cols(); ++j) mx = std::max(mx, a(i, j));
    double total = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(i, j) = std::exp(a(i, j) - mx);
      total += out(i, j);
    }
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) /= total;
  }
  return out;
}

Tensor l2_normalize_rows(const Tensor& a) {
  constexpr double kEps = 1e-12;  // keeps the all-zero row well-defined
  Tensor out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double ss = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) ss += a(i, j) * a(i, j);
    const double inv = 1.0 / (std::sqrt(ss) + kEps);
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) * inv;
  }
  return out;
}

Tensor concat_rows(std::span<const Tensor* const> parts) {
  require(!parts.empty(), Errc::invalid_argument, "concat_rows: no inputs");
  const std::size_t cols = parts[0]->cols();
  std::size_t rows = 0;
  for (const Tensor* p : parts) {
    require(p->cols() == cols, Errc::dimension_mismatch,
            "concat_rows: column counts differ");
    rows += p->rows();
  }
  Tensor out(rows, cols);
  std::size_t r = 0;
  for (const Tensor* p : parts) {
    for (std::size_t i = 0; i < p->rows(); ++i, ++r)
      for (std::size_t j = 0; j < cols; ++j) out(r, j) = (*p)(i, j);
  }
  return out;
}

double sum(const Tensor& a) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a.at_flat(k);
  return s;
}

double mean(const Tensor& a) {
  require(a.size() > 0, Errc::invalid_argument, "mean: empty tensor");
  return sum(a) / static_cast<double>(a.size());
}

bool all_finite(const Tensor& a) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!std::isfinite(a.at_flat(k))) return false;
  return true;
}

bool is_symmetric(const Tensor& a, double tol) {
  if (a.rows() != a.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (std::abs(a(i, j) - a(j, i)) > tol) return false;
  return true;
}

double max_abs_diff(const Tensor& a, const Tensor& b) {
  if (!a.same_shape(b)) shape_error("max_abs_diff", a, b);
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k)
    m = std::max(m, std::abs(a.at_flat(k) - b.at_flat(k)));
  return m;
}

double frobenius_norm(const Tensor& a) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a.at_flat(k) * a.at_flat(k);
  return std::sqrt(s);
}

}  // namespace graphib
