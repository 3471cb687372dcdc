#include "secn/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace secn {

namespace {

[[noreturn]] void throw_shape_error(const char* op, const DenseMatrix& a, const DenseMatrix& b) {
  std::ostringstream msg;
  msg << op << ": incompatible shapes " << a.rows() << "x" << a.cols() << " and " << b.rows()
      << "x" << b.cols();
  throw std::invalid_argument(msg.str());
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), values_(rows * cols, 0.0) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("DenseMatrix: rows and cols must be >= 1");
  }
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("DenseMatrix: rows and cols must be >= 1");
  }
  if (values_.size() != rows * cols) {
    std::ostringstream msg;
    msg << "DenseMatrix: " << values_.size() << " values for shape " << rows << "x" << cols;
    throw std::invalid_argument(msg.str());
  }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

void DenseMatrix::fill(double v) {
  for (double& x : values_) x = v;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw_shape_error("matmul", a, b);
  DenseMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a.at(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return out;
}

DenseMatrix hadamard(const DenseMatrix& a, const DenseMatrix& b) {
  if (!a.same_shape(b)) throw_shape_error("hadamard", a, b);
  DenseMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.values()[i] = a.values()[i] * b.values()[i];
  }
  return out;
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    std::ostringstream msg;
    msg << "dot: length mismatch " << a.size() << " vs " << b.size();
    throw std::invalid_argument(msg.str());
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace secn
