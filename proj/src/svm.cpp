#include "topvs/svm.hpp"

#include <algorithm>
#include <cmath>

#include "topvs/error.hpp"

namespace topvs {
namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

}  // namespace

KernelMatrix::KernelMatrix(const std::vector<std::vector<double>>& rows)
    : rows_(rows.size()), cols_(rows.size()), data_(rows_ * cols_) {
  for (std::size_t i = 0; i < rows_; ++i) {
    if (rows[i].size() != rows[0].size()) {
      throw InputError("feature rows have different dimensions");
    }
    for (std::size_t j = i; j < cols_; ++j) {
      const double v = dot(rows[i], rows[j]) + 1.0;
      data_[i * cols_ + j] = v;
      data_[j * cols_ + i] = v;
    }
  }
}

KernelMatrix::KernelMatrix(const std::vector<std::vector<double>>& left,
                           const std::vector<std::vector<double>>& right)
    : rows_(left.size()), cols_(right.size()), data_(rows_ * cols_) {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (left[i].size() != right[j].size()) {
        throw InputError("feature rows have different dimensions");
      }
      data_[i * cols_ + j] = dot(left[i], right[j]) + 1.0;
    }
  }
}

KernelMatrix KernelMatrix::submatrix(std::span<const std::size_t> row_ids,
                                     std::span<const std::size_t> col_ids) const {
  KernelMatrix out;
  out.rows_ = row_ids.size();
  out.cols_ = col_ids.size();
  out.data_.resize(out.rows_ * out.cols_);
  for (std::size_t a = 0; a < out.rows_; ++a) {
    const double* src = data_.data() + row_ids[a] * cols_;
    double* dst = out.data_.data() + a * out.cols_;
    for (std::size_t b = 0; b < out.cols_; ++b) dst[b] = src[col_ids[b]];
  }
  return out;
}

DualSolution solve_dual_cd(const KernelMatrix& kernel, std::span<const int> y,
                           double C, const SvmOptions& options) {
  const std::size_t n = kernel.rows();
  if (kernel.cols() != n || y.size() != n) {
    throw InputError("dual solver needs a square kernel matching the labels");
  }
  if (!(C > 0.0)) throw InputError("C must be positive");

  DualSolution sol;
  sol.alpha.assign(n, 0.0);
  // margin[i] = sum_j alpha_j y_j K(i, j), so the gradient is y_i margin_i - 1.
  std::vector<double> margin(n, 0.0);

  for (std::size_t epoch = 0; epoch < options.max_epochs; ++epoch) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double grad = y[i] * margin[i] - 1.0;
      double projected = grad;
      if (sol.alpha[i] <= 0.0) {
        projected = std::min(grad, 0.0);
      } else if (sol.alpha[i] >= C) {
        projected = std::max(grad, 0.0);
      }
      worst = std::max(worst, std::abs(projected));
      if (projected == 0.0) continue;

      const double old = sol.alpha[i];
      sol.alpha[i] = std::clamp(old - grad / kernel(i, i), 0.0, C);
      const double step = (sol.alpha[i] - old) * y[i];
      if (step != 0.0) {
        for (std::size_t j = 0; j < n; ++j) margin[j] += step * kernel(j, i);
      }
    }
    double objective = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      objective += sol.alpha[i] * (0.5 * y[i] * margin[i] - 1.0);
    }
    sol.objective_trace.push_back(objective);
    sol.epochs = epoch + 1;
    if (worst < options.tolerance) {
      sol.converged = true;
      break;
    }
  }
  return sol;
}

std::vector<double> decision_values(const KernelMatrix& cross,
                                    const DualSolution& solution,
                                    std::span<const int> y) {
  if (cross.cols() != solution.alpha.size() || y.size() != cross.cols()) {
    throw InputError("cross kernel does not match the training set");
  }
  std::vector<double> out(cross.rows(), 0.0);
  for (std::size_t t = 0; t < cross.rows(); ++t) {
    double s = 0.0;
    for (std::size_t i = 0; i < cross.cols(); ++i) {
      if (solution.alpha[i] != 0.0) s += solution.alpha[i] * y[i] * cross(t, i);
    }
    out[t] = s;
  }
  return out;
}

}  // namespace topvs
