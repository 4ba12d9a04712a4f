#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace topvs {

/// Inner products of bias-augmented feature rows, K(i, j) = <x_i, x_j> + 1.
/// Square for a training set; rectangular (test x train) for prediction.
class KernelMatrix {
 public:
  KernelMatrix() = default;
  /// Gram matrix of `rows` with itself.
  explicit KernelMatrix(const std::vector<std::vector<double>>& rows);
  /// Cross kernel between `left` and `right` rows.
  KernelMatrix(const std::vector<std::vector<double>>& left,
               const std::vector<std::vector<double>>& right);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  KernelMatrix submatrix(std::span<const std::size_t> row_ids,
                         std::span<const std::size_t> col_ids) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

struct SvmOptions {
  /// Stop once the largest projected-gradient violation in an epoch is below.
  double tolerance = 1e-4;
  std::size_t max_epochs = 1000;
};

/// Dual solution of the L2-regularized hinge-loss SVM,
///   min 1/2 a'Qa - e'a  subject to 0 <= a_i <= C,  Q_ij = y_i y_j K_ij.
struct DualSolution {
  std::vector<double> alpha;
  std::size_t epochs = 0;
  bool converged = false;
  /// Dual objective after each epoch.
  std::vector<double> objective_trace;
};

/// Dual coordinate descent in fixed index order. `kernel` must be square;
/// labels are +1 / -1.
DualSolution solve_dual_cd(const KernelMatrix& kernel, std::span<const int> y,
                           double C, const SvmOptions& options = {});

/// sum_i alpha_i y_i K(t, i) for each row t of `cross` (test x train).
std::vector<double> decision_values(const KernelMatrix& cross,
                                    const DualSolution& solution,
                                    std::span<const int> y);

}  // namespace topvs
