#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "topvs/svm.hpp"
#include "topvs/topological_vector.hpp"

namespace topvs {

/// Topological vectors with parallel class labels. Requires a shared
/// reference size, at least two classes, and at least two members per class.
class LabeledDataset {
 public:
  LabeledDataset(std::vector<TopologicalVector> vectors,
                 std::vector<std::string> labels);

  const std::vector<TopologicalVector>& vectors() const { return vectors_; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Distinct labels in lexicographic order.
  const std::vector<std::string>& classes() const { return classes_; }
  std::size_t size() const { return vectors_.size(); }
  std::size_t ref_size() const { return vectors_.front().ref_size(); }

  /// Concatenated (births, deaths) rows.
  std::vector<std::vector<double>> feature_rows() const;

  LabeledDataset with_labels(std::vector<std::string> labels) const;

 private:
  std::vector<TopologicalVector> vectors_;
  std::vector<std::string> labels_;
  std::vector<std::string> classes_;
};

/// One binary machine of a one-vs-rest model.
struct BinaryMachine {
  std::vector<double> weights;
  double bias = 0.0;
  std::size_t epochs = 0;
  bool converged = false;
  std::vector<double> objective_trace;
};

/// Linear one-vs-rest SVM over the concatenated feature space. The bias is an
/// extra constant feature of value 1 and is regularized with the weights.
struct SvmModel {
  double C = 1.0;
  std::size_t ref_size = 0;
  std::vector<std::string> classes;
  std::vector<BinaryMachine> machines;  // parallel to classes

  std::vector<double> scores(const std::vector<double>& features) const;
};

SvmModel svm_train(const LabeledDataset& data, double C,
                   const SvmOptions& options = {});

/// Highest one-vs-rest score wins; exact ties go to the smaller class name.
std::string svm_predict(const SvmModel& model, const TopologicalVector& vec);

/// Fold index for each sample. Each class is shuffled with `rng_seed` and
/// dealt round-robin, the dealing position carrying over between classes.
/// Rejects any class with fewer than `folds` members, naming it.
std::vector<std::size_t> stratified_folds(const std::vector<std::string>& labels,
                                          std::size_t folds,
                                          std::uint64_t rng_seed,
                                          std::uint64_t stream);

struct CvConfig {
  std::size_t outer_folds = 2;
  std::size_t inner_folds = 5;
  std::vector<double> c_grid{0.01, 1.0, 100.0};
  std::uint64_t seed = 0;
  /// Z-score features using training-fold statistics.
  bool standardize = false;
  SvmOptions svm{};
};

void validate(const CvConfig& config);

struct CvReport {
  double accuracy = 0.0;
  std::vector<double> fold_accuracies;
  std::vector<double> chosen_c;
  /// Mean inner-loop accuracy per outer fold, per grid value (sorted grid).
  std::vector<std::vector<double>> inner_accuracies;
  std::vector<double> c_grid;  // ascending
  std::vector<std::string> classes;
  /// Rows are true classes, columns predictions, counts over all test folds.
  std::vector<std::vector<std::size_t>> confusion_counts;
  /// confusion_counts with each row divided by its sum.
  std::vector<std::vector<double>> confusion;
  std::uint64_t seed = 0;
  bool standardized = false;
};

/// Stratified nested cross-validation with grid search over C. The inner
/// loop keeps the C with the best mean accuracy, smallest C on ties.
CvReport nested_cv(const LabeledDataset& data, const CvConfig& config);

struct PermutationReport {
  double observed_accuracy = 0.0;
  std::vector<double> permutation_accuracies;
  std::size_t exceed_count = 0;
  /// exceed_count / permutation_count, counting strictly greater accuracies.
  double p_value = 0.0;
  std::size_t permutation_count = 0;
  std::uint64_t rng_seed = 0;
  CvReport observed;
};

/// Trial t shuffles the labels with seed derive_seed(seed, kPermutationTag, t)
/// and reruns nested CV with that same derived seed. Results do not depend
/// on `threads`.
PermutationReport permutation_test(const LabeledDataset& data,
                                   std::size_t trials, const CvConfig& config,
                                   std::size_t threads = 1);

inline constexpr std::uint64_t kPermutationTag = 0x7065726d;  // "perm"

}  // namespace topvs
