#include "topvs/classify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>

#include "topvs/error.hpp"
#include "topvs/parallel.hpp"
#include "topvs/random.hpp"

namespace topvs {

LabeledDataset::LabeledDataset(std::vector<TopologicalVector> vectors,
                               std::vector<std::string> labels)
    : vectors_(std::move(vectors)), labels_(std::move(labels)) {
  if (vectors_.size() != labels_.size()) {
    throw InputError("dataset has " + std::to_string(vectors_.size()) +
                     " vectors but " + std::to_string(labels_.size()) +
                     " labels");
  }
  if (vectors_.empty()) throw InputError("dataset is empty");
  for (const auto& v : vectors_) {
    if (v.ref_size() != vectors_.front().ref_size()) {
      throw InputError("dataset vectors have different reference sizes");
    }
  }
  std::map<std::string, std::size_t> counts;
  for (const auto& l : labels_) ++counts[l];
  if (counts.size() < 2) {
    throw InputError("dataset needs at least two classes");
  }
  for (const auto& [name, count] : counts) {
    if (count < 2) {
      throw InputError("class '" + name + "' has only " +
                       std::to_string(count) + " member");
    }
    classes_.push_back(name);
  }
}

std::vector<std::vector<double>> LabeledDataset::feature_rows() const {
  std::vector<std::vector<double>> rows;
  rows.reserve(vectors_.size());
  for (const auto& v : vectors_) rows.push_back(v.concatenated());
  return rows;
}

LabeledDataset LabeledDataset::with_labels(std::vector<std::string> labels) const {
  return LabeledDataset(vectors_, std::move(labels));
}

std::vector<double> SvmModel::scores(const std::vector<double>& features) const {
  std::vector<double> out;
  out.reserve(machines.size());
  for (const auto& m : machines) {
    if (m.weights.size() != features.size()) {
      throw InputError("feature dimension " + std::to_string(features.size()) +
                       " does not match model dimension " +
                       std::to_string(m.weights.size()));
    }
    double s = m.bias;
    for (std::size_t k = 0; k < features.size(); ++k) {
      s += m.weights[k] * features[k];
    }
    out.push_back(s);
  }
  return out;
}

namespace {

std::vector<int> class_indices(const std::vector<std::string>& labels,
                               const std::vector<std::string>& classes) {
  std::vector<int> out;
  out.reserve(labels.size());
  for (const auto& l : labels) {
    const auto it = std::lower_bound(classes.begin(), classes.end(), l);
    out.push_back(static_cast<int>(it - classes.begin()));
  }
  return out;
}

std::vector<int> one_vs_rest(std::span<const int> cls, int positive) {
  std::vector<int> y(cls.size());
  for (std::size_t i = 0; i < cls.size(); ++i) y[i] = cls[i] == positive ? 1 : -1;
  return y;
}

std::size_t argmax_first(const std::vector<double>& scores) {
  std::size_t best = 0;
  for (std::size_t c = 1; c < scores.size(); ++c) {
    if (scores[c] > scores[best]) best = c;
  }
  return best;
}

}  // namespace

SvmModel svm_train(const LabeledDataset& data, double C,
                   const SvmOptions& options) {
  if (!(C > 0.0)) throw InputError("C must be positive");
  if (data.classes().size() < 2) {
    throw InputError("cannot train on a single class");
  }
  const auto rows = data.feature_rows();
  const KernelMatrix kernel(rows);
  const auto cls = class_indices(data.labels(), data.classes());
  const std::size_t dim = rows.front().size();

  SvmModel model;
  model.C = C;
  model.ref_size = data.ref_size();
  model.classes = data.classes();
  for (std::size_t c = 0; c < model.classes.size(); ++c) {
    const auto y = one_vs_rest(cls, static_cast<int>(c));
    auto sol = solve_dual_cd(kernel, y, C, options);
    BinaryMachine m;
    m.weights.assign(dim, 0.0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const double coef = sol.alpha[i] * y[i];
      if (coef == 0.0) continue;
      for (std::size_t k = 0; k < dim; ++k) m.weights[k] += coef * rows[i][k];
      m.bias += coef;
    }
    m.epochs = sol.epochs;
    m.converged = sol.converged;
    m.objective_trace = std::move(sol.objective_trace);
    model.machines.push_back(std::move(m));
  }
  return model;
}

std::string svm_predict(const SvmModel& model, const TopologicalVector& vec) {
  if (vec.ref_size() != model.ref_size) {
    throw InputError("vector reference size " + std::to_string(vec.ref_size()) +
                     " does not match model reference size " +
                     std::to_string(model.ref_size));
  }
  return model.classes[argmax_first(model.scores(vec.concatenated()))];
}

std::vector<std::size_t> stratified_folds(const std::vector<std::string>& labels,
                                          std::size_t folds,
                                          std::uint64_t rng_seed,
                                          std::uint64_t stream) {
  if (folds < 2) throw InputError("need at least 2 folds");
  std::map<std::string, std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < labels.size(); ++i) members[labels[i]].push_back(i);

  CounterRng rng(rng_seed, stream);
  std::vector<std::size_t> fold_of(labels.size(), 0);
  std::size_t dealer = 0;
  for (auto& [name, idx] : members) {
    if (idx.size() < folds) {
      throw InputError("class '" + name + "' has " + std::to_string(idx.size()) +
                       " members, fewer than the " + std::to_string(folds) +
                       " folds required for stratification");
    }
    rng.shuffle(std::span<std::size_t>(idx));
    for (const auto i : idx) {
      fold_of[i] = dealer;
      dealer = (dealer + 1) % folds;
    }
  }
  return fold_of;
}

void validate(const CvConfig& config) {
  if (config.outer_folds < 2 || config.inner_folds < 2) {
    throw InputError("outer and inner folds must both be at least 2");
  }
  if (config.c_grid.empty()) throw InputError("C grid is empty");
  for (const double c : config.c_grid) {
    if (!(c > 0.0) || !std::isfinite(c)) {
      throw InputError("C grid values must be positive and finite");
    }
  }
}

namespace {

constexpr std::uint64_t kOuterStream = 1;
constexpr std::uint64_t kInnerStreamBase = 1000;

/// Feature rows plus, when features are used as-is, the full kernel so every
/// split and every permutation trial can share it.
struct FeatureSource {
  std::vector<std::vector<double>> rows;
  std::optional<KernelMatrix> full;

  FeatureSource(std::vector<std::vector<double>> r, bool standardize)
      : rows(std::move(r)) {
    if (!standardize) full.emplace(rows);
  }
};

struct SplitKernels {
  KernelMatrix train;
  KernelMatrix cross;  // test x train
};

SplitKernels split_kernels(const FeatureSource& src,
                           std::span<const std::size_t> train,
                           std::span<const std::size_t> test) {
  if (src.full) {
    return {src.full->submatrix(train, train), src.full->submatrix(test, train)};
  }
  const std::size_t dim = src.rows.front().size();
  std::vector<double> mean(dim, 0.0), scale(dim, 0.0);
  for (const auto i : train) {
    for (std::size_t k = 0; k < dim; ++k) mean[k] += src.rows[i][k];
  }
  for (auto& m : mean) m /= static_cast<double>(train.size());
  for (const auto i : train) {
    for (std::size_t k = 0; k < dim; ++k) {
      const double d = src.rows[i][k] - mean[k];
      scale[k] += d * d;
    }
  }
  for (auto& s : scale) {
    s = std::sqrt(s / static_cast<double>(train.size()));
    if (s == 0.0) s = 1.0;
  }
  auto transform = [&](std::span<const std::size_t> ids) {
    std::vector<std::vector<double>> out;
    out.reserve(ids.size());
    for (const auto i : ids) {
      std::vector<double> row(dim);
      for (std::size_t k = 0; k < dim; ++k) {
        row[k] = (src.rows[i][k] - mean[k]) / scale[k];
      }
      out.push_back(std::move(row));
    }
    return out;
  };
  const auto tr = transform(train);
  const auto te = transform(test);
  return {KernelMatrix(tr), KernelMatrix(te, tr)};
}

/// Trains one machine per class on the split and predicts the test rows.
std::vector<int> fit_predict(const SplitKernels& k, std::span<const int> train_cls,
                             std::size_t class_count, double C,
                             const SvmOptions& options) {
  std::vector<std::vector<double>> scores(k.cross.rows(),
                                          std::vector<double>(class_count));
  for (std::size_t c = 0; c < class_count; ++c) {
    const auto y = one_vs_rest(train_cls, static_cast<int>(c));
    const auto sol = solve_dual_cd(k.train, y, C, options);
    const auto values = decision_values(k.cross, sol, y);
    for (std::size_t t = 0; t < values.size(); ++t) scores[t][c] = values[t];
  }
  std::vector<int> out;
  out.reserve(scores.size());
  for (const auto& s : scores) out.push_back(static_cast<int>(argmax_first(s)));
  return out;
}

std::vector<int> gather(const std::vector<int>& v, std::span<const std::size_t> ids) {
  std::vector<int> out;
  out.reserve(ids.size());
  for (const auto i : ids) out.push_back(v[i]);
  return out;
}

double accuracy_of(const std::vector<int>& predicted, const std::vector<int>& truth) {
  std::size_t hits = 0;
  for (std::size_t t = 0; t < truth.size(); ++t) hits += predicted[t] == truth[t];
  return static_cast<double>(hits) / static_cast<double>(truth.size());
}

CvReport run_nested_cv(const FeatureSource& src,
                       const std::vector<std::string>& labels,
                       const std::vector<std::string>& classes,
                       const CvConfig& config) {
  validate(config);
  const auto cls = class_indices(labels, classes);
  const auto nclass = classes.size();

  CvReport report;
  report.seed = config.seed;
  report.standardized = config.standardize;
  report.classes = classes;
  report.c_grid = config.c_grid;
  std::sort(report.c_grid.begin(), report.c_grid.end());
  report.confusion_counts.assign(nclass, std::vector<std::size_t>(nclass, 0));

  const auto outer = stratified_folds(labels, config.outer_folds, config.seed,
                                      kOuterStream);
  for (std::size_t f = 0; f < config.outer_folds; ++f) {
    std::vector<std::size_t> train, test;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      (outer[i] == f ? test : train).push_back(i);
    }

    std::vector<std::string> train_labels;
    for (const auto i : train) train_labels.push_back(labels[i]);
    const auto inner = stratified_folds(train_labels, config.inner_folds,
                                        config.seed, kInnerStreamBase + f);

    std::vector<double> inner_acc(report.c_grid.size(), 0.0);
    for (std::size_t g = 0; g < config.inner_folds; ++g) {
      std::vector<std::size_t> in_train, in_test;
      for (std::size_t a = 0; a < train.size(); ++a) {
        (inner[a] == g ? in_test : in_train).push_back(train[a]);
      }
      const auto kernels = split_kernels(src, in_train, in_test);
      const auto in_train_cls = gather(cls, in_train);
      const auto in_test_cls = gather(cls, in_test);
      for (std::size_t c = 0; c < report.c_grid.size(); ++c) {
        const auto pred = fit_predict(kernels, in_train_cls, nclass,
                                      report.c_grid[c], config.svm);
        inner_acc[c] += accuracy_of(pred, in_test_cls);
      }
    }
    for (auto& a : inner_acc) a /= static_cast<double>(config.inner_folds);

    std::size_t best = 0;
    for (std::size_t c = 1; c < inner_acc.size(); ++c) {
      if (inner_acc[c] > inner_acc[best]) best = c;
    }
    const double chosen = report.c_grid[best];

    const auto kernels = split_kernels(src, train, test);
    const auto test_cls = gather(cls, test);
    const auto pred =
        fit_predict(kernels, gather(cls, train), nclass, chosen, config.svm);
    for (std::size_t t = 0; t < test.size(); ++t) {
      ++report.confusion_counts[test_cls[t]][pred[t]];
    }
    report.fold_accuracies.push_back(accuracy_of(pred, test_cls));
    report.chosen_c.push_back(chosen);
    report.inner_accuracies.push_back(std::move(inner_acc));
  }

  report.accuracy = std::accumulate(report.fold_accuracies.begin(),
                                    report.fold_accuracies.end(), 0.0) /
                    static_cast<double>(report.fold_accuracies.size());
  for (const auto& row : report.confusion_counts) {
    const double total = static_cast<double>(
        std::accumulate(row.begin(), row.end(), std::size_t{0}));
    std::vector<double> normalized(nclass, 0.0);
    for (std::size_t c = 0; c < nclass; ++c) {
      normalized[c] = static_cast<double>(row[c]) / total;
    }
    report.confusion.push_back(std::move(normalized));
  }
  return report;
}

}  // namespace

CvReport nested_cv(const LabeledDataset& data, const CvConfig& config) {
  validate(config);
  const FeatureSource src(data.feature_rows(), config.standardize);
  return run_nested_cv(src, data.labels(), data.classes(), config);
}

PermutationReport permutation_test(const LabeledDataset& data,
                                   std::size_t trials, const CvConfig& config,
                                   std::size_t threads) {
  if (trials == 0) throw InputError("permutation test needs at least 1 trial");
  validate(config);
  const FeatureSource src(data.feature_rows(), config.standardize);

  PermutationReport report;
  report.rng_seed = config.seed;
  report.permutation_count = trials;
  report.observed = run_nested_cv(src, data.labels(), data.classes(), config);
  report.observed_accuracy = report.observed.accuracy;

  report.permutation_accuracies.assign(trials, 0.0);
  parallel_for(trials, threads, [&](std::size_t t) {
    CvConfig trial = config;
    trial.seed = derive_seed(config.seed, kPermutationTag, t);
    auto labels = data.labels();
    CounterRng rng(trial.seed, 0);
    rng.shuffle(std::span<std::string>(labels));
    report.permutation_accuracies[t] =
        run_nested_cv(src, labels, data.classes(), trial).accuracy;
  });

  report.exceed_count = static_cast<std::size_t>(std::count_if(
      report.permutation_accuracies.begin(), report.permutation_accuracies.end(),
      [&](double a) { return a > report.observed_accuracy; }));
  report.p_value =
      static_cast<double>(report.exceed_count) / static_cast<double>(trials);
  return report;
}

}  // namespace topvs
