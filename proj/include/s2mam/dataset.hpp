#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace s2mam {

enum class Task { regression, classification };

enum class FeatureTag { informative, uninformative, noisy, unknown };

/// Semi-supervised sample matrix. Labeled rows always come first; `y` holds
/// the l labels ({0,1} for classification, reals for regression). When the
/// unlabeled rows were produced by hiding known labels, those ground-truth
/// values are kept in `unlabeled_truth` for transductive scoring.
struct SemiDataset {
    Eigen::MatrixXd X;                    // n x p, n = l + u
    Eigen::VectorXd y;                    // length l
    Eigen::Index l = 0;
    Eigen::Index u = 0;
    Task task = Task::classification;
    std::vector<FeatureTag> feature_tags; // size p
    Eigen::VectorXd unlabeled_truth;      // length u, or empty when unknown

    Eigen::Index n() const { return X.rows(); }
    Eigen::Index p() const { return X.cols(); }

    /// Throws ValidationError when the invariants do not hold
    /// (n = l + u, l >= 1, |y| = l, p >= 1, all entries finite).
    void validate() const;
};

struct SplitSpec {
    double label_ratio = 0.05;   // r in (0, 1]
    double test_fraction = 0.5;  // in [0, 1)
    bool stratified = true;
    std::uint64_t seed = 0;
};

/// CSV ingestion: UTF-8, header row, one label column whose empty cells mark
/// unlabeled rows, every other column a numeric feature. Labeled rows are
/// moved ahead of unlabeled ones; column order is preserved.
SemiDataset load_csv(const std::string& path, const std::string& label_column, Task task);

/// Inverse of load_csv up to row order: bitwise round-trips X and y.
void save_csv(const SemiDataset& ds, const std::string& path,
              const std::string& label_column = "label");

/// Additive two-variable benchmark: x_ij = (w_ij + u_i)/2 with w, u ~ U(0,1),
/// score (x1-0.5)^2 + (x2-0.5)^2 - 0.08. Classification thresholds the score
/// at zero; regression keeps it as the target. Fully labeled output; columns
/// 1-2 tagged informative, the rest uninformative.
SemiDataset gen_additive_synthetic(Eigen::Index n, Eigen::Index p, std::uint64_t seed,
                                   Task task = Task::classification);

/// Two interleaving half circles with Gaussian jitter; class 0 on
/// (cos t, sin t), class 1 on (1-cos t, 0.5-sin t), t evenly spaced in [0,pi].
/// labeled_per_class points of each class keep their labels, the rest become
/// unlabeled with ground truth retained.
SemiDataset gen_moons(Eigen::Index n_per_class, Eigen::Index labeled_per_class,
                      double noise_sd, std::uint64_t seed);

/// Appends p_u uninformative N(0,1) columns and p_n noisy columns. The noisy
/// law N(100,100) is read as mean 100 / variance 100 (sd 10); pass
/// noisy_sd_is_100 = true for the sd-100 reading. Existing columns are
/// untouched.
SemiDataset inject_corruption(const SemiDataset& ds, Eigen::Index p_u, Eigen::Index p_n,
                              std::uint64_t seed, bool noisy_sd_is_100 = false);

/// Splits a fully labeled dataset into a train part (with ceil(r * class
/// size) labels kept per class, minimum one, the rest hidden into the
/// unlabeled pool with truth retained) and a fully labeled test part.
std::pair<SemiDataset, SemiDataset> split_labels(const SemiDataset& ds, const SplitSpec& spec);

/// Optional [0,1] rescaling for bounded-bandwidth similarity grids.
struct MinMaxScaler {
    Eigen::VectorXd lo, hi;
    void fit(const Eigen::MatrixXd& X);
    Eigen::MatrixXd transform(const Eigen::MatrixXd& X) const;
};

}  // namespace s2mam
