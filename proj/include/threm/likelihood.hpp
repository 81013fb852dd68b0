#pragma once

#include <Eigen/Core>

#include "threm/design.hpp"

namespace threm {

struct LikelihoodResult {
    double value = 0.0;  // negative log partial likelihood
    Eigen::VectorXd gradient;
    Eigen::MatrixXd hessian;
    std::uint64_t strata_used = 0;  // strata with >= 2 rows
    std::uint64_t rows_used = 0;
};

/// Negative log partial likelihood of the stratified case/control design in
/// conditional-logit form, with exact analytic gradient and Hessian.
/// Per-stratum terms use a max-shifted log-sum-exp; strata without controls
/// are dropped. Errors on a non-finite statistic, naming stratum and column.
LikelihoodResult neg_log_partial_likelihood(const DesignMatrix& design,
                                            const Eigen::VectorXd& beta, int n_threads = 0);

/// Same computation without the finiteness scan (the fit loop validates once
/// up front).
LikelihoodResult neg_log_partial_likelihood_unchecked(const DesignMatrix& design,
                                                      const Eigen::VectorXd& beta,
                                                      int n_threads = 0);

/// Throws DataError naming stratum and column when the design contains a
/// non-finite statistic.
void validate_design_finite(const DesignMatrix& design);

}  // namespace threm
