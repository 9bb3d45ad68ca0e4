#pragma once

#include <Eigen/Dense>

namespace cascade {

// e^M by scaling and squaring with a diagonal Pade approximant (degree 3..13
// chosen from the 1-norm). Intended for small dense matrices, n <= 64.
Eigen::MatrixXd matrix_exponential(const Eigen::MatrixXd& M);

struct SolveResult {
  Eigen::VectorXd x;
  double rcond;
};

// A x = rhs by partial-pivot LU plus one step of iterative refinement.
// Throws SingularGenerator when the reciprocal condition estimate is below
// 1/max_condition.
SolveResult refined_solve(const Eigen::MatrixXd& A, const Eigen::VectorXd& rhs,
                          double max_condition = 1e14);

}  // namespace cascade
