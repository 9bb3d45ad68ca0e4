#pragma once

#include "cascade/polynomial.hpp"

#include <Eigen/Dense>
#include <vector>

namespace cascade::detail {

struct Resolvent {
  Polynomial charpoly;                            // det(sI - B), monic
  std::vector<std::vector<Polynomial>> adjugate;  // adj(sI - B)
};

// Faddeev-LeVerrier recursion; exact polynomial entries for small blocks.
Resolvent faddeev_leverrier(const Eigen::MatrixXd& B);

Eigen::MatrixXd submatrix(const Eigen::MatrixXd& A, const std::vector<int>& idx);

// Connected components of the coupling graph of A (i ~ j if A_ij or A_ji != 0).
std::vector<std::vector<int>> coupled_blocks(const Eigen::MatrixXd& A);

}  // namespace cascade::detail
