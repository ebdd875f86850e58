// Copyright 2026 The active-scan Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "active_scan/spectral.h"

namespace active_scan {

MdsEmbedding classical_mds(const Eigen::MatrixXd& similarity,
                           std::size_t dims) {
  const Eigen::Index q = similarity.rows();
  if (q == 0 || similarity.cols() != q) {
    throw std::invalid_argument("classical_mds: expected a square matrix");
  }
  if (dims == 0 || static_cast<Eigen::Index>(dims) > q) {
    throw std::invalid_argument("classical_mds: dims must lie in [1, order]");
  }
  const Eigen::MatrixXd squared =
      (Eigen::MatrixXd::Ones(q, q) - similarity).array().square().matrix();
  // Double centering, B = -1/2 J D^2 J with J = I - 11'/q.
  const Eigen::VectorXd row_mean = squared.rowwise().mean();
  const Eigen::RowVectorXd col_mean = squared.colwise().mean();
  const double grand = squared.mean();
  Eigen::MatrixXd b = squared;
  b.colwise() -= row_mean;
  b.rowwise() -= col_mean;
  b.array() += grand;
  b *= -0.5;
  b = 0.5 * (b + b.transpose()).eval();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(b);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("classical_mds: eigensolver failed");
  }
  const auto d = static_cast<Eigen::Index>(dims);
  MdsEmbedding result;
  result.coordinates.resize(q, d);
  for (Eigen::Index c = 0; c < d; ++c) {
    const Eigen::Index src = q - 1 - c;  // ascending order from the solver
    const double lambda = solver.eigenvalues()(src);
    result.eigenvalues.push_back(lambda);
    if (lambda < 0.0) result.clamped_negative = true;
    result.coordinates.col(c) =
        solver.eigenvectors().col(src) * std::sqrt(std::max(lambda, 0.0));
  }
  return result;
}

}  // namespace active_scan
