#include "derspec/adjacency.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace derspec {

std::vector<SpectrumEntry> adjacency_spectrum_bruteforce(unsigned n) {
  if (n < kAdjacencyMinDegree || n > kAdjacencyMaxDegree) {
    throw std::out_of_range("adjacency brute force supports 2 <= n <= 6");
  }
  std::vector<std::vector<unsigned char>> perms;
  std::vector<unsigned char> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  // g ~ h iff g^{-1} h is a derangement iff g and h disagree everywhere.
  auto const order = static_cast<Eigen::Index>(perms.size());
  Eigen::MatrixXd adjacency = Eigen::MatrixXd::Zero(order, order);
  for (Eigen::Index i = 0; i < order; ++i) {
    for (Eigen::Index j = i + 1; j < order; ++j) {
      bool disjoint = true;
      for (unsigned k = 0; k < n && disjoint; ++k) {
        disjoint = perms[i][k] != perms[j][k];
      }
      if (disjoint) adjacency(i, j) = adjacency(j, i) = 1.0;
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adjacency,
                                                        Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition did not converge");
  }

  std::map<std::int64_t, SpectrumEntry> grouped;
  for (double lambda : solver.eigenvalues()) {
    double const nearest = std::round(lambda);
    double const deviation = std::abs(lambda - nearest);
    if (deviation > kAdjacencyRoundingTolerance) {
      throw std::runtime_error("eigenvalue " + std::to_string(lambda) +
                               " is not within tolerance of an integer");
    }
    auto& entry = grouped[static_cast<std::int64_t>(nearest)];
    entry.value = static_cast<std::int64_t>(nearest);
    ++entry.multiplicity;
    entry.max_deviation = std::max(entry.max_deviation, deviation);
  }
  std::vector<SpectrumEntry> out;
  for (auto const& [value, entry] : grouped) out.push_back(entry);
  return out;
}

}  // namespace derspec
