#pragma once

#include <vector>

#include <Eigen/Dense>

#include "tiletopo/tilespec.hpp"
#include "tiletopo/word.hpp"

namespace tiletopo {

// Floating-point evaluation of the maps f_j(x) = M^{-1}(x + k_j). M^{-1} is
// applied as adj(M) / det(M) with both factors exact before rounding.
class AffineMaps {
 public:
  explicit AffineMaps(const TileSystem& ts);

  std::size_t dimension() const { return n_; }
  Eigen::VectorXd apply(int j, const Eigen::VectorXd& x) const;
  // f_w = f_{w_1} o ... o f_{w_k}
  Eigen::VectorXd apply_word(const Word& w, Eigen::VectorXd x) const;
  // pi(pre (period)^omega)
  Eigen::VectorXd address_point(const Address& s) const;
  const Eigen::MatrixXd& inverse() const { return inverse_; }

 private:
  std::size_t n_;
  Eigen::MatrixXd adj_;
  double det_;
  Eigen::MatrixXd inverse_;
  std::vector<Eigen::VectorXd> digits_;
};

}  // namespace tiletopo
