#include "tiletopo/numeric.hpp"

namespace tiletopo {

AffineMaps::AffineMaps(const TileSystem& ts) : n_(ts.n) {
  const auto n = static_cast<Eigen::Index>(n_);
  const IntMatrix adj = adjugate(ts.M);
  adj_.resize(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c)
      adj_(r, c) = adj(static_cast<std::size_t>(r), static_cast<std::size_t>(c)).convert_to<double>();
  det_ = determinant(ts.M).convert_to<double>();
  inverse_ = adj_ / det_;
  for (const auto& k : ts.digits) {
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = k[static_cast<std::size_t>(i)].convert_to<double>();
    digits_.push_back(v);
  }
}

Eigen::VectorXd AffineMaps::apply(int j, const Eigen::VectorXd& x) const {
  return adj_ * (x + digits_[static_cast<std::size_t>(j - 1)]) / det_;
}

Eigen::VectorXd AffineMaps::apply_word(const Word& w, Eigen::VectorXd x) const {
  for (auto it = w.rbegin(); it != w.rend(); ++it) x = apply(*it, x);
  return x;
}

Eigen::VectorXd AffineMaps::address_point(const Address& s) const {
  // Fixed point of f_period: x = A x + c with A = M^{-p}.
  const auto n = static_cast<Eigen::Index>(n_);
  const Eigen::VectorXd c = apply_word(s.period(), Eigen::VectorXd::Zero(n));
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n);
  for (std::size_t t = 0; t < s.period().size(); ++t) a = inverse_ * a;
  const Eigen::VectorXd fixed = (Eigen::MatrixXd::Identity(n, n) - a).partialPivLu().solve(c);
  return apply_word(s.preperiod(), fixed);
}

}  // namespace tiletopo
