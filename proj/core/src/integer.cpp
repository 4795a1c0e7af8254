#include "tiletopo/integer.hpp"

#include <stdexcept>
#include <utility>

namespace tiletopo {

IntVector make_vector(std::initializer_list<long long> entries) {
  IntVector v;
  v.reserve(entries.size());
  for (long long e : entries) v.emplace_back(e);
  return v;
}

IntVector negate(const IntVector& v) {
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

IntVector add(const IntVector& a, const IntVector& b) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVector subtract(const IntVector& a, const IntVector& b) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool is_zero(const IntVector& v) {
  for (const auto& e : v)
    if (e != 0) return false;
  return true;
}

std::vector<double> to_double(const IntVector& v) {
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].convert_to<double>();
  return r;
}

std::string format_vector(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i].str();
  }
  s += ')';
  return s;
}

IntMatrix::IntMatrix(std::size_t n) : n_(n), a_(n * n) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : n_(rows.size()), a_(rows.size() * rows.size()) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != n_) throw std::invalid_argument("IntMatrix: matrix must be square");
    std::size_t c = 0;
    for (long long e : row) a_[r * n_ + c++] = e;
    ++r;
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVector IntMatrix::apply(const IntVector& v) const {
  IntVector r(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    BigInt s = 0;
    for (std::size_t j = 0; j < n_; ++j) s += a_[i * n_ + j] * v[j];
    r[i] = std::move(s);
  }
  return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  IntMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const BigInt& x = a_[i * n_ + k];
      if (x == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) r.a_[i * n_ + j] += x * o.a_[k * n_ + j];
    }
  return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  IntMatrix r(n_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

IntMatrix IntMatrix::scaled(const BigInt& s) const {
  IntMatrix r(n_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
  return r;
}

BigInt IntMatrix::trace() const {
  BigInt t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += a_[i * n_ + i];
  return t;
}

BigInt determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix adjugate(const IntMatrix& m) {
  // adj(M) = (-1)^(n+1) * (M^(n-1) + c_1 M^(n-2) + ... + c_(n-1) I) from Cayley-Hamilton.
  const std::size_t n = m.size();
  const auto c = characteristic_polynomial(m);
  IntMatrix acc = IntMatrix::identity(n);
  for (std::size_t k = 1; k < n; ++k) acc = m * acc + IntMatrix::identity(n).scaled(c[k]);
  return (n % 2 == 1) ? acc : acc.scaled(-1);
}

std::vector<BigInt> characteristic_polynomial(const IntMatrix& m) {
  // Faddeev-LeVerrier: M_k = M * (M_(k-1) + c_(k-1) I), c_k = -tr(M_k) / k.
  const std::size_t n = m.size();
  std::vector<BigInt> c(n + 1);
  c[0] = 1;
  IntMatrix mk = m;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) mk = m * (mk + IntMatrix::identity(n).scaled(c[k - 1]));
    c[k] = -mk.trace() / static_cast<long long>(k);
  }
  return c;
}

bool in_image_lattice(const IntMatrix& m, const IntVector& d) {
  const BigInt det = determinant(m);
  if (det == 0) throw std::invalid_argument("in_image_lattice: singular matrix");
  const IntVector x = adjugate(m).apply(d);
  for (const auto& e : x)
    if (e % det != 0) return false;
  return true;
}

}  // namespace tiletopo
