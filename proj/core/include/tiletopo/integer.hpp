#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace tiletopo {

using BigInt = boost::multiprecision::cpp_int;

// Lattice vector in Z^n.
using IntVector = std::vector<BigInt>;

IntVector make_vector(std::initializer_list<long long> entries);
IntVector negate(const IntVector& v);
IntVector add(const IntVector& a, const IntVector& b);
IntVector subtract(const IntVector& a, const IntVector& b);
bool is_zero(const IntVector& v);
std::vector<double> to_double(const IntVector& v);

// "(1,0,-1)"
std::string format_vector(const IntVector& v);

// Square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

  IntVector apply(const IntVector& v) const;
  IntMatrix operator*(const IntMatrix& other) const;
  IntMatrix operator+(const IntMatrix& other) const;
  IntMatrix scaled(const BigInt& s) const;
  BigInt trace() const;

  bool operator==(const IntMatrix& other) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<BigInt> a_;
};

// Fraction-free Gaussian elimination (Bareiss).
BigInt determinant(const IntMatrix& m);

// adj(M) with M * adj(M) = det(M) * I.
IntMatrix adjugate(const IntMatrix& m);

// Coefficients of det(lambda I - M), highest degree first; leading entry is 1.
std::vector<BigInt> characteristic_polynomial(const IntMatrix& m);

// True iff d lies in M Z^n.
bool in_image_lattice(const IntMatrix& m, const IntVector& d);

}  // namespace tiletopo
