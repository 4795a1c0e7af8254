#include "tiletopo/tilespec.hpp"

#include <Eigen/Eigenvalues>
#include <boost/multiprecision/cpp_int.hpp>
#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "tiletopo/errors.hpp"

namespace tiletopo {

namespace {

using Rational = boost::multiprecision::cpp_rational;
using RatPoly = std::vector<Rational>;  // highest degree first

void trim(RatPoly& p) {
  std::size_t lead = 0;
  while (lead + 1 < p.size() && p[lead] == 0) ++lead;
  p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(lead));
}

std::size_t degree(const RatPoly& p) { return p.size() - 1; }

bool is_zero_poly(const RatPoly& p) { return p.size() == 1 && p[0] == 0; }

RatPoly derivative(const RatPoly& p) {
  const std::size_t d = degree(p);
  if (d == 0) return {0};
  RatPoly r(d);
  for (std::size_t i = 0; i < d; ++i) r[i] = p[i] * static_cast<long long>(d - i);
  return r;
}

// Returns quotient, sets rem.
RatPoly divide(const RatPoly& a, const RatPoly& b, RatPoly& rem) {
  rem = a;
  if (degree(a) < degree(b)) return {0};
  RatPoly q(degree(a) - degree(b) + 1);
  for (std::size_t i = 0; i < q.size(); ++i) {
    const Rational c = rem[i] / b[0];
    q[i] = c;
    for (std::size_t j = 0; j < b.size(); ++j) rem[i + j] -= c * b[j];
  }
  rem.erase(rem.begin(), rem.begin() + static_cast<std::ptrdiff_t>(q.size()));
  if (rem.empty()) rem = {0};
  trim(rem);
  return q;
}

RatPoly monic(RatPoly p) {
  const Rational lead = p[0];
  for (auto& c : p) c /= lead;
  return p;
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!is_zero_poly(b)) {
    RatPoly r;
    divide(a, b, r);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

RatPoly exact_quotient(const RatPoly& a, const RatPoly& b) {
  RatPoly r;
  return divide(a, b, r);
}

RatPoly sub(const RatPoly& a, const RatPoly& b) {
  RatPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[r.size() - a.size() + i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[r.size() - b.size() + i] -= b[i];
  trim(r);
  return r;
}

// Yun's square-free factorization: p = prod_i a_i^i.
std::vector<RatPoly> squarefree_factors(const RatPoly& p) {
  std::vector<RatPoly> out;
  const RatPoly dp = derivative(p);
  RatPoly a = gcd(p, dp);
  RatPoly b = exact_quotient(p, a);
  RatPoly d = sub(exact_quotient(dp, a), derivative(b));
  while (degree(b) > 0) {
    a = gcd(b, d);
    out.push_back(a);
    b = exact_quotient(b, a);
    d = sub(exact_quotient(d, a), derivative(b));
  }
  return out;
}

std::vector<double> root_moduli_simple(const RatPoly& p) {
  const RatPoly q = monic(p);
  const std::size_t d = degree(q);
  if (d == 0) return {};
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t i = 1; i < d; ++i) comp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  for (std::size_t i = 0; i < d; ++i)
    comp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(d - 1)) = -q[d - i].convert_to<double>();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(comp, false);
  if (solver.info() != Eigen::Success) throw NumericalError("companion eigenvalue iteration did not converge");
  std::vector<double> out;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) out.push_back(std::abs(solver.eigenvalues()(i)));
  return out;
}

BigInt eval_at(const std::vector<BigInt>& p, long long x) {
  BigInt acc = 0;
  for (const auto& c : p) acc = acc * x + c;
  return acc;
}

bool is_perfect_cube(BigInt v) {
  if (v < 0) v = -v;
  BigInt lo = 0, hi = 1;
  while (hi * hi * hi < v) hi *= 2;
  while (lo < hi) {
    BigInt mid = (lo + hi) / 2;
    if (mid * mid * mid < v) lo = mid + 1;
    else hi = mid;
  }
  return lo * lo * lo == v;
}

const nlohmann::json& require(const nlohmann::json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw SpecError(SpecErrorKind::kSyntax, std::string("missing field \"") + key + "\"");
  return *it;
}

BigInt integer_entry(const nlohmann::json& v, const char* where) {
  if (v.is_number_unsigned()) return BigInt(v.get<std::uint64_t>());
  if (v.is_number_integer()) return BigInt(v.get<std::int64_t>());
  throw SpecError(SpecErrorKind::kSyntax, std::string(where) + " entries must be integers");
}

}  // namespace

const char* to_string(CubicCase c) {
  switch (c) {
    case CubicCase::kCubic: return "cubic";
    case CubicCase::kRotation: return "rotation";
    case CubicCase::kNone: return "none";
    case CubicCase::kNotApplicable: return "not_applicable";
  }
  return "not_applicable";
}

SpectrumReport spectrum(const IntMatrix& M) {
  SpectrumReport rep;
  rep.charpoly = characteristic_polynomial(M);
  const std::size_t n = M.size();
  RatPoly p(rep.charpoly.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = Rational(rep.charpoly[i]);
  const auto factors = squarefree_factors(p);
  for (std::size_t mult = 1; mult <= factors.size(); ++mult) {
    for (double r : root_moduli_simple(factors[mult - 1]))
      for (std::size_t k = 0; k < mult; ++k) rep.root_moduli.push_back(r);
  }
  if (rep.root_moduli.size() != n) throw NumericalError("root count differs from matrix size");
  std::sort(rep.root_moduli.rbegin(), rep.root_moduli.rend());

  const double lo = rep.root_moduli.back();
  const double hi = rep.root_moduli.front();
  const bool unit_root = eval_at(rep.charpoly, 1) == 0 || eval_at(rep.charpoly, -1) == 0;
  if (unit_root || lo < 1.0 - kModulusTolerance) {
    rep.is_expanding = false;
  } else if (lo > 1.0 + kModulusTolerance) {
    rep.is_expanding = true;
  } else {
    throw NumericalError("eigenvalue modulus within tolerance of 1; expansion undecided");
  }
  rep.is_selfsimilar_conjugate = (hi - lo) <= kModulusTolerance * std::max(1.0, hi);

  if (n != 3) {
    rep.thm23_case = CubicCase::kNotApplicable;
  } else if (!rep.is_selfsimilar_conjugate) {
    rep.thm23_case = CubicCase::kNone;
  } else if (is_perfect_cube(rep.charpoly[3])) {
    rep.thm23_case = CubicCase::kCubic;
  } else if (rep.charpoly[1] == 0 && rep.charpoly[2] == 0) {
    rep.thm23_case = CubicCase::kRotation;
  } else {
    rep.thm23_case = CubicCase::kNone;
  }
  return rep;
}

bool is_standard_digit_set(const TileSystem& ts) {
  const BigInt det = determinant(ts.M);
  if (det == 0) return false;
  const BigInt m = det < 0 ? BigInt(-det) : det;
  if (m != ts.m()) return false;
  const IntMatrix adj = adjugate(ts.M);
  for (std::size_t i = 0; i < ts.m(); ++i)
    for (std::size_t j = i + 1; j < ts.m(); ++j) {
      const IntVector x = adj.apply(subtract(ts.digits[j], ts.digits[i]));
      bool divisible = true;
      for (const auto& e : x) divisible = divisible && (e % det == 0);
      if (divisible) return false;
    }
  return true;
}

void validate_tile_system(const TileSystem& ts) {
  if (ts.n == 0) throw SpecError(SpecErrorKind::kDimensionMismatch, "dimension must be positive");
  if (ts.M.size() != ts.n)
    throw SpecError(SpecErrorKind::kDimensionMismatch, "matrix is not " + std::to_string(ts.n) + "x" + std::to_string(ts.n));
  for (const auto& k : ts.digits)
    if (k.size() != ts.n)
      throw SpecError(SpecErrorKind::kDimensionMismatch, "digit " + format_vector(k) + " has wrong length");
  std::set<IntVector> seen(ts.digits.begin(), ts.digits.end());
  if (seen.size() != ts.digits.size()) throw SpecError(SpecErrorKind::kDuplicateDigits, "digits must be pairwise distinct");
  const BigInt det = determinant(ts.M);
  const BigInt m = det < 0 ? BigInt(-det) : det;
  if (m != ts.m())
    throw SpecError(SpecErrorKind::kDeterminantMismatch,
                    "|det M| = " + m.str() + " but " + std::to_string(ts.m()) + " digits given");
  SpectrumReport rep;
  try {
    rep = spectrum(ts.M);
  } catch (const NumericalError& e) {
    throw SpecError(SpecErrorKind::kNonExpanding, e.what());
  }
  if (!rep.is_expanding) {
    throw SpecError(SpecErrorKind::kNonExpanding,
                    "smallest eigenvalue modulus " + std::to_string(rep.root_moduli.back()) + " is not > 1");
  }
  if (!is_standard_digit_set(ts))
    throw SpecError(SpecErrorKind::kNonStandardDigits, "two digits are congruent modulo M Z^n");
}

TileSystem parse_tile_system(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SpecError(SpecErrorKind::kSyntax, e.what());
  }
  if (!doc.is_object()) throw SpecError(SpecErrorKind::kSyntax, "top level must be an object");

  TileSystem ts;
  const auto& dim = require(doc, "dimension");
  if (!dim.is_number_integer() || dim.get<std::int64_t>() <= 0)
    throw SpecError(SpecErrorKind::kSyntax, "\"dimension\" must be a positive integer");
  ts.n = static_cast<std::size_t>(dim.get<std::int64_t>());

  const auto& mat = require(doc, "matrix");
  if (!mat.is_array()) throw SpecError(SpecErrorKind::kSyntax, "\"matrix\" must be an array of rows");
  if (mat.size() != ts.n)
    throw SpecError(SpecErrorKind::kDimensionMismatch, "matrix has " + std::to_string(mat.size()) + " rows");
  ts.M = IntMatrix(ts.n);
  for (std::size_t r = 0; r < ts.n; ++r) {
    if (!mat[r].is_array()) throw SpecError(SpecErrorKind::kSyntax, "matrix rows must be arrays");
    if (mat[r].size() != ts.n)
      throw SpecError(SpecErrorKind::kDimensionMismatch, "matrix row " + std::to_string(r) + " has wrong length");
    for (std::size_t c = 0; c < ts.n; ++c) ts.M(r, c) = integer_entry(mat[r][c], "matrix");
  }

  const auto& digs = require(doc, "digits");
  if (!digs.is_array()) throw SpecError(SpecErrorKind::kSyntax, "\"digits\" must be an array");
  for (const auto& d : digs) {
    if (!d.is_array()) throw SpecError(SpecErrorKind::kSyntax, "each digit must be an array");
    if (d.size() != ts.n) throw SpecError(SpecErrorKind::kDimensionMismatch, "digit has wrong length");
    IntVector k;
    for (const auto& e : d) k.push_back(integer_entry(e, "digit"));
    ts.digits.push_back(std::move(k));
  }
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) throw SpecError(SpecErrorKind::kSyntax, "\"name\" must be a string");
    ts.name = it->get<std::string>();
  }
  validate_tile_system(ts);
  return ts;
}

std::pair<int, int> twindragon_parameters(char letter) {
  switch (letter) {
    case 'A': return {0, 0};
    case 'B': return {-1, 1};
    case 'C': return {1, -1};
    case 'D': return {0, 1};
    case 'E': return {2, -2};
    case 'F': return {1, 0};
    case 'G': return {0, 2};
    default: break;
  }
  throw SpecError(SpecErrorKind::kUnknownCatalogEntry, std::string("twindragon ") + letter + " (expected A..G)");
}

TileSystem twindragon(char letter) {
  const auto [a, b] = twindragon_parameters(letter);
  TileSystem ts;
  ts.n = 3;
  ts.M = IntMatrix{{0, 0, 2}, {1, 0, b}, {0, 1, a}};
  ts.digits = {make_vector({0, 0, 0}), make_vector({1, 0, 0})};
  ts.name = std::string("twindragon-") + letter;
  validate_tile_system(ts);
  return ts;
}

}  // namespace tiletopo
