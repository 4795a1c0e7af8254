#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tiletopo/integer.hpp"

namespace tiletopo {

// T with M T = union of (T + k_j); pieces f_j(x) = M^{-1}(x + k_j), j = 1..m.
struct TileSystem {
  std::size_t n = 0;
  IntMatrix M;
  std::vector<IntVector> digits;
  std::string name;

  std::size_t m() const { return digits.size(); }
  // Digit k_j for 1-based label j.
  const IntVector& digit(int j) const { return digits[static_cast<std::size_t>(j - 1)]; }
};

enum class CubicCase { kCubic, kRotation, kNone, kNotApplicable };
const char* to_string(CubicCase c);

struct SpectrumReport {
  // det(lambda I - M), highest degree first.
  std::vector<BigInt> charpoly;
  std::vector<double> root_moduli;  // descending
  bool is_expanding = false;
  bool is_selfsimilar_conjugate = false;
  CubicCase thm23_case = CubicCase::kNotApplicable;
};

constexpr double kModulusTolerance = 1e-9;

// Parses {"dimension", "matrix", "digits", "name"} and validates the system.
TileSystem parse_tile_system(std::string_view text);

// Validation shared by the parser and the catalog. Throws SpecError.
void validate_tile_system(const TileSystem& ts);

bool is_standard_digit_set(const TileSystem& ts);

SpectrumReport spectrum(const IntMatrix& M);

// Letters A..G with the companion matrix rows (0,0,2),(1,0,b),(0,1,a).
TileSystem twindragon(char letter);
std::pair<int, int> twindragon_parameters(char letter);
constexpr std::string_view kTwindragonLetters = "ABCDEFG";

}  // namespace tiletopo
