#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace tiletopo {

// Finite word over the 1-based alphabet {1..m}.
using Word = std::vector<int>;

// Digit string for m <= 9, dot-separated symbols otherwise.
std::string format_word(const Word& w);
Word parse_word(std::string_view s);

// Symbol swap 1 <-> 2.
Word flip_word(const Word& w);

Word concat(const Word& a, const Word& b);

// Eventually periodic sequence pre (period)^omega.
class Address {
 public:
  Address() = default;
  // Canonicalizes: primitive period, then shortest preperiod.
  Address(Word preperiod, Word period);

  // Accepts "1(212)w", "1(212)", "(2)".
  static Address parse(std::string_view s);

  const Word& preperiod() const { return pre_; }
  const Word& period() const { return per_; }
  int at(std::size_t index) const;

  Address flipped() const;
  // Shifted by prepending w.
  Address prefixed(const Word& w) const;
  Word prefix(std::size_t length) const;

  // "1(212)w"
  std::string str() const;

  auto operator<=>(const Address&) const = default;

 private:
  Word pre_;
  Word per_;
};

}  // namespace tiletopo
