#include "tiletopo/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace tiletopo {

std::string format_word(const Word& w) {
  const bool wide = std::any_of(w.begin(), w.end(), [](int s) { return s > 9; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (wide && i) out += '.';
    out += std::to_string(w[i]);
  }
  return out;
}

Word parse_word(std::string_view s) {
  Word w;
  if (s.find('.') != std::string_view::npos) {
    int cur = 0;
    bool have = false;
    for (char c : s) {
      if (c == '.') {
        if (!have) throw std::invalid_argument("parse_word: empty symbol");
        w.push_back(cur);
        cur = 0;
        have = false;
      } else if (c >= '0' && c <= '9') {
        cur = cur * 10 + (c - '0');
        have = true;
      } else {
        throw std::invalid_argument("parse_word: bad character");
      }
    }
    if (have) w.push_back(cur);
    return w;
  }
  for (char c : s) {
    if (c < '1' || c > '9') throw std::invalid_argument("parse_word: bad character");
    w.push_back(c - '0');
  }
  return w;
}

Word flip_word(const Word& w) {
  Word r(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) r[i] = w[i] == 1 ? 2 : (w[i] == 2 ? 1 : w[i]);
  return r;
}

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Address::Address(Word preperiod, Word period) : pre_(std::move(preperiod)), per_(std::move(period)) {
  if (per_.empty()) throw std::invalid_argument("Address: empty period");
  const std::size_t p = per_.size();
  for (std::size_t d = 1; d <= p; ++d) {
    if (p % d) continue;
    bool ok = true;
    for (std::size_t i = d; i < p && ok; ++i) ok = per_[i] == per_[i - d];
    if (ok) {
      per_.resize(d);
      break;
    }
  }
  while (!pre_.empty() && pre_.back() == per_.back()) {
    std::rotate(per_.rbegin(), per_.rbegin() + 1, per_.rend());
    pre_.pop_back();
  }
}

Address Address::parse(std::string_view s) {
  const auto open = s.find('(');
  const auto close = s.find(')');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open)
    throw std::invalid_argument("Address::parse: expected pre(period)");
  return Address(parse_word(s.substr(0, open)), parse_word(s.substr(open + 1, close - open - 1)));
}

int Address::at(std::size_t index) const {
  if (index < pre_.size()) return pre_[index];
  return per_[(index - pre_.size()) % per_.size()];
}

Address Address::flipped() const { return Address(flip_word(pre_), flip_word(per_)); }

Address Address::prefixed(const Word& w) const { return Address(concat(w, pre_), per_); }

Word Address::prefix(std::size_t length) const {
  Word w(length);
  for (std::size_t i = 0; i < length; ++i) w[i] = at(i);
  return w;
}

std::string Address::str() const { return format_word(pre_) + "(" + format_word(per_) + ")w"; }

}  // namespace tiletopo
