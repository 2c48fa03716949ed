// Words in the braid generators w1, w2, w3 of the mapping class group of the
// four-punctured sphere.
//
// A word g1 g2 ... gL denotes the composite g1 o g2 o ... o gL, so every
// representation evaluates it as the ordered matrix product
// rho(g1) rho(g2) ... rho(gL).

#pragma once

#include <cctype>
#include <charconv>
#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace m04 {

struct Generator {
  int index = 1;  // 1, 2 or 3
  int sign = 1;   // +1 or -1

  constexpr Generator inverse() const { return {index, -sign}; }
  constexpr bool cancels(const Generator& other) const {
    return index == other.index && sign == -other.sign;
  }
  friend constexpr auto operator<=>(const Generator&, const Generator&) = default;
};

inline constexpr Generator w1{1, 1};
inline constexpr Generator w2{2, 1};
inline constexpr Generator w3{3, 1};

/// Raised on malformed word text. `position()` is the byte offset of the
/// offending token.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Freely reduced word. The empty word is the identity mapping class.
class MappingWord {
 public:
  MappingWord() = default;
  MappingWord(std::initializer_list<Generator> letters) {
    for (const auto& g : letters) push_back(g);
  }
  explicit MappingWord(std::span<const Generator> letters) {
    for (const auto& g : letters) push_back(g);
  }

  /// Appends a letter, cancelling against the last one when they are inverse.
  void push_back(Generator g) {
    if (g.index < 1 || g.index > 3 || (g.sign != 1 && g.sign != -1)) {
      throw std::invalid_argument("generator out of range");
    }
    if (!letters_.empty() && letters_.back().cancels(g)) {
      letters_.pop_back();
    } else {
      letters_.push_back(g);
    }
  }

  const std::vector<Generator>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }
  const Generator& operator[](std::size_t i) const { return letters_[i]; }

  /// Signed letter count: number of positive letters minus negative ones.
  int exponent_sum() const noexcept {
    int e = 0;
    for (const auto& g : letters_) e += g.sign;
    return e;
  }

  friend bool operator==(const MappingWord&, const MappingWord&) = default;

 private:
  std::vector<Generator> letters_;
};

inline MappingWord operator*(const MappingWord& a, const MappingWord& b) {
  MappingWord out = a;
  for (const auto& g : b) out.push_back(g);
  return out;
}

inline MappingWord power(const MappingWord& w, int n) {
  MappingWord out;
  for (int i = 0; i < n; ++i) out = out * w;
  return out;
}

inline MappingWord invert(const MappingWord& w) {
  MappingWord out;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return out;
}

/// Positive words in w1^-1, w2, w3^-1 containing at least one w2 and at
/// least one of w1^-1, w3^-1. These preserve the Penner train track.
inline bool is_penner_positive(const MappingWord& w) {
  bool has_twist = false;
  bool has_outer = false;
  for (const auto& g : w) {
    if (g == Generator{2, 1}) {
      has_twist = true;
    } else if (g == Generator{1, -1} || g == Generator{3, -1}) {
      has_outer = true;
    } else {
      return false;
    }
  }
  return has_twist && has_outer;
}

/// True iff every letter is one of w1^-1, w2, w3^-1.
inline bool is_track_preserving(const MappingWord& w) {
  for (const auto& g : w) {
    if (!(g == Generator{2, 1} || g == Generator{1, -1} || g == Generator{3, -1})) return false;
  }
  return true;
}

inline constexpr long long kMaxExponent = 1'000'000;

/// Parses `id` or whitespace-separated terms `w<i>` / `w<i>^<n>`.
inline MappingWord parse_word(std::string_view text) {
  MappingWord out;
  std::size_t pos = 0;
  const auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  if (pos == text.size()) throw ParseError("empty word", pos);

  if (text.substr(pos, 2) == "id") {
    std::size_t after = pos + 2;
    std::size_t rest = after;
    while (rest < text.size() && std::isspace(static_cast<unsigned char>(text[rest]))) ++rest;
    if (rest == text.size()) return out;
    throw ParseError("unexpected text after 'id'", after);
  }

  while (pos < text.size()) {
    const std::size_t start = pos;
    if (text[pos] != 'w' || pos + 1 >= text.size() || text[pos + 1] < '1' || text[pos + 1] > '3') {
      throw ParseError("unknown generator", start);
    }
    const int index = text[pos + 1] - '0';
    pos += 2;
    long long exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      const char* b = text.data() + pos;
      const char* e = text.data() + text.size();
      std::size_t digits_at = pos;
      if (b != e && *b == '+') {
        ++b;
        ++digits_at;
      }
      auto [ptr, ec] = std::from_chars(b, e, exponent);
      if (ec != std::errc{} || (ptr != e && !std::isspace(static_cast<unsigned char>(*ptr)))) {
        throw ParseError("malformed exponent", digits_at);
      }
      if (exponent > kMaxExponent || exponent < -kMaxExponent) {
        throw ParseError("exponent out of range", digits_at);
      }
      pos = static_cast<std::size_t>(ptr - text.data());
    } else if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) {
      throw ParseError("unknown generator", start);
    }
    const int sign = exponent < 0 ? -1 : 1;
    for (long long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) {
      out.push_back({index, sign});
    }
    skip_space();
  }
  return out;
}

/// Inverse of parse_word; runs of a repeated letter collapse to one term.
inline std::string render(const MappingWord& w) {
  if (w.empty()) return "id";
  std::string out;
  const auto& l = w.letters();
  for (std::size_t i = 0; i < l.size();) {
    std::size_t j = i;
    while (j < l.size() && l[j] == l[i]) ++j;
    const long long n = static_cast<long long>(j - i) * l[i].sign;
    if (!out.empty()) out += ' ';
    out += 'w';
    out += static_cast<char>('0' + l[i].index);
    if (n != 1) out += '^' + std::to_string(n);
    i = j;
  }
  return out;
}

/// The five defining relations, each as the word lhs * rhs^-1, which must
/// represent the identity.
inline std::vector<std::pair<std::string, MappingWord>> presentation_relators() {
  const Generator a = w1, b = w2, c = w3;
  const MappingWord x{a, b, c};
  return {
      {"w1 w3 = w3 w1", MappingWord{a, c} * invert(MappingWord{c, a})},
      {"w1 w2 w1 = w2 w1 w2", MappingWord{a, b, a} * invert(MappingWord{b, a, b})},
      {"w2 w3 w2 = w3 w2 w3", MappingWord{b, c, b} * invert(MappingWord{c, b, c})},
      {"w1 w2 w3^2 w2 w1 = 1", MappingWord{a, b, c, c, b, a}},
      {"(w1 w2 w3)^4 = 1", power(x, 4)},
  };
}

}  // namespace m04
