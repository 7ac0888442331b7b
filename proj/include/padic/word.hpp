#pragma once

// Words over the digit alphabet {0,..,base-1}, viewed as vertices of the
// complete base-ary tree and as addresses of balls of base-adic integers.
// Digits are stored little-endian: digits[k] is the coefficient of base^k.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace padic {

using Digit = std::uint32_t;

struct Word {
  int base = 2;
  std::vector<Digit> digits;

  std::size_t size() const { return digits.size(); }
  bool empty() const { return digits.empty(); }

  friend bool operator==(const Word& a, const Word& b) {
    return a.base == b.base && a.digits == b.digits;
  }
};

inline void validate_base(int base) {
  if (base < 2) throw std::invalid_argument("base must be >= 2");
}

inline Word make_word(int base, std::vector<Digit> digits) {
  validate_base(base);
  for (Digit d : digits)
    if (d >= static_cast<Digit>(base))
      throw std::invalid_argument("digit out of range for base");
  return Word{base, std::move(digits)};
}

inline void require_same_base(const Word& v, const Word& w) {
  if (v.base != w.base) throw std::invalid_argument("base mismatch");
}

// Numeric value of a word: sum of digits[k] * base^k. Fits the word into
// [0, base^n); overflow beyond 64 bits is rejected.
inline std::uint64_t nu(const Word& w) {
  unsigned __int128 acc = 0;
  unsigned __int128 pow = 1;
  for (Digit d : w.digits) {
    acc += pow * d;
    pow *= static_cast<unsigned>(w.base);
    if (pow > (static_cast<unsigned __int128>(1) << 64))
      throw std::overflow_error("nu: value does not fit in 64 bits");
  }
  if (acc > UINT64_MAX) throw std::overflow_error("nu: value does not fit in 64 bits");
  return static_cast<std::uint64_t>(acc);
}

inline bool is_prefix(const Word& v, const Word& w) {
  require_same_base(v, w);
  if (v.size() > w.size()) return false;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v.digits[i] != w.digits[i]) return false;
  return true;
}

inline bool is_proper_prefix(const Word& v, const Word& w) {
  return v.size() < w.size() && is_prefix(v, w);
}

// Ball addressed by a word of length n: center nu(w), radius base^(1-n).
struct Ball {
  int base;
  std::uint64_t center;
  int radius_exponent;

  friend bool operator==(const Ball&, const Ball&) = default;
};

inline Ball ball_of(const Word& w) {
  return Ball{w.base, nu(w), 1 - static_cast<int>(w.size())};
}

// Ball containment is prefix order on addresses.
inline bool ball_contains(const Word& v, const Word& w) { return is_prefix(v, w); }

// Total order: shorter words first, equal lengths lexicographically.
inline std::strong_ordering word_cmp(const Word& v, const Word& w) {
  require_same_base(v, w);
  if (v.size() != w.size()) return v.size() <=> w.size();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v.digits[i] != w.digits[i]) return v.digits[i] <=> w.digits[i];
  return std::strong_ordering::equal;
}

struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    return word_cmp(a, b) == std::strong_ordering::less;
  }
};

inline Word concat(const Word& v, const Word& w) {
  require_same_base(v, w);
  Word r = v;
  r.digits.insert(r.digits.end(), w.digits.begin(), w.digits.end());
  return r;
}

// All words of a given length in lexicographic (= length-then-lex) order.
inline std::vector<Word> words_of_length(int base, std::size_t n) {
  validate_base(base);
  std::vector<Word> out;
  Word cur{base, std::vector<Digit>(n, 0)};
  while (true) {
    out.push_back(cur);
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(n) - 1;
    while (i >= 0 && cur.digits[i] == static_cast<Digit>(base) - 1) {
      cur.digits[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++cur.digits[i];
  }
  return out;
}

// Text form: decimal digits joined by commas; the empty word is "".
inline std::string to_text(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w.digits[i]);
  }
  return s;
}

inline Word word_from_text(int base, const std::string& text) {
  validate_base(base);
  std::vector<Digit> digits;
  if (!text.empty()) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                    : comma - pos);
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("malformed digit '" + tok + "'");
      unsigned long val = std::stoul(tok);
      if (val >= static_cast<unsigned long>(base))
        throw std::invalid_argument("digit " + tok + " out of range for base " +
                                    std::to_string(base));
      digits.push_back(static_cast<Digit>(val));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  return Word{base, std::move(digits)};
}

}  // namespace padic
