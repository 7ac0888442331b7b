#pragma once

// Exact base-adic integers as eventually periodic digit streams. A stream
// with preperiod u and period v denotes the digit sequence u v v v ...,
// i.e. the integer sum of digit[k] * base^k. Rationals with denominator
// coprime to the base have exactly such expansions.

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "padic/word.hpp"

namespace padic {

struct DigitStream {
  int base = 2;
  std::vector<Digit> preperiod;
  std::vector<Digit> period;  // nonempty

  Digit digit_at(std::size_t i) const {
    if (i < preperiod.size()) return preperiod[i];
    return period[(i - preperiod.size()) % period.size()];
  }

  friend bool operator==(const DigitStream&, const DigitStream&) = default;
};

// Canonical form: primitive period, minimal preperiod.
inline DigitStream canonicalize(DigitStream s) {
  if (s.period.empty()) throw std::invalid_argument("stream period must be nonempty");
  // shrink the period to its primitive root
  for (std::size_t d = 1; d <= s.period.size() / 2; ++d) {
    if (s.period.size() % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < s.period.size() && repeats; ++i)
      repeats = s.period[i] == s.period[i % d];
    if (repeats) {
      s.period.resize(d);
      break;
    }
  }
  // absorb trailing preperiod digits that merely rotate the period
  while (!s.preperiod.empty() && s.preperiod.back() == s.period.back()) {
    s.preperiod.pop_back();
    Digit last = s.period.back();
    s.period.pop_back();
    s.period.insert(s.period.begin(), last);
  }
  return s;
}

inline DigitStream make_stream(int base, std::vector<Digit> preperiod,
                               std::vector<Digit> period) {
  validate_base(base);
  if (period.empty()) throw std::invalid_argument("stream period must be nonempty");
  for (Digit d : preperiod)
    if (d >= static_cast<Digit>(base)) throw std::invalid_argument("digit out of range");
  for (Digit d : period)
    if (d >= static_cast<Digit>(base)) throw std::invalid_argument("digit out of range");
  return canonicalize(DigitStream{base, std::move(preperiod), std::move(period)});
}

// First n digits as a word (the residue class modulo base^n).
inline Word truncate(const DigitStream& s, std::size_t n) {
  Word w{s.base, {}};
  w.digits.reserve(n);
  for (std::size_t i = 0; i < n; ++i) w.digits.push_back(s.digit_at(i));
  return w;
}

inline bool residue_equal(const DigitStream& a, const DigitStream& b, std::size_t n) {
  if (a.base != b.base) throw std::invalid_argument("base mismatch");
  for (std::size_t i = 0; i < n; ++i)
    if (a.digit_at(i) != b.digit_at(i)) return false;
  return true;
}

// Expansion of num/den in base p, for den coprime to p. Digits follow the
// remainder recurrence r <- (r - d*den)/p with d = r*den^{-1} mod p; the
// remainder values are bounded, so a repeated remainder yields the period.
inline DigitStream rational_to_stream(long long num, long long den, int base) {
  validate_base(base);
  if (den == 0) throw std::domain_error("denominator must be nonzero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (std::gcd(den, static_cast<long long>(base)) != 1)
    throw std::domain_error("denominator not coprime to base");

  // den^{-1} mod base by extended Euclid
  long long inv = 0, t = 1, r = base, nr = den % base;
  while (nr != 0) {
    long long quot = r / nr;
    long long tmp = inv - quot * t;
    inv = t;
    t = tmp;
    tmp = r - quot * nr;
    r = nr;
    nr = tmp;
  }
  inv = ((inv % base) + base) % base;

  std::vector<Digit> digits;
  std::map<long long, std::size_t> seen;
  long long rem = num;
  while (!seen.count(rem)) {
    seen[rem] = digits.size();
    long long d = ((rem % base) * inv) % base;
    d = ((d % base) + base) % base;
    digits.push_back(static_cast<Digit>(d));
    rem = (rem - d * den) / base;
  }
  std::size_t start = seen[rem];
  std::vector<Digit> pre(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(start));
  std::vector<Digit> per(digits.begin() + static_cast<std::ptrdiff_t>(start), digits.end());
  return make_stream(base, std::move(pre), std::move(per));
}

// Text form "pre;per", each part a comma-joined digit list; pure periodic
// streams are written ";per".
inline std::string to_text(const DigitStream& s) {
  return to_text(Word{s.base, s.preperiod}) + ";" + to_text(Word{s.base, s.period});
}

inline DigitStream stream_from_text(int base, const std::string& text) {
  std::size_t semi = text.find(';');
  if (semi == std::string::npos)
    throw std::invalid_argument("stream text must contain ';'");
  Word pre = word_from_text(base, text.substr(0, semi));
  Word per = word_from_text(base, text.substr(semi + 1));
  return make_stream(base, pre.digits, per.digits);
}

}  // namespace padic
