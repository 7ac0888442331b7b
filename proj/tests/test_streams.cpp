#include <doctest.h>

#include <random>

#include "padic/stream.hpp"

using namespace padic;

namespace {

// residue of a word modulo base^n as a 128-bit integer
unsigned __int128 nu_wide(const Word& w) {
  unsigned __int128 acc = 0, pow = 1;
  for (Digit d : w.digits) {
    acc += pow * d;
    pow *= static_cast<unsigned>(w.base);
  }
  return acc;
}

bool congruence_holds(long long num, long long den, int base, std::size_t n) {
  DigitStream s = rational_to_stream(num, den, base);
  unsigned __int128 mod = 1;
  for (std::size_t i = 0; i < n; ++i) mod *= static_cast<unsigned>(base);
  __int128 lhs = static_cast<__int128>(den) * static_cast<__int128>(nu_wide(truncate(s, n)));
  __int128 diff = lhs - num;
  __int128 m = static_cast<__int128>(mod);
  return ((diff % m) + m) % m == 0;
}

}  // namespace

TEST_CASE("truncate") {
  DigitStream s = make_stream(3, {}, {2});
  CHECK(truncate(s, 4) == make_word(3, {2, 2, 2, 2}));
  DigitStream t = make_stream(3, {2}, {1});
  CHECK(truncate(t, 3) == make_word(3, {2, 1, 1}));
  CHECK(truncate(t, 0) == make_word(3, {}));
}

TEST_CASE("rational_to_stream basics") {
  CHECK(rational_to_stream(-1, 1, 3) == make_stream(3, {}, {2}));
  CHECK(rational_to_stream(0, 1, 5) == make_stream(5, {}, {0}));
  DigitStream half = rational_to_stream(1, 2, 3);
  CHECK(half.preperiod == std::vector<Digit>{2});
  CHECK(half.period == std::vector<Digit>{1});
  for (std::size_t n = 1; n <= 20; ++n) CHECK(congruence_holds(1, 2, 3, n));
  CHECK_THROWS_AS(rational_to_stream(1, 0, 3), std::domain_error);
  CHECK_THROWS_AS(rational_to_stream(1, 6, 3), std::domain_error);
}

TEST_CASE("rational_to_stream congruence property") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<long long> nums(-999, 999);
  std::uniform_int_distribution<long long> dens(1, 60);
  const int bases[] = {2, 3, 5, 7};
  int done = 0;
  while (done < 200) {
    int base = bases[rng() % 4];
    long long num = nums(rng);
    long long den = dens(rng);
    if (den % base == 0) continue;
    for (std::size_t n : {1u, 5u, 20u}) CHECK(congruence_holds(num, den, base, n));
    ++done;
  }
}

TEST_CASE("integer streams") {
  for (int base : {2, 3, 5}) {
    for (long long k = 0; k < base * base * base; ++k) {
      DigitStream s = rational_to_stream(k, 1, base);
      CHECK(s.period == std::vector<Digit>{0});
      long long value = 0, pow = 1;
      for (Digit d : s.preperiod) {
        value += pow * static_cast<long long>(d);
        pow *= base;
      }
      CHECK(value == k);
    }
  }
}

TEST_CASE("canonicalization") {
  // non-primitive period collapses
  CHECK(make_stream(3, {}, {2, 2}) == make_stream(3, {}, {2}));
  // preperiod digits that rotate into the period are absorbed
  CHECK(make_stream(3, {2, 2}, {2}) == make_stream(3, {}, {2}));
  CHECK(make_stream(3, {1, 2}, {1, 2}) == make_stream(3, {}, {1, 2}));
  // idempotence and representation independence, checked on leading digits
  DigitStream a = make_stream(2, {1, 0}, {1, 1, 0});
  DigitStream b = make_stream(2, {1, 0, 1, 1, 0}, {1, 1, 0, 1, 1, 0});
  CHECK(a == b);
  CHECK(canonicalize(a) == a);
  std::size_t check_len = 2 * (a.preperiod.size() + a.period.size());
  CHECK(residue_equal(a, b, check_len));
}

TEST_CASE("residue_equal") {
  DigitStream a = make_stream(3, {}, {2});
  DigitStream b = make_stream(3, {2, 2}, {2});
  CHECK(residue_equal(a, b, 10));
  DigitStream c = make_stream(3, {2, 1}, {0});
  DigitStream d = make_stream(3, {2, 0}, {0});
  CHECK(residue_equal(c, d, 1));
  CHECK_FALSE(residue_equal(c, d, 2));
  CHECK(residue_equal(c, c, 50));
  CHECK_THROWS_AS(residue_equal(a, make_stream(2, {}, {1}), 1), std::invalid_argument);
}

TEST_CASE("stream text round trip") {
  CHECK(to_text(make_stream(3, {2}, {1})) == "2;1");
  CHECK(to_text(make_stream(3, {}, {2})) == ";2");
  CHECK(stream_from_text(3, "2;1") == make_stream(3, {2}, {1}));
  CHECK(stream_from_text(3, ";2") == make_stream(3, {}, {2}));
  CHECK_THROWS_AS(stream_from_text(3, "2,1"), std::invalid_argument);
  CHECK_THROWS_AS(stream_from_text(3, "2;"), std::invalid_argument);
}
