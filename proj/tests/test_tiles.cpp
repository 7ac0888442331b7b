#include <doctest.h>

#include <sstream>

#include "padic/tile.hpp"

using namespace padic;

namespace {

Word w(int base, std::vector<Digit> digits) { return make_word(base, std::move(digits)); }

std::vector<Word> words(int base, std::vector<std::vector<Digit>> all) {
  std::vector<Word> out;
  for (auto& d : all) out.push_back(make_word(base, std::move(d)));
  return out;
}

// Number of completely split base-ary trees with exactly k leaves, by the
// standard convolution recurrence (Catalan / Fuss-Catalan numbers).
std::uint64_t full_tree_count(int base, std::size_t k) {
  std::vector<std::uint64_t> c(k + 1, 0);
  if (k >= 1) c[1] = 1;
  for (std::size_t n = 2; n <= k; ++n) {
    // convolve c with itself `base` times, take coefficient n
    std::vector<std::uint64_t> conv(n + 1, 0);
    conv[0] = 1;
    for (int rep = 0; rep < base; ++rep) {
      std::vector<std::uint64_t> next(n + 1, 0);
      for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 1; i + j <= n; ++j) next[i + j] += conv[i] * c[j];
      conv = std::move(next);
    }
    c[n] = conv[n];
  }
  return c[k];
}

}  // namespace

TEST_CASE("verify_tile") {
  CHECK(verify_tile(2, words(2, {{0}, {1}})));
  CHECK_FALSE(verify_tile(2, words(2, {{0}, {1, 0}})));
  CHECK(verify_tile(3, words(3, {{1}, {2}, {0, 0}, {0, 1}, {0, 2}})));
  CHECK_FALSE(verify_tile(3, words(3, {})));
  CHECK_FALSE(verify_tile(3, words(3, {{}})));
}

TEST_CASE("verify_tile_oracle") {
  CHECK(verify_tile_oracle(3, words(3, {{1}, {2}, {0, 0}, {0, 1}, {0, 2}})));
  CHECK_FALSE(verify_tile_oracle(2, words(2, {{0}})));
  CHECK_FALSE(verify_tile_oracle(2, words(2, {{0}, {1}, {1, 0}})));
  CHECK_THROWS_AS(verify_tile_oracle(2, words(2, {{0}, std::vector<Digit>(40, 1)}), 1000),
                  ResourceCapError);
}

TEST_CASE("diagnose_tile witnesses") {
  auto missing = diagnose_tile(2, words(2, {{0}}));
  CHECK(missing.defect == TileDefect::completeness);
  CHECK(missing.witness == w(2, {1}));
  auto overlap = diagnose_tile(2, words(2, {{0}, {0, 1}}));
  CHECK(overlap.defect == TileDefect::prefix_free);
  CHECK(overlap.witness == w(2, {0, 1}));
  CHECK(diagnose_tile(2, words(2, {{}})).defect == TileDefect::trivial);
}

TEST_CASE("explicit_tile worked examples") {
  ExplicitTile t32 = explicit_tile(3, 2);
  CHECK(t32.tile.leaves == words(3, {{1}, {2}, {0, 0}, {0, 1}, {0, 2}}));
  CHECK(t32.params.depth == 2);
  CHECK(t32.params.s_pen == 1);
  CHECK(t32.params.n_short == 2);
  CHECK(t32.params.n_long == 3);
  CHECK(t32.params.a_leaves == words(3, {{1}, {2}}));
  CHECK(t32.params.b_split == words(3, {{0}}));

  ExplicitTile t51 = explicit_tile(5, 1);
  CHECK(t51.tile.leaves == words(5, {{0}, {1}, {2}, {3}, {4}}));
  CHECK(t51.params.depth == 1);
  CHECK(t51.params.n_short == 0);
  CHECK(t51.params.n_long == 5);
  CHECK(t51.params.a_leaves.empty());
  CHECK(t51.params.b_split == words(5, {{}}));

  CHECK_THROWS_AS(explicit_tile(3, 0), std::invalid_argument);
}

TEST_CASE("explicit_tile(3,5)") {
  ExplicitTile t = explicit_tile(3, 5);
  CHECK(t.tile.leaf_count() == 11);
  CHECK(t.params.depth == 3);
  CHECK(t.params.s_pen == 1);
  CHECK(verify_tile_oracle(3, t.tile.leaves));
  // all length-2 words except those extending (0,0), plus its three children
  for (const Word& l : t.tile.leaves) {
    if (l.size() == 2) CHECK_FALSE(is_prefix(w(3, {0, 0}), l));
    if (l.size() == 3) CHECK(is_prefix(w(3, {0, 0}), l));
  }
}

TEST_CASE("explicit_tile structural properties") {
  for (int base : {2, 3, 5, 7}) {
    for (std::uint64_t s = 1; s <= 50; ++s) {
      ExplicitTile t = explicit_tile(base, s);
      CHECK(t.tile.leaf_count() == leaf_count(base, s));
      CHECK(verify_tile(base, t.tile.leaves));
      CHECK(t.tile.max_leaf_length() - t.tile.min_leaf_length() <= 1);
      CHECK(t.params.n_short + t.params.n_long == leaf_count(base, s));
    }
  }
}

TEST_CASE("leaf_count") {
  CHECK(leaf_count(3, 2) == 5);
  CHECK(leaf_count(2, 1) == 2);
  CHECK(leaf_count(5, 1) == 5);
}

TEST_CASE("solve_diophantine") {
  auto sol = solve_diophantine(3, 5);
  CHECK(sol.d == 2);
  CHECK(sol.s == 2);
  CHECK(sol.s_prime == 1);
  CHECK(solve_diophantine(7, 7).s == 1);
  CHECK(solve_diophantine(7, 7).s_prime == 1);
  auto s23 = solve_diophantine(2, 3);
  CHECK(s23.s == 2);
  CHECK(s23.s_prime == 1);
  CHECK(leaf_count(2, s23.s) == leaf_count(3, s23.s_prime));
}

TEST_CASE("replicate") {
  Tile paper = explicit_tile(3, 2).tile;
  CHECK(replicate(paper, 0) == paper);
  Tile r1 = replicate(paper, 1);
  CHECK(r1.leaf_count() == 25);
  CHECK(verify_tile(3, r1.leaves));
  Tile half = make_tile(2, words(2, {{0}, {1}}));
  CHECK(replicate(half, 2).leaves == words_of_length(2, 3));
  CHECK_THROWS_AS(replicate(paper, 20), ResourceCapError);
}

TEST_CASE("partition_at_level") {
  Tile paper = explicit_tile(3, 2).tile;
  CHECK(partition_at_level(paper, 1).size() == 5);
  auto level2 = partition_at_level(paper, 2);
  CHECK(level2.size() == 25);
  for (const Word& a : level2)
    for (const Word& b : level2)
      if (!(a == b)) CHECK_FALSE(is_prefix(a, b));
  Tile half = make_tile(2, words(2, {{0}, {1}}));
  CHECK(partition_at_level(half, 3) == words_of_length(2, 3));
}

TEST_CASE("enumerate_tiles counts match the recurrence oracle") {
  CHECK(full_tree_count(2, 4) == 5);
  for (std::size_t k = 2; k <= 6; ++k) {
    auto tiles = enumerate_tiles(2, k);
    std::size_t exact = 0;
    for (const Tile& t : tiles)
      if (t.leaf_count() == k) ++exact;
    CHECK(exact == full_tree_count(2, k));
  }
  // no duplicates: totals are partial sums of the Catalan counts
  CHECK(enumerate_tiles(2, 6).size() == 1 + 2 + 5 + 14 + 42);
  auto t3 = enumerate_tiles(3, 5);
  std::size_t five = 0;
  for (const Tile& t : t3)
    if (t.leaf_count() == 5) ++five;
  CHECK(five == 3);
  CHECK(five == full_tree_count(3, 5));
  // nontriviality: no single-leaf tile
  for (const Tile& t : enumerate_tiles(2, 1)) CHECK(t.leaf_count() > 1);
  CHECK(enumerate_tiles(2, 1).empty());
}

TEST_CASE("kraft equality matches verify_tile for prefix-free candidates") {
  for (int base : {2, 3}) {
    for (const Tile& t : enumerate_tiles(base, 7)) {
      CHECK(verify_tile(base, t.leaves));
      CHECK(kraft_sum_is_one(base, t.leaves));
    }
  }
  // prefix-free but incomplete: Kraft sum below one
  CHECK_FALSE(kraft_sum_is_one(2, words(2, {{0}, {1, 0}})));
}

TEST_CASE("structural check agrees with enumeration oracle on enumerated tiles") {
  for (int base : {2, 3})
    for (const Tile& t : enumerate_tiles(base, 6))
      CHECK(verify_tile(base, t.leaves) == verify_tile_oracle(base, t.leaves));
}

TEST_CASE("tile file round trip") {
  Tile paper = explicit_tile(3, 2).tile;
  std::ostringstream os;
  save_tile(os, paper);
  std::istringstream is(os.str());
  CHECK(load_tile(is) == paper);

  std::istringstream bad("base 2\n0\n");
  CHECK_THROWS_AS(load_tile(bad), std::invalid_argument);
  std::istringstream no_header("0\n1\n");
  CHECK_THROWS_AS(load_tile(no_header), std::invalid_argument);
}
