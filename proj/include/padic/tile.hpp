#pragma once

// Tiles of the complete base-ary tree: finite rooted subtrees whose internal
// nodes all split completely. Their leaf sets are exactly the complete prefix
// codes, and the leaf balls partition the base-adic integers.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "padic/word.hpp"

namespace padic {

inline constexpr std::size_t kDefaultCap = 10'000'000;

struct ResourceCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Tile {
  int base = 2;
  std::vector<Word> leaves;  // sorted by length-then-lex, unique

  std::size_t leaf_count() const { return leaves.size(); }
  std::size_t max_leaf_length() const {
    std::size_t m = 0;
    for (const Word& l : leaves) m = std::max(m, l.size());
    return m;
  }
  std::size_t min_leaf_length() const {
    std::size_t m = SIZE_MAX;
    for (const Word& l : leaves) m = std::min(m, l.size());
    return m;
  }

  friend bool operator==(const Tile&, const Tile&) = default;
};

inline std::vector<Word> sorted_unique(std::vector<Word> words) {
  std::sort(words.begin(), words.end(), WordLess{});
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return words;
}

enum class TileDefect { none, trivial, prefix_free, completeness };

struct TileCheck {
  bool ok = false;
  TileDefect defect = TileDefect::none;
  Word witness;  // violating leaf pair member or missing child
};

// Structural check: the prefix closure of the candidate leaf set must be a
// rooted subtree whose internal nodes all have all `base` children, with the
// candidates as its exact leaf set.
inline TileCheck diagnose_tile(int base, std::vector<Word> candidate) {
  validate_base(base);
  for (const Word& w : candidate)
    if (w.base != base) throw std::invalid_argument("leaf base mismatch");
  candidate = sorted_unique(std::move(candidate));
  Word eps{base, {}};
  if (candidate.empty() || (candidate.size() == 1 && candidate[0].empty()))
    return {false, TileDefect::trivial, eps};

  std::set<Word, WordLess> leaves(candidate.begin(), candidate.end());
  std::set<Word, WordLess> internal;
  for (const Word& l : candidate) {
    Word prefix{base, {}};
    for (std::size_t i = 0; i + 1 <= l.size(); ++i) {
      if (leaves.count(prefix))
        return {false, TileDefect::prefix_free, l};
      internal.insert(prefix);
      prefix.digits.push_back(l.digits[i]);
    }
  }
  for (const Word& v : internal) {
    for (Digit c = 0; c < static_cast<Digit>(base); ++c) {
      Word child = v;
      child.digits.push_back(c);
      if (!internal.count(child) && !leaves.count(child))
        return {false, TileDefect::completeness, child};
    }
  }
  return {true, TileDefect::none, eps};
}

inline bool verify_tile(int base, const std::vector<Word>& candidate) {
  return diagnose_tile(base, candidate).ok;
}

// Independent oracle: enumerate every word of the maximal leaf length and
// count its leaf prefixes; a complete prefix code covers each exactly once.
inline bool verify_tile_oracle(int base, const std::vector<Word>& candidate,
                               std::size_t cap = kDefaultCap) {
  validate_base(base);
  std::vector<Word> cand = sorted_unique(candidate);
  if (cand.empty() || (cand.size() == 1 && cand[0].empty())) return false;
  std::size_t depth = 0;
  for (const Word& l : cand) depth = std::max(depth, l.size());
  unsigned __int128 total = 1;
  for (std::size_t i = 0; i < depth; ++i) {
    total *= static_cast<unsigned>(base);
    if (total > cap) throw ResourceCapError("verify_tile_oracle: word count exceeds cap");
  }
  for (const Word& w : words_of_length(base, depth)) {
    int hits = 0;
    for (const Word& l : cand)
      if (is_prefix(l, w)) ++hits;
    if (hits != 1) return false;
  }
  return true;
}

// Exact Kraft identity: sum of base^(-|leaf|) equals 1. Redundant with the
// structural check for prefix-free sets; used as a cross-check.
inline bool kraft_sum_is_one(int base, const std::vector<Word>& leaves) {
  if (leaves.empty()) return false;
  std::size_t depth = 0;
  for (const Word& l : leaves) depth = std::max(depth, l.size());
  if (depth > 64) throw ResourceCapError("kraft_sum_is_one: depth too large");
  unsigned __int128 target = 1;
  for (std::size_t i = 0; i < depth; ++i) target *= static_cast<unsigned>(base);
  unsigned __int128 sum = 0;
  for (const Word& l : leaves) {
    unsigned __int128 term = 1;
    for (std::size_t i = 0; i < depth - l.size(); ++i) term *= static_cast<unsigned>(base);
    sum += term;
  }
  return sum == target;
}

inline Tile make_tile(int base, std::vector<Word> leaves) {
  TileCheck check = diagnose_tile(base, leaves);
  if (!check.ok) throw std::invalid_argument("leaf set is not a complete prefix code");
  return Tile{base, sorted_unique(std::move(leaves))};
}

inline std::uint64_t leaf_count(int base, std::uint64_t splittings) {
  validate_base(base);
  if (splittings < 1) throw std::invalid_argument("splitting count must be >= 1");
  return 1 + static_cast<std::uint64_t>(base - 1) * splittings;
}

// Parameters of the explicit tile built by splitting nodes in
// length-then-lex order: all leaves have length L-1 or L.
struct ExplicitTileParams {
  std::uint64_t s = 0;       // total splittings
  std::size_t depth = 0;     // L: maximal leaf length
  std::uint64_t s_pen = 0;   // nodes of length L-1 that get split
  std::uint64_t n_short = 0; // leaves of length L-1
  std::uint64_t n_long = 0;  // leaves of length L
  std::vector<Word> a_leaves; // length L-1 words kept as leaves
  std::vector<Word> b_split;  // length L-1 words that split into leaves
};

struct ExplicitTile {
  Tile tile;
  ExplicitTileParams params;
};

inline ExplicitTile explicit_tile(int base, std::uint64_t s) {
  validate_base(base);
  if (s < 1) throw std::invalid_argument("splitting count must be >= 1");
  const auto p = static_cast<std::uint64_t>(base);
  // geometric sums g(t) = 1 + p + ... + p^(t-1); L is minimal with s <= g(L)
  auto gsum = [&](std::size_t t) {
    std::uint64_t sum = 0, pw = 1;
    for (std::size_t i = 0; i < t; ++i) {
      sum += pw;
      pw *= p;
    }
    return sum;
  };
  std::size_t depth = 1;
  while (s > gsum(depth)) ++depth;
  const std::uint64_t s_pen = s - gsum(depth - 1);

  std::vector<Word> level = words_of_length(base, depth - 1);
  ExplicitTileParams params;
  params.s = s;
  params.depth = depth;
  params.s_pen = s_pen;
  params.b_split.assign(level.begin(), level.begin() + static_cast<std::ptrdiff_t>(s_pen));
  params.a_leaves.assign(level.begin() + static_cast<std::ptrdiff_t>(s_pen), level.end());
  params.n_short = params.a_leaves.size();
  params.n_long = p * s_pen;

  std::vector<Word> leaves = params.a_leaves;
  for (const Word& b : params.b_split)
    for (Digit c = 0; c < static_cast<Digit>(base); ++c) {
      Word l = b;
      l.digits.push_back(c);
      leaves.push_back(l);
    }
  return ExplicitTile{make_tile(base, std::move(leaves)), std::move(params)};
}

// Positive solutions of (p-1) s = (q-1) s', parameterized by m >= 1.
struct DiophantineSolution {
  int p = 2;
  int q = 2;
  std::uint64_t d = 1;  // gcd(p-1, q-1)
  std::uint64_t m = 1;
  std::uint64_t s = 1;
  std::uint64_t s_prime = 1;

  friend bool operator==(const DiophantineSolution&, const DiophantineSolution&) = default;
};

inline DiophantineSolution solve_diophantine(int p, int q, std::uint64_t m = 1) {
  validate_base(p);
  validate_base(q);
  if (m < 1) throw std::invalid_argument("family index m must be >= 1");
  std::uint64_t d = std::gcd<std::uint64_t>(p - 1, q - 1);
  return DiophantineSolution{p, q, d, m, (q - 1) * m / d, (p - 1) * m / d};
}

// All concatenations of n leaves, in length-then-lex order.
inline std::vector<Word> partition_at_level(const Tile& tile, std::size_t n,
                                            std::size_t cap = kDefaultCap) {
  if (n < 1) throw std::invalid_argument("level must be >= 1");
  unsigned __int128 count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    count *= tile.leaf_count();
    if (count > cap) throw ResourceCapError("partition_at_level: leaf count exceeds cap");
  }
  std::vector<Word> level{Word{tile.base, {}}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Word> next;
    next.reserve(level.size() * tile.leaf_count());
    for (const Word& w : level)
      for (const Word& l : tile.leaves) next.push_back(concat(w, l));
    level = std::move(next);
  }
  std::sort(level.begin(), level.end(), WordLess{});
  return level;
}

// The n-fold replication: leaves are all concatenations of n+1 leaves.
inline Tile replicate(const Tile& tile, std::size_t n, std::size_t cap = kDefaultCap) {
  return Tile{tile.base, partition_at_level(tile, n + 1, cap)};
}

// All tiles (complete prefix codes) with at most max_leaves leaves,
// generated by recursive complete splitting.
inline std::vector<Tile> enumerate_tiles(int base, std::size_t max_leaves,
                                         std::size_t cap = kDefaultCap) {
  validate_base(base);
  // trees[k] = leaf sets of completely split trees with exactly k leaves
  // (the single-leaf tree {eps} included for the recursion)
  std::vector<std::vector<std::vector<Word>>> trees(max_leaves + 1);
  if (max_leaves >= 1) trees[1] = {{Word{base, {}}}};
  std::size_t generated = 0;
  for (std::size_t k = 2; k <= max_leaves; ++k) {
    // compositions of k into `base` parts, each >= 1
    auto rec = [&](auto&& self, std::size_t idx, std::size_t remaining,
                   std::vector<Word>& acc) -> void {
      if (idx == static_cast<std::size_t>(base)) {
        if (remaining != 0) return;
        trees[k].push_back(acc);
        if (++generated > cap) throw ResourceCapError("enumerate_tiles: cap exceeded");
        return;
      }
      std::size_t slots_left = static_cast<std::size_t>(base) - idx - 1;
      for (std::size_t take = 1; take + slots_left <= remaining; ++take) {
        if (trees[take].empty() && take > 1) continue;
        for (const auto& sub : trees[take]) {
          std::size_t before = acc.size();
          for (const Word& l : sub) {
            Word shifted{base, {static_cast<Digit>(idx)}};
            shifted.digits.insert(shifted.digits.end(), l.digits.begin(), l.digits.end());
            acc.push_back(std::move(shifted));
          }
          self(self, idx + 1, remaining - take, acc);
          acc.resize(before);
        }
      }
    };
    std::vector<Word> acc;
    rec(rec, 0, k, acc);
  }
  std::vector<Tile> out;
  for (std::size_t k = 2; k <= max_leaves; ++k)
    for (auto& leaves : trees[k]) out.push_back(Tile{base, sorted_unique(std::move(leaves))});
  return out;
}

// Tile file format: "base <p>" then one leaf per line in word text form.
inline void save_tile(std::ostream& os, const Tile& tile) {
  os << "base " << tile.base << "\n";
  for (const Word& l : tile.leaves) os << to_text(l) << "\n";
}

// Reads the file without requiring the leaf set to be a valid tile, so that
// candidates can be diagnosed.
inline std::pair<int, std::vector<Word>> load_leaf_file(std::istream& is) {
  std::string line;
  int base = 0;
  bool have_base = false;
  std::vector<Word> leaves;
  while (std::getline(is, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    if (!have_base) {
      std::istringstream hdr(line);
      std::string tag;
      hdr >> tag >> base;
      if (tag != "base" || hdr.fail() || base < 2)
        throw std::invalid_argument("tile file: expected 'base <p>' header");
      have_base = true;
      continue;
    }
    leaves.push_back(word_from_text(base, line));
  }
  if (!have_base) throw std::invalid_argument("tile file: missing header");
  return {base, std::move(leaves)};
}

inline Tile load_tile(std::istream& is) {
  auto [base, leaves] = load_leaf_file(is);
  return make_tile(base, std::move(leaves));
}

}  // namespace padic
