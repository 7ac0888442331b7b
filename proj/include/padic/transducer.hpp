#pragma once

// The homeomorphism between rings of base-adic integers, realized as a
// digit-block transducer: factorize the input digit stream uniquely into
// leaves of the source tile and replace each leaf by its image under a
// leaf bijection into the target tile.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "padic/stream.hpp"
#include "padic/tile.hpp"
#include "padic/word.hpp"

namespace padic {

struct LeafBijection {
  Tile source;
  Tile target;
  // pairs sorted by source leaf in length-then-lex order
  std::vector<std::pair<Word, Word>> pairs;

  const Word& image_of(const Word& leaf) const {
    auto it = std::lower_bound(pairs.begin(), pairs.end(), leaf,
                               [](const auto& pr, const Word& w) {
                                 return WordLess{}(pr.first, w);
                               });
    if (it == pairs.end() || !(it->first == leaf))
      throw std::invalid_argument("word is not a source leaf");
    return it->second;
  }

  friend bool operator==(const LeafBijection&, const LeafBijection&) = default;
};

inline LeafBijection make_bijection(Tile source, Tile target,
                                    std::vector<std::pair<Word, Word>> pairs) {
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return WordLess{}(a.first, b.first); });
  if (pairs.size() != source.leaf_count() || pairs.size() != target.leaf_count())
    throw std::invalid_argument("bijection must pair all leaves");
  std::vector<Word> images;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (!(pairs[i].first == source.leaves[i]))
      throw std::invalid_argument("bijection domain is not the source leaf set");
    images.push_back(pairs[i].second);
  }
  if (sorted_unique(images) != target.leaves)
    throw std::invalid_argument("bijection image is not the target leaf set");
  return LeafBijection{std::move(source), std::move(target), std::move(pairs)};
}

// The order-preserving bijection: i-th source leaf to i-th target leaf.
inline LeafBijection canonical_tau(const Tile& source, const Tile& target) {
  if (source.leaf_count() != target.leaf_count())
    throw std::invalid_argument("leaf counts differ");
  std::vector<std::pair<Word, Word>> pairs;
  for (std::size_t i = 0; i < source.leaf_count(); ++i)
    pairs.emplace_back(source.leaves[i], target.leaves[i]);
  return LeafBijection{source, target, std::move(pairs)};
}

struct Homeo {
  Tile source;  // tile of the source tree
  Tile target;  // tile of the target tree
  LeafBijection tau;

  int p() const { return source.base; }
  int q() const { return target.base; }

  friend bool operator==(const Homeo&, const Homeo&) = default;
};

inline Homeo make_homeo(Tile source, Tile target, LeafBijection tau) {
  if (!(tau.source == source) || !(tau.target == target))
    throw std::invalid_argument("bijection does not match tiles");
  return Homeo{std::move(source), std::move(target), std::move(tau)};
}

inline Homeo inverse(const Homeo& h) {
  std::vector<std::pair<Word, Word>> pairs;
  for (const auto& [src, dst] : h.tau.pairs) pairs.emplace_back(dst, src);
  return Homeo{h.target, h.source, make_bijection(h.target, h.source, std::move(pairs))};
}

// Residual input digits: always a proper prefix of some source leaf.
struct ParseState {
  Word pending;
};

struct Factorization {
  std::vector<Word> blocks;  // complete leaf blocks, left to right
  Word remainder;            // proper prefix of some leaf (possibly empty)
};

// Greedy left-to-right parse into leaves. For a complete prefix code this
// is the unique factorization; each position matches at most one leaf.
inline Factorization factorize(const Word& digits, const Tile& tile) {
  if (digits.base != tile.base) throw std::invalid_argument("base mismatch");
  std::set<Word, WordLess> leaves(tile.leaves.begin(), tile.leaves.end());
  const std::size_t maxlen = tile.max_leaf_length();
  Factorization out;
  Word pending{tile.base, {}};
  for (Digit d : digits.digits) {
    pending.digits.push_back(d);
    if (leaves.count(pending)) {
      out.blocks.push_back(pending);
      pending.digits.clear();
    } else if (pending.size() >= maxlen) {
      throw std::logic_error("factorize: residual is not a prefix of any leaf");
    }
  }
  out.remainder = std::move(pending);
  return out;
}

struct ApplyResult {
  Word out;
  ParseState state;
};

// Emit tau(block) per completed block; the emitted word is a correct prefix
// of the image of every stream extending the input.
inline ApplyResult apply(const Homeo& h, const Word& digits) {
  Factorization f = factorize(digits, h.source);
  Word out{h.target.base, {}};
  for (const Word& block : f.blocks) out = concat(out, h.tau.image_of(block));
  return ApplyResult{std::move(out), ParseState{std::move(f.remainder)}};
}

// Conservative modulus of continuity: inputs agreeing on the first n digits
// produce outputs agreeing on the first k digits.
inline std::size_t required_input_precision(const Homeo& h, std::size_t k) {
  if (k == 0) return 0;
  const std::size_t min_out = h.target.min_leaf_length();
  return h.source.max_leaf_length() * ((k + min_out - 1) / min_out);
}

// Exact image of an eventually periodic stream. The transducer state while
// reading the periodic part is (offset in period, pending word); the state
// space is finite, so a repeated state delimits the output period.
inline DigitStream apply_stream(const Homeo& h, const DigitStream& s) {
  if (s.base != h.source.base) throw std::invalid_argument("base mismatch");
  std::set<Word, WordLess> leaves(h.source.leaves.begin(), h.source.leaves.end());
  const std::size_t maxlen = h.source.max_leaf_length();

  std::vector<Digit> out;
  Word pending{s.base, {}};
  std::map<std::pair<std::size_t, std::vector<Digit>>, std::size_t> seen;
  for (std::size_t i = 0;; ++i) {
    if (i >= s.preperiod.size()) {
      std::size_t phase = (i - s.preperiod.size()) % s.period.size();
      auto key = std::make_pair(phase, pending.digits);
      auto [it, inserted] = seen.emplace(key, out.size());
      if (!inserted) {
        std::size_t start = it->second;
        std::vector<Digit> pre(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(start));
        std::vector<Digit> per(out.begin() + static_cast<std::ptrdiff_t>(start), out.end());
        return make_stream(h.target.base, std::move(pre), std::move(per));
      }
    }
    pending.digits.push_back(s.digit_at(i));
    if (leaves.count(pending)) {
      const Word& img = h.tau.image_of(pending);
      out.insert(out.end(), img.digits.begin(), img.digits.end());
      pending.digits.clear();
    } else if (pending.size() >= maxlen) {
      throw std::logic_error("apply_stream: residual is not a prefix of any leaf");
    }
  }
}

// Functional composition: pipe output digits of `first` into `second`.
struct ComposedMap {
  Homeo first;
  Homeo second;

  Word apply_word(const Word& digits) const {
    return apply(second, apply(first, digits).out).out;
  }
  DigitStream apply_to_stream(const DigitStream& s) const {
    return apply_stream(second, apply_stream(first, s));
  }
  std::size_t required_input_precision(std::size_t k) const {
    return padic::required_input_precision(first,
                                           padic::required_input_precision(second, k));
  }
};

inline ComposedMap compose(const Homeo& first, const Homeo& second) {
  if (first.target.base != second.source.base)
    throw std::invalid_argument("base mismatch in composition");
  return ComposedMap{first, second};
}

// Level map: each n-fold leaf concatenation paired with its blockwise image.
inline std::vector<std::pair<Word, Word>> level_map(const Homeo& h, std::size_t n,
                                                    std::size_t cap = kDefaultCap) {
  std::vector<std::pair<Word, Word>> level{{Word{h.p(), {}}, Word{h.q(), {}}}};
  unsigned __int128 count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    count *= h.source.leaf_count();
    if (count > cap) throw ResourceCapError("level_map: cap exceeded");
    std::vector<std::pair<Word, Word>> next;
    next.reserve(level.size() * h.source.leaf_count());
    for (const auto& [w, img] : level)
      for (const auto& [leaf, leaf_img] : h.tau.pairs)
        next.emplace_back(concat(w, leaf), concat(img, leaf_img));
    level = std::move(next);
  }
  return level;
}

// True iff a pair of level bijections preserves the prefix relation (= ball
// inclusion) in both directions between consecutive levels.
inline bool levels_inclusion_isomorphic(const std::vector<std::pair<Word, Word>>& coarse,
                                        const std::vector<std::pair<Word, Word>>& fine) {
  for (const auto& [v, v_img] : coarse)
    for (const auto& [w, w_img] : fine)
      if (is_prefix(v, w) != is_prefix(v_img, w_img)) return false;
  return true;
}

inline bool check_inclusion_isomorphism(const Tile& source, const Tile& target,
                                        const LeafBijection& tau, std::size_t n,
                                        std::size_t cap = kDefaultCap) {
  Homeo h = make_homeo(source, target, tau);
  return levels_inclusion_isomorphic(level_map(h, n, cap), level_map(h, n + 1, cap));
}

// Tau file format: line "tau", then one "leaf -> leaf" pair per line.
inline void save_tau(std::ostream& os, const LeafBijection& tau) {
  os << "tau\n";
  for (const auto& [src, dst] : tau.pairs)
    os << to_text(src) << " -> " << to_text(dst) << "\n";
}

inline LeafBijection load_tau(std::istream& is, const Tile& source, const Tile& target) {
  std::string line;
  bool have_header = false;
  std::vector<std::pair<Word, Word>> pairs;
  while (std::getline(is, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    if (!have_header) {
      if (line != "tau") throw std::invalid_argument("tau file: expected 'tau' header");
      have_header = true;
      continue;
    }
    std::size_t arrow = line.find("->");
    if (arrow == std::string::npos)
      throw std::invalid_argument("tau file: expected 'leaf -> leaf'");
    auto trim = [](std::string s) {
      std::size_t b = s.find_first_not_of(' ');
      std::size_t e = s.find_last_not_of(' ');
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    pairs.emplace_back(word_from_text(source.base, trim(line.substr(0, arrow))),
                       word_from_text(target.base, trim(line.substr(arrow + 2))));
  }
  if (!have_header) throw std::invalid_argument("tau file: missing header");
  return make_bijection(source, target, std::move(pairs));
}

// The hand-picked leaf bijection of the worked 3 -> 5 example, kept as a
// named fixture; canonical_tau orders the leaves differently.
inline Homeo example_homeo_3_to_5() {
  Tile s = explicit_tile(3, 2).tile;
  Tile t = explicit_tile(5, 1).tile;
  auto w3 = [](std::vector<Digit> d) { return Word{3, std::move(d)}; };
  auto w5 = [](std::vector<Digit> d) { return Word{5, std::move(d)}; };
  std::vector<std::pair<Word, Word>> pairs = {
      {w3({0, 0}), w5({0})}, {w3({1}), w5({1})}, {w3({2}), w5({2})},
      {w3({0, 1}), w5({3})}, {w3({0, 2}), w5({4})},
  };
  return make_homeo(s, t, make_bijection(s, t, std::move(pairs)));
}

}  // namespace padic
