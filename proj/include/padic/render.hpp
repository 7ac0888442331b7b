#pragma once

// ASCII and DOT rendering of the two tiled trees of a homeomorphism.
// Nodes that are concatenations of leaves are colored so that a leaf block
// and its image share a color, matching the usual colored-tree pictures.

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "padic/tile.hpp"
#include "padic/transducer.hpp"
#include "padic/word.hpp"

namespace padic {

enum class RenderFormat { ascii, dot };
enum class Coloring { none, leaf_orbit };

struct RenderSpec {
  std::size_t depth = 1;  // number of leaf levels to draw
  RenderFormat format = RenderFormat::ascii;
  Coloring coloring = Coloring::leaf_orbit;
};

namespace detail {

inline const char* kPalette[] = {"red",    "orange",  "plum",    "blue",
                                 "green",  "cyan",    "magenta", "gold",
                                 "brown",  "gray"};

inline std::string color_name(std::size_t i) {
  constexpr std::size_t n = sizeof(kPalette) / sizeof(kPalette[0]);
  if (i < n) return kPalette[i];
  return "c" + std::to_string(i);
}

struct TreePicture {
  std::set<Word, WordLess> nodes;
  std::map<Word, std::string, WordLess> colors;
};

// Prefix closure of the first `depth` leaf-concatenation levels, with
// orbit colors keyed by the final leaf block.
inline TreePicture build_picture(const Tile& tile,
                                 const std::map<Word, std::size_t, WordLess>& leaf_color,
                                 const RenderSpec& spec, std::size_t cap) {
  TreePicture pic;
  pic.nodes.insert(Word{tile.base, {}});
  if (spec.depth == 0) return pic;
  unsigned __int128 count = 1;
  for (std::size_t i = 0; i < spec.depth; ++i) {
    count *= tile.leaf_count();
    if (count > cap) throw ResourceCapError("render: node count exceeds cap");
  }
  std::vector<Word> level{Word{tile.base, {}}};
  for (std::size_t k = 1; k <= spec.depth; ++k) {
    std::vector<Word> next;
    for (const Word& w : level)
      for (const Word& l : tile.leaves) {
        Word node = concat(w, l);
        Word prefix = w;
        for (Digit d : l.digits) {
          prefix.digits.push_back(d);
          pic.nodes.insert(prefix);
        }
        if (spec.coloring == Coloring::leaf_orbit)
          pic.colors[node] = color_name(leaf_color.at(l));
        next.push_back(std::move(node));
      }
    level = std::move(next);
  }
  return pic;
}

inline void ascii_subtree(std::ostringstream& os, const TreePicture& pic, const Word& node,
                          const std::string& indent) {
  std::vector<Word> children;
  for (Digit c = 0; c < static_cast<Digit>(node.base); ++c) {
    Word child = node;
    child.digits.push_back(c);
    if (pic.nodes.count(child)) children.push_back(std::move(child));
  }
  for (std::size_t i = 0; i < children.size(); ++i) {
    bool last = i + 1 == children.size();
    os << indent << (last ? "`- " : "|- ") << to_text(children[i]);
    auto it = pic.colors.find(children[i]);
    if (it != pic.colors.end()) os << " [" << it->second << "]";
    os << "\n";
    ascii_subtree(os, pic, children[i], indent + (last ? "   " : "|  "));
  }
}

inline void dot_subtree(std::ostringstream& os, const TreePicture& pic,
                        const std::string& prefix) {
  auto node_id = [&](const Word& w) {
    std::string id = prefix;
    for (Digit d : w.digits) id += "_" + std::to_string(d);
    return id;
  };
  for (const Word& w : pic.nodes) {
    os << "    " << node_id(w) << " [label=\"" << (w.empty() ? "e" : to_text(w)) << "\"";
    auto it = pic.colors.find(w);
    if (it != pic.colors.end()) os << ", style=filled, fillcolor=" << it->second;
    os << "];\n";
  }
  for (const Word& w : pic.nodes) {
    if (w.empty()) continue;
    Word parent{w.base, std::vector<Digit>(w.digits.begin(), w.digits.end() - 1)};
    os << "    " << node_id(parent) << " -> " << node_id(w) << ";\n";
  }
}

}  // namespace detail

inline std::string render(const Homeo& h, const RenderSpec& spec,
                          std::size_t cap = kDefaultCap) {
  std::map<Word, std::size_t, WordLess> src_color, dst_color;
  for (std::size_t i = 0; i < h.tau.pairs.size(); ++i) {
    src_color[h.tau.pairs[i].first] = i;
    dst_color[h.tau.pairs[i].second] = i;
  }
  detail::TreePicture src = detail::build_picture(h.source, src_color, spec, cap);
  detail::TreePicture dst = detail::build_picture(h.target, dst_color, spec, cap);

  std::ostringstream os;
  if (spec.format == RenderFormat::ascii) {
    os << "tree base=" << h.p() << "\n";
    os << "e\n";
    detail::ascii_subtree(os, src, Word{h.p(), {}}, "");
    os << "tree base=" << h.q() << "\n";
    os << "e\n";
    detail::ascii_subtree(os, dst, Word{h.q(), {}}, "");
  } else {
    os << "digraph tiling {\n";
    os << "  node [shape=circle];\n";
    os << "  subgraph cluster_source {\n    label=\"base " << h.p() << "\";\n";
    detail::dot_subtree(os, src, "s");
    os << "  }\n";
    os << "  subgraph cluster_target {\n    label=\"base " << h.q() << "\";\n";
    detail::dot_subtree(os, dst, "t");
    os << "  }\n";
    os << "}\n";
  }
  return os.str();
}

}  // namespace padic
