#include <doctest.h>

#include <string>

#include "padic/render.hpp"

using namespace padic;

namespace {

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t n = 0, pos = 0;
  while ((pos = text.find(needle, pos)) != std::string::npos) {
    ++n;
    pos += needle.size();
  }
  return n;
}

}  // namespace

TEST_CASE("depth zero renders root-only trees") {
  Homeo h = example_homeo_3_to_5();
  std::string out = render(h, RenderSpec{0, RenderFormat::ascii, Coloring::leaf_orbit});
  CHECK(out == "tree base=3\ne\ntree base=5\ne\n");
}

TEST_CASE("depth one ascii shows five matched colors per tree") {
  Homeo h = example_homeo_3_to_5();
  std::string out = render(h, RenderSpec{1, RenderFormat::ascii, Coloring::leaf_orbit});
  for (const char* color : {"[red]", "[orange]", "[plum]", "[blue]", "[green]"})
    CHECK(count_occurrences(out, color) == 2);
}

TEST_CASE("depth two dot has 25 colored leaves per tree") {
  Homeo h = example_homeo_3_to_5();
  std::string out = render(h, RenderSpec{2, RenderFormat::dot, Coloring::leaf_orbit});
  // leaves of the second level are 4-digit words in the source tree and
  // 2-digit words in the target tree
  std::size_t filled = count_occurrences(out, "fillcolor=");
  // colored nodes: level-1 (5 per tree) plus level-2 (25 per tree)
  CHECK(filled == 2 * (5 + 25));
  CHECK(out.find("digraph tiling") == 0);
  CHECK(count_occurrences(out, "subgraph") == 2);
}

TEST_CASE("rendering is deterministic") {
  Homeo h = example_homeo_3_to_5();
  RenderSpec spec{2, RenderFormat::dot, Coloring::leaf_orbit};
  CHECK(render(h, spec) == render(h, spec));
  RenderSpec ascii{2, RenderFormat::ascii, Coloring::none};
  CHECK(render(h, ascii) == render(h, ascii));
  CHECK(count_occurrences(render(h, ascii), "[red]") == 0);
}

TEST_CASE("render cap") {
  Homeo h = example_homeo_3_to_5();
  CHECK_THROWS_AS(render(h, RenderSpec{12, RenderFormat::dot, Coloring::none}, 1000),
                  ResourceCapError);
}
