// Command-line front end: solve the leaf-count equation, emit explicit
// tiles, map digits/rationals/streams through a homeomorphism, verify tile
// files, and render the tiled trees.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 domain error, 4 resource cap exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "padic/render.hpp"
#include "padic/stream.hpp"
#include "padic/tile.hpp"
#include "padic/transducer.hpp"
#include "padic/word.hpp"

namespace {

void warn_if_composite(int base) {
  for (int d = 2; d * d <= base; ++d)
    if (base % d == 0) {
      std::cerr << "warning: base " << base << " is composite\n";
      return;
    }
}

struct HomeoOptions {
  int p = 0;
  int q = 0;
  std::uint64_t m = 1;
  std::uint64_t s = 0;  // 0 = derive from the minimal solution scaled by m
  std::string tile_p_file;
  std::string tile_q_file;
  std::string tau_spec;  // "", "paper", or a file path
};

void add_homeo_options(CLI::App* cmd, HomeoOptions& opts) {
  cmd->add_option("-p", opts.p, "source base")->required();
  cmd->add_option("-q", opts.q, "target base")->required();
  cmd->add_option("-m", opts.m, "solution family index (default 1)");
  cmd->add_option("-s", opts.s, "source splitting count (overrides -m)");
  cmd->add_option("--tile-p", opts.tile_p_file, "source tile file");
  cmd->add_option("--tile-q", opts.tile_q_file, "target tile file");
  cmd->add_option("--tau", opts.tau_spec, "leaf bijection: 'paper' or a tau file");
}

padic::Tile load_tile_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open tile file " + path);
  return padic::load_tile(in);
}

padic::Homeo build_homeo(const HomeoOptions& opts) {
  warn_if_composite(opts.p);
  warn_if_composite(opts.q);
  padic::Tile src, dst;
  if (!opts.tile_p_file.empty()) {
    src = load_tile_file(opts.tile_p_file);
  } else {
    auto sol = padic::solve_diophantine(opts.p, opts.q, opts.m);
    src = padic::explicit_tile(opts.p, opts.s ? opts.s : sol.s).tile;
  }
  if (!opts.tile_q_file.empty()) {
    dst = load_tile_file(opts.tile_q_file);
  } else {
    std::uint64_t src_splits = (src.leaf_count() - 1) / (opts.p - 1);
    std::uint64_t target_splits =
        (src_splits * (opts.p - 1)) / static_cast<std::uint64_t>(opts.q - 1);
    if (target_splits * (opts.q - 1) != src_splits * (opts.p - 1))
      throw std::domain_error("leaf count 1+(p-1)s is not attainable over base q");
    dst = padic::explicit_tile(opts.q, target_splits).tile;
  }
  if (src.base != opts.p || dst.base != opts.q)
    throw std::invalid_argument("tile file base does not match -p/-q");
  if (src.leaf_count() != dst.leaf_count())
    throw std::domain_error("tiles have different leaf counts");

  padic::LeafBijection tau;
  if (opts.tau_spec.empty()) {
    tau = padic::canonical_tau(src, dst);
  } else if (opts.tau_spec == "paper") {
    padic::Homeo fixture = padic::example_homeo_3_to_5();
    if (!(fixture.source == src) || !(fixture.target == dst))
      throw std::invalid_argument(
          "--tau paper requires the explicit (p,q,s,s') = (3,5,2,1) tiles");
    return fixture;
  } else {
    std::ifstream in(opts.tau_spec);
    if (!in) throw std::invalid_argument("cannot open tau file " + opts.tau_spec);
    tau = padic::load_tau(in, src, dst);
  }
  return padic::make_homeo(src, dst, tau);
}

void print_trace(const padic::Homeo& h, const padic::Word& input) {
  auto fact = padic::factorize(input, h.source);
  for (const padic::Word& block : fact.blocks)
    std::cout << "trace " << padic::to_text(block) << " -> "
              << padic::to_text(h.tau.image_of(block)) << "\n";
  if (!fact.remainder.empty())
    std::cout << "trace pending " << padic::to_text(fact.remainder) << "\n";
}

int run_map(const HomeoOptions& opts, const std::string& digits,
            const std::string& rational, const std::string& stream_text,
            std::size_t precision, bool trace) {
  padic::Homeo h = build_homeo(opts);
  int given = (!digits.empty()) + (!rational.empty()) + (!stream_text.empty());
  if (given != 1)
    throw std::invalid_argument("exactly one of --digits/--rational/--stream required");

  if (!digits.empty()) {
    padic::Word in = padic::word_from_text(opts.p, digits);
    if (trace) print_trace(h, in);
    std::cout << padic::to_text(padic::apply(h, in).out) << "\n";
    return 0;
  }

  padic::DigitStream in;
  if (!rational.empty()) {
    std::size_t slash = rational.find('/');
    long long num = std::stoll(rational.substr(0, slash));
    long long den = slash == std::string::npos ? 1 : std::stoll(rational.substr(slash + 1));
    in = padic::rational_to_stream(num, den, opts.p);
  } else {
    in = padic::stream_from_text(opts.p, stream_text);
  }
  if (trace)
    print_trace(h, padic::truncate(in, padic::required_input_precision(h, precision)));
  padic::DigitStream out = padic::apply_stream(h, in);
  std::cout << padic::to_text(padic::truncate(out, precision)) << "\n";
  std::cout << padic::to_text(out) << "\n";
  return 0;
}

int run_verify(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open tile file " + path);
  auto [base, leaves] = padic::load_leaf_file(in);
  padic::TileCheck check = padic::diagnose_tile(base, leaves);
  if (check.ok) {
    std::size_t n = padic::sorted_unique(leaves).size();
    std::cout << "OK leaves=" << n << " s=" << (n - 1) / (base - 1) << "\n";
    return 0;
  }
  switch (check.defect) {
    case padic::TileDefect::trivial:
      std::cout << "FAIL trivial\n";
      break;
    case padic::TileDefect::prefix_free:
      std::cout << "FAIL prefix-free witness=" << padic::to_text(check.witness) << "\n";
      break;
    default:
      std::cout << "FAIL completeness witness=" << padic::to_text(check.witness) << "\n";
      break;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tree tilings and digit-block homeomorphisms of base-adic integers"};
  app.require_subcommand(1);
  std::size_t cap = padic::kDefaultCap;
  app.add_option("--cap", cap, "resource cap on generated words");

  // solve
  int solve_p = 0, solve_q = 0;
  std::uint64_t solve_m = 1;
  auto* solve = app.add_subcommand("solve", "solve the leaf-count equation");
  solve->add_option("-p", solve_p, "first base")->required();
  solve->add_option("-q", solve_q, "second base")->required();
  solve->add_option("-m", solve_m, "solution family index (default 1)");

  // tile
  int tile_p = 0;
  std::uint64_t tile_s = 1;
  std::string tile_out;
  auto* tile = app.add_subcommand("tile", "emit an explicit tile");
  tile->add_option("-p", tile_p, "base")->required();
  tile->add_option("-s", tile_s, "splitting count")->required();
  tile->add_option("-o", tile_out, "output file (default stdout)");

  // map
  HomeoOptions map_opts;
  std::string map_digits, map_rational, map_stream;
  std::size_t map_precision = 8;
  bool map_trace = false;
  auto* map = app.add_subcommand("map", "map digits through the homeomorphism");
  add_homeo_options(map, map_opts);
  map->add_option("--digits", map_digits, "input digits, little-endian, comma-joined");
  map->add_option("--rational", map_rational, "input rational num/den");
  map->add_option("--stream", map_stream, "input stream pre;per");
  map->add_option("--precision", map_precision, "output digits to print (default 8)");
  map->add_flag("--trace", map_trace, "print the block factorization");

  // verify
  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "verify a tile file");
  verify->add_option("file", verify_path, "tile file")->required();

  // render
  HomeoOptions render_opts;
  std::size_t render_depth = 1;
  std::string render_format = "ascii", render_color = "orbit";
  auto* render = app.add_subcommand("render", "draw the two tiled trees");
  add_homeo_options(render, render_opts);
  render->add_option("--depth", render_depth, "leaf levels to draw (default 1)");
  render->add_option("--format", render_format, "ascii or dot")
      ->check(CLI::IsMember({"ascii", "dot"}));
  render->add_option("--color", render_color, "none or orbit")
      ->check(CLI::IsMember({"none", "orbit"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*solve) {
      warn_if_composite(solve_p);
      warn_if_composite(solve_q);
      auto sol = padic::solve_diophantine(solve_p, solve_q, solve_m);
      std::cout << "d=" << sol.d << " s=" << sol.s << " s'=" << sol.s_prime
                << " leaves=" << padic::leaf_count(solve_p, sol.s) << "\n";
      return 0;
    }
    if (*tile) {
      warn_if_composite(tile_p);
      padic::ExplicitTile t = padic::explicit_tile(tile_p, tile_s);
      if (tile_out.empty()) {
        padic::save_tile(std::cout, t.tile);
      } else {
        std::ofstream out(tile_out);
        if (!out) throw std::invalid_argument("cannot open output file " + tile_out);
        padic::save_tile(out, t.tile);
      }
      return 0;
    }
    if (*map)
      return run_map(map_opts, map_digits, map_rational, map_stream, map_precision,
                     map_trace);
    if (*verify) return run_verify(verify_path);
    if (*render) {
      padic::Homeo h = build_homeo(render_opts);
      padic::RenderSpec spec;
      spec.depth = render_depth;
      spec.format = render_format == "dot" ? padic::RenderFormat::dot
                                           : padic::RenderFormat::ascii;
      spec.coloring =
          render_color == "none" ? padic::Coloring::none : padic::Coloring::leaf_orbit;
      std::cout << padic::render(h, spec, cap);
      return 0;
    }
  } catch (const padic::ResourceCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
