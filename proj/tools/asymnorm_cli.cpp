// asymnorm: command-line front end.
//
// Exit codes: 0 success, 1 verdict mismatch in `suite`, 2 input error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "asymnorm/compactness.hpp"
#include "asymnorm/generators.hpp"
#include "asymnorm/instance_io.hpp"
#include "asymnorm/render.hpp"
#include "asymnorm/report.hpp"
#include "asymnorm/suite.hpp"

namespace {

using namespace asymnorm;

constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

Problem load(const std::string& path) { return parse_instance(read_input(path)); }

Vector parse_point(const std::string& text, std::size_t dim) {
  std::istringstream is(text);
  std::vector<Rational> coords;
  std::string tok;
  while (is >> tok) coords.push_back(parse_rational(tok));
  Vector v(std::move(coords));
  require_dim(v, dim, "--center");
  return v;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact q-compactness engine for polyhedral asymmetric norms"};
  app.require_subcommand(1);

  std::string file;
  bool timing = false;

  auto* check = app.add_subcommand("check", "decide q-compactness and evaluate T1-T6");
  check->add_option("file", file, "instance file ('-' for stdin)")->required();
  check->add_flag("--timing", timing, "append time_ms");

  auto* center = app.add_subcommand("center", "print the center S(K) or the non-compactness witness");
  center->add_option("file", file)->required();

  auto* ext = app.add_subcommand("ext", "print ext(K) and E(K)");
  ext->add_option("file", file)->required();

  auto* theta = app.add_subcommand("theta", "print generators of theta(0)");
  theta->add_option("file", file)->required();

  std::string radius_text = "1", center_text;
  bool open_ball = false;
  auto* ballcmd = app.add_subcommand("ball", "inequalities of a ball of the instance norm");
  ballcmd->add_option("file", file)->required();
  ballcmd->add_option("--radius", radius_text, "radius (rational, >= 0)");
  ballcmd->add_option("--center", center_text, "center coordinates, space separated");
  ballcmd->add_flag("--open", open_ball, "open ball (default closed)");

  auto* suite = app.add_subcommand("suite", "replay the reference catalog");
  suite->add_flag("--timing", timing);

  std::string kind, flavor = "sup";
  std::size_t dim = 2, n_arc = 4;
  std::uint64_t seed = 1;
  auto* gen = app.add_subcommand("gen", "write a generated instance to stdout");
  gen->add_option("kind", kind, "lattice | arc | random")
      ->required()
      ->check(CLI::IsMember({"lattice", "arc", "random"}));
  gen->add_option("--dim", dim, "dimension");
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--flavor", flavor, "lattice flavor")->check(CLI::IsMember({"sup", "one"}));
  gen->add_option("--n-arc", n_arc, "arc segments for the arc instance");

  std::string output;
  auto* render = app.add_subcommand("render", "SVG drawing of a planar instance");
  render->add_option("file", file)->required();
  render->add_option("-o,--output", output, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*check) {
      std::cout << to_text(run_instance(file, load(file), timing));
    } else if (*center) {
      const Problem p = load(file);
      const auto cert = decide_q_compact(p.q, p.k);
      std::cout << "verdict: " << to_string(cert.verdict) << '\n';
      std::cout << "center: " << (cert.center ? format_points(cert.center->vertices()) : "-") << '\n';
      std::cout << "witness: " << format_witness(cert.witness) << '\n';
    } else if (*ext) {
      const Problem p = load(file);
      const CompactInstance inst(p.q, p.k);
      std::cout << "ext_K: " << format_points(extreme_points_of_k(inst)) << '\n';
      std::cout << "E_K: " << format_points(e_of_k(inst)) << '\n';
    } else if (*theta) {
      const Problem p = load(file);
      std::cout << "theta: " << format_points(theta_cone(p.q).generators) << '\n';
    } else if (*ballcmd) {
      const Problem p = load(file);
      const Rational r = parse_rational(radius_text);
      const Point c = center_text.empty() ? Point(p.q.dim()) : parse_point(center_text, p.q.dim());
      const Closedness cl = open_ball ? Closedness::kOpen : Closedness::kClosed;
      const Ball b = ball(p.q, c, r, cl);
      std::cout << "ball: " << (open_ball ? "open" : "closed") << '\n';
      std::cout << "center: " << to_string(b.center) << '\n';
      std::cout << "radius: " << to_string(b.radius) << '\n';
      for (const auto& h : b.as_set.constraints()) std::cout << "H: " << format_row(h) << '\n';
      if (sgn(r) > 0) {
        std::cout << "contains_line: " << (ball_no_line_check(p.q, r, cl) ? "false" : "true") << '\n';
      }
    } else if (*suite) {
      bool ok = true;
      bool first = true;
      for (const auto& res : run_reference_suite(timing)) {
        if (!first) std::cout << '\n';
        first = false;
        std::cout << to_text(res.report);
        std::cout << "match: " << (res.matched() ? "yes" : "no") << '\n';
        for (const auto& m : res.mismatches) std::cout << "mismatch: " << m << '\n';
        ok = ok && res.matched();
      }
      return ok ? 0 : kExitMismatch;
    } else if (*gen) {
      InstanceFile f;
      if (kind == "lattice") {
        const AsymNorm q = gen_lattice_norm(dim, flavor == "one" ? LatticeFlavor::kOne : LatticeFlavor::kSup);
        f = make_instance_file(q, PartialPolyhedron::whole_space(dim));
      } else if (kind == "arc") {
        const Problem p = gen_arc_example(n_arc);
        f = make_instance_file(p.q, p.k);
      } else {
        const Problem p = gen_random_instance(dim, seed);
        f = make_instance_file(p.q, p.k);
      }
      std::cout << write_instance(f);
    } else if (*render) {
      const Problem p = load(file);
      const std::string svg = render_svg(p, decide_q_compact(p.q, p.k));
      if (output.empty()) {
        std::cout << svg;
      } else {
        std::ofstream out(output);
        if (!out) throw InputError("cannot write '" + output + "'");
        out << svg;
      }
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
