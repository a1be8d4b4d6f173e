#include "coinc/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "coinc/report.hpp"

namespace coinc {

namespace {

struct Options {
  int n = 0;
  int d = 1;
  int k = 2;
  std::string json_path;
  std::string format = "dot";
  std::string point;
  std::string path;
  std::string box = "1";
  std::string out_path;
  std::uint64_t seed = 1;
};

void add_spec(CLI::App* cmd, Options& o, bool with_k = true) {
  cmd->add_option("-N,--particles", o.n, "number of particles")->required();
  cmd->add_option("-d,--dim", o.d, "dimension of the underlying space")->capture_default_str();
  if (with_k) cmd->add_option("-k,--hardcore", o.k, "interaction order")->capture_default_str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InvalidInput("cannot write " + path);
  file << text;
  if (!file) throw InvalidInput("failed writing " + path);
}

int cmd_report(const Options& o, std::ostream& out) {
  ReportOptions ro;
  ro.seed = o.seed;
  emit(dump_json(to_json(build_report(ComplementSpec(o.n, o.d, o.k), ro))), o.json_path, out);
  return 0;
}

int cmd_lattice(const Options& o, std::ostream& out) {
  const ComplementSpec spec(o.n, o.d, o.k);
  const IntersectionLattice l = build_lattice(spec.arrangement());
  emit(o.format == "json" ? dump_json(lattice_json(l)) : lattice_dot(l), o.out_path, out);
  return 0;
}

int cmd_classify(const Options& o, std::ostream& out) {
  if (o.d != 1) throw InvalidInput("ordering sectors exist only for d = 1");
  const Point p = parse_point(ConfigurationSpace(o.n, 1), o.point);
  try {
    out << sector_of(p).to_string() << "\n";
  } catch (const BoundaryError& e) {
    out << "boundary: " << e.what() << "\n";
    return 4;
  }
  return 0;
}

int cmd_wind(const Options& o, std::ostream& out) {
  const ComplementSpec spec(o.n, o.d, o.k);
  std::ifstream file(o.path);
  if (!file) throw InvalidInput("cannot read path file " + o.path);
  const PLPath loop = read_path_csv(spec.space(), file);
  const Arrangement a = spec.arrangement();
  out << dump_json(winding_json(winding_vector(loop, a), a));
  return 0;
}

int cmd_mesh(const Options& o, std::ostream& out) {
  const Mesh mesh = build_mesh(o.n, o.d, o.k, parse_scalar(o.box));
  std::ostringstream text;
  write_obj(mesh, text);
  emit(text.str(), o.out_path, out);
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coincidence structures of N particles in d dimensions", "coinc"};
  app.require_subcommand(1);
  Options o;

  auto* report = app.add_subcommand("report", "summary of invariants for one (N, d, k)");
  add_spec(report, o);
  report->add_option("--json", o.json_path, "write the JSON report to this file");
  report->add_option("--seed", o.seed, "seed for the connectivity certificate search")->capture_default_str();

  auto* lattice = app.add_subcommand("lattice", "intersection lattice as DOT or JSON");
  add_spec(lattice, o);
  lattice->add_option("--format", o.format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}))
      ->capture_default_str();
  lattice->add_option("--out", o.out_path, "output file");

  auto* classify = app.add_subcommand("classify", "ordering sector of a d = 1 configuration");
  add_spec(classify, o, false);
  classify->add_option("--point", o.point, "comma-separated rational coordinates")->required();

  auto* wind = app.add_subcommand("wind", "winding numbers of a closed loop around each atom");
  add_spec(wind, o);
  wind->add_option("--path", o.path, "CSV file of loop vertices")->required();

  auto* mesh = app.add_subcommand("mesh", "OBJ export of the coincidence structure (N = 3, 4; d = 1)");
  add_spec(mesh, o);
  mesh->add_option("--box", o.box, "half-width of the clipping cube")->capture_default_str();
  mesh->add_option("--out", o.out_path, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*report) return cmd_report(o, out);
    if (*lattice) return cmd_lattice(o, out);
    if (*classify) return cmd_classify(o, out);
    if (*wind) return cmd_wind(o, out);
    if (*mesh) return cmd_mesh(o, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const BoundaryError& e) {
    err << "boundary: " << e.what() << "\n";
    return 4;
  } catch (const CollisionError& e) {
    err << "collision: " << e.what() << "\n";
    return 4;
  } catch (const GeneralPositionError& e) {
    err << "general position: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace coinc
