#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "polyassoc/service.hpp"

using namespace polyassoc;
using io::Json;

namespace {

enum Exit { ok = 0, usage = 1, validation = 2, too_large = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string in;
  std::string out;
  std::string format = "json";
  std::optional<std::size_t> cap;
  bool deterministic = false;
};

void add_common(CLI::App* cmd, Common& c, bool needs_input = true) {
  auto* in = cmd->add_option("--in", c.in, "polygon JSON file ('-' for stdin)");
  if (needs_input) in->required();
  cmd->add_option("--out", c.out, "output file (default stdout)");
  cmd->add_option("--format", c.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  cmd->add_option("--cap", c.cap, "face cap for enumerations")->check(CLI::PositiveNumber);
  cmd->add_flag("--deterministic", c.deterministic, "serial kernels, no timing");
}

Json read_json(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw Error(ErrorCode::InvalidInput, "cannot read " + path);
    buffer << file.rdbuf();
  }
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, path + " is not JSON: " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

void write_json(const Common& c, const Json& value) {
  if (c.format != "json") throw UsageError("this subcommand only writes JSON");
  write_text(c.out, value.dump(2) + "\n");
}

EnumerationOptions enumeration(const Common& c) {
  EnumerationOptions options;
  if (const char* env = std::getenv("POLYASSOC_CAP")) {
    try {
      options.cap = std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("POLYASSOC_CAP is not a number: ") + env);
    }
  }
  if (c.cap) options.cap = *c.cap;
  options.exec = c.deterministic ? Execution::serial : Execution::parallel;
  return options;
}

std::pair<int, int> parse_pair(const std::string& text, const char* flag) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(text);
    const int a = std::stoi(text.substr(0, comma));
    const int b = std::stoi(text.substr(comma + 1));
    return {a, b};
  } catch (const std::exception&) {
    throw UsageError(std::string(flag) + " expects I,J, got " + text);
  }
}

Point parse_target(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--to expects X,Y, got " + text);
  return Point{parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convex diagonalizations, realizations and visibility deformations of polygons"};
  app.require_subcommand(1);

  Common c;
  std::string products = "visibility,rank";
  std::string root;
  std::vector<int> vertices;
  std::vector<std::string> targets;
  std::string center;
  std::string path = "inverse-radius";
  int port = 8080;
  std::string host = "127.0.0.1";

  auto* analyze_cmd = app.add_subcommand("analyze", "compute the requested products");
  add_common(analyze_cmd, c);
  analyze_cmd->add_option("--products", products, "comma list of visibility,complex,flipgraph,realize,secondary,theta,rank");
  analyze_cmd->add_option("--root", root, "root edge labels I,J for realize");

  auto* triangulations_cmd = app.add_subcommand("triangulations", "list all triangulations");
  add_common(triangulations_cmd, c);
  auto* complex_cmd = app.add_subcommand("complex", "complex of convex diagonalizations");
  add_common(complex_cmd, c);
  auto* flip_cmd = app.add_subcommand("flipgraph", "flip graph (json or dot)");
  add_common(flip_cmd, c);
  auto* realize_cmd = app.add_subcommand("realize", "integer coordinates of the triangulations");
  add_common(realize_cmd, c);
  realize_cmd->add_option("--root", root, "root edge labels I,J");
  auto* secondary_cmd = app.add_subcommand("secondary", "area vectors with height certificates");
  add_common(secondary_cmd, c);

  auto* star_cmd = app.add_subcommand("deform-star", "slide a star polygon to convex position");
  add_common(star_cmd, c);
  star_cmd->add_option("--center", center, "kernel point X,Y");
  star_cmd->add_option("--path", path, "inverse-radius or linear")->check(CLI::IsMember({"inverse-radius", "linear"}));

  auto* move_cmd = app.add_subcommand("move", "move vertices along segments and log visibility events");
  add_common(move_cmd, c);
  move_cmd->add_option("--vertex", vertices, "vertex label (repeat for a chain)")->required();
  move_cmd->add_option("--to", targets, "target X,Y (repeat for a chain)")->required();

  auto* serve_cmd = app.add_subcommand("serve", "HTTP/JSON service");
  add_common(serve_cmd, c, false);
  serve_cmd->add_option("--port", port, "port (0 picks a free one)");
  serve_cmd->add_option("--host", host, "bind address");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? ok : usage;
  }

  try {
    const EnumerationOptions eo = enumeration(c);

    if (serve_cmd->parsed()) {
      ServiceOptions options;
      options.cap = eo.cap;
      options.deterministic = c.deterministic;
      Server server(options);
      const int bound = server.bind(host, port);
      if (bound < 0) throw UsageError("cannot bind " + host + ":" + std::to_string(port));
      std::cerr << "listening on http://" << host << ":" << bound << "\n";
      return server.listen() ? ok : usage;
    }

    const Polygon polygon = io::parse_polygon(read_json(c.in));

    if (analyze_cmd->parsed()) {
      const auto names = parse_products(products);
      if (c.format == "dot") {
        if (names != std::vector<std::string>{"visibility"} && names != std::vector<std::string>{"flipgraph"}) {
          throw UsageError("--format dot needs exactly one of the products visibility or flipgraph");
        }
        write_text(c.out, names[0] == "visibility" ? to_dot(polygon, visibility_graph(polygon, eo.exec))
                                                   : to_dot(flip_graph(polygon, eo)));
        return ok;
      }
      AnalyzeOptions options;
      options.enumeration = eo;
      options.timing = !c.deterministic;
      if (!root.empty()) options.root = parse_pair(root, "--root");
      write_json(c, analyze(polygon, names, options));
    } else if (triangulations_cmd->parsed()) {
      write_json(c, io::triangulations(polygon, enumerate_triangulations(polygon, eo)));
    } else if (complex_cmd->parsed()) {
      write_json(c, io::complex(polygon, build_complex(polygon, eo)));
    } else if (flip_cmd->parsed()) {
      const FlipGraph graph = flip_graph(polygon, eo);
      if (c.format == "dot") {
        write_text(c.out, to_dot(graph));
      } else {
        write_json(c, io::flip_graph(polygon, graph));
      }
    } else if (realize_cmd->parsed()) {
      std::optional<Diagonal> root_edge;
      if (!root.empty()) root_edge = diagonal_of_labels(polygon, parse_pair(root, "--root"));
      write_json(c, io::realization(polygon, realize(polygon, root_edge, eo)));
    } else if (secondary_cmd->parsed()) {
      write_json(c, io::secondary(polygon, secondary_polytope_summary(polygon, eo)));
    } else if (star_cmd->parsed()) {
      std::optional<Point> x;
      if (!center.empty()) x = parse_target(center);
      const StarPath p = path == "linear" ? StarPath::Linear : StarPath::InverseRadius;
      write_json(c, io::star_report(star_deformation(polygon, x, p, eo.exec)));
    } else if (move_cmd->parsed()) {
      if (vertices.size() != targets.size()) throw UsageError("give one --to per --vertex");
      std::vector<std::pair<int, Point>> moves;
      for (std::size_t i = 0; i < vertices.size(); ++i) moves.emplace_back(vertices[i], parse_target(targets[i]));
      write_json(c, io::event_log(run_moves(polygon, moves, eo.exec)));
    }
    return ok;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return usage;
  } catch (const RegionTooLarge& e) {
    std::cerr << io::error(e).dump() << "\n";
    return too_large;
  } catch (const Error& e) {
    std::cerr << io::error(e).dump() << "\n";
    return e.code() == ErrorCode::UnknownProduct ? usage : validation;
  }
}
