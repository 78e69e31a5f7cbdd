#include "polyassoc/service.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include <httplib.h>

namespace polyassoc {

namespace {

using io::Json;
using Clock = std::chrono::steady_clock;

std::vector<std::string> canonical(const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (std::string_view known : product_names) {
    if (std::find(names.begin(), names.end(), known) != names.end()) out.emplace_back(known);
  }
  return out;
}

void check_product(const std::string& name) {
  if (std::find(std::begin(product_names), std::end(product_names), name) == std::end(product_names)) {
    throw Error(ErrorCode::UnknownProduct, "unknown product \"" + name + "\"");
  }
}

void check_deadline(const EnumerationOptions& options) {
  if (options.deadline && Clock::now() > *options.deadline) {
    throw Error(ErrorCode::Timeout, "request exceeded its time budget");
  }
}

const Json& field(const Json& body, const char* name) {
  auto it = body.find(name);
  if (it == body.end()) throw Error(ErrorCode::InvalidInput, std::string("request needs \"") + name + "\"");
  return *it;
}

int label_field(const Json& value) {
  if (!value.is_number_integer()) throw Error(ErrorCode::InvalidInput, "vertex must be an integer label");
  return value.get<int>();
}

struct RequestContext {
  EnumerationOptions enumeration;
  bool deterministic = false;
};

RequestContext context_for(const Json& body, const ServiceOptions& options) {
  RequestContext ctx;
  ctx.deterministic = options.deterministic || body.value("deterministic", false);
  ctx.enumeration.cap = options.cap;
  if (auto it = body.find("cap"); it != body.end()) {
    if (!it->is_number_unsigned()) throw Error(ErrorCode::InvalidInput, "cap must be a positive integer");
    ctx.enumeration.cap = std::min(options.cap, it->get<std::size_t>());
  }
  ctx.enumeration.deadline = Clock::now() + options.budget;
  ctx.enumeration.exec = ctx.deterministic ? Execution::serial : Execution::parallel;
  return ctx;
}

Json handle_analyze(const Json& body, const ServiceOptions& options) {
  const RequestContext ctx = context_for(body, options);
  const Polygon polygon = io::parse_polygon(field(body, "polygon"));
  AnalyzeOptions analyze_options;
  analyze_options.enumeration = ctx.enumeration;
  analyze_options.timing = !ctx.deterministic;
  if (auto it = body.find("root"); it != body.end()) {
    if (!it->is_array() || it->size() != 2) throw Error(ErrorCode::InvalidInput, "root must be [i, j]");
    analyze_options.root = std::pair{label_field((*it)[0]), label_field((*it)[1])};
  }
  const Json requested = body.contains("products") ? body["products"] : Json::array({"visibility", "rank"});
  const auto products = products_from_json(requested);
  return analyze(polygon, products, analyze_options);
}

Json handle_move(const Json& body, const ServiceOptions& options) {
  const RequestContext ctx = context_for(body, options);
  const Polygon polygon = io::parse_polygon(field(body, "polygon"));
  std::vector<std::pair<int, Point>> moves;
  if (auto it = body.find("moves"); it != body.end()) {
    if (!it->is_array()) throw Error(ErrorCode::InvalidInput, "moves must be an array");
    for (const Json& m : *it) {
      moves.emplace_back(label_field(field(m, "vertex")), io::parse_point(m.contains("to") ? m["to"] : field(m, "target")));
    }
  } else {
    moves.emplace_back(label_field(field(body, "vertex")),
                       io::parse_point(body.contains("target") ? body["target"] : field(body, "to")));
  }
  Json out = io::event_log(run_moves(polygon, moves, ctx.enumeration.exec));
  check_deadline(ctx.enumeration);
  out["polygon"] = io::polygon(polygon);
  return out;
}

Json handle_star(const Json& body, const ServiceOptions& options) {
  const RequestContext ctx = context_for(body, options);
  const Polygon polygon = io::parse_polygon(field(body, "polygon"));
  std::optional<Point> center;
  if (auto it = body.find("center"); it != body.end() && !it->is_null()) center = io::parse_point(*it);
  StarPath path = StarPath::InverseRadius;
  if (auto it = body.find("path"); it != body.end()) {
    const std::string name = it->is_string() ? it->get<std::string>() : "";
    if (name == "linear") {
      path = StarPath::Linear;
    } else if (name != "inverse-radius") {
      throw Error(ErrorCode::InvalidInput, "path must be \"inverse-radius\" or \"linear\"");
    }
  }
  Json out = io::star_report(star_deformation(polygon, center, path, ctx.enumeration.exec));
  check_deadline(ctx.enumeration);
  out["polygon"] = io::polygon(polygon);
  return out;
}

int status_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::RegionTooLarge:
      return 413;
    case ErrorCode::Timeout:
      return 408;
    default:
      return 400;
  }
}

}  // namespace

std::vector<std::string> parse_products(std::string_view list) {
  std::vector<std::string> names;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t end = list.find(',', start);
    if (end == std::string_view::npos) end = list.size();
    std::string name(list.substr(start, end - start));
    name.erase(0, name.find_first_not_of(' '));
    name.erase(name.find_last_not_of(' ') + 1);
    if (!name.empty()) {
      check_product(name);
      names.push_back(name);
    }
    start = end + 1;
  }
  return canonical(names);
}

std::vector<std::string> products_from_json(const Json& list) {
  if (list.is_string()) return parse_products(list.get<std::string>());
  if (!list.is_array()) throw Error(ErrorCode::InvalidInput, "products must be an array of names");
  std::vector<std::string> names;
  for (const Json& p : list) {
    if (!p.is_string()) throw Error(ErrorCode::UnknownProduct, "product names are strings, got " + p.dump());
    check_product(p.get<std::string>());
    names.push_back(p.get<std::string>());
  }
  return canonical(names);
}

Diagonal diagonal_of_labels(const Polygon& polygon, std::pair<int, int> labels) {
  auto a = polygon.find_label(labels.first);
  auto b = polygon.find_label(labels.second);
  if (!a || !b) {
    throw Error(ErrorCode::InvalidInput,
                "unknown vertex label in " + std::to_string(labels.first) + "," + std::to_string(labels.second));
  }
  if (*a == *b) throw Error(ErrorCode::SameVertex, "root edge needs two distinct vertices");
  return Diagonal::of(*a, *b);
}

Json analyze(const Polygon& polygon, const std::vector<std::string>& products, const AnalyzeOptions& options) {
  const EnumerationOptions& eo = options.enumeration;
  Json out = {{"polygon", io::polygon(polygon)}};
  Json timing = Json::object();
  const std::map<std::string, std::function<Json()>> builders = {
      {"visibility", [&] { return io::visibility(polygon, visibility_graph(polygon, eo.exec)); }},
      {"complex", [&] { return io::complex(polygon, build_complex(polygon, eo)); }},
      {"flipgraph", [&] { return io::flip_graph(polygon, flip_graph(polygon, eo)); }},
      {"realize",
       [&] {
         std::optional<Diagonal> root;
         if (options.root) root = diagonal_of_labels(polygon, *options.root);
         return io::realization(polygon, realize(polygon, root, eo));
       }},
      {"secondary", [&] { return io::secondary(polygon, secondary_polytope_summary(polygon, eo)); }},
      {"theta", [&] { return io::theta(polygon, theta_complex(polygon, eo)); }},
      {"rank", [&] { return io::rank(rank(polygon)); }},
  };
  for (const std::string& name : products) {
    const auto start = Clock::now();
    out[name] = builders.at(name)();
    check_deadline(eo);
    timing[name] = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  }
  if (options.timing) out["timing"] = timing;
  return out;
}

Reply handle(std::string_view endpoint, const std::string& body, const ServiceOptions& options) {
  try {
    if (endpoint == "GET /api/health") return {200, {{"status", "ok"}, {"products", product_names}}};
    const std::map<std::string_view, Json (*)(const Json&, const ServiceOptions&)> routes = {
        {"POST /api/analyze", handle_analyze},
        {"POST /api/move", handle_move},
        {"POST /api/star-deform", handle_star},
    };
    auto route = routes.find(endpoint);
    if (route == routes.end()) {
      return {404, {{"error", "NotFound"}, {"message", "no endpoint " + std::string(endpoint)}}};
    }
    Json request;
    try {
      request = Json::parse(body);
    } catch (const Json::parse_error& e) {
      throw Error(ErrorCode::InvalidInput, std::string("request is not JSON: ") + e.what());
    }
    if (!request.is_object()) throw Error(ErrorCode::InvalidInput, "request must be a JSON object");
    return {200, route->second(request, options)};
  } catch (const Error& e) {
    return {status_for(e), io::error(e)};
  } catch (const Json::exception& e) {
    return {400, {{"error", error_name(ErrorCode::InvalidInput)}, {"message", e.what()}}};
  }
}

struct Server::Impl {
  ServiceOptions options;
  httplib::Server http;
};

Server::Server(ServiceOptions options) : impl_(std::make_unique<Impl>()) {
  impl_->options = options;
  auto& http = impl_->http;
  auto respond = [this](const httplib::Request& req, httplib::Response& res) {
    const Reply reply = handle(req.method + " " + req.path, req.body, impl_->options);
    res.status = reply.status;
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_content(reply.body.dump(), "application/json");
  };
  http.Get("/api/health", respond);
  http.Post("/api/analyze", respond);
  http.Post("/api/move", respond);
  http.Post("/api/star-deform", respond);
  http.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
  http.set_error_handler([](const httplib::Request& req, httplib::Response& res) {
    if (res.status == 404) {
      res.set_content(Json{{"error", "NotFound"}, {"message", "no endpoint " + req.method + " " + req.path}}.dump(),
                      "application/json");
    }
  });
}

Server::~Server() { stop(); }

int Server::bind(const std::string& host, int port) {
  if (port == 0) return impl_->http.bind_to_any_port(host);
  return impl_->http.bind_to_port(host, port) ? port : -1;
}

bool Server::listen() { return impl_->http.listen_after_bind(); }

void Server::stop() {
  if (impl_) impl_->http.stop();
}

}  // namespace polyassoc
