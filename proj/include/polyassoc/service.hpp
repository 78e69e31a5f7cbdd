#pragma once

#include <chrono>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polyassoc/io.hpp"

namespace polyassoc {

inline constexpr std::string_view product_names[] = {"visibility", "complex", "flipgraph", "realize",
                                                     "secondary",  "theta",   "rank"};

/// Splits "a,b" or takes a JSON array; throws UnknownProduct. Duplicates are
/// dropped and the canonical order above is kept.
std::vector<std::string> parse_products(std::string_view list);
std::vector<std::string> products_from_json(const io::Json& list);

struct AnalyzeOptions {
  EnumerationOptions enumeration;
  std::optional<std::pair<int, int>> root;  // labels
  bool timing = true;
};

/// `{"polygon": echo, <product>: payload, ..., "timing": {...}}`.
io::Json analyze(const Polygon& polygon, const std::vector<std::string>& products, const AnalyzeOptions& options);

/// Label pair to a storage diagonal. Throws InvalidInput for unknown labels.
Diagonal diagonal_of_labels(const Polygon& polygon, std::pair<int, int> labels);

struct ServiceOptions {
  std::size_t cap = default_face_cap;
  std::chrono::milliseconds budget{30'000};
  /// Force serial kernels and omit timing for every request.
  bool deterministic = false;
};

struct Reply {
  int status = 200;
  io::Json body;
};

/// Pure request handler behind the HTTP server. `endpoint` is e.g.
/// "POST /api/analyze". 400 on validation errors, 408 past the budget, 413
/// on RegionTooLarge, 404 for unknown endpoints.
Reply handle(std::string_view endpoint, const std::string& body, const ServiceOptions& options);

class Server {
 public:
  explicit Server(ServiceOptions options = {});
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  /// Binds without serving; port 0 picks a free port. Returns the port or -1.
  int bind(const std::string& host, int port);
  /// Blocks until stop().
  bool listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace polyassoc
