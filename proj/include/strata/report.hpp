#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strata/decomposition.hpp"

namespace strata::report {

/// Element list capped for display; count always covers the whole set.
struct ElementList {
  long long count = 0;
  std::vector<std::string> shown;
  bool truncated = false;

  bool operator==(const ElementList&) const = default;
};

struct FactorRecord {
  std::string prime;
  int exponent = 0;
  std::string generator;

  bool operator==(const FactorRecord&) const = default;
};

/// One semilattice node.  subset holds 1-based prime indices; covers holds
/// node indices of the immediate successors in the idempotent order.
struct NodeRecord {
  std::vector<int> subset;
  std::string idempotent;
  long long size = 0;
  long long base_size = 0;
  int height = 0;
  std::vector<int> covers;

  bool operator==(const NodeRecord&) const = default;
};

struct LayerRecord {
  int depth = 0;
  ElementList elements;

  bool operator==(const LayerRecord&) const = default;
};

struct ComponentRecord {
  int node = 0;
  std::vector<int> subset;
  std::string idempotent;
  long long size = 0;
  int height = 0;
  ElementList base;
  std::vector<LayerRecord> layers;

  bool operator==(const ComponentRecord&) const = default;
};

struct ReportDocument {
  std::string kind;  // "zn" or "quad"
  long long n = 0;   // zn: the modulus
  long long d = 0;   // quad: the field
  long long ideal_m = 0, ideal_c = 0, ideal_f = 0;  // quad: defining ideal rows
  long long order = 0;
  std::vector<FactorRecord> factorization;
  std::vector<NodeRecord> nodes;
  std::vector<ComponentRecord> components;
  std::optional<int> focus;
  int max_elems = 64;
  std::string provenance = "recipe";
  bool verified = false;
  bool match = false;
  double recipe_ms = 0.0;
  double oracle_ms = 0.0;

  bool operator==(const ReportDocument&) const = default;
};

struct RunOptions {
  bool verify = false;
  std::optional<std::string> focus;
  int max_elems = 64;
};

/// Decompose Z/nZ and assemble the report.  With verify set, the
/// exhaustive decomposition is run as well and compared; the outcome lands
/// in the verification fields rather than an exception.
ReportDocument run_zn(long long n, const RunOptions& opts = {});

/// The same for Z[sqrt(d)] modulo the ideal spanned by the listed
/// generators ("a", "b*w", "a+b*w", comma separated, w = sqrt(d)).
ReportDocument run_quad(long long d, const std::string& ideal_text,
                        const RunOptions& opts = {});

/// Plain text report.  Deterministic: equal documents give equal bytes.
std::string render_text(const ReportDocument& doc);

/// Graphviz digraph of the semilattice, one box per node with subset,
/// idempotent generator, base order and height, edges pointing upward.
std::string render_dot(const ReportDocument& doc);

/// JSON with a fixed key order.  from_json(to_json(doc)) == doc.
std::string to_json(const ReportDocument& doc);
ReportDocument from_json(const std::string& text);

/// "a", "b*w", "a+b*w" terms, comma separated, into (a, b) pairs.
std::vector<std::pair<long long, long long>> parse_ideal_gens(const std::string& text);

}  // namespace strata::report
