#include "strata/report.hpp"

#include <algorithm>
#include <chrono>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "strata/errors.hpp"
#include "strata/oracle.hpp"
#include "strata/recipe.hpp"

namespace strata::report {

namespace {

using Clock = std::chrono::steady_clock;
using ojson = nlohmann::ordered_json;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

ElementList element_list(const FiniteRing& r, const std::vector<int>& elems, int cap) {
  ElementList out;
  out.count = (long long)elems.size();
  long long show = std::min<long long>(cap, out.count);
  for (long long i = 0; i < show; ++i) out.shown.push_back(r.format(elems[(size_t)i]));
  out.truncated = show < out.count;
  return out;
}

std::vector<int> subset_list(unsigned mask) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (mask & (1u << i)) out.push_back(i + 1);
  return out;
}

int parse_focus_zn(const std::string& text, long long n) {
  size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &pos);
  } catch (const std::exception&) {
    fail(Errc::InvalidParameter, "focus must be an integer residue");
  }
  if (pos != text.size()) fail(Errc::InvalidParameter, "focus must be an integer residue");
  return (int)(((v % n) + n) % n);
}

int parse_focus_quad(const FiniteRing& r, const std::string& text) {
  auto gens = parse_ideal_gens(text);
  if (gens.size() != 1) fail(Errc::InvalidParameter, "focus must be a single element");
  return r.element_from_coords(gens[0].first, gens[0].second);
}

ReportDocument build(const FiniteRing& r, const recipe::Factorization& fact,
                     const Decomposition& dec, const RunOptions& opts) {
  ReportDocument doc;
  doc.order = r.order();
  doc.max_elems = opts.max_elems;

  for (int i = 0; i < fact.count(); ++i) {
    FactorRecord fr;
    fr.prime = fact.prime_label(i);
    fr.exponent = fact.exponent(i);
    fr.generator = r.format(fact.generator(i));
    doc.factorization.push_back(std::move(fr));
  }

  const size_t k = dec.components.size();
  doc.nodes.resize(k);
  for (size_t i = 0; i < k; ++i) {
    const Component& comp = dec.components[i];
    NodeRecord& node = doc.nodes[i];
    node.subset = subset_list(dec.subsets[i]);
    node.idempotent = r.format(comp.idempotent.generator);
    node.size = (long long)comp.elems.size();
    node.base_size = (long long)comp.base.size();
    node.height = comp.height();
  }
  for (auto [lo, up] : dec.hasse) doc.nodes[lo].covers.push_back(up);
  for (NodeRecord& node : doc.nodes) std::sort(node.covers.begin(), node.covers.end());

  if (opts.focus) {
    int x = r.kind() == RingKind::Zn ? parse_focus_zn(*opts.focus, r.modulus())
                                     : parse_focus_quad(r, *opts.focus);
    doc.focus = dec.comp_of[x];
  }

  for (size_t i = 0; i < k; ++i) {
    if (doc.focus && (int)i != *doc.focus) continue;
    const Component& comp = dec.components[i];
    ComponentRecord rec;
    rec.node = (int)i;
    rec.subset = doc.nodes[i].subset;
    rec.idempotent = doc.nodes[i].idempotent;
    rec.size = (long long)comp.elems.size();
    rec.height = comp.height();
    rec.base = element_list(r, comp.base, opts.max_elems);
    for (int l = 0; l < comp.height(); ++l) {
      LayerRecord lr;
      lr.depth = l + 1;
      lr.elements = element_list(r, comp.layers[(size_t)l], opts.max_elems);
      rec.layers.push_back(std::move(lr));
    }
    doc.components.push_back(std::move(rec));
  }
  return doc;
}

void verify_against_oracle(const FiniteRing& r, const Decomposition& dec,
                           ReportDocument& doc) {
  auto t0 = Clock::now();
  Decomposition ora = oracle::decompose(r);
  doc.oracle_ms = ms_since(t0);
  doc.verified = true;
  doc.match = same_decomposition(dec, ora);
}

std::string join_ints(const std::vector<int>& v, const char* sep) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string subset_text(const std::vector<int>& subset) {
  return "{" + join_ints(subset, ",") + "}";
}

void print_element_list(std::ostringstream& os, const ElementList& el) {
  for (size_t i = 0; i < el.shown.size(); ++i) os << (i ? " " : "") << el.shown[i];
  if (el.truncated) os << (el.shown.empty() ? "..." : " ...");
}

ojson element_list_json(const ElementList& el) {
  ojson j;
  j["count"] = el.count;
  j["shown"] = el.shown;
  j["truncated"] = el.truncated;
  return j;
}

ElementList element_list_from_json(const ojson& j) {
  ElementList el;
  el.count = j.at("count").get<long long>();
  el.shown = j.at("shown").get<std::vector<std::string>>();
  el.truncated = j.at("truncated").get<bool>();
  return el;
}

}  // namespace

ReportDocument run_zn(long long n, const RunOptions& opts) {
  if (opts.max_elems < 0) fail(Errc::InvalidParameter, "max_elems must be non-negative");
  FiniteRing r = FiniteRing::integers_mod(n);
  auto t0 = Clock::now();
  recipe::Factorization fact = recipe::Factorization::for_ring(r);
  Decomposition dec = recipe::decompose(fact);
  double rec_ms = ms_since(t0);
  ReportDocument doc = build(r, fact, dec, opts);
  doc.kind = "zn";
  doc.n = n;
  doc.recipe_ms = rec_ms;
  if (opts.verify) verify_against_oracle(r, dec, doc);
  return doc;
}

ReportDocument run_quad(long long d, const std::string& ideal_text,
                        const RunOptions& opts) {
  if (opts.max_elems < 0) fail(Errc::InvalidParameter, "max_elems must be non-negative");
  auto gens = parse_ideal_gens(ideal_text);
  bool nonzero = false;
  for (auto [a, b] : gens)
    if (a != 0 || b != 0) nonzero = true;
  if (!nonzero) fail(Errc::InfiniteQuotient, "the zero ideal gives an infinite quotient");
  QuadLattice a = hnf_from_generators(d, gens);
  FiniteRing r = FiniteRing::quad_quotient(d, a);
  auto t0 = Clock::now();
  recipe::Factorization fact = recipe::Factorization::for_ring(r);
  Decomposition dec = recipe::decompose(fact);
  double rec_ms = ms_since(t0);
  ReportDocument doc = build(r, fact, dec, opts);
  doc.kind = "quad";
  doc.d = d;
  doc.ideal_m = a.m();
  doc.ideal_c = a.c();
  doc.ideal_f = a.f();
  doc.recipe_ms = rec_ms;
  if (opts.verify) verify_against_oracle(r, dec, doc);
  return doc;
}

std::string render_text(const ReportDocument& doc) {
  std::ostringstream os;
  if (doc.kind == "zn") {
    os << "ring Z/" << doc.n << ", order " << doc.order << "\n";
  } else {
    std::string ideal =
        doc.ideal_c == 0 && doc.ideal_f == doc.ideal_m
            ? "(" + std::to_string(doc.ideal_m) + ")"
            : "(" + std::to_string(doc.ideal_m) + ", " +
                  quad_term(doc.ideal_c, doc.ideal_f, doc.d) + ")";
    os << "ring Z[" << quad_term(0, 1, doc.d) << "]/" << ideal << ", order "
       << doc.order << "\n";
  }

  os << "factorisation:";
  if (doc.factorization.empty()) {
    os << " (1)";
  } else {
    for (size_t i = 0; i < doc.factorization.size(); ++i) {
      const FactorRecord& fr = doc.factorization[i];
      os << (i ? " * " : " ") << fr.prime;
      if (fr.exponent > 1) os << "^" << fr.exponent;
    }
  }
  os << "\n";
  for (size_t i = 0; i < doc.factorization.size(); ++i) {
    const FactorRecord& fr = doc.factorization[i];
    os << "  prime " << i + 1 << ": " << fr.prime << "  exponent " << fr.exponent
       << "  generator " << fr.generator << "\n";
  }

  os << "components: " << doc.nodes.size() << "\n";
  for (size_t i = 0; i < doc.nodes.size(); ++i) {
    const NodeRecord& node = doc.nodes[i];
    os << "  [" << i << "] subset " << subset_text(node.subset) << "  idempotent ("
       << node.idempotent << ")  size " << node.size << "  base " << node.base_size
       << "  height " << node.height;
    if (!node.covers.empty()) os << "  covers " << join_ints(node.covers, " ");
    os << "\n";
  }

  for (const ComponentRecord& rec : doc.components) {
    os << "component [" << rec.node << "] subset " << subset_text(rec.subset)
       << "  idempotent (" << rec.idempotent << ")\n";
    os << "  base (" << rec.base.count << "): ";
    print_element_list(os, rec.base);
    os << "\n";
    for (const LayerRecord& lr : rec.layers) {
      os << "  layer " << lr.depth << " (" << lr.elements.count << "): ";
      print_element_list(os, lr.elements);
      os << "\n";
    }
  }

  if (doc.verified)
    os << "verification: recipe vs oracle " << (doc.match ? "MATCH" : "MISMATCH") << "\n";
  else
    os << "verification: recipe only\n";
  if (doc.kind == "zn")
    os << "note: elements are residues 0..n-1 (0 stands in for n)\n";
  return os.str();
}

std::string render_dot(const ReportDocument& doc) {
  std::ostringstream os;
  os << "digraph strata {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box];\n";
  for (size_t i = 0; i < doc.nodes.size(); ++i) {
    const NodeRecord& node = doc.nodes[i];
    os << "  n" << i << " [label=\"" << subset_text(node.subset) << " | ("
       << node.idempotent << ") | base " << node.base_size << " | h "
       << node.height << "\"];\n";
  }
  for (size_t i = 0; i < doc.nodes.size(); ++i)
    for (int up : doc.nodes[i].covers) os << "  n" << i << " -> n" << up << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_json(const ReportDocument& doc) {
  ojson j;
  ojson ring;
  ring["kind"] = doc.kind;
  if (doc.kind == "zn") {
    ring["n"] = doc.n;
  } else {
    ring["d"] = doc.d;
    ring["ideal"] = ojson{{"m", doc.ideal_m}, {"c", doc.ideal_c}, {"f", doc.ideal_f}};
  }
  j["ring"] = ring;
  j["order"] = doc.order;
  j["factorisation"] = ojson::array();
  for (const FactorRecord& fr : doc.factorization)
    j["factorisation"].push_back(
        ojson{{"prime", fr.prime}, {"exponent", fr.exponent}, {"generator", fr.generator}});
  j["nodes"] = ojson::array();
  for (const NodeRecord& node : doc.nodes)
    j["nodes"].push_back(ojson{{"subset", node.subset},
                               {"idempotent", node.idempotent},
                               {"size", node.size},
                               {"base_size", node.base_size},
                               {"height", node.height},
                               {"covers", node.covers}});
  j["components"] = ojson::array();
  for (const ComponentRecord& rec : doc.components) {
    ojson layers = ojson::array();
    for (const LayerRecord& lr : rec.layers) {
      ojson lj;
      lj["depth"] = lr.depth;
      lj["elements"] = element_list_json(lr.elements);
      layers.push_back(std::move(lj));
    }
    j["components"].push_back(ojson{{"node", rec.node},
                                    {"subset", rec.subset},
                                    {"idempotent", rec.idempotent},
                                    {"size", rec.size},
                                    {"height", rec.height},
                                    {"base", element_list_json(rec.base)},
                                    {"layers", layers}});
  }
  if (doc.focus)
    j["focus"] = *doc.focus;
  else
    j["focus"] = nullptr;
  j["max_elems"] = doc.max_elems;
  j["verification"] = ojson{{"provenance", doc.provenance},
                            {"verified", doc.verified},
                            {"match", doc.match},
                            {"recipe_ms", doc.recipe_ms},
                            {"oracle_ms", doc.oracle_ms}};
  return j.dump(2) + "\n";
}

ReportDocument from_json(const std::string& text) {
  try {
    ojson j = ojson::parse(text);
    ReportDocument doc;
    const ojson& ring = j.at("ring");
    doc.kind = ring.at("kind").get<std::string>();
    if (doc.kind == "zn") {
      doc.n = ring.at("n").get<long long>();
    } else {
      doc.d = ring.at("d").get<long long>();
      doc.ideal_m = ring.at("ideal").at("m").get<long long>();
      doc.ideal_c = ring.at("ideal").at("c").get<long long>();
      doc.ideal_f = ring.at("ideal").at("f").get<long long>();
    }
    doc.order = j.at("order").get<long long>();
    for (const ojson& fj : j.at("factorisation")) {
      FactorRecord fr;
      fr.prime = fj.at("prime").get<std::string>();
      fr.exponent = fj.at("exponent").get<int>();
      fr.generator = fj.at("generator").get<std::string>();
      doc.factorization.push_back(std::move(fr));
    }
    for (const ojson& nj : j.at("nodes")) {
      NodeRecord node;
      node.subset = nj.at("subset").get<std::vector<int>>();
      node.idempotent = nj.at("idempotent").get<std::string>();
      node.size = nj.at("size").get<long long>();
      node.base_size = nj.at("base_size").get<long long>();
      node.height = nj.at("height").get<int>();
      node.covers = nj.at("covers").get<std::vector<int>>();
      doc.nodes.push_back(std::move(node));
    }
    for (const ojson& cj : j.at("components")) {
      ComponentRecord rec;
      rec.node = cj.at("node").get<int>();
      rec.subset = cj.at("subset").get<std::vector<int>>();
      rec.idempotent = cj.at("idempotent").get<std::string>();
      rec.size = cj.at("size").get<long long>();
      rec.height = cj.at("height").get<int>();
      rec.base = element_list_from_json(cj.at("base"));
      for (const ojson& lj : cj.at("layers")) {
        LayerRecord lr;
        lr.depth = lj.at("depth").get<int>();
        lr.elements = element_list_from_json(lj.at("elements"));
        rec.layers.push_back(std::move(lr));
      }
      doc.components.push_back(std::move(rec));
    }
    if (!j.at("focus").is_null()) doc.focus = j.at("focus").get<int>();
    doc.max_elems = j.at("max_elems").get<int>();
    const ojson& vj = j.at("verification");
    doc.provenance = vj.at("provenance").get<std::string>();
    doc.verified = vj.at("verified").get<bool>();
    doc.match = vj.at("match").get<bool>();
    doc.recipe_ms = vj.at("recipe_ms").get<double>();
    doc.oracle_ms = vj.at("oracle_ms").get<double>();
    return doc;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(Errc::InvalidParameter, std::string("malformed report JSON: ") + e.what());
  }
}

std::vector<std::pair<long long, long long>> parse_ideal_gens(const std::string& text) {
  static const std::regex pure_root(R"(^\s*([+-]?\d+)\s*\*\s*w\s*$)");
  static const std::regex with_rational(
      R"(^\s*([+-]?\d+)\s*(?:([+-])\s*(\d+)\s*\*\s*w)?\s*$)");

  std::vector<std::pair<long long, long long>> out;
  size_t start = 0;
  bool done = false;
  while (!done) {
    size_t comma = text.find(',', start);
    std::string term;
    if (comma == std::string::npos) {
      term = text.substr(start);
      done = true;
    } else {
      term = text.substr(start, comma - start);
      start = comma + 1;
    }
    std::smatch m;
    try {
      if (std::regex_match(term, m, pure_root)) {
        out.emplace_back(0, std::stoll(m[1].str()));
      } else if (std::regex_match(term, m, with_rational)) {
        long long a = std::stoll(m[1].str());
        long long b = 0;
        if (m[2].matched) {
          b = std::stoll(m[3].str());
          if (m[2].str() == "-") b = -b;
        }
        out.emplace_back(a, b);
      } else {
        fail(Errc::InvalidParameter, "bad ideal generator term: '" + term + "'");
      }
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail(Errc::InvalidParameter, "ideal generator out of range: '" + term + "'");
    }
  }
  if (out.empty()) fail(Errc::InvalidParameter, "empty generator list");
  return out;
}

}  // namespace strata::report
