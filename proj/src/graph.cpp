#include "smae/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "smae/rng.hpp"

namespace smae {

Featurization featurization_from_string(const std::string& s) {
  if (s == "raw") return Featurization::raw;
  if (s == "label_onehot") return Featurization::label_onehot;
  if (s == "degree_onehot") return Featurization::degree_onehot;
  throw DataError("unknown featurization: " + s);
}

std::string to_string(Featurization f) {
  switch (f) {
    case Featurization::raw: return "raw";
    case Featurization::label_onehot: return "label_onehot";
    case Featurization::degree_onehot: return "degree_onehot";
  }
  return "?";
}

Graph Graph::build(int n, std::vector<std::pair<int, int>> edge_list, Tensor feats,
                   std::optional<int> label, std::vector<int> node_labels,
                   const std::string& context) {
  if (n < 1) throw DataError(context + ": node count must be >= 1, got " + std::to_string(n));
  Graph g;
  g.node_count = n;
  g.label = label;
  g.node_labels = std::move(node_labels);
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : edge_list) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw DataError(context + ": edge endpoint out of range [0," + std::to_string(n) + "): (" +
                      std::to_string(a) + "," + std::to_string(b) + ")");
    if (a == b) throw DataError(context + ": self-loop at node " + std::to_string(a));
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second)
      throw DataError(context + ": duplicate edge (" + std::to_string(a) + "," +
                      std::to_string(b) + ")");
  }
  g.edges.assign(seen.begin(), seen.end());
  g.adjacency.assign(static_cast<size_t>(n), {});
  for (auto [a, b] : g.edges) {
    g.adjacency[static_cast<size_t>(a)].push_back(b);
    g.adjacency[static_cast<size_t>(b)].push_back(a);
  }
  for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
  if (feats.numel() > 0) {
    if (feats.ndim() != 2 || feats.rows() != n)
      throw DataError(context + ": feature matrix must have one row per node");
    g.features = std::move(feats);
  }
  return g;
}

const std::vector<int>& Graph::neighbors(int i) const {
  if (i < 0 || i >= node_count)
    throw DataError("node index out of range: " + std::to_string(i));
  return adjacency[static_cast<size_t>(i)];
}

namespace {

struct RawRecord {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> node_labels;
  bool has_node_labels = false;
  Tensor features;
  bool has_features = false;
  std::optional<int> label;
};

RawRecord parse_record(const std::string& line, const std::string& context) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    throw DataError(context + ": malformed JSON: " + e.what());
  }
  if (!j.is_object()) throw DataError(context + ": expected a JSON object");
  require_known_keys(j, {"n", "edges", "node_labels", "features", "label"}, context);
  RawRecord r;
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw DataError(context + ": missing integer field \"n\"");
  r.n = j["n"].get<int>();
  if (j.contains("edges")) {
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2)
        throw DataError(context + ": each edge must be a pair [i,j]");
      r.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  }
  if (j.contains("node_labels")) {
    r.has_node_labels = true;
    for (const auto& v : j["node_labels"]) r.node_labels.push_back(v.get<int>());
    if (static_cast<int>(r.node_labels.size()) != r.n)
      throw DataError(context + ": node_labels length must equal n");
  }
  if (j.contains("features")) {
    r.has_features = true;
    const auto& rows = j["features"];
    if (static_cast<int>(rows.size()) != r.n)
      throw DataError(context + ": features row count must equal n");
    int64_t d = -1;
    std::vector<double> flat;
    for (const auto& row : rows) {
      if (d < 0)
        d = static_cast<int64_t>(row.size());
      else if (static_cast<int64_t>(row.size()) != d)
        throw DataError(context + ": inconsistent feature width");
      for (const auto& v : row) flat.push_back(v.get<double>());
    }
    if (d <= 0) throw DataError(context + ": features must be non-empty rows");
    r.features = Tensor::matrix(r.n, d, std::move(flat));
  }
  if (j.contains("label")) r.label = j["label"].get<int>();
  return r;
}

Tensor onehot_rows(const std::vector<int>& indices, int64_t width) {
  Tensor t = Tensor::zeros({static_cast<int64_t>(indices.size()), width});
  for (size_t i = 0; i < indices.size(); ++i) t.at(static_cast<int64_t>(i), indices[i]) = 1.0;
  return t;
}

}  // namespace

GraphCorpus load_corpus(std::istream& in, Featurization featurization, int degree_cap,
                        const std::string& source_name) {
  if (featurization == Featurization::degree_onehot && degree_cap < 0)
    throw DataError("degree_onehot cap must be >= 0");
  std::vector<RawRecord> records;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    records.push_back(parse_record(line, source_name + ":" + std::to_string(line_no)));
  }
  if (records.empty()) throw DataError(source_name + ": empty corpus");

  GraphCorpus corpus;
  corpus.featurization = {featurization, degree_cap};

  // label_onehot width is corpus-wide: max node label + 1.
  int max_node_label = -1;
  if (featurization == Featurization::label_onehot) {
    for (size_t i = 0; i < records.size(); ++i) {
      const auto& r = records[i];
      if (!r.has_node_labels)
        throw DataError(source_name + ": record " + std::to_string(i + 1) +
                        " lacks node_labels required by label_onehot");
      for (int l : r.node_labels) {
        if (l < 0) throw DataError(source_name + ": negative node label");
        max_node_label = std::max(max_node_label, l);
      }
    }
  }

  for (size_t i = 0; i < records.size(); ++i) {
    auto& r = records[i];
    const std::string context = source_name + ": record " + std::to_string(i + 1);
    Tensor feats;
    switch (featurization) {
      case Featurization::raw:
        if (!r.has_features) throw DataError(context + " lacks features required by raw mode");
        feats = std::move(r.features);
        break;
      case Featurization::label_onehot:
        feats = onehot_rows(r.node_labels, max_node_label + 1);
        break;
      case Featurization::degree_onehot:
        feats = Tensor();  // filled below, needs degrees
        break;
    }
    Graph g = Graph::build(r.n, std::move(r.edges), std::move(feats), r.label,
                           r.has_node_labels ? std::move(r.node_labels) : std::vector<int>{},
                           context);
    if (featurization == Featurization::degree_onehot) {
      std::vector<int> buckets(static_cast<size_t>(g.node_count));
      for (int v = 0; v < g.node_count; ++v)
        buckets[static_cast<size_t>(v)] = std::min(g.degree(v), degree_cap);
      g.features = onehot_rows(buckets, degree_cap + 1);
    }
    corpus.graphs.push_back(std::move(g));
  }

  corpus.feature_dim = corpus.graphs.front().feature_dim();
  for (size_t i = 0; i < corpus.graphs.size(); ++i)
    if (corpus.graphs[i].feature_dim() != corpus.feature_dim)
      throw DataError(source_name + ": record " + std::to_string(i + 1) +
                      " feature width differs from the corpus width");

  int max_label = -1;
  bool any_label = false;
  for (const auto& g : corpus.graphs) {
    if (g.label) {
      any_label = true;
      if (*g.label < 0) throw DataError(source_name + ": negative graph label");
      max_label = std::max(max_label, *g.label);
    }
  }
  corpus.class_count = any_label ? max_label + 1 : 0;
  return corpus;
}

GraphCorpus load_corpus(const std::filesystem::path& path, Featurization featurization,
                        int degree_cap) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open corpus file: " + path.string());
  return load_corpus(in, featurization, degree_cap, path.filename().string());
}

std::string corpus_to_json_lines(const GraphCorpus& corpus) {
  std::ostringstream out;
  for (const auto& g : corpus.graphs) {
    json j;
    j["n"] = g.node_count;
    json edges = json::array();
    for (auto [a, b] : g.edges) edges.push_back(json::array({a, b}));
    j["edges"] = std::move(edges);
    if (!g.node_labels.empty()) j["node_labels"] = g.node_labels;
    if (g.features.numel() > 0) {
      json rows = json::array();
      for (int64_t i = 0; i < g.features.rows(); ++i) {
        json row = json::array();
        for (int64_t k = 0; k < g.features.cols(); ++k) row.push_back(g.features.at(i, k));
        rows.push_back(std::move(row));
      }
      j["features"] = std::move(rows);
    }
    if (g.label) j["label"] = *g.label;
    out << j.dump() << "\n";
  }
  return out.str();
}

void save_corpus(const GraphCorpus& corpus, const std::filesystem::path& path) {
  write_text_file(path, corpus_to_json_lines(corpus));
}

namespace {

// Random recursive tree plus a planted 5-node motif wired to a random
// backbone node. Connected by construction.
Graph synth_graph(int base_size, Motif motif, int degree_cap, RngStream& rng, int label) {
  const int motif_size = 5;
  const int n = base_size + motif_size;
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < base_size; ++v) {
    int parent = static_cast<int>(rng.next_below(static_cast<uint64_t>(v)));
    edges.emplace_back(parent, v);
  }
  const int m0 = base_size;  // first motif node
  if (motif == Motif::cycle) {
    for (int k = 0; k < motif_size; ++k) edges.emplace_back(m0 + k, m0 + (k + 1) % motif_size);
  } else {
    for (int a = 0; a < motif_size; ++a)
      for (int b = a + 1; b < motif_size; ++b) edges.emplace_back(m0 + a, m0 + b);
  }
  int anchor = static_cast<int>(rng.next_below(static_cast<uint64_t>(base_size)));
  edges.emplace_back(anchor, m0);

  Graph g = Graph::build(n, std::move(edges), Tensor(), label, {}, "synthetic");
  std::vector<int> buckets(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) buckets[static_cast<size_t>(v)] = std::min(g.degree(v), degree_cap);
  Tensor feats = Tensor::zeros({n, static_cast<int64_t>(degree_cap) + 1});
  for (int v = 0; v < n; ++v) feats.at(v, buckets[static_cast<size_t>(v)]) = 1.0;
  g.features = std::move(feats);
  return g;
}

}  // namespace

GraphCorpus generate_synthetic_corpus(const SyntheticSpec& spec, uint64_t seed) {
  if (spec.graphs_per_class < 1) throw DataError("graphs_per_class must be >= 1");
  if (spec.base_size < 6) throw DataError("base_size must be >= 6");
  if (spec.degree_cap < 1) throw DataError("degree_cap must be >= 1");
  GraphCorpus corpus;
  corpus.featurization = {Featurization::degree_onehot, spec.degree_cap};
  const Motif class0 = spec.motif;
  const Motif class1 = spec.motif == Motif::cycle ? Motif::clique : Motif::cycle;
  for (int cls = 0; cls < 2; ++cls) {
    for (int i = 0; i < spec.graphs_per_class; ++i) {
      RngStream rng = derive_stream(seed, "synthetic", static_cast<uint64_t>(i),
                                    static_cast<uint64_t>(cls));
      corpus.graphs.push_back(
          synth_graph(spec.base_size, cls == 0 ? class0 : class1, spec.degree_cap, rng, cls));
    }
  }
  corpus.feature_dim = spec.degree_cap + 1;
  corpus.class_count = 2;
  return corpus;
}

}  // namespace smae
