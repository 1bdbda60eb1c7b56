#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "smae/tensor.hpp"
#include "smae/util.hpp"

namespace smae {

enum class Featurization { raw, label_onehot, degree_onehot };

Featurization featurization_from_string(const std::string& s);
std::string to_string(Featurization f);

struct FeaturizationMeta {
  Featurization kind = Featurization::raw;
  int degree_cap = 64;  // D_max for degree_onehot; bucket index = min(degree, D_max)
};

/// Undirected simple graph. Edges are stored with i < j, deduplicated, no
/// self-loops; adjacency lists are sorted ascending. Immutable after load.
struct Graph {
  int node_count = 0;
  std::vector<std::pair<int, int>> edges;
  Tensor features;  // [n, d]
  std::optional<int> label;
  std::vector<int> node_labels;  // kept when the source record carried them

  std::vector<std::vector<int>> adjacency;

  /// Validates endpoints, rejects self-loops and duplicates, builds sorted
  /// adjacency. `context` names the record in error messages.
  static Graph build(int n, std::vector<std::pair<int, int>> edge_list, Tensor features,
                     std::optional<int> label, std::vector<int> node_labels,
                     const std::string& context);

  int degree(int i) const { return static_cast<int>(adjacency[static_cast<size_t>(i)].size()); }
  const std::vector<int>& neighbors(int i) const;
  int feature_dim() const { return static_cast<int>(features.ndim() == 2 ? features.cols() : 0); }
};

struct GraphCorpus {
  std::vector<Graph> graphs;
  int feature_dim = 0;
  int class_count = 0;  // 0 when unlabeled
  FeaturizationMeta featurization;

  bool labeled() const { return class_count > 0; }
};

/// Loads a JSON-lines corpus file, one graph object per line:
///   {"n": int, "edges": [[i,j],...], "node_labels": [...], "features": [[...]], "label": int}
/// and featurizes per `featurization`. Input order is preserved.
GraphCorpus load_corpus(const std::filesystem::path& path, Featurization featurization,
                        int degree_cap = 64);
GraphCorpus load_corpus(std::istream& in, Featurization featurization, int degree_cap,
                        const std::string& source_name);

/// Writes the corpus back as JSON lines (edges with i<j, features always
/// materialized). load(save(c)) round-trips bit-exactly.
void save_corpus(const GraphCorpus& corpus, const std::filesystem::path& path);
std::string corpus_to_json_lines(const GraphCorpus& corpus);

enum class Motif { cycle, clique };

struct SyntheticSpec {
  int graphs_per_class = 100;
  int base_size = 12;       // backbone tree size, >= 6
  Motif motif = Motif::cycle;  // motif planted for class 0; class 1 gets the other one
  int degree_cap = 16;      // featurization cap for the generated corpus
};

/// Two-class corpus: random recursive tree backbone plus a planted 5-node
/// motif (class 0 cycle, class 1 clique under the default spec). Every graph
/// is connected. Deterministic given the seed. Features are degree one-hot.
GraphCorpus generate_synthetic_corpus(const SyntheticSpec& spec, uint64_t seed);

}  // namespace smae
