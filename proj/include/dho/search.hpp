#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dho/dho.hpp"

namespace dho {

enum class SearchMode { DualArc, DistanceClique, Existence };

std::string_view to_string(SearchMode mode);

struct SearchOptions {
  std::optional<std::size_t> size_cap;  // stop a branch once this size is reached
  unsigned workers = 1;
  std::uint64_t node_budget = 1'000'000'000;
  std::uint64_t generator_cap = kDefaultGeneratorCap;
};

// Generators of a space with their pairwise intersection data.
struct GeneratorGraph {
  GeneratorSet set;
  std::vector<std::vector<int>> meet_dim;    // dim(G_i ∩ G_j); diagonal = rank
  std::vector<std::vector<int>> meet_point;  // id of G_i ∩ G_j when 1-dimensional, else -1
};

GeneratorGraph build_generator_graph(const PolarSpace& space, std::uint64_t cap = kDefaultGeneratorCap);

struct SearchResult {
  PolarSpace space;
  SearchMode mode = SearchMode::DualArc;
  int target_distance = 0;         // clique mode
  std::size_t target_size = 0;     // existence mode
  std::size_t max_size_found = 0;
  std::vector<std::size_t> witness_indices;  // into the generator list
  std::vector<Subspace> witness;
  bool exhaustive = false;
  bool found = false;              // existence mode: a witness of the target size exists
  std::uint64_t nodes = 0;
  double seconds = 0.0;
  std::size_t generators = 0;
  std::vector<std::string> certificate;  // pruning rules the completeness claim relies on
  std::optional<Rational> min_vanhove_sum;  // over every arc explored (dual-arc modes)
};

// Maximum dual arc of generators.
SearchResult max_dual_arc(const PolarSpace& space, const SearchOptions& options = {});
SearchResult max_dual_arc(const GeneratorGraph& graph, const SearchOptions& options = {});

// Early-exit search for a dual arc of exactly k generators.
SearchResult exists_dual_arc_of_size(const PolarSpace& space, std::size_t k, const SearchOptions& options = {});
SearchResult exists_dual_arc_of_size(const GeneratorGraph& graph, std::size_t k, const SearchOptions& options = {});

// Maximum set of generators pairwise at dual polar distance d.
SearchResult max_distance_clique(const PolarSpace& space, int d, const SearchOptions& options = {});
SearchResult max_distance_clique(const GeneratorGraph& graph, int d, const SearchOptions& options = {});

}  // namespace dho
