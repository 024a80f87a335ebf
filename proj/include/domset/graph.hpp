#pragma once

// Simple undirected graphs stored as closed-neighbourhood bitmask rows.
//
// Row v of a Graph is N[v] = {v} u neighbours(v), i.e. row v of the adjacency
// matrix plus the identity. A set S dominates iff the union of its rows is the
// whole vertex set, equivalently iff no row is zero on every column of S.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace domset {

inline constexpr std::size_t kMaxVertices = 4096;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

using Edge = std::pair<std::uint32_t, std::uint32_t>;

/// Bitmask over [0, n).
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(std::size_t n);
  VertexSet(std::size_t n, std::span<const std::uint32_t> members);
  VertexSet(std::size_t n, std::span<const std::uint64_t> words);

  static VertexSet full(std::size_t n);

  std::size_t universe() const { return n_; }
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  bool contains(std::uint32_t v) const;
  void insert(std::uint32_t v);
  void erase(std::uint32_t v);

  bool is_subset_of(const VertexSet& other) const;
  std::vector<std::uint32_t> members() const;

  std::span<const std::uint64_t> words() const { return bits_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
  void check(std::uint32_t v) const;

  std::size_t n_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct RowZeroProfile {
  std::vector<std::size_t> zeros_per_row;
  std::size_t z_max = 0;
  std::uint32_t argmax = 0;  // smallest index attaining z_max
};

/// Immutable graph. Safe to share read-only between threads.
class Graph {
public:
  /// Throws std::invalid_argument on n outside [1, kMaxVertices], self-loops,
  /// or endpoints >= n. Duplicate pairs collapse to one edge.
  static Graph build(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return n_; }
  std::size_t words_per_row() const { return words_; }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const std::uint64_t> row(std::uint32_t v) const {
    return {rows_.data() + static_cast<std::size_t>(v) * words_, words_};
  }
  /// Column-major copy of the rows: word w of row v sits at columns()[w * order() + v].
  std::span<const std::uint64_t> columns() const { return cols_; }
  /// Mask with the n valid vertex bits set.
  std::span<const std::uint64_t> full_mask() const { return full_; }

  std::size_t degree(std::uint32_t v) const;
  bool adjacent(std::uint32_t u, std::uint32_t v) const;

  /// Sorted (u < v) lexicographic edge list.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

private:
  Graph() = default;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<std::uint64_t> cols_;
  std::vector<std::uint64_t> full_;
};

VertexSet closed_neighborhood(const Graph& g, std::uint32_t v);
bool is_dominating(const Graph& g, const VertexSet& s);
RowZeroProfile row_zero_profile(const Graph& g);

// Edge-list text format: "n m" header, then m lines "u v" (0-indexed).
// Lines starting with '#' are ignored. Serialisation is canonical: edges sorted, u < v.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);

}  // namespace domset
