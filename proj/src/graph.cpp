#include "domset/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "domset/kernels.hpp"

namespace domset {

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(std::size_t n) : n_(n), bits_(words_for(n), 0) {}

VertexSet::VertexSet(std::size_t n, std::span<const std::uint32_t> members) : VertexSet(n) {
  for (std::uint32_t v : members) insert(v);
}

VertexSet::VertexSet(std::size_t n, std::span<const std::uint64_t> words) : VertexSet(n) {
  if (words.size() != bits_.size()) throw std::invalid_argument("VertexSet: word count mismatch");
  std::copy(words.begin(), words.end(), bits_.begin());
  if (n % kWordBits != 0 && !bits_.empty()) {
    if ((bits_.back() >> (n % kWordBits)) != 0) {
      throw std::invalid_argument("VertexSet: bits set at or beyond n");
    }
  }
}

VertexSet VertexSet::full(std::size_t n) {
  VertexSet s(n);
  for (std::size_t v = 0; v < n; ++v) s.insert(static_cast<std::uint32_t>(v));
  return s;
}

std::size_t VertexSet::size() const {
  std::size_t total = 0;
  for (std::uint64_t w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

void VertexSet::check(std::uint32_t v) const {
  if (v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for n=" +
                            std::to_string(n_));
  }
}

bool VertexSet::contains(std::uint32_t v) const {
  check(v);
  return (bits_[v / kWordBits] >> (v % kWordBits)) & 1u;
}

void VertexSet::insert(std::uint32_t v) {
  check(v);
  bits_[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
}

void VertexSet::erase(std::uint32_t v) {
  check(v);
  bits_[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  if (other.n_ != n_) return false;
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    if ((bits_[w] & ~other.bits_[w]) != 0) return false;
  }
  return true;
}

std::vector<std::uint32_t> VertexSet::members() const {
  std::vector<std::uint32_t> out;
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    std::uint64_t word = bits_[w];
    while (word != 0) {
      out.push_back(static_cast<std::uint32_t>(w * kWordBits + std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Graph

Graph Graph::build(std::size_t n, std::span<const Edge> edges) {
  if (n < 1 || n > kMaxVertices) {
    throw std::invalid_argument("vertex count " + std::to_string(n) + " outside [1, " +
                                std::to_string(kMaxVertices) + "]");
  }
  Graph g;
  g.n_ = n;
  g.words_ = words_for(n);
  g.rows_.assign(n * g.words_, 0);
  auto set_bit = [&](std::size_t r, std::size_t c) {
    g.rows_[r * g.words_ + c / kWordBits] |= std::uint64_t{1} << (c % kWordBits);
  };
  for (std::size_t v = 0; v < n; ++v) set_bit(v, v);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") references a vertex >= n=" + std::to_string(n));
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    set_bit(u, v);
    set_bit(v, u);
  }

  g.cols_.assign(n * g.words_, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w = 0; w < g.words_; ++w) g.cols_[w * n + v] = g.rows_[v * g.words_ + w];
  }
  g.full_.assign(g.words_, ~std::uint64_t{0});
  if (n % kWordBits != 0) g.full_.back() = (std::uint64_t{1} << (n % kWordBits)) - 1;

  std::size_t degree_sum = 0;
  for (std::size_t v = 0; v < n; ++v) degree_sum += g.degree(static_cast<std::uint32_t>(v));
  g.edge_count_ = degree_sum / 2;
  return g;
}

std::size_t Graph::degree(std::uint32_t v) const {
  std::size_t closed = 0;
  for (std::uint64_t w : row(v)) closed += static_cast<std::size_t>(std::popcount(w));
  return closed - 1;
}

bool Graph::adjacent(std::uint32_t u, std::uint32_t v) const {
  if (u >= n_ || v >= n_) throw std::out_of_range("vertex out of range");
  if (u == v) return false;
  return (row(u)[v / kWordBits] >> (v % kWordBits)) & 1u;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::uint32_t u = 0; u < n_; ++u) {
    const auto r = row(u);
    for (std::size_t w = (u + 1) / kWordBits; w < words_; ++w) {
      std::uint64_t word = r[w];
      if (w == (u + 1) / kWordBits) word &= ~std::uint64_t{0} << ((u + 1) % kWordBits);
      while (word != 0) {
        out.emplace_back(u, static_cast<std::uint32_t>(w * kWordBits + std::countr_zero(word)));
        word &= word - 1;
      }
    }
  }
  return out;
}

VertexSet closed_neighborhood(const Graph& g, std::uint32_t v) {
  if (v >= g.order()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for n=" +
                            std::to_string(g.order()));
  }
  return VertexSet(g.order(), g.row(v));
}

bool is_dominating(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw std::invalid_argument("vertex set universe mismatch");
  const auto& k = kernels::active();
  std::vector<std::uint64_t> covered(g.words_per_row(), 0);
  for (std::uint32_t v : s.members()) k.or_accumulate(covered.data(), g.row(v).data(), covered.size());
  return k.popcount_andnot(g.full_mask().data(), covered.data(), covered.size()) == 0;
}

RowZeroProfile row_zero_profile(const Graph& g) {
  RowZeroProfile p;
  p.zeros_per_row.resize(g.order());
  for (std::uint32_t v = 0; v < g.order(); ++v) {
    p.zeros_per_row[v] = g.order() - 1 - g.degree(v);
    if (p.zeros_per_row[v] > p.z_max) {
      p.z_max = p.zeros_per_row[v];
      p.argmax = v;
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// Edge-list I/O

namespace {

bool next_content_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    return true;
  }
  return false;
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  throw std::runtime_error("edge list line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_content_line(in, line, line_no)) parse_fail(line_no, "missing 'n m' header");
  long long n = -1, m = -1;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra)) parse_fail(line_no, "expected 'n m'");
  }
  if (n < 1 || m < 0) parse_fail(line_no, "invalid header values");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_content_line(in, line, line_no)) {
      parse_fail(line_no, "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    }
    std::istringstream es(line);
    long long u = -1, v = -1;
    std::string extra;
    if (!(es >> u >> v) || (es >> extra)) parse_fail(line_no, "expected 'u v'");
    if (u < 0 || v < 0 || u >= n || v >= n) parse_fail(line_no, "vertex index out of range");
    edges.emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
  }
  if (next_content_line(in, line, line_no)) parse_fail(line_no, "trailing content after edges");
  return Graph::build(static_cast<std::size_t>(n), edges);
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
  return parse_edge_list(in);
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write graph file '" + path + "'");
  write_edge_list(out, g);
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace domset
