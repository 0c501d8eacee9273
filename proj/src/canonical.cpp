#include "soltes/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "soltes/error.hpp"

namespace soltes {

std::string CanonicalCode::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 15]);
  }
  return out;
}

std::size_t CanonicalCodeHash::operator()(const CanonicalCode& c) const noexcept {
  // FNV-1a
  std::uint64_t h = 1469598103934665603ULL;
  for (std::uint8_t b : c.bytes) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

namespace {

using Word = std::uint64_t;

class Canonicalizer {
 public:
  Canonicalizer(std::size_t n, std::size_t k, std::span<const std::vector<Vertex>> edges)
      : n_(n), k_(k), m_(edges.size()), words_(VertexSet::word_count(n)), members_(m_ * k) {
    std::vector<std::size_t> degree(n, 0);
    for (std::size_t e = 0; e < m_; ++e) {
      if (edges[e].size() != k) throw Error(ErrorCode::kInvalidHypergraph, "non-uniform edge");
      for (std::size_t j = 0; j < k; ++j) {
        Vertex v = edges[e][j];
        if (v >= n) throw Error(ErrorCode::kInvalidHypergraph, "vertex out of range");
        members_[e * k + j] = v;
        ++degree[v];
      }
    }
    offset_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) offset_[v + 1] = offset_[v] + degree[v];
    incident_.resize(offset_[n]);
    std::vector<std::size_t> fill(offset_.begin(), offset_.end() - 1);
    for (std::size_t e = 0; e < m_; ++e) {
      for (std::size_t j = 0; j < k; ++j) incident_[fill[members_[e * k + j]]++] = static_cast<std::uint32_t>(e);
    }
    edge_sig_.resize(m_ * k);
    edge_order_.resize(m_);
    edge_color_.resize(m_);
    vertex_key_.resize(incident_.size());
    vertex_order_.resize(n);
    scratch_color_.resize(n);
  }

  CanonicalLabeling run() {
    std::vector<std::uint32_t> color(n_, 0);
    std::uint32_t cells = n_ > 0 ? 1 : 0;
    search(color, cells);

    CanonicalLabeling out;
    out.position = best_position_;
    out.top_edge = best_top_edge_;
    out.code.bytes.reserve(best_code_.size() * sizeof(Word));
    for (Word w : best_code_) {
      for (std::size_t b = 0; b < sizeof(Word); ++b) out.code.bytes.push_back(static_cast<std::uint8_t>(w >> (8 * b)));
    }
    return out;
  }

 private:
  // Refines `color` (ranks 0..cells-1) until vertex and edge colour classes
  // are stable.
  void refine(std::vector<std::uint32_t>& color, std::uint32_t& cells) {
    while (cells < n_) {
      for (std::size_t e = 0; e < m_; ++e) {
        auto first = edge_sig_.begin() + static_cast<std::ptrdiff_t>(e * k_);
        for (std::size_t j = 0; j < k_; ++j) first[static_cast<std::ptrdiff_t>(j)] = color[members_[e * k_ + j]];
        std::sort(first, first + static_cast<std::ptrdiff_t>(k_));
      }
      std::iota(edge_order_.begin(), edge_order_.end(), 0U);
      auto sig_less = [&](std::uint32_t a, std::uint32_t b) {
        return std::lexicographical_compare(edge_sig_.begin() + a * k_, edge_sig_.begin() + (a + 1) * k_,
                                            edge_sig_.begin() + b * k_, edge_sig_.begin() + (b + 1) * k_);
      };
      std::sort(edge_order_.begin(), edge_order_.end(), sig_less);
      for (std::size_t i = 0; i < m_; ++i) {
        edge_color_[edge_order_[i]] =
            i == 0 ? 0 : edge_color_[edge_order_[i - 1]] + (sig_less(edge_order_[i - 1], edge_order_[i]) ? 1 : 0);
      }

      for (std::size_t v = 0; v < n_; ++v) {
        for (std::size_t j = offset_[v]; j < offset_[v + 1]; ++j) vertex_key_[j] = edge_color_[incident_[j]];
        std::sort(vertex_key_.begin() + static_cast<std::ptrdiff_t>(offset_[v]),
                  vertex_key_.begin() + static_cast<std::ptrdiff_t>(offset_[v + 1]));
      }
      std::iota(vertex_order_.begin(), vertex_order_.end(), 0U);
      auto key_less = [&](std::uint32_t a, std::uint32_t b) {
        if (color[a] != color[b]) return color[a] < color[b];
        return std::lexicographical_compare(vertex_key_.begin() + offset_[a], vertex_key_.begin() + offset_[a + 1],
                                            vertex_key_.begin() + offset_[b], vertex_key_.begin() + offset_[b + 1]);
      };
      std::sort(vertex_order_.begin(), vertex_order_.end(), key_less);
      std::uint32_t next = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        if (i > 0 && key_less(vertex_order_[i - 1], vertex_order_[i])) ++next;
        scratch_color_[vertex_order_[i]] = next;
      }
      const std::uint32_t new_cells = n_ > 0 ? next + 1 : 0;
      if (new_cells == cells) break;
      color.swap(scratch_color_);
      cells = new_cells;
    }
  }

  void search(std::vector<std::uint32_t> color, std::uint32_t cells) {
    refine(color, cells);
    if (cells == n_) {
      leaf(color);
      return;
    }
    // First non-singleton cell.
    std::vector<std::uint32_t> count(cells, 0);
    for (auto c : color) ++count[c];
    std::uint32_t target = 0;
    while (count[target] < 2) ++target;

    std::vector<Vertex> explored;
    for (Vertex w = 0; w < n_; ++w) {
      if (color[w] != target) continue;
      if (!explored.empty() && equivalent_to_explored(w, explored)) continue;
      explored.push_back(w);
      std::vector<std::uint32_t> child = color;
      for (Vertex v = 0; v < n_; ++v) {
        if (child[v] > target || (child[v] == target && v != w)) ++child[v];
      }
      path_.push_back(w);
      search(std::move(child), cells + 1);
      path_.pop_back();
    }
  }

  // Whether w lies in the orbit of an explored vertex under the automorphisms
  // found so far that fix the current path pointwise.
  bool equivalent_to_explored(Vertex w, const std::vector<Vertex>& explored) {
    std::vector<Vertex> parent(n_);
    std::iota(parent.begin(), parent.end(), 0U);
    auto find = [&](Vertex x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const auto& g : generators_) {
      bool fixes_path = std::all_of(path_.begin(), path_.end(), [&](Vertex p) { return g[p] == p; });
      if (!fixes_path) continue;
      any = true;
      for (Vertex v = 0; v < n_; ++v) parent[find(v)] = find(g[v]);
    }
    if (!any) return false;
    const Vertex root = find(w);
    return std::any_of(explored.begin(), explored.end(), [&](Vertex u) { return find(u) == root; });
  }

  void leaf(const std::vector<std::uint32_t>& position) {
    std::vector<std::pair<std::vector<Word>, std::size_t>> masks(m_);
    for (std::size_t e = 0; e < m_; ++e) {
      masks[e].first.assign(words_, 0);
      masks[e].second = e;
      for (std::size_t j = 0; j < k_; ++j) {
        Vertex p = position[members_[e * k_ + j]];
        masks[e].first[p / 64] |= Word{1} << (p % 64);
      }
    }
    std::sort(masks.begin(), masks.end());
    std::vector<Word> code{n_, k_, m_};
    code.reserve(3 + m_ * words_);
    for (const auto& [mask, e] : masks) code.insert(code.end(), mask.begin(), mask.end());

    if (best_code_.empty() || code < best_code_) {
      best_code_ = std::move(code);
      best_position_.assign(position.begin(), position.end());
      best_top_edge_ = m_ > 0 ? masks.back().second : 0;
      return;
    }
    if (code == best_code_) {
      // best^{-1} o current maps each vertex to the best-leaf vertex with the same label.
      std::vector<Vertex> inverse_best(n_);
      for (Vertex v = 0; v < n_; ++v) inverse_best[best_position_[v]] = v;
      std::vector<Vertex> g(n_);
      bool identity = true;
      for (Vertex v = 0; v < n_; ++v) {
        g[v] = inverse_best[position[v]];
        identity = identity && g[v] == v;
      }
      if (!identity) generators_.push_back(std::move(g));
    }
  }

  std::size_t n_;
  std::size_t k_;
  std::size_t m_;
  std::size_t words_;
  std::vector<Vertex> members_;           // m x k
  std::vector<std::size_t> offset_;       // n + 1
  std::vector<std::uint32_t> incident_;   // grouped by vertex

  std::vector<std::uint32_t> edge_sig_;
  std::vector<std::uint32_t> edge_order_;
  std::vector<std::uint32_t> edge_color_;
  std::vector<std::uint32_t> vertex_key_;
  std::vector<std::uint32_t> vertex_order_;
  std::vector<std::uint32_t> scratch_color_;

  std::vector<Vertex> path_;
  std::vector<std::vector<Vertex>> generators_;
  std::vector<Word> best_code_;
  std::vector<Vertex> best_position_;
  std::size_t best_top_edge_ = 0;
};

}  // namespace

CanonicalLabeling canonical_labeling(std::size_t n, std::size_t k,
                                     std::span<const std::vector<Vertex>> edges) {
  return Canonicalizer(n, k, edges).run();
}

CanonicalLabeling canonical_labeling(const Hypergraph& h) {
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(h.size());
  for (const auto& e : h.edges()) edges.push_back(e.elements());
  return canonical_labeling(h.order(), h.uniformity(), edges);
}

CanonicalCode canonical_code(const Hypergraph& h) { return canonical_labeling(h).code; }

Hypergraph relabel(const Hypergraph& h, std::span<const Vertex> perm) {
  std::vector<VertexSet> edges;
  edges.reserve(h.size());
  for (const auto& e : h.edges()) {
    VertexSet moved(h.order());
    e.for_each([&](Vertex v) { moved.insert(perm[v]); });
    edges.push_back(std::move(moved));
  }
  return Hypergraph(h.order(), h.uniformity(), std::move(edges));
}

Hypergraph canonical_form(const Hypergraph& h) {
  return relabel(h, canonical_labeling(h).position);
}

}  // namespace soltes
