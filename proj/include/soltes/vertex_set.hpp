#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace soltes {

using Vertex = std::uint32_t;

/// Fixed-width bit set over the vertex range [0, universe).
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_(word_count(universe), 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  static std::size_t word_count(std::size_t universe) {
    return (universe + kWordBits - 1) / kWordBits;
  }

  std::size_t universe() const { return universe_; }
  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  bool contains(Vertex v) const {
    return v < universe_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U);
  }
  void insert(Vertex v) { words_[v / kWordBits] |= Word{1} << (v % kWordBits); }
  void erase(Vertex v) { words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits)); }

  std::size_t size() const;
  bool empty() const;
  bool intersects(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);

  /// Members in ascending order.
  std::vector<Vertex> elements() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits) {
        f(static_cast<Vertex>(w * kWordBits + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) = default;

  /// Lexicographic order of the ascending element sequences.
  friend bool lex_less(const VertexSet& a, const VertexSet& b);

 private:
  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace soltes
