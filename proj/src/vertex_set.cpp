#include "soltes/vertex_set.hpp"

#include <algorithm>

namespace soltes {

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

std::size_t VertexSet::size() const {
  std::size_t total = 0;
  for (Word w : words_) total += std::popcount(w);
  return total;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

bool VertexSet::intersects(const VertexSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

std::vector<Vertex> VertexSet::elements() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

namespace {

// True if `s` has a member strictly greater than x.
bool has_member_above(const VertexSet& s, Vertex x) {
  auto words = s.words();
  std::size_t w = x / VertexSet::kWordBits;
  std::size_t bit = x % VertexSet::kWordBits;
  VertexSet::Word above = bit + 1 < VertexSet::kWordBits ? words[w] >> (bit + 1) : 0;
  if (above) return true;
  for (std::size_t i = w + 1; i < words.size(); ++i) {
    if (words[i]) return true;
  }
  return false;
}

}  // namespace

bool lex_less(const VertexSet& a, const VertexSet& b) {
  auto wa = a.words();
  auto wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i) {
    VertexSet::Word diff = wa[i] ^ wb[i];
    if (diff == 0) continue;
    auto x = static_cast<Vertex>(i * VertexSet::kWordBits + std::countr_zero(diff));
    // Sequences agree below x; exactly one of them continues with x.
    if (a.contains(x)) return has_member_above(b, x);
    return !has_member_above(a, x);
  }
  return false;
}

}  // namespace soltes
