#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace pdpolar {

// Set of channel indices over a fixed universe [0, n). Backed by 64-bit
// words so that the set algebra on million-index tables stays cheap.
class IndexSet {
 public:
  IndexSet() = default;

  explicit IndexSet(std::size_t universe)
      : n_(universe), words_((universe + 63) / 64, 0) {}

  static IndexSet full(std::size_t universe) {
    IndexSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  static IndexSet of(std::size_t universe,
                     std::initializer_list<std::uint32_t> indices) {
    IndexSet s(universe);
    for (auto i : indices) s.insert(i);
    return s;
  }

  std::size_t universe() const { return n_; }

  bool contains(std::size_t i) const {
    return i < n_ && (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void insert(std::size_t i) {
    if (i >= n_) throw std::out_of_range("IndexSet: index outside universe");
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }

  void erase(std::size_t i) {
    if (i >= n_) throw std::out_of_range("IndexSet: index outside universe");
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  IndexSet operator&(const IndexSet& o) const {
    IndexSet r = compat(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      r.words_[i] = words_[i] & o.words_[i];
    return r;
  }

  IndexSet operator|(const IndexSet& o) const {
    IndexSet r = compat(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      r.words_[i] = words_[i] | o.words_[i];
    return r;
  }

  // Set difference: elements of *this not in o.
  IndexSet operator-(const IndexSet& o) const {
    IndexSet r = compat(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      r.words_[i] = words_[i] & ~o.words_[i];
    return r;
  }

  IndexSet complement() const {
    IndexSet r(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    r.trim();
    return r;
  }

  bool is_subset_of(const IndexSet& o) const {
    require_same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool intersects(const IndexSet& o) const {
    require_same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool operator==(const IndexSet& o) const {
    return n_ == o.n_ && words_ == o.words_;
  }

  std::vector<std::uint32_t> to_indices() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        const int b = std::countr_zero(w);
        f(wi * 64 + static_cast<std::size_t>(b));
        w &= w - 1;
      }
    }
  }

 private:
  IndexSet compat(const IndexSet& o) const {
    require_same_universe(o);
    return IndexSet(n_);
  }

  void require_same_universe(const IndexSet& o) const {
    if (n_ != o.n_)
      throw std::invalid_argument("IndexSet: universe size mismatch");
  }

  void trim() {
    if (n_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace pdpolar
