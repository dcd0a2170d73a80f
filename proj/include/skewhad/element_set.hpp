#pragma once

// Bit-packed subsets of GF(3^m), indexed by element index. Translates,
// intersections and popcounts are the inner loop of every difference count,
// so the word array is exposed to the scan code.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "skewhad/field.hpp"

namespace skewhad {

class ElementSet {
 public:
  explicit ElementSet(const FieldCtx& ctx)
      : ctx_(&ctx), words_((ctx.q() + 63) / 64, 0) {}

  const FieldCtx& ctx() const { return *ctx_; }
  std::uint32_t universe() const { return ctx_->q(); }

  bool contains(Felt a) const { return (words_[a >> 6] >> (a & 63)) & 1u; }
  void insert(Felt a) { words_[a >> 6] |= std::uint64_t{1} << (a & 63); }
  void erase(Felt a) { words_[a >> 6] &= ~(std::uint64_t{1} << (a & 63)); }

  std::uint32_t cardinality() const {
    std::uint32_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::uint32_t>(std::popcount(w));
    return n;
  }

  // {d + g : d in D}
  ElementSet translate(Felt g) const {
    ElementSet r(*ctx_);
    for_each([&](Felt d) { r.insert(ctx_->add(d, g)); });
    return r;
  }

  // {-d : d in D}
  ElementSet negated() const {
    ElementSet r(*ctx_);
    for_each([&](Felt d) { r.insert(ctx_->neg(d)); });
    return r;
  }

  ElementSet intersect(const ElementSet& other) const {
    ElementSet r(*ctx_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & other.words_[i];
    return r;
  }

  std::uint32_t intersect_count(const ElementSet& other) const {
    std::uint32_t n = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      n += static_cast<std::uint32_t>(std::popcount(words_[i] & other.words_[i]));
    return n;
  }

  bool disjoint_with(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return false;
    return true;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        const int b = std::countr_zero(w);
        fn(static_cast<Felt>((wi << 6) + static_cast<std::size_t>(b)));
        w &= w - 1;
      }
    }
  }

  std::vector<Felt> to_sorted_indices() const {
    std::vector<Felt> v;
    v.reserve(cardinality());
    for_each([&](Felt d) { v.push_back(d); });
    return v;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& words() { return words_; }

  bool operator==(const ElementSet& other) const { return words_ == other.words_; }

 private:
  const FieldCtx* ctx_;
  std::vector<std::uint64_t> words_;
};

}  // namespace skewhad
