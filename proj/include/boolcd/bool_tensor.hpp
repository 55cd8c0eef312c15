#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "boolcd/errors.hpp"

namespace boolcd {

/// Dense bit-packed 3-order binary tensor over objects x features x time,
/// cells ordered (o, f, t) with o fastest. Each (f, t) fiber of object bits is
/// stored in its own word run so reconstruction and error kernels work on
/// whole words; padding bits past dim_o() stay zero.
class BoolTensor3 {
 public:
  BoolTensor3() = default;

  BoolTensor3(std::size_t dim_o, std::size_t dim_f, std::size_t dim_t)
      : dim_o_(dim_o),
        dim_f_(dim_f),
        dim_t_(dim_t),
        wpf_((dim_o + 63) / 64),
        words_(dim_f * dim_t * wpf_, 0) {}

  std::size_t dim_o() const { return dim_o_; }
  std::size_t dim_f() const { return dim_f_; }
  std::size_t dim_t() const { return dim_t_; }
  std::size_t cell_count() const { return dim_o_ * dim_f_ * dim_t_; }
  std::size_t words_per_fiber() const { return wpf_; }
  std::size_t word_count() const { return words_.size(); }

  bool get(std::size_t o, std::size_t f, std::size_t t) const {
    return (words_[fiber_offset(f, t) + (o >> 6)] >> (o & 63)) & 1u;
  }

  void set(std::size_t o, std::size_t f, std::size_t t, bool v) {
    std::uint64_t& w = words_[fiber_offset(f, t) + (o >> 6)];
    const std::uint64_t bit = std::uint64_t{1} << (o & 63);
    if (v) {
      w |= bit;
    } else {
      w &= ~bit;
    }
  }

  /// The object fiber at (f, t) as packed words.
  std::span<const std::uint64_t> fiber(std::size_t f, std::size_t t) const {
    return {words_.data() + fiber_offset(f, t), wpf_};
  }

  std::span<std::uint64_t> fiber_mut(std::size_t f, std::size_t t) {
    return {words_.data() + fiber_offset(f, t), wpf_};
  }

  std::span<const std::uint64_t> all_words() const { return {words_.data(), words_.size()}; }

  std::size_t ones_count() const;

  bool same_dims(const BoolTensor3& other) const {
    return dim_o_ == other.dim_o_ && dim_f_ == other.dim_f_ && dim_t_ == other.dim_t_;
  }

  bool operator==(const BoolTensor3&) const = default;

 private:
  std::size_t fiber_offset(std::size_t f, std::size_t t) const {
    return (t * dim_f_ + f) * wpf_;
  }

  std::size_t dim_o_ = 0;
  std::size_t dim_f_ = 0;
  std::size_t dim_t_ = 0;
  std::size_t wpf_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace boolcd
