#include "boolcd/bool_tensor.hpp"

#include "boolcd/detail/bits.hpp"

namespace boolcd {

std::size_t BoolTensor3::ones_count() const {
  return detail::popcount_words({words_.data(), words_.size()});
}

}  // namespace boolcd
