#include "quatseq/sequence.hpp"

#include <stdexcept>
#include <string>

namespace quatseq {

UnitQuat QuatSequence::at_periodic(std::int64_t n) const {
  const auto len = static_cast<std::int64_t>(elems_.size());
  if (len == 0) throw std::out_of_range("empty sequence");
  return elems_[static_cast<std::size_t>(((n % len) + len) % len)];
}

std::size_t product(std::span<const std::size_t> dims) {
  std::size_t p = 1;
  for (auto d : dims) p *= d;
  return p;
}

std::vector<std::size_t> row_major_strides(std::span<const std::size_t> dims) {
  std::vector<std::size_t> strides(dims.size(), 1);
  for (std::size_t a = dims.size(); a-- > 1;) strides[a - 1] = strides[a] * dims[a];
  return strides;
}

QuatArray::QuatArray(std::vector<std::size_t> dims, std::vector<UnitQuat> elems)
    : dims_(std::move(dims)), elems_(std::move(elems)) {
  if (dims_.empty()) throw std::invalid_argument("array needs at least one dimension");
  for (auto d : dims_) {
    if (d == 0) throw std::invalid_argument("array dimensions must be positive");
  }
  if (product(dims_) != elems_.size()) {
    throw std::invalid_argument("array holds " + std::to_string(elems_.size()) +
                                " elements but dims multiply to " +
                                std::to_string(product(dims_)));
  }
  strides_ = row_major_strides(dims_);
}

QuatArray QuatArray::filled(std::vector<std::size_t> dims, UnitQuat value) {
  const auto n = product(dims);
  return QuatArray(std::move(dims), std::vector<UnitQuat>(n, value));
}

QuatArray QuatArray::from_sequence(const QuatSequence& seq) {
  return QuatArray({seq.size()}, std::vector<UnitQuat>(seq.begin(), seq.end()));
}

std::size_t QuatArray::flat_index(std::span<const std::size_t> index) const {
  if (index.size() != dims_.size()) throw std::invalid_argument("index arity mismatch");
  std::size_t flat = 0;
  for (std::size_t a = 0; a < index.size(); ++a) {
    if (index[a] >= dims_[a]) throw std::out_of_range("array index out of range");
    flat += index[a] * strides_[a];
  }
  return flat;
}

UnitQuat QuatArray::at(std::span<const std::size_t> index) const {
  return elems_[flat_index(index)];
}

std::vector<std::size_t> QuatArray::unflatten(std::size_t flat) const {
  std::vector<std::size_t> index(dims_.size());
  for (std::size_t a = 0; a < dims_.size(); ++a) {
    index[a] = flat / strides_[a];
    flat %= strides_[a];
  }
  return index;
}

QuatSequence flatten_row_major(const QuatArray& array) {
  return QuatSequence(std::vector<UnitQuat>(array.elems().begin(), array.elems().end()));
}

}  // namespace quatseq
