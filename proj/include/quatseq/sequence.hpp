#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "quatseq/quaternion.hpp"

namespace quatseq {

/// A periodic sequence over the unit alphabet. Indexing in every correlation
/// operation is taken modulo size().
class QuatSequence {
 public:
  QuatSequence() = default;
  explicit QuatSequence(std::vector<UnitQuat> elems) : elems_(std::move(elems)) {}
  QuatSequence(std::initializer_list<UnitQuat> elems) : elems_(elems) {}

  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  UnitQuat operator[](std::size_t n) const { return elems_[n]; }
  UnitQuat& operator[](std::size_t n) { return elems_[n]; }
  UnitQuat at_periodic(std::int64_t n) const;

  std::span<const UnitQuat> elems() const { return elems_; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  friend bool operator==(const QuatSequence&, const QuatSequence&) = default;
  friend auto operator<=>(const QuatSequence& a, const QuatSequence& b) {
    return a.elems_ <=> b.elems_;
  }

 private:
  std::vector<UnitQuat> elems_;
};

/// d-dimensional periodic array, row-major (last axis fastest).
class QuatArray {
 public:
  QuatArray() = default;
  /// Throws std::invalid_argument if dims is empty, holds a zero, or its
  /// product differs from elems.size().
  QuatArray(std::vector<std::size_t> dims, std::vector<UnitQuat> elems);

  static QuatArray filled(std::vector<std::size_t> dims, UnitQuat value);
  static QuatArray from_sequence(const QuatSequence& seq);

  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t rank() const { return dims_.size(); }
  std::size_t size() const { return elems_.size(); }
  const std::vector<std::size_t>& strides() const { return strides_; }

  UnitQuat operator[](std::size_t flat) const { return elems_[flat]; }
  UnitQuat& operator[](std::size_t flat) { return elems_[flat]; }
  UnitQuat at(std::span<const std::size_t> index) const;
  UnitQuat at(std::initializer_list<std::size_t> index) const {
    return at(std::span<const std::size_t>(index.begin(), index.size()));
  }
  std::size_t flat_index(std::span<const std::size_t> index) const;
  std::vector<std::size_t> unflatten(std::size_t flat) const;

  std::span<const UnitQuat> elems() const { return elems_; }

  friend bool operator==(const QuatArray& a, const QuatArray& b) {
    return a.dims_ == b.dims_ && a.elems_ == b.elems_;
  }

 private:
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> strides_;
  std::vector<UnitQuat> elems_;
};

/// Concatenation of rows in index order.
QuatSequence flatten_row_major(const QuatArray& array);

struct FloatQuatSequence {
  std::vector<FloatQuat> elems;

  std::size_t size() const { return elems.size(); }
  friend bool operator==(const FloatQuatSequence&, const FloatQuatSequence&) = default;
};

std::size_t product(std::span<const std::size_t> dims);
std::vector<std::size_t> row_major_strides(std::span<const std::size_t> dims);

}  // namespace quatseq
