#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace confcoh {

/// Vector over the two-element field, bit-packed 64 entries per word.
class F2Vector {
public:
  F2Vector() = default;
  explicit F2Vector(std::size_t size) : size_(size), words_((size + 63) / 64) {}

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool value) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }
  void operator^=(const F2Vector& other);
  bool is_zero() const;

  friend bool operator==(const F2Vector&, const F2Vector&) = default;

private:
  friend class F2Matrix;
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Bit-packed matrix over the two-element field. Bits beyond the column
/// count stay zero in every row.
class F2Matrix {
public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows_ * words_) {}

  static F2Matrix identity(std::size_t n) {
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (bits_[r * words_ + (c >> 6)] >> (c & 63)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool value) {
    const std::uint64_t mask = std::uint64_t{1} << (c & 63);
    if (value)
      bits_[r * words_ + (c >> 6)] |= mask;
    else
      bits_[r * words_ + (c >> 6)] &= ~mask;
  }

  F2Vector row(std::size_t r) const;
  void assign_row(std::size_t r, const F2Vector& v);
  /// row dst ^= row src
  void xor_row_into(std::size_t src, std::size_t dst);
  void swap_rows(std::size_t i, std::size_t j);
  bool row_is_zero(std::size_t r) const;

  friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

private:
  std::size_t rows_ = 0, cols_ = 0, words_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct F2RowReduction {
  std::size_t rank = 0;
  F2Matrix rref;                        // reduced row echelon form
  std::vector<std::size_t> pivot_cols;  // pivot column of row i of rref
};

F2RowReduction f2_row_reduce(const F2Matrix& a);

/// Remainder of v modulo the row space of the reduction; zero iff v lies in
/// that space. Linear over the field.
F2Vector f2_reduce_vector(const F2RowReduction& red, F2Vector v);

}  // namespace confcoh
