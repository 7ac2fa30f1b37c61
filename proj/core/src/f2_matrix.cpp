#include "confcoh/f2_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace confcoh {

void F2Vector::operator^=(const F2Vector& other) {
  if (size_ != other.size_) throw std::invalid_argument("F2Vector xor: size mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
}

bool F2Vector::is_zero() const {
  for (std::uint64_t w : words_)
    if (w) return false;
  return true;
}

F2Vector F2Matrix::row(std::size_t r) const {
  F2Vector v(cols_);
  std::copy_n(bits_.begin() + r * words_, words_, v.words_.begin());
  return v;
}

void F2Matrix::assign_row(std::size_t r, const F2Vector& v) {
  if (v.size() != cols_) throw std::invalid_argument("F2Matrix::assign_row: size mismatch");
  std::copy_n(v.words_.begin(), words_, bits_.begin() + r * words_);
}

void F2Matrix::xor_row_into(std::size_t src, std::size_t dst) {
  const std::size_t s = src * words_, d = dst * words_;
  for (std::size_t w = 0; w < words_; ++w) bits_[d + w] ^= bits_[s + w];
}

void F2Matrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t w = 0; w < words_; ++w) std::swap(bits_[i * words_ + w], bits_[j * words_ + w]);
}

bool F2Matrix::row_is_zero(std::size_t r) const {
  for (std::size_t w = 0; w < words_; ++w)
    if (bits_[r * words_ + w]) return false;
  return true;
}

F2RowReduction f2_row_reduce(const F2Matrix& a) {
  F2RowReduction out;
  out.rref = a;
  F2Matrix& m = out.rref;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && !m.get(pivot, col)) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(rank, pivot);
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (r != rank && m.get(r, col)) m.xor_row_into(rank, r);
    out.pivot_cols.push_back(col);
    ++rank;
  }
  out.rank = rank;
  return out;
}

F2Vector f2_reduce_vector(const F2RowReduction& red, F2Vector v) {
  if (v.size() != red.rref.cols())
    throw std::invalid_argument("f2_reduce_vector: size mismatch");
  for (std::size_t i = 0; i < red.rank; ++i)
    if (v.get(red.pivot_cols[i])) v ^= red.rref.row(i);
  return v;
}

}  // namespace confcoh
