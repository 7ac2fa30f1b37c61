#include "confcoh/int_matrix.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

namespace confcoh {

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("IntMatrix multiply: shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: square matrix required");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  // Bareiss: division-free up to exact divisions by the previous pivot.
  IntMatrix m = a;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

namespace {

struct SnfState {
  IntMatrix s, u, v, v_inv;

  void row_swap(std::size_t i, std::size_t j) {
    s.swap_rows(i, j);
    u.swap_rows(i, j);
  }
  // row dst -= q * row src
  void row_sub(std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < s.cols(); ++c) s(dst, c) -= q * s(src, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(dst, c) -= q * u(src, c);
  }
  void row_negate(std::size_t i) {
    for (std::size_t c = 0; c < s.cols(); ++c) s(i, c) = -s(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
  }
  void col_swap(std::size_t i, std::size_t j) {
    s.swap_cols(i, j);
    v.swap_cols(i, j);
    v_inv.swap_rows(i, j);
  }
  // col dst -= q * col src; inverse transform: v_inv row src += q * row dst
  void col_sub(std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < s.rows(); ++r) s(r, dst) -= q * s(r, src);
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, dst) -= q * v(r, src);
    for (std::size_t c = 0; c < v_inv.cols(); ++c) v_inv(src, c) += q * v_inv(dst, c);
  }
};

// Minimal |entry| among nonzeros of s[k.., k..]; first position on ties.
std::optional<std::pair<std::size_t, std::size_t>> min_abs_nonzero(const IntMatrix& s,
                                                                   std::size_t k) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Int best_abs;
  for (std::size_t i = k; i < s.rows(); ++i)
    for (std::size_t j = k; j < s.cols(); ++j) {
      const Int& e = s(i, j);
      if (e == 0) continue;
      Int a = abs(e);
      if (!best || a < best_abs) {
        best = {i, j};
        best_abs = a;
        if (best_abs == 1) return best;
      }
    }
  return best;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols(), mn = std::min(m, n);
  SnfState st{a, IntMatrix::identity(m), IntMatrix::identity(n), IntMatrix::identity(n)};

  for (std::size_t k = 0; k < mn; ++k) {
    if (!min_abs_nonzero(st.s, k)) break;  // remaining block zero
    for (;;) {
      auto [pi, pj] = *min_abs_nonzero(st.s, k);
      st.row_swap(k, pi);
      st.col_swap(k, pj);
      const Int& pivot = st.s(k, k);

      bool residue = false;
      for (std::size_t i = k + 1; i < m; ++i) {
        if (st.s(i, k) == 0) continue;
        Int q = st.s(i, k) / pivot;  // truncated: remainder strictly smaller
        st.row_sub(i, k, q);
        if (st.s(i, k) != 0) residue = true;
      }
      if (residue) continue;
      for (std::size_t j = k + 1; j < n; ++j) {
        if (st.s(k, j) == 0) continue;
        Int q = st.s(k, j) / pivot;
        st.col_sub(j, k, q);
        if (st.s(k, j) != 0) residue = true;
      }
      if (residue) continue;

      // Pivot must divide the remaining block; folding an offending row into
      // row k shrinks the pivot on the next pass.
      bool divides_all = true;
      for (std::size_t i = k + 1; i < m && divides_all; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          if (st.s(i, j) % pivot != 0) {
            st.row_sub(k, i, Int(-1));
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    if (st.s(k, k) < 0) st.row_negate(k);
  }

  SnfResult out;
  out.divisors.resize(mn);
  for (std::size_t k = 0; k < mn; ++k) out.divisors[k] = st.s(k, k);
  out.u = std::move(st.u);
  out.v = std::move(st.v);
  out.v_inv = std::move(st.v_inv);
  return out;
}

QuotientStructure quotient_structure(const IntMatrix& relations, std::size_t ambient_rank) {
  if (relations.cols() != ambient_rank)
    throw std::invalid_argument("quotient_structure: relations must have ambient_rank columns");

  SnfResult snf = smith_normal_form(relations);
  QuotientStructure q;
  q.ambient_ = ambient_rank;
  q.v_ = std::move(snf.v);
  q.v_inv_ = std::move(snf.v_inv);
  std::vector<Int> divisor_by_col(ambient_rank, Int(0));
  for (std::size_t i = 0; i < snf.divisors.size(); ++i) divisor_by_col[i] = snf.divisors[i];
  for (std::size_t i = 0; i < ambient_rank; ++i) {
    if (divisor_by_col[i] == 0)
      q.free_cols_.push_back(i);
    else if (divisor_by_col[i] > 1) {
      q.torsion_cols_.push_back(i);
      q.torsion_.push_back(divisor_by_col[i]);
    }
    // divisor 1: coordinate dies in the quotient
  }
  return q;
}

std::vector<Int> QuotientStructure::project(std::span<const Int> v) const {
  if (v.size() != ambient_)
    throw std::invalid_argument("QuotientStructure::project: wrong vector length");
  // w = v * V, then read off free/torsion transformed coordinates
  std::vector<Int> out;
  out.reserve(coordinate_count());
  auto transformed = [&](std::size_t j) {
    Int w = 0;
    for (std::size_t i = 0; i < ambient_; ++i)
      if (v[i] != 0) w += v[i] * v_(i, j);
    return w;
  };
  for (std::size_t j : free_cols_) out.push_back(transformed(j));
  for (std::size_t idx = 0; idx < torsion_cols_.size(); ++idx) {
    Int w = transformed(torsion_cols_[idx]) % torsion_[idx];
    if (w < 0) w += torsion_[idx];
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<Int> QuotientStructure::lift(std::span<const Int> canonical) const {
  if (canonical.size() != coordinate_count())
    throw std::invalid_argument("QuotientStructure::lift: wrong coordinate length");
  std::vector<Int> w(ambient_, Int(0));
  std::size_t pos = 0;
  for (std::size_t j : free_cols_) w[j] = canonical[pos++];
  for (std::size_t j : torsion_cols_) w[j] = canonical[pos++];
  std::vector<Int> out(ambient_, Int(0));
  for (std::size_t i = 0; i < ambient_; ++i) {
    if (w[i] == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) out[j] += w[i] * v_inv_(i, j);
  }
  return out;
}

std::vector<Int> QuotientStructure::add(std::span<const Int> a, std::span<const Int> b) const {
  if (a.size() != coordinate_count() || b.size() != coordinate_count())
    throw std::invalid_argument("QuotientStructure::add: wrong coordinate length");
  std::vector<Int> out(coordinate_count());
  const std::size_t nf = free_cols_.size();
  for (std::size_t i = 0; i < nf; ++i) out[i] = a[i] + b[i];
  for (std::size_t i = 0; i < torsion_cols_.size(); ++i) {
    Int s = (a[nf + i] + b[nf + i]) % torsion_[i];
    if (s < 0) s += torsion_[i];
    out[nf + i] = std::move(s);
  }
  return out;
}

}  // namespace confcoh
