#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace confcoh {

using Int = boost::multiprecision::cpp_int;

/// Dense row-major matrix with arbitrary-precision integer entries.
/// Intermediate entries of an elimination grow super-polynomially, so a
/// fixed-width integer type is not an option here.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> entries_;
};

/// Exact determinant via Bareiss fraction-free elimination; square input.
Int determinant(const IntMatrix& a);

/// Smith normal form data: u * a * v equals the diagonal matrix of
/// `divisors` (padded with zeros), u and v are unimodular, and
/// divisors[i] >= 0 divides divisors[i+1]. v_inv is the exact inverse of v,
/// tracked during elimination so quotient projections can be lifted back to
/// ambient coordinates.
struct SnfResult {
  std::vector<Int> divisors;  // length min(rows, cols)
  IntMatrix u, v, v_inv;
};

SnfResult smith_normal_form(const IntMatrix& a);

/// The abelian group Z^ambient / rowspan(relations) together with a
/// normal-form projector onto canonical coordinates.
class QuotientStructure {
public:
  QuotientStructure() = default;

  std::size_t ambient_rank() const { return ambient_; }
  std::size_t free_rank() const { return free_cols_.size(); }
  /// Nontrivial elementary divisors (> 1), in divisibility-chain order.
  const std::vector<Int>& torsion() const { return torsion_; }
  std::size_t coordinate_count() const { return free_cols_.size() + torsion_cols_.size(); }
  bool is_trivial_group() const { return coordinate_count() == 0; }

  /// Canonical coordinates of v modulo the relation span: free part first
  /// (exact integers), then torsion residues in [0, divisor). All entries are
  /// zero iff v lies in the span over Z. Linear in v.
  std::vector<Int> project(std::span<const Int> v) const;

  /// Some ambient representative with the given canonical coordinates;
  /// project(lift(c)) == c.
  std::vector<Int> lift(std::span<const Int> canonical) const;

  /// Coordinatewise sum in the quotient group (torsion parts wrap).
  std::vector<Int> add(std::span<const Int> a, std::span<const Int> b) const;

private:
  friend QuotientStructure quotient_structure(const IntMatrix&, std::size_t);

  std::size_t ambient_ = 0;
  std::vector<Int> torsion_;
  std::vector<std::size_t> free_cols_;     // transformed coords with divisor 0
  std::vector<std::size_t> torsion_cols_;  // transformed coords with divisor > 1
  IntMatrix v_, v_inv_;
};

/// Structure of Z^ambient_rank / rowspan(relations). relations must have
/// ambient_rank columns; zero rows are allowed.
QuotientStructure quotient_structure(const IntMatrix& relations, std::size_t ambient_rank);

}  // namespace confcoh
