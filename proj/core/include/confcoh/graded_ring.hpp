#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "confcoh/f2_matrix.hpp"
#include "confcoh/int_matrix.hpp"

namespace confcoh {

enum class CoefficientMode { integer, mod2 };

struct GeneratorSpec {
  std::string name;
  int degree = 1;
};

/// Exponent vector over a presentation's generators.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {}

  const std::vector<int>& exponents() const { return exponents_; }
  int exponent(std::size_t i) const { return exponents_[i]; }
  std::size_t size() const { return exponents_.size(); }
  bool is_one() const;
  Monomial times(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

private:
  std::vector<int> exponents_;
};

/// Basis order within a degree: exponent vectors compared lexicographically,
/// larger first (so pure powers of the first declared generator lead).
struct MonomialBasisOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return a.exponents() > b.exponents();
  }
};

using TermMap = std::map<Monomial, Int, MonomialBasisOrder>;

class Presentation;

/// Homogeneous element of a presented ring: integer combination of monomials
/// in one degree. Not reduced; reduction against the ideal is explicit.
class RingElement {
public:
  RingElement() = default;

  const std::shared_ptr<const Presentation>& presentation() const { return pres_; }
  int degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  /// No stored terms (before any reduction); the zero of its degree.
  bool is_structurally_zero() const { return terms_.empty(); }

  RingElement& operator+=(const RingElement& other);
  RingElement& operator-=(const RingElement& other);
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const Int& c, const RingElement& e);
  RingElement pow(int k) const;  // k >= 0

  std::string to_string() const;

  friend bool operator==(const RingElement&, const RingElement&) = default;

private:
  friend class Presentation;
  friend RingElement canonical_representative(const RingElement& e);
  RingElement(std::shared_ptr<const Presentation> pres, int degree, TermMap terms);
  void normalize();  // drop zero coefficients; mod2: coefficients into {0,1}

  std::shared_ptr<const Presentation> pres_;
  int degree_ = 0;
  TermMap terms_;
};

/// One degree of a presented ring as a finitely generated abelian group
/// (or F2 vector space), with a normal-form projector. basis lists every
/// monomial of the degree; the relation span is generated by all products
/// (monomial) x (relation) landing in the degree.
struct GradedPiece {
  int degree = 0;
  CoefficientMode mode = CoefficientMode::integer;
  std::vector<Monomial> basis;
  std::map<Monomial, std::size_t, MonomialBasisOrder> basis_index;

  QuotientStructure structure;   // integer mode
  F2RowReduction row_reduction;  // mod2 mode
  std::size_t f2_dimension = 0;  // mod2 mode: |basis| - rank

  std::size_t coordinate_count() const {
    return mode == CoefficientMode::integer ? structure.coordinate_count() : basis.size();
  }
};

/// Canonical coordinates of an element in its degree piece. Integer mode:
/// free part then torsion residues. Mod-2 mode: the remainder vector on the
/// monomial basis after elimination against the relation row space.
struct NormalForm {
  std::shared_ptr<const GradedPiece> piece;
  std::vector<Int> coords;

  bool is_zero() const;
  friend bool operator==(const NormalForm& a, const NormalForm& b) {
    return a.piece == b.piece && a.coords == b.coords;
  }
};

/// A finitely presented graded-commutative ring, as a list of graded
/// generators and homogeneous relation polynomials. Immutable once created;
/// degree pieces are built on demand and cached (thread-safe, deterministic).
class Presentation : public std::enable_shared_from_this<Presentation> {
public:
  struct Term {
    Int coeff;
    std::vector<int> exponents;
  };
  using RawPolynomial = std::vector<Term>;

  /// Validates: unique generator names, positive generator degrees, every
  /// relation homogeneous of degree >= 1. Relations that normalize to zero
  /// (e.g. even coefficients mod 2) are dropped. sq1_on_generators, when
  /// nonempty, declares the value of the Steenrod Sq^1 derivation on each
  /// generator (mod-2 presentations only).
  static std::shared_ptr<const Presentation> create(
      std::string id, CoefficientMode mode, std::vector<GeneratorSpec> generators,
      std::vector<RawPolynomial> relations, int default_degree_bound,
      std::vector<RawPolynomial> sq1_on_generators = {});

  const std::string& id() const { return id_; }
  CoefficientMode mode() const { return mode_; }
  const std::vector<GeneratorSpec>& generators() const { return generators_; }
  std::size_t generator_index(std::string_view name) const;  // throws if unknown
  int default_degree_bound() const { return default_degree_bound_; }

  std::size_t relation_count() const { return relations_.size(); }
  RingElement relation(std::size_t i) const;

  bool has_sq1() const { return !sq1_.empty(); }
  RingElement sq1_of_generator(std::size_t i) const;

  int monomial_degree(const Monomial& m) const;
  /// All monomials of the given degree, in basis order.
  std::vector<Monomial> monomials_of_degree(int degree) const;

  // element construction
  RingElement zero(int degree) const;
  RingElement one() const;
  RingElement generator(std::string_view name) const;
  RingElement element(Int coeff, std::vector<int> exponents) const;

  /// Degree piece, built on demand and cached. Building the same degree
  /// twice yields identical pieces; distinct degrees may build in parallel.
  std::shared_ptr<const GradedPiece> piece(int degree) const;

private:
  Presentation() = default;
  std::shared_ptr<const GradedPiece> build_piece(int degree) const;

  std::string id_;
  CoefficientMode mode_ = CoefficientMode::integer;
  std::vector<GeneratorSpec> generators_;
  std::vector<std::pair<int, TermMap>> relations_;  // (degree, terms)
  std::vector<std::pair<int, TermMap>> sq1_;        // per generator
  int default_degree_bound_ = 0;

  mutable std::mutex cache_mutex_;
  mutable std::map<int, std::shared_ptr<const GradedPiece>> piece_cache_;
};

/// Normal form of e in its degree piece; zero iff e lies in the ideal.
NormalForm reduce(const RingElement& e);
bool is_zero(const RingElement& e);
/// Representative of reduce(e) back in the ring (used to keep powers small).
RingElement canonical_representative(const RingElement& e);
/// True iff reduce(a - b) is zero. Throws on degree or presentation mismatch.
bool equal_elements(const RingElement& a, const RingElement& b);

enum class HeightStatus { exact, bound_reached };

struct HeightResult {
  int height = 0;  // largest k with x^k nonzero (as far as verified)
  HeightStatus status = HeightStatus::exact;
};

/// Largest k with x^k != 0, computing powers with reduction at each step.
/// x must be homogeneous of degree >= 1. status is exact when a vanishing
/// power was reached within degree_bound, else bound_reached.
HeightResult height(const RingElement& x, int degree_bound);
HeightResult height(const RingElement& x);  // presentation default bound

}  // namespace confcoh
