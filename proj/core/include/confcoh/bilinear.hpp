#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace confcoh {

using Rational = boost::multiprecision::cpp_rational;

/// Symmetric bilinear map mu: R^r x R^r -> R^n given by a coefficient tensor
/// a^k_{ij} of exact rationals with a^k_{ij} = a^k_{ji}.
class BilinearMap {
public:
  BilinearMap(int r, int n) : r_(r), n_(n), coeffs_(std::size_t(n) * r * r) {}

  int input_dim() const { return r_; }
  int output_dim() const { return n_; }

  const Rational& coeff(int k, int i, int j) const {
    return coeffs_[(std::size_t(k) * r_ + i) * r_ + j];
  }
  void set_coeff(int k, int i, int j, Rational value);
  void add_coeff(int k, int i, int j, const Rational& delta);

  bool tensor_is_symmetric() const;

  std::vector<Rational> apply(std::span<const Rational> x, std::span<const Rational> y) const;
  std::vector<double> apply(std::span<const double> x, std::span<const double> y) const;
  std::vector<Rational> diagonal(std::span<const Rational> x) const { return apply(x, x); }

private:
  struct Entry {
    int k, i, j;
    Rational value;
  };
  void rebuild_sparse();

  int r_ = 0, n_ = 0;
  std::vector<Rational> coeffs_;
  std::vector<Entry> sparse_;  // nonzero entries, (k, i, j) order
};

/// Coefficientwise product of real polynomials of degree < r; n = 2r - 1.
BilinearMap real_poly_mult(int r);

/// Product of complex polynomials of degree < r/2, coordinates paired as
/// (x_{2j} + i x_{2j+1}); n = 2r - 2. Throws std::invalid_argument on odd r.
BilinearMap complex_poly_mult(int r);

/// Point of RP^{r-1} held as an exact-rational representative, normalized so
/// the first nonzero coordinate is 1 (unique per line).
class ProjectivePoint {
public:
  explicit ProjectivePoint(std::vector<Rational> rep);

  const std::vector<Rational>& representative() const { return rep_; }
  std::size_t dim() const { return rep_.size(); }

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

private:
  std::vector<Rational> rep_;
};

/// Exact tensor-symmetry check plus seeded random exact-rational checks of
/// bilinearity and of mu(x, y) = mu(y, x).
bool check_symmetric_bilinear(const BilinearMap& mu, std::size_t trials, std::uint64_t seed);

struct PairWitness {
  std::vector<Rational> x, y;
};

struct NonsingularitySearch {
  enum class Result { no_zero_found, witness_found };
  Result result = Result::no_zero_found;
  std::optional<PairWitness> witness;
  std::size_t samples_run = 0;
  std::uint64_t seed = 0;
};

/// Looks for nonzero exact-rational pairs with mu(x, y) = 0 exactly, over a
/// deterministic low-height grid followed by seeded random pairs.
NonsingularitySearch nonsingularity_search(const BilinearMap& mu, std::size_t samples,
                                           std::uint64_t seed);

/// mu(x, x) as exact rationals (the unnormalized spherical direction).
/// Throws std::domain_error when mu(x, x) = 0 (map undefined there).
std::vector<Rational> hopf_direction(const BilinearMap& mu, std::span<const Rational> x);

/// Unit vector mu(x, x)/||mu(x, x)||. Independent of the representative.
std::vector<double> hopf_embedding(const BilinearMap& mu, std::span<const Rational> x);
std::vector<double> hopf_embedding(const BilinearMap& mu, const ProjectivePoint& p);

/// Spherical embedding composed with stereographic projection from a pole
/// the image provably misses; lands in R^{n-1}.
struct StereographicEmbedding {
  BilinearMap mu;
  int pole_coordinate = 0;
  int pole_sign = -1;  // pole = pole_sign * e_{pole_coordinate}

  int image_dim() const { return mu.output_dim() - 1; }
  std::vector<double> operator()(const ProjectivePoint& p) const;
};

/// For the real product the pole -e_0 is missed (the leading image
/// coordinate is a square). Other constructions search signed coordinate
/// poles against a deterministic sample grid.
StereographicEmbedding stereographic_reduce(const BilinearMap& mu, bool pole_search);

/// Raised when two distinct inputs map to one point (not an embedding).
struct EmbeddingFailure : std::runtime_error {
  EmbeddingFailure(ProjectivePoint x, ProjectivePoint y)
      : std::runtime_error("embedding failure: equal images for distinct points"),
        first(std::move(x)),
        second(std::move(y)) {}
  ProjectivePoint first, second;
};

using PointMap = std::function<std::vector<double>(const ProjectivePoint&)>;
using PairMap =
    std::function<std::vector<double>(const ProjectivePoint&, const ProjectivePoint&)>;

/// f(x, y) = (g(x) - g(y)) / ||g(x) - g(y)||; antisymmetric by construction.
/// The returned map throws EmbeddingFailure when g(x) = g(y) for x != y.
PairMap embedding_to_antisymmetric(PointMap g);

struct SeparationStats {
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
};

struct EmbeddingReport {
  std::string construction;
  int r = 0, n = 0, image_dim = 0;
  int pole_coordinate = 0, pole_sign = -1;
  std::size_t sample_count = 0;
  std::uint64_t seed = 0;
  double max_representative_residual = 0.0;  // hopf invariance under scaling
  double max_antisymmetry_residual = 0.0;    // ||f(x,y) + f(y,x)||
  double min_image_separation = 0.0;
  SeparationStats separation_stats;
  std::optional<std::pair<ProjectivePoint, ProjectivePoint>> witnesses;  // separation 0
  bool all_pairs_defined = true;
};

/// Hopf + stereographic + antisymmetry/injectivity sampling for one
/// construction ("real" or "complex").
EmbeddingReport run_embedding_suite(const std::string& construction, int r,
                                    std::size_t samples, std::uint64_t seed);

/// Thread budget for sampling loops: PROJCFG_THREADS when set, otherwise the
/// hardware concurrency, clamped to [1, 8]. Results never depend on it.
unsigned sampling_thread_budget();

}  // namespace confcoh
