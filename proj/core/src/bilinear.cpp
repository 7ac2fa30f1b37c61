#include "confcoh/bilinear.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <limits>
#include <random>
#include <thread>

namespace confcoh {

void BilinearMap::set_coeff(int k, int i, int j, Rational value) {
  coeffs_[(std::size_t(k) * r_ + i) * r_ + j] = std::move(value);
  rebuild_sparse();
}

void BilinearMap::add_coeff(int k, int i, int j, const Rational& delta) {
  coeffs_[(std::size_t(k) * r_ + i) * r_ + j] += delta;
  rebuild_sparse();
}

void BilinearMap::rebuild_sparse() {
  sparse_.clear();
  for (int k = 0; k < n_; ++k)
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < r_; ++j)
        if (coeff(k, i, j) != 0) sparse_.push_back({k, i, j, coeff(k, i, j)});
}

bool BilinearMap::tensor_is_symmetric() const {
  for (int k = 0; k < n_; ++k)
    for (int i = 0; i < r_; ++i)
      for (int j = i + 1; j < r_; ++j)
        if (coeff(k, i, j) != coeff(k, j, i)) return false;
  return true;
}

std::vector<Rational> BilinearMap::apply(std::span<const Rational> x,
                                         std::span<const Rational> y) const {
  std::vector<Rational> out(n_);
  for (const Entry& e : sparse_) {
    if (x[e.i] == 0 || y[e.j] == 0) continue;
    out[e.k] += e.value * x[e.i] * y[e.j];
  }
  return out;
}

std::vector<double> BilinearMap::apply(std::span<const double> x,
                                       std::span<const double> y) const {
  std::vector<double> out(n_, 0.0);
  for (const Entry& e : sparse_)
    out[e.k] += e.value.convert_to<double>() * x[e.i] * y[e.j];
  return out;
}

BilinearMap real_poly_mult(int r) {
  if (r < 1) throw std::invalid_argument("real_poly_mult: r must be >= 1");
  BilinearMap mu(r, 2 * r - 1);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) mu.add_coeff(i + j, i, j, 1);
  return mu;
}

BilinearMap complex_poly_mult(int r) {
  if (r < 2 || r % 2 != 0) throw std::invalid_argument("complex_poly_mult: r must be even");
  const int half = r / 2;
  BilinearMap mu(r, 2 * r - 2);
  // (x_{2a} + i x_{2a+1})(y_{2b} + i y_{2b+1}) contributes to coefficient a+b
  for (int a = 0; a < half; ++a)
    for (int b = 0; b < half; ++b) {
      const int q = a + b;
      mu.add_coeff(2 * q, 2 * a, 2 * b, 1);
      mu.add_coeff(2 * q, 2 * a + 1, 2 * b + 1, -1);
      mu.add_coeff(2 * q + 1, 2 * a, 2 * b + 1, 1);
      mu.add_coeff(2 * q + 1, 2 * a + 1, 2 * b, 1);
    }
  return mu;
}

ProjectivePoint::ProjectivePoint(std::vector<Rational> rep) : rep_(std::move(rep)) {
  auto it = std::find_if(rep_.begin(), rep_.end(), [](const Rational& c) { return c != 0; });
  if (it == rep_.end())
    throw std::invalid_argument("ProjectivePoint: representative must be nonzero");
  const Rational scale = *it;
  if (scale != 1)
    for (Rational& c : rep_) c /= scale;
}

namespace {

// Reproducible ints: the engine is the standard-specified mt19937_64, and the
// bounded draw below avoids the unspecified std distributions.
struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t seed) : engine(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return lo + std::int64_t(engine() % std::uint64_t(hi - lo + 1));
  }

  Rational rational() {
    // numerators and denominators uniform over small heights
    std::int64_t num = uniform(-20, 20);
    std::int64_t den = uniform(1, 20);
    return Rational(num) / den;
  }

  std::vector<Rational> nonzero_vector(int r) {
    for (;;) {
      std::vector<Rational> v(r);
      bool nonzero = false;
      for (auto& c : v) {
        c = rational();
        nonzero |= (c != 0);
      }
      if (nonzero) return v;
    }
  }
};

// Deterministic low-height vectors: entries in {-1, 0, 1}, at most two
// nonzero coordinates. Exact zeros of a singular map show up here early.
std::vector<std::vector<Rational>> low_height_grid(int r) {
  std::vector<std::vector<Rational>> grid;
  for (int i = 0; i < r; ++i)
    for (int s : {1, -1}) {
      std::vector<Rational> v(r, Rational(0));
      v[i] = s;
      grid.push_back(std::move(v));
    }
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          std::vector<Rational> v(r, Rational(0));
          v[i] = si;
          v[j] = sj;
          grid.push_back(std::move(v));
        }
  return grid;
}

bool all_zero(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& c) { return c == 0; });
}

}  // namespace

unsigned sampling_thread_budget() {
  unsigned hw = std::thread::hardware_concurrency();
  unsigned budget = hw == 0 ? 1 : std::min(hw, 8u);
  if (const char* env = std::getenv("PROJCFG_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) budget = std::min<unsigned>(budget, unsigned(v));
  }
  return std::max(budget, 1u);
}

bool check_symmetric_bilinear(const BilinearMap& mu, std::size_t trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("check_symmetric_bilinear: trials must be >= 1");
  if (!mu.tensor_is_symmetric()) return false;
  Rng rng(seed);
  const int r = mu.input_dim();
  for (std::size_t t = 0; t < trials; ++t) {
    auto x = rng.nonzero_vector(r);
    auto x2 = rng.nonzero_vector(r);
    auto y = rng.nonzero_vector(r);
    Rational alpha = rng.rational();
    // mu(alpha x + x', y) = alpha mu(x, y) + mu(x', y)
    std::vector<Rational> combo(r);
    for (int i = 0; i < r; ++i) combo[i] = alpha * x[i] + x2[i];
    auto lhs = mu.apply(combo, y);
    auto mxy = mu.apply(x, y);
    auto mx2y = mu.apply(x2, y);
    for (int k = 0; k < mu.output_dim(); ++k)
      if (lhs[k] != alpha * mxy[k] + mx2y[k]) return false;
    // symmetry of the values, not just the tensor
    auto myx = mu.apply(y, x);
    if (mxy != myx) return false;
  }
  return true;
}

NonsingularitySearch nonsingularity_search(const BilinearMap& mu, std::size_t samples,
                                           std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("nonsingularity_search: samples must be >= 1");
  NonsingularitySearch out;
  out.seed = seed;
  const int r = mu.input_dim();

  // sample list: grid pairs first (row-major), then seeded random pairs
  std::vector<PairWitness> pairs;
  pairs.reserve(samples);
  const auto grid = low_height_grid(r);
  for (std::size_t i = 0; i < grid.size() && pairs.size() < samples; ++i)
    for (std::size_t j = 0; j < grid.size() && pairs.size() < samples; ++j)
      pairs.push_back({grid[i], grid[j]});
  Rng rng(seed);
  while (pairs.size() < samples)
    pairs.push_back({rng.nonzero_vector(r), rng.nonzero_vector(r)});

  const unsigned threads = std::min<std::size_t>(sampling_thread_budget(), pairs.size());
  std::vector<std::future<std::size_t>> found(threads);  // first witness index per chunk
  const std::size_t chunk = (pairs.size() + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t lo = t * chunk, hi = std::min(pairs.size(), lo + chunk);
    found[t] = std::async(std::launch::async, [&, lo, hi]() -> std::size_t {
      for (std::size_t s = lo; s < hi; ++s)
        if (all_zero(mu.apply(pairs[s].x, pairs[s].y))) return s;
      return pairs.size();
    });
  }
  std::size_t first = pairs.size();
  for (auto& f : found) first = std::min(first, f.get());

  out.samples_run = samples;
  if (first < pairs.size()) {
    out.result = NonsingularitySearch::Result::witness_found;
    out.witness = pairs[first];
  }
  return out;
}

std::vector<Rational> hopf_direction(const BilinearMap& mu, std::span<const Rational> x) {
  auto dir = mu.apply(x, x);
  if (all_zero(dir))
    throw std::domain_error("hopf map undefined: mu(x, x) = 0 at a nonzero point");
  return dir;
}

std::vector<double> hopf_embedding(const BilinearMap& mu, std::span<const Rational> x) {
  auto dir = hopf_direction(mu, x);
  std::vector<double> out(dir.size());
  double norm_sq = 0;
  for (std::size_t k = 0; k < dir.size(); ++k) {
    out[k] = dir[k].convert_to<double>();
    norm_sq += out[k] * out[k];
  }
  const double norm = std::sqrt(norm_sq);
  for (double& c : out) c /= norm;
  return out;
}

std::vector<double> hopf_embedding(const BilinearMap& mu, const ProjectivePoint& p) {
  return hopf_embedding(mu, p.representative());
}

std::vector<double> StereographicEmbedding::operator()(const ProjectivePoint& p) const {
  auto y = hopf_embedding(mu, p);
  const double denom = 1.0 - pole_sign * y[pole_coordinate];
  std::vector<double> out;
  out.reserve(y.size() - 1);
  for (std::size_t k = 0; k < y.size(); ++k)
    if (int(k) != pole_coordinate) out.push_back(y[k] / denom);
  return out;
}

StereographicEmbedding stereographic_reduce(const BilinearMap& mu, bool pole_search) {
  StereographicEmbedding emb{mu, 0, -1};
  if (!pole_search) return emb;  // leading diagonal coordinate is a square: -e_0 is missed

  // search signed coordinate poles against exact grid directions
  const auto grid = low_height_grid(mu.input_dim());
  std::vector<std::vector<Rational>> dirs;
  for (const auto& x : grid) {
    auto d = mu.apply(x, x);
    if (!all_zero(d)) dirs.push_back(std::move(d));
  }
  for (int coord = 0; coord < mu.output_dim(); ++coord)
    for (int sign : {-1, 1}) {
      bool hit = false;
      for (const auto& d : dirs) {
        if (sign > 0 ? !(d[coord] > 0) : !(d[coord] < 0)) continue;
        bool pure = true;
        for (int k = 0; k < mu.output_dim() && pure; ++k)
          if (k != coord && d[k] != 0) pure = false;
        if (pure) {
          hit = true;
          break;
        }
      }
      if (!hit) {
        emb.pole_coordinate = coord;
        emb.pole_sign = sign;
        return emb;
      }
    }
  throw std::domain_error("stereographic_reduce: no missed coordinate pole found");
}

PairMap embedding_to_antisymmetric(PointMap g) {
  return [g = std::move(g)](const ProjectivePoint& x, const ProjectivePoint& y) {
    auto gx = g(x);
    auto gy = g(y);
    std::vector<double> diff(gx.size());
    double norm_sq = 0;
    for (std::size_t k = 0; k < gx.size(); ++k) {
      diff[k] = gx[k] - gy[k];
      norm_sq += diff[k] * diff[k];
    }
    if (norm_sq == 0.0) throw EmbeddingFailure(x, y);
    const double norm = std::sqrt(norm_sq);
    for (double& c : diff) c /= norm;
    return diff;
  };
}

namespace {

double sup_norm(const std::vector<double>& v) {
  double m = 0;
  for (double c : v) m = std::max(m, std::fabs(c));
  return m;
}

double euclid_norm(std::span<const double> a, std::span<const double> b) {
  double s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
  return std::sqrt(s);
}

}  // namespace

EmbeddingReport run_embedding_suite(const std::string& construction, int r, std::size_t samples,
                                    std::uint64_t seed) {
  const bool complex_kind = construction == "complex";
  if (!complex_kind && construction != "real")
    throw std::invalid_argument("run_embedding_suite: construction must be real or complex");
  if (r < 2) throw std::invalid_argument("run_embedding_suite: r must be >= 2");
  if (samples < 1) throw std::invalid_argument("run_embedding_suite: samples must be >= 1");
  BilinearMap mu = complex_kind ? complex_poly_mult(r) : real_poly_mult(r);
  StereographicEmbedding emb = stereographic_reduce(mu, complex_kind);

  EmbeddingReport report;
  report.construction = construction;
  report.r = r;
  report.n = mu.output_dim();
  report.image_dim = emb.image_dim();
  report.pole_coordinate = emb.pole_coordinate;
  report.pole_sign = emb.pole_sign;
  report.sample_count = samples;
  report.seed = seed;

  // precompute all sampled inputs so the thread count cannot affect results
  Rng rng(seed);
  struct Sample {
    ProjectivePoint x, y;
    std::vector<Rational> raw;
    Rational lambda;
  };
  std::vector<Sample> sampled;
  sampled.reserve(samples);
  for (std::size_t s = 0; s < samples; ++s) {
    ProjectivePoint x(rng.nonzero_vector(r));
    ProjectivePoint y(rng.nonzero_vector(r));
    while (y == x) y = ProjectivePoint(rng.nonzero_vector(r));
    std::vector<Rational> raw = rng.nonzero_vector(r);
    Rational lambda = rng.rational();
    while (lambda == 0) lambda = rng.rational();
    sampled.push_back({std::move(x), std::move(y), std::move(raw), std::move(lambda)});
  }

  auto g = [&emb](const ProjectivePoint& p) { return emb(p); };
  auto f = embedding_to_antisymmetric(g);

  struct ChunkStats {
    double repr = 0, antisym = 0, min_sep = std::numeric_limits<double>::infinity();
    double max_sep = 0, sum_sep = 0;
    std::optional<std::size_t> zero_at;
  };
  const unsigned threads = std::max<std::size_t>(1, std::min<std::size_t>(sampling_thread_budget(),
                                                                          sampled.size()));
  const std::size_t chunk = (sampled.size() + threads - 1) / threads;
  std::vector<std::future<ChunkStats>> futures;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t lo = t * chunk, hi = std::min(sampled.size(), std::size_t(lo + chunk));
    futures.push_back(std::async(std::launch::async, [&, lo, hi]() {
      ChunkStats st;
      for (std::size_t s = lo; s < hi; ++s) {
        const Sample& smp = sampled[s];
        // representative independence of the spherical map
        auto h1 = hopf_embedding(mu, smp.raw);
        std::vector<Rational> scaled(smp.raw.size());
        for (std::size_t k = 0; k < scaled.size(); ++k) scaled[k] = smp.lambda * smp.raw[k];
        auto h2 = hopf_embedding(mu, scaled);
        for (std::size_t k = 0; k < h1.size(); ++k)
          st.repr = std::max(st.repr, std::fabs(h1[k] - h2[k]));
        // antisymmetry and separation
        auto gx = g(smp.x);
        auto gy = g(smp.y);
        double sep = euclid_norm(gx, gy);
        if (sep == 0.0) {
          if (!st.zero_at) st.zero_at = s;
          continue;
        }
        st.min_sep = std::min(st.min_sep, sep);
        st.max_sep = std::max(st.max_sep, sep);
        st.sum_sep += sep;
        auto fxy = f(smp.x, smp.y);
        auto fyx = f(smp.y, smp.x);
        std::vector<double> sum(fxy.size());
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = fxy[k] + fyx[k];
        st.antisym = std::max(st.antisym, sup_norm(sum));
      }
      return st;
    }));
  }

  ChunkStats total;
  double sum_sep = 0;
  std::size_t defined = 0;
  std::optional<std::size_t> zero_at;
  for (auto& fut : futures) {
    ChunkStats st = fut.get();
    total.repr = std::max(total.repr, st.repr);
    total.antisym = std::max(total.antisym, st.antisym);
    total.min_sep = std::min(total.min_sep, st.min_sep);
    total.max_sep = std::max(total.max_sep, st.max_sep);
    sum_sep += st.sum_sep;
    if (st.zero_at && (!zero_at || *st.zero_at < *zero_at)) zero_at = st.zero_at;
  }
  defined = samples - (zero_at ? 1 : 0);

  report.max_representative_residual = total.repr;
  report.max_antisymmetry_residual = total.antisym;
  report.min_image_separation = zero_at ? 0.0 : total.min_sep;
  report.separation_stats = {zero_at ? 0.0 : total.min_sep, total.max_sep,
                             defined ? sum_sep / double(defined) : 0.0};
  if (zero_at) {
    report.witnesses = {sampled[*zero_at].x, sampled[*zero_at].y};
    report.all_pairs_defined = false;
  }
  return report;
}

}  // namespace confcoh
