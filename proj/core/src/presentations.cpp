#include "confcoh/presentations.hpp"

#include <sstream>
#include <stdexcept>

namespace confcoh {

Int binom_exact(long long n, long long k) {
  if (n < 0 || k < 0) throw std::invalid_argument("binom_exact: arguments must be >= 0");
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Int result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= (n + 1 - i);
    result /= i;  // exact: i consecutive integers contain a multiple of i
  }
  return result;
}

bool binom_mod2(std::uint64_t n, std::uint64_t k) {
  if (k > n) return false;
  return (k & (n - k)) == 0;
}

namespace {

using Raw = Presentation::RawPolynomial;
using Term = Presentation::Term;

// exponent order u, v, w
Term uvw(Int coeff, int u, int v, int w) { return {std::move(coeff), {u, v, w}}; }

// The two Grassmann relation sums, in the v/w part of a generator list whose
// last two generators are v and w. v_slot/w_slot index the exponent vector.
Raw grassmann_sum(int top_shift, int r, std::size_t gens, std::size_t v_slot,
                  std::size_t w_slot) {
  // sum_i binom(r - top_shift - i, i) v^{r - top_shift - 2i} w^i
  Raw poly;
  for (int i = 0;; ++i) {
    int v_exp = r - top_shift - 2 * i;
    if (v_exp < 0) break;
    Int c = binom_exact(r - top_shift - i, i);
    std::vector<int> exps(gens, 0);
    exps[v_slot] = v_exp;
    exps[w_slot] = i;
    poly.push_back({std::move(c), std::move(exps)});
  }
  return poly;
}

}  // namespace

Mod2GrassmannRing build_grassmann_mod2(int r) {
  if (r < 2) throw std::invalid_argument("build_grassmann_mod2: r must be >= 2");
  std::vector<GeneratorSpec> gens = {{"v", 1}, {"w", 2}};
  std::vector<Raw> relations = {
      grassmann_sum(1, r, 2, 0, 1),  // degree r - 1
      grassmann_sum(0, r, 2, 0, 1),  // degree r
  };
  std::vector<Raw> sq1 = {
      {{Int(1), {2, 0}}},  // v -> v^2
      {{Int(1), {1, 1}}},  // w -> v*w
  };
  Mod2GrassmannRing ring;
  ring.r = r;
  ring.presentation =
      Presentation::create("grassmann-mod2-r" + std::to_string(r), CoefficientMode::mod2,
                           std::move(gens), std::move(relations), 2 * (r - 1), std::move(sq1));
  return ring;
}

Mod2ConfigRing build_unordered_config_mod2(int r) {
  if (r < 2) throw std::invalid_argument("build_unordered_config_mod2: r must be >= 2");
  std::vector<GeneratorSpec> gens = {{"u", 1}, {"v", 1}, {"w", 2}};
  std::vector<Raw> relations = {
      grassmann_sum(1, r, 3, 1, 2),
      grassmann_sum(0, r, 3, 1, 2),
      {uvw(1, 1, 1, 0), uvw(1, 2, 0, 0)},  // uv + u^2
  };
  std::vector<Raw> sq1 = {
      {{Int(1), {2, 0, 0}}},  // u -> u^2
      {{Int(1), {0, 2, 0}}},  // v -> v^2
      {{Int(1), {0, 1, 1}}},  // w -> v*w
  };
  Mod2ConfigRing ring;
  ring.r = r;
  ring.presentation =
      Presentation::create("config-mod2-r" + std::to_string(r), CoefficientMode::mod2,
                           std::move(gens), std::move(relations), 2 * (r - 1), std::move(sq1));
  return ring;
}

namespace {

// exponent order a, b, c, d, e
Term abcde(Int coeff, int a, int b, int c, int d, int e) {
  return {std::move(coeff), {a, b, c, d, e}};
}

// sum over i, j >= 0 with i + 2j = total of binom(i+j, j) a^{i+a_shift} X d^{j+d_shift},
// where X carries fixed b/c exponents. Terms with a negative exponent are dropped
// (the sum never produces one; the i-range guard is the loop condition).
Raw binomial_sum(int total, int a_shift, int b_exp, int c_exp, int d_shift) {
  Raw poly;
  for (int j = 0; 2 * j <= total; ++j) {
    int i = total - 2 * j;
    poly.push_back(abcde(binom_exact(i + j, j), i + a_shift, b_exp, c_exp, j + d_shift, 0));
  }
  return poly;
}

void append_rhs_2d_power(Raw& poly, int d_power) {
  poly.push_back(abcde(Int(-2), 0, 0, 0, d_power, 0));
}

}  // namespace

IntegralConfigRing build_integral(int m, const IntegralOptions& opts) {
  if (m < 2) throw std::invalid_argument("build_integral: m must be >= 2");
  IntegralConfigRing ring;
  ring.m = m;
  const bool even = (m % 2 == 0);
  const int t = even ? m / 2 : (m - 1) / 2;
  ring.t = t;
  ring.l = t / 2;
  ring.kappa = t % 2;
  const int e_degree = even ? 2 * m - 1 : m;

  std::vector<GeneratorSpec> gens = {{"a", 2}, {"b", 2}, {"c", 3}, {"d", 4}, {"e", e_degree}};
  std::vector<Raw> relations;
  relations.push_back({abcde(2, 1, 0, 0, 0, 0)});  // 2a
  relations.push_back({abcde(2, 0, 1, 0, 0, 0)});  // 2b
  relations.push_back({abcde(2, 0, 0, 1, 0, 0)});  // 2c
  relations.push_back({abcde(4, 0, 0, 0, 1, 0)});  // 4d
  relations.push_back({abcde(1, 0, 2, 0, 0, 0), abcde(-1, 1, 1, 0, 0, 0)});  // b^2 = ab
  relations.push_back({abcde(1, 0, 0, 2, 0, 0), abcde(-1, 1, 0, 0, 1, 0)});  // c^2 = ad

  if (even) {
    relations.push_back(binomial_sum(t - 1, 0, 0, 1, 0));  // a^i c d^j, i+2j = t-1
    {
      Raw rel = binomial_sum(t, 0, 1, 0, 0);  // a^i b d^j, i+2j = t
      if (t % 2 == 1) append_rhs_2d_power(rel, (t + 1) / 2);
      relations.push_back(std::move(rel));
    }
    relations.push_back(binomial_sum(t, 1, 0, 0, 0));  // a^{i+1} d^j, i+2j = t
    relations.push_back(binomial_sum(t, 0, 0, 1, 0));  // a^i c d^j, i+2j = t
    {
      Raw rel = binomial_sum(t - 1, 0, 1, 0, 1);  // a^i b d^{j+1}, i+2j = t-1
      if (t % 2 == 0) append_rhs_2d_power(rel, (t + 2) / 2);
      relations.push_back(std::move(rel));
    }
    relations.push_back({abcde(1, 0, 0, 0, t, 0)});  // d^t
    // e * epsilon for epsilon in {a, b, c, d, e}
    relations.push_back({abcde(1, 1, 0, 0, 0, 1)});
    relations.push_back({abcde(1, 0, 1, 0, 0, 1)});
    relations.push_back({abcde(1, 0, 0, 1, 0, 1)});
    relations.push_back({abcde(1, 0, 0, 0, 1, 1)});
    relations.push_back({abcde(1, 0, 0, 0, 0, 2)});
  } else {
    const int l = ring.l, kappa = ring.kappa;
    {
      Raw rel = binomial_sum(t, 0, 1, 0, 0);  // a^i b d^j, i+2j = t
      if (t % 2 == 1) append_rhs_2d_power(rel, (t + 1) / 2);
      relations.push_back(std::move(rel));
    }
    relations.push_back(binomial_sum(t, 1, 0, 0, 0));
    relations.push_back(binomial_sum(t, 0, 0, 1, 0));
    {
      Raw rel = binomial_sum(t + 1, 0, 1, 0, 0);  // a^i b d^j, i+2j = t+1
      if (t % 2 == 0) append_rhs_2d_power(rel, (t + 2) / 2);
      relations.push_back(std::move(rel));
    }
    relations.push_back(binomial_sum(t + 1, 1, 0, 0, 0));
    relations.push_back(binomial_sum(t + 1, 0, 0, 1, 0));
    relations.push_back({abcde(1, 0, 0, 0, t + 1, 0)});  // d^{t+1}

    relations.push_back({abcde(1, 0, 0, 0, 0, 2)});  // e^2
    {
      // mu e = kappa b^kappa c d^l for mu in {a, b}
      Raw ae = {abcde(1, 1, 0, 0, 0, 1)};
      Raw be = {abcde(1, 0, 1, 0, 0, 1)};
      if (kappa == 1) {
        ae.push_back(abcde(-1, 0, 1, 1, l, 0));
        be.push_back(abcde(-1, 0, 1, 1, l, 0));
      }
      relations.push_back(std::move(ae));
      relations.push_back(std::move(be));
    }
    if (!opts.omit_ce_relation) {
      // ce = eta d^{l+1}, eta = b when kappa = 1, else 2
      Raw ce = {abcde(1, 0, 0, 1, 0, 1)};
      if (kappa == 1)
        ce.push_back(abcde(-1, 0, 1, 0, l + 1, 0));
      else
        ce.push_back(abcde(-2, 0, 0, 0, l + 1, 0));
      relations.push_back(std::move(ce));
    }
    {
      // de = sum_{i=1}^{l} binom(t-i, i-1) a^{t-2i} b c d^i
      Raw de = {abcde(1, 0, 0, 0, 1, 1)};
      for (int i = 1; i <= l; ++i)
        de.push_back(abcde(-binom_exact(t - i, i - 1), t - 2 * i, 1, 1, i, 0));
      relations.push_back(std::move(de));
    }
    ring.ce_relation_included = !opts.omit_ce_relation;
    ring.ce_coefficient_caveat = (m == 5);
  }
  if (even) ring.ce_relation_included = true;

  int bound = opts.degree_bound_override > 0 ? opts.degree_bound_override : 2 * m;
  std::string id = "config-int-m" + std::to_string(m);
  if (opts.omit_ce_relation) id += "-no-ce";
  ring.presentation = Presentation::create(std::move(id), CoefficientMode::integer,
                                           std::move(gens), std::move(relations), bound);
  return ring;
}

RingElement sq1(const RingElement& e) {
  const auto& pres = e.presentation();
  if (!pres) throw std::invalid_argument("sq1: element has no presentation");
  if (pres->mode() != CoefficientMode::mod2 || !pres->has_sq1())
    throw std::invalid_argument("sq1: presentation declares no Sq^1 action");
  RingElement out = pres->zero(e.degree() + 1);
  for (const auto& [mon, coeff] : e.terms()) {
    for (std::size_t i = 0; i < mon.size(); ++i) {
      if (mon.exponent(i) % 2 == 0) continue;  // Leibniz coefficient vanishes mod 2
      std::vector<int> base = mon.exponents();
      base[i] -= 1;
      out += coeff * (pres->element(Int(1), std::move(base)) * pres->sq1_of_generator(i));
    }
  }
  return out;
}

bool verify_sq1_ideal_invariance(int r) {
  for (const auto& pres : {build_grassmann_mod2(r).presentation,
                           build_unordered_config_mod2(r).presentation}) {
    for (std::size_t i = 0; i < pres->relation_count(); ++i)
      if (!is_zero(sq1(pres->relation(i)))) return false;
  }
  return true;
}

NilpotencyResult height_of_b(int m, const IntegralOptions& opts) {
  IntegralConfigRing ring = build_integral(m, opts);
  int bound = opts.degree_bound_override > 0 ? opts.degree_bound_override
                                             : ring.presentation->default_degree_bound();
  HeightResult h = height(ring.presentation->generator("b"), bound);
  return {h.height + 1, h.status};
}

HeightResult height_of_v(int r, int degree_bound_override) {
  Mod2ConfigRing ring = build_unordered_config_mod2(r);
  int bound = degree_bound_override > 0 ? degree_bound_override
                                        : ring.presentation->default_degree_bound();
  return height(ring.presentation->generator("v"), bound);
}

int expected_nilindex_of_b(int m) {
  if (m < 2) throw std::invalid_argument("expected_nilindex_of_b: m must be >= 2");
  int e = 0;
  while ((1 << (e + 1)) <= m) ++e;
  return (m == (1 << e)) ? (1 << e) : (1 << e) + 1;
}

int expected_height_of_v(int r) {
  if (r < 2) throw std::invalid_argument("expected_height_of_v: r must be >= 2");
  int k = 0;
  while ((1 << (k + 1)) < r) ++k;  // r = 2^k + s with 1 <= s <= 2^k
  return (1 << (k + 1)) - 1;
}

std::vector<IdentityCheck> integral_identity_checks(const IntegralConfigRing& ring) {
  std::vector<IdentityCheck> checks;
  const auto& pres = ring.presentation;
  const int m = ring.m, t = ring.t;
  auto a = pres->generator("a");
  auto b = pres->generator("b");
  auto d = pres->generator("d");

  auto add = [&](std::string what, bool holds) {
    checks.push_back({std::move(what), holds});
  };

  NilpotencyResult nil = height_of_b(m);
  {
    std::ostringstream os;
    os << "nilindex(b) = " << expected_nilindex_of_b(m) << " (engine: " << nil.nilindex
       << (nil.status == HeightStatus::exact ? ", exact" : ", bound reached") << ")";
    add(os.str(), nil.status == HeightStatus::exact && nil.nilindex == expected_nilindex_of_b(m));
  }

  // m = 2^e + 1 with e >= 2  <=>  m - 1 is a power of two and m >= 5
  const bool m_is_pow2_plus1 = m >= 5 && ((m - 1) & (m - 2)) == 0;
  const bool m_is_pow2_minus1 = m >= 3 && ((m + 1) & m) == 0;  // m = 2^{e+1} - 1

  if (m_is_pow2_plus1) {
    // t = 2^{e-1} is even here
    add("a^(t-1)*b*d = 2*d^((t+2)/2)",
        equal_elements(a.pow(t - 1) * b * d, Int(2) * d.pow((t + 2) / 2)));
    add("a^t*b*d = 0", is_zero(a.pow(t) * b * d));
    add("b^(2t) = a^(2t-1)*b", equal_elements(b.pow(2 * t), a.pow(2 * t - 1) * b));
    add("b^(2t) = 2*d^t", equal_elements(b.pow(2 * t), Int(2) * d.pow(t)));
    add("2*d^t != 0", !is_zero(Int(2) * d.pow(t)));
    add("b^(2t+1) = 0", is_zero(b.pow(2 * t + 1)));
  }
  if (m_is_pow2_minus1) {
    // t = 2^e - 1 is odd here
    add("b^(t+1) = a^t*b", equal_elements(b.pow(t + 1), a.pow(t) * b));
    add("b^(t+1) = 2*d^((t+1)/2)", equal_elements(b.pow(t + 1), Int(2) * d.pow((t + 1) / 2)));
    add("2*d^((t+1)/2) != 0", !is_zero(Int(2) * d.pow((t + 1) / 2)));
    add("b^(t+2) = 0", is_zero(b.pow(t + 2)));
  }
  return checks;
}

}  // namespace confcoh
