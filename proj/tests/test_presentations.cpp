#include <random>
#include <set>

#include "confcoh/presentations.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace confcoh;

namespace {

std::set<std::string> relation_texts(const Presentation& p) {
  std::set<std::string> out;
  for (std::size_t i = 0; i < p.relation_count(); ++i) out.insert(p.relation(i).to_string());
  return out;
}

}  // namespace

TEST_SUITE("presentations") {

TEST_CASE("exact binomials against the factorial oracle") {
  CHECK(oracles::factorial_binomial(5, 2) == 10);
  CHECK(binom_exact(5, 2) == 10);
  CHECK(binom_exact(7, 0) == 1);
  CHECK(binom_exact(0, 0) == 1);
  CHECK(binom_exact(3, 5) == 0);
  for (long long n = 0; n <= 20; ++n)
    for (long long k = 0; k <= 20; ++k)
      CHECK(binom_exact(n, k) == oracles::factorial_binomial(n, k));
}

TEST_CASE("binom_mod2 agrees with the exact binomial mod 2") {
  for (std::uint64_t n = 0; n <= 64; ++n)
    for (std::uint64_t k = 0; k <= 64; ++k) {
      INFO("n=", n, " k=", k);
      CHECK(Int(binom_mod2(n, k) ? 1 : 0) == binom_exact(n, k) % 2);
    }
  CHECK(binom_mod2(17, 17));
  CHECK_FALSE(binom_mod2(4, 2));
}

TEST_CASE("power-of-two binomial congruences") {
  // Coefficients binom(2^{e-1}-k, k-1) and binom(2^e-k, k-1) of the
  // nilpotency recursions vanish mod 2 for every summation term (k >= 2;
  // the k = 1 binomial is the leading monomial itself and equals 1).
  for (int e = 2; e <= 8; ++e) {
    const std::int64_t half = std::int64_t(1) << (e - 1);
    const std::int64_t full = std::int64_t(1) << e;
    for (std::int64_t k = 2; half - k >= 0; ++k) {
      INFO("e=", e, " k=", k);
      CHECK_FALSE(binom_mod2(half - k, k - 1));
      CHECK(binom_exact(half - k, k - 1) % 2 == 0);
    }
    for (std::int64_t k = 2; full - k >= 0; ++k) {
      INFO("e=", e, " k=", k);
      CHECK_FALSE(binom_mod2(full - k, k - 1));
      CHECK(binom_exact(full - k, k - 1) % 2 == 0);
    }
  }
}

TEST_CASE("grassmann presentation expands the binomial sums") {
  SUBCASE("r = 4") {
    auto ring = build_grassmann_mod2(4);
    // v^3 + 2vw drops the even term; v^4 + 3v^2 w + w^2 keeps it mod 2
    CHECK(relation_texts(*ring.presentation) ==
          std::set<std::string>{"v^3", "v^4 + v^2*w + w^2"});
  }
  SUBCASE("r = 2 degenerates") {
    auto ring = build_grassmann_mod2(2);
    CHECK(relation_texts(*ring.presentation) == std::set<std::string>{"v", "v^2 + w"});
    // the ring collapses to F2 in degree 0
    CHECK(ring.presentation->piece(0)->f2_dimension == 1);
    CHECK(ring.presentation->piece(1)->f2_dimension == 0);
    CHECK(ring.presentation->piece(2)->f2_dimension == 0);
  }
  SUBCASE("r = 5 total dimension is the number of cells") {
    auto ring = build_grassmann_mod2(5);
    std::size_t total = 0;
    for (int d = 0; d <= 8; ++d) {
      std::size_t dim = ring.presentation->piece(d)->f2_dimension;
      CAPTURE(d);
      CHECK(dim == oracles::schubert_dim(5, d));
      total += dim;
    }
    CHECK(total == 10);  // binom(5, 2) partitions in a 2 x 3 box
  }
}

TEST_CASE("grassmann dimensions match the cell count for r <= 10") {
  for (int r = 2; r <= 10; ++r) {
    auto ring = build_grassmann_mod2(r);
    for (int d = 0; d <= 2 * (r - 1); ++d) {
      INFO("r=", r, " d=", d);
      CHECK(ring.presentation->piece(d)->f2_dimension == oracles::schubert_dim(r, d));
    }
  }
}

TEST_CASE("configuration ring doubles the grassmann ranks") {
  // free module on {1, u} over the 2-plane ring
  for (int r : {4, 6, 9}) {
    auto config = build_unordered_config_mod2(r);
    auto grass = build_grassmann_mod2(r);
    for (int d = 0; d <= 2 * (r - 1); ++d) {
      std::size_t lower = d > 0 ? grass.presentation->piece(d - 1)->f2_dimension : 0;
      INFO("r=", r, " d=", d);
      CHECK(config.presentation->piece(d)->f2_dimension ==
            grass.presentation->piece(d)->f2_dimension + lower);
    }
  }
}

TEST_CASE("configuration ring relations and height of v") {
  auto ring = build_unordered_config_mod2(5);
  auto u = ring.presentation->generator("u"), v = ring.presentation->generator("v");
  CHECK(is_zero(u * v + u * u));
  HeightResult h = height_of_v(5);
  CHECK(h.height == 7);
  CHECK(h.status == HeightStatus::exact);
  CHECK(height_of_v(4).height == 3);
  CHECK(height_of_v(6).height == 7);
  CHECK(height_of_v(9).height == 15);
}

TEST_CASE("height of v follows the dyadic formula for r <= 12") {
  CHECK(expected_height_of_v(4) == 3);
  CHECK(expected_height_of_v(6) == 7);
  CHECK(expected_height_of_v(9) == 15);
  for (int r = 4; r <= 12; ++r) {
    HeightResult h = height_of_v(r);
    CAPTURE(r);
    CHECK(h.status == HeightStatus::exact);
    CHECK(h.height == expected_height_of_v(r));
  }
}

TEST_CASE("integral builder parameters and relation lists") {
  SUBCASE("m = 5: t = 2, l = 1, kappa = 0") {
    auto ring = build_integral(5);
    CHECK(ring.t == 2);
    CHECK(ring.l == 1);
    CHECK(ring.kappa == 0);
    CHECK(ring.ce_coefficient_caveat);
    auto texts = relation_texts(*ring.presentation);
    for (const char* expected :
         {"2*a", "2*b", "2*c", "4*d", "a*e", "b*e", "c*e - 2*d^2", "-b*c*d + d*e", "e^2",
          "d^3", "a^3*b + 2*a*b*d - 2*d^2"}) {
      CAPTURE(expected);
      CHECK(texts.count(expected) == 1);
    }
  }
  SUBCASE("m = 4: d^t = d^2 vanishes") {
    auto ring = build_integral(4);
    CHECK(ring.t == 2);
    CHECK(relation_texts(*ring.presentation).count("d^2") == 1);
    auto d = ring.presentation->generator("d");
    CHECK(is_zero(d * d));
  }
  SUBCASE("m = 5: d^{t+1} = d^3 vanishes") {
    auto d = build_integral(5).presentation->generator("d");
    CHECK(is_zero(d.pow(3)));
    CHECK_FALSE(is_zero(d.pow(2)));
  }
  SUBCASE("m = 7: kappa = 1 couples e to b, c, d") {
    auto ring = build_integral(7);
    CHECK(ring.t == 3);
    CHECK(ring.l == 1);
    CHECK(ring.kappa == 1);
    auto texts = relation_texts(*ring.presentation);
    // mu e = b c d^l and c e = b d^{l+1}
    CHECK(texts.count("a*e - b*c*d") == 1);
    CHECK(texts.count("-b*c*d + b*e") == 1);
    CHECK(texts.count("-b*d^2 + c*e") == 1);
  }
  SUBCASE("small and degenerate cases build") {
    CHECK(build_integral(2).presentation->relation_count() > 0);
    CHECK(build_integral(3).presentation->relation_count() > 0);
    CHECK_THROWS_AS(build_integral(1), std::invalid_argument);
  }
  SUBCASE("omitting the ce relation") {
    auto with = build_integral(5);
    auto without = build_integral(5, {.omit_ce_relation = true});
    CHECK(with.presentation->relation_count() ==
          without.presentation->relation_count() + 1);
    CHECK_FALSE(without.ce_relation_included);
  }
}

TEST_CASE("sq1 acts as the declared derivation") {
  auto ring = build_grassmann_mod2(6);
  auto v = ring.presentation->generator("v"), w = ring.presentation->generator("w");
  CHECK(sq1(w) == v * w);
  CHECK(sq1(v) == v * v);
  CHECK(sq1(v * w).is_structurally_zero());  // v^2 w + v^2 w = 0 over F2

  auto config = build_unordered_config_mod2(5);
  auto u = config.presentation->generator("u");
  CHECK(sq1(u) == u * u);

  auto integral = build_integral(5).presentation;
  CHECK_THROWS_AS(sq1(integral->generator("a")), std::invalid_argument);
}

TEST_CASE("sq1 is a differential") {
  std::mt19937_64 rng(42);
  for (int r : {4, 5, 7}) {
    auto pres = build_unordered_config_mod2(r).presentation;
    for (int iter = 0; iter < 20; ++iter) {
      int degree = 1 + int(rng() % 6);
      auto monomials = pres->monomials_of_degree(degree);
      if (monomials.empty()) continue;
      RingElement e = pres->zero(degree);
      for (int terms = 0; terms < 3; ++terms)
        e += pres->element(Int(1), monomials[rng() % monomials.size()].exponents());
      if (e.is_structurally_zero()) continue;
      RingElement twice = sq1(sq1(e));
      INFO("r=", r, " e=", e.to_string());
      CHECK(twice.is_structurally_zero());  // cancels already at the polynomial level
      CHECK(is_zero(twice));
    }
  }
}

TEST_CASE("sq1 keeps both ideals invariant") {
  for (int r = 2; r <= 10; ++r) {
    CAPTURE(r);
    CHECK(verify_sq1_ideal_invariance(r));
  }
}

TEST_CASE("nilpotency of b") {
  CHECK(expected_nilindex_of_b(4) == 4);
  CHECK(expected_nilindex_of_b(5) == 5);
  CHECK(expected_nilindex_of_b(6) == 5);
  CHECK(expected_nilindex_of_b(8) == 8);
  CHECK(expected_nilindex_of_b(12) == 9);

  SUBCASE("m = 5") {
    NilpotencyResult nil = height_of_b(5);
    CHECK(nil.nilindex == 5);
    CHECK(nil.status == HeightStatus::exact);
  }
  SUBCASE("m = 6") {
    NilpotencyResult nil = height_of_b(6);
    CHECK(nil.nilindex == 5);
    CHECK(nil.status == HeightStatus::exact);
  }
  SUBCASE("m = 8") {
    NilpotencyResult nil = height_of_b(8);
    CHECK(nil.nilindex == 8);
    CHECK(nil.status == HeightStatus::exact);
  }
}

TEST_CASE("m = 5 nilpotency is independent of the ce relation") {
  NilpotencyResult with = height_of_b(5);
  NilpotencyResult without = height_of_b(5, {.omit_ce_relation = true});
  CHECK(with.nilindex == 5);
  CHECK(without.nilindex == 5);
  CHECK(with.status == HeightStatus::exact);
  CHECK(without.status == HeightStatus::exact);
}

TEST_CASE("identity chains for the dyadic families") {
  SUBCASE("m = 5 (2^e + 1)") {
    for (const auto& check : integral_identity_checks(build_integral(5))) {
      CAPTURE(check.description);
      CHECK(check.holds);
    }
  }
  SUBCASE("m = 7 (2^{e+1} - 1)") {
    auto pres = build_integral(7).presentation;
    auto a = pres->generator("a"), b = pres->generator("b"), d = pres->generator("d");
    // t = 3: b^{t+1} = 2 d^{(t+1)/2} and b^{t+2} = 0
    CHECK(equal_elements(b.pow(4), Int(2) * d.pow(2)));
    CHECK(equal_elements(b.pow(4), a.pow(3) * b));
    CHECK_FALSE(is_zero(b.pow(4)));
    CHECK(is_zero(b.pow(5)));
    for (const auto& check : integral_identity_checks(build_integral(7))) {
      CAPTURE(check.description);
      CHECK(check.holds);
    }
  }
  SUBCASE("m = 15 (2^{e+1} - 1, next family member)") {
    for (const auto& check : integral_identity_checks(build_integral(15))) {
      CAPTURE(check.description);
      CHECK(check.holds);
    }
  }
}

}  // TEST_SUITE
