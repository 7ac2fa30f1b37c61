#include <random>

#include "confcoh/graded_ring.hpp"
#include "confcoh/json_io.hpp"
#include "confcoh/presentations.hpp"
#include "doctest.h"

using namespace confcoh;

namespace {

std::vector<std::vector<int>> basis_exponents(const GradedPiece& piece) {
  std::vector<std::vector<int>> out;
  for (const auto& mon : piece.basis) out.push_back(mon.exponents());
  return out;
}

// Same generators and relations with coefficients read mod 2.
std::shared_ptr<const Presentation> mod2_shadow(const Presentation& p) {
  std::vector<Presentation::RawPolynomial> relations;
  for (std::size_t i = 0; i < p.relation_count(); ++i) {
    Presentation::RawPolynomial raw;
    for (const auto& [mon, coeff] : p.relation(i).terms())
      raw.push_back({coeff, mon.exponents()});
    relations.push_back(std::move(raw));
  }
  return Presentation::create(p.id() + "-mod2", CoefficientMode::mod2, p.generators(),
                              std::move(relations), p.default_degree_bound());
}

// random element of the ideal in the given degree (zero if nothing lands there)
RingElement random_ideal_element(const std::shared_ptr<const Presentation>& pres, int degree,
                                 std::mt19937_64& rng) {
  RingElement out = pres->zero(degree);
  for (std::size_t i = 0; i < pres->relation_count(); ++i) {
    RingElement rel = pres->relation(i);
    int rest = degree - rel.degree();
    if (rest < 0) continue;
    auto monomials = pres->monomials_of_degree(rest);
    if (monomials.empty()) continue;
    if (rng() % 2) continue;
    const Monomial& mu = monomials[rng() % monomials.size()];
    Int coeff = int(rng() % 5) - 2;
    out += coeff * (pres->element(Int(1), mu.exponents()) * rel);
  }
  return out;
}

}  // namespace

TEST_SUITE("graded_ring") {

TEST_CASE("degree-4 basis of the m=5 integral ring") {
  auto pres = build_integral(5).presentation;
  auto piece = pres->piece(4);
  // hand enumeration of degree-4 monomials in a2, b2, c3, d4, e5
  CHECK(basis_exponents(*piece) == std::vector<std::vector<int>>{
                                       {2, 0, 0, 0, 0},  // a^2
                                       {1, 1, 0, 0, 0},  // a*b
                                       {0, 2, 0, 0, 0},  // b^2
                                       {0, 0, 0, 1, 0},  // d
                                   });
}

TEST_CASE("degree zero is Z (or F2) on the empty monomial") {
  auto integral = build_integral(5).presentation->piece(0);
  CHECK(integral->basis.size() == 1);
  CHECK(integral->basis[0].is_one());
  CHECK(integral->structure.free_rank() == 1);
  CHECK(integral->structure.torsion().empty());

  auto mod2 = build_unordered_config_mod2(4).presentation->piece(0);
  CHECK(mod2->f2_dimension == 1);
}

TEST_CASE("degree one of the r=5 configuration ring") {
  auto piece = build_unordered_config_mod2(5).presentation->piece(1);
  CHECK(piece->f2_dimension == 2);
  CHECK(basis_exponents(*piece) ==
        std::vector<std::vector<int>>{{1, 0, 0}, {0, 1, 0}});  // u, v (w has degree 2)
}

TEST_CASE("relations die in the quotient") {
  auto check_all = [](const Presentation& p) {
    for (std::size_t i = 0; i < p.relation_count(); ++i) {
      CAPTURE(p.relation(i).to_string());
      CHECK(is_zero(p.relation(i)));
    }
  };
  check_all(*build_integral(5).presentation);
  check_all(*build_integral(6).presentation);
  check_all(*build_unordered_config_mod2(5).presentation);
  check_all(*build_grassmann_mod2(6).presentation);
}

TEST_CASE("named relation elements reduce to zero") {
  auto p5 = build_integral(5).presentation;
  auto b = p5->generator("b"), a = p5->generator("a");
  CHECK(is_zero(b * b - a * b));

  auto c5 = build_unordered_config_mod2(5).presentation;
  auto u = c5->generator("u"), v = c5->generator("v");
  CHECK(is_zero(u * v + u * u));
}

TEST_CASE("multiplication is the free product before reduction") {
  auto pres = build_integral(5).presentation;
  auto a = pres->generator("a"), b = pres->generator("b"), c = pres->generator("c"),
       d = pres->generator("d");

  CHECK(pres->one() * a == a);
  RingElement ab = a * b;
  CHECK(ab.degree() == 4);
  CHECK(ab.terms().size() == 1);
  CHECK(ab.terms().begin()->first.exponents() == std::vector<int>{1, 1, 0, 0, 0});
  // c^2 - ad is a relation: the products agree only after reduction
  CHECK(c * c != a * d);
  CHECK(equal_elements(c * c, a * d));
}

TEST_CASE("is_zero follows the torsion orders") {
  auto pres = build_integral(5).presentation;
  auto a = pres->generator("a"), d = pres->generator("d");
  CHECK(is_zero(pres->zero(3)));
  CHECK(is_zero(Int(2) * a));
  CHECK_FALSE(is_zero(Int(2) * d));  // d has order 4
  CHECK_FALSE(is_zero(d));
  CHECK(is_zero(Int(4) * d));
}

TEST_CASE("height computations") {
  SUBCASE("b in the m=5 integral ring") {
    auto pres = build_integral(5).presentation;
    HeightResult h = height(pres->generator("b"), 10);
    CHECK(h.height == 4);  // b^4 = 2d^2 != 0, b^5 = 0
    CHECK(h.status == HeightStatus::exact);
  }
  SUBCASE("v in the r=5 mod-2 ring") {
    auto pres = build_unordered_config_mod2(5).presentation;
    HeightResult h = height(pres->generator("v"), 14);
    CHECK(h.height == 7);
    CHECK(h.status == HeightStatus::exact);
  }
  SUBCASE("b in the m=4 integral ring") {
    auto pres = build_integral(4).presentation;
    HeightResult h = height(pres->generator("b"));
    CHECK(h.height == 3);
    CHECK(h.status == HeightStatus::exact);
  }
  SUBCASE("bound_reached when the bound is too small") {
    auto pres = build_integral(5).presentation;
    HeightResult h = height(pres->generator("b"), 6);
    CHECK(h.status == HeightStatus::bound_reached);
    CHECK(h.height == 3);  // b^3 verified nonzero at degree 6, b^4 out of reach
  }
  SUBCASE("degree-zero elements are rejected") {
    auto pres = build_integral(5).presentation;
    CHECK_THROWS_AS(height(pres->one(), 10), std::invalid_argument);
  }
}

TEST_CASE("element identities in the m=5 ring") {
  auto pres = build_integral(5).presentation;
  auto a = pres->generator("a"), b = pres->generator("b"), d = pres->generator("d");
  // t = 2: b^{2t} = 2 d^t and a^{t-1} b d = 2 d^{(t+2)/2}
  CHECK(equal_elements(b.pow(4), Int(2) * d.pow(2)));
  CHECK(equal_elements(a * b * d, Int(2) * d.pow(2)));
  CHECK(equal_elements(b, b));
  CHECK_THROWS_AS(equal_elements(b, d), std::invalid_argument);
}

TEST_CASE("reduce is additive") {
  auto pres = build_integral(5).presentation;
  auto a = pres->generator("a"), b = pres->generator("b");
  auto e1 = Int(3) * (a * a) + b * b;
  auto e2 = a * b - Int(2) * (b * b);
  NormalForm n1 = reduce(e1), n2 = reduce(e2), nsum = reduce(e1 + e2);
  REQUIRE(n1.piece == n2.piece);
  CHECK(nsum.coords == n1.piece->structure.add(n1.coords, n2.coords));
}

TEST_CASE("ideal exactness across all degrees up to the bound") {
  std::mt19937_64 rng(5);
  auto check_products = [&](const Presentation& p) {
    for (std::size_t i = 0; i < p.relation_count(); ++i) {
      RingElement rel = p.relation(i);
      for (int d = rel.degree(); d <= p.default_degree_bound(); ++d) {
        auto monomials = p.monomials_of_degree(d - rel.degree());
        if (monomials.empty()) continue;
        const Monomial& mu = monomials[rng() % monomials.size()];
        RingElement elt = rel.presentation()->element(Int(1), mu.exponents()) * rel;
        INFO("pres=", p.id(), " rel=", i, " d=", d);
        CHECK(is_zero(elt));
      }
    }
  };
  check_products(*build_integral(5).presentation);
  check_products(*build_unordered_config_mod2(5).presentation);
}

TEST_CASE("reduction only depends on the residue class") {
  std::mt19937_64 rng(23);
  auto pres = build_integral(6).presentation;
  auto a = pres->generator("a"), b = pres->generator("b"), c = pres->generator("c");
  RingElement e1 = a * b + Int(3) * (b * b);
  RingElement e2 = a * c;
  for (int iter = 0; iter < 10; ++iter) {
    RingElement noise = random_ideal_element(pres, e1.degree(), rng);
    CHECK(reduce((e1 + noise) * e2) == reduce(e1 * e2));
  }
}

TEST_CASE("height is invariant under ideal perturbation") {
  auto pres = build_integral(5).presentation;
  auto a = pres->generator("a"), b = pres->generator("b");
  HeightResult base = height(b);
  HeightResult shifted = height(b + Int(2) * a);  // 2a = 0 in the ring
  CHECK(base.height == shifted.height);
  CHECK(base.status == shifted.status);
}

TEST_CASE("integer and mod-2 elimination agree degree by degree") {
  // dim_F2 (piece (x) F2) = free rank + torsion count whenever every torsion
  // divisor is even; the shadow presentation reduces the same rows mod 2.
  for (int m : {4, 5, 6}) {
    auto pres = build_integral(m).presentation;
    auto shadow = mod2_shadow(*pres);
    for (int d = 0; d <= pres->default_degree_bound(); ++d) {
      auto piece = pres->piece(d);
      for (const Int& t : piece->structure.torsion()) {
        INFO("m=", m, " d=", d, " divisor=", t.str());
        CHECK(t % 2 == 0);
      }
      auto f2 = shadow->piece(d);
      INFO("m=", m, " d=", d);
      CHECK(piece->structure.free_rank() + piece->structure.torsion().size() ==
            f2->f2_dimension);
    }
  }
}

TEST_CASE("piece construction is deterministic") {
  auto first = build_integral(5).presentation;
  auto second = build_integral(5).presentation;
  for (int d : {4, 8, 10}) {
    CHECK(piece_to_json(*first->piece(d)) == piece_to_json(*second->piece(d)));
  }
  CHECK(presentation_to_json(*first) == presentation_to_json(*second));
}

TEST_CASE("cross-presentation arithmetic is rejected") {
  auto p1 = build_integral(5).presentation;
  auto p2 = build_integral(7).presentation;
  CHECK_THROWS_AS(p1->generator("a") * p2->generator("a"), std::invalid_argument);
  CHECK_THROWS_AS(p1->generator("a") + p2->generator("a"), std::invalid_argument);
}

TEST_CASE("presentation validation") {
  using Raw = Presentation::RawPolynomial;
  SUBCASE("inhomogeneous relations are rejected") {
    CHECK_THROWS_AS(Presentation::create("bad", CoefficientMode::integer, {{"x", 1}, {"y", 2}},
                                         {Raw{{Int(1), {1, 0}}, {Int(1), {0, 1}}}}, 4),
                    std::invalid_argument);
  }
  SUBCASE("duplicate generator names are rejected") {
    CHECK_THROWS_AS(
        Presentation::create("bad", CoefficientMode::integer, {{"x", 1}, {"x", 2}}, {}, 4),
        std::invalid_argument);
  }
  SUBCASE("relations normalizing to zero are dropped") {
    auto p = Presentation::create("ok", CoefficientMode::mod2, {{"x", 1}},
                                  {Raw{{Int(2), {1}}}}, 4);
    CHECK(p->relation_count() == 0);
  }
}

}  // TEST_SUITE
