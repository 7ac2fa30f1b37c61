#include <algorithm>

#include "confcoh/bounds.hpp"
#include "doctest.h"

using namespace confcoh;

namespace {

const BoundRecord* find(const std::vector<BoundRecord>& records, const std::string& quantity,
                        BoundKind kind) {
  auto it = std::find_if(records.begin(), records.end(), [&](const BoundRecord& r) {
    return r.quantity == quantity && r.kind == kind;
  });
  return it == records.end() ? nullptr : &*it;
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("chains collapse to exact values for k = 2, 3") {
  auto k2 = chain_for(2);
  auto e2 = find(k2, "E(2)", BoundKind::exact);
  auto n3 = find(k2, "N(3)", BoundKind::exact);
  REQUIRE(e2);
  REQUIRE(n3);
  CHECK(e2->value == 4);
  CHECK(n3->value == 5);

  auto k3 = chain_for(3);
  auto e3 = find(k3, "E(3)", BoundKind::exact);
  auto n4 = find(k3, "N(4)", BoundKind::exact);
  REQUIRE(e3);
  REQUIRE(n4);
  CHECK(e3->value == 5);
  CHECK(n4->value == 6);
}

TEST_CASE("open chain for k = 4") {
  auto records = chain_for(4);
  auto lower = find(records, "E(4)", BoundKind::lower);
  auto upper = find(records, "E(4)", BoundKind::upper);
  auto n_upper = find(records, "N(5)", BoundKind::upper);
  REQUIRE(lower);
  REQUIRE(upper);
  REQUIRE(n_upper);
  CHECK(lower->value == 6);
  CHECK(upper->value == 8);   // even cap 2k
  CHECK(n_upper->value == 9);
  CHECK(find(records, "E(4)", BoundKind::exact) == nullptr);
}

TEST_CASE("odd/even caps match the construction dimensions") {
  for (int k = 2; k <= 9; ++k) {
    auto records = chain_for(k);
    long long cap = (k % 2 == 1) ? 2 * k - 1 : 2 * k;
    bool exact = (k + 2 == cap);
    if (exact) {
      auto rec = find(records, "E(" + std::to_string(k) + ")", BoundKind::exact);
      REQUIRE(rec);
      CHECK(rec->value == cap);
    } else {
      auto rec = find(records, "E(" + std::to_string(k) + ")", BoundKind::upper);
      REQUIRE(rec);
      CHECK(rec->value == cap);
    }
  }
}

TEST_CASE("antisymmetric-index lower bounds") {
  SUBCASE("engine verified for m_exp = 2") {
    BoundRecord rec = ias_lower_bound(2, true);
    CHECK(rec.quantity == "I_as(RP5)");
    CHECK(rec.kind == BoundKind::lower);
    CHECK(rec.value == 9);
    CHECK(rec.witness == WitnessKind::engine_verified);
    CHECK(rec.witness_ref.find("nilindex=5") != std::string::npos);
  }
  SUBCASE("formula only when the engine is skipped") {
    BoundRecord rec = ias_lower_bound(2, false);
    CHECK(rec.value == 9);
    CHECK(rec.witness == WitnessKind::formula_only);
  }
  SUBCASE("values for other exponents") {
    CHECK(ias_lower_bound(1, true).value == 5);
    CHECK(ias_lower_bound(1, true).quantity == "I_as(RP3)");
    CHECK(ias_lower_bound(3, false).value == 17);
    CHECK(ias_lower_bound(4, false).witness == WitnessKind::formula_only);
  }
}

TEST_CASE("closed chains") {
  SUBCASE("m_exp = 2") {
    auto records = closed_chain(2, true);
    auto e5 = find(records, "E(5)", BoundKind::exact);
    auto n6 = find(records, "N(6)", BoundKind::exact);
    auto ias5 = find(records, "I_as(RP5)", BoundKind::exact);
    REQUIRE(e5);
    REQUIRE(n6);
    REQUIRE(ias5);
    CHECK(e5->value == 9);
    CHECK(n6->value == 10);
    CHECK(ias5->value == 9);
    CHECK(e5->witness == WitnessKind::engine_verified);
  }
  SUBCASE("m_exp = 1 agrees with the direct chain") {
    auto records = closed_chain(1, true);
    CHECK(find(records, "E(3)", BoundKind::exact)->value == 5);
    CHECK(find(records, "N(4)", BoundKind::exact)->value == 6);
  }
  SUBCASE("squeeze arithmetic for larger exponents") {
    for (int m_exp = 1; m_exp <= 6; ++m_exp) {
      auto records = closed_chain(m_exp, false);
      long long k = (1LL << m_exp) + 1;
      auto e = find(records, "E(" + std::to_string(k) + ")", BoundKind::exact);
      REQUIRE(e);
      CHECK(e->value == 2 * k - 1);  // the odd cap meets the lower bound
      CHECK(e->value == (1LL << (m_exp + 1)) + 1);
    }
  }
}

TEST_CASE("rees corollary rows") {
  auto records = rees_corollary(true);
  auto ias5 = find(records, "I_as(RP5)", BoundKind::exact);
  auto ias6 = find(records, "I_as(RP6)", BoundKind::exact);
  REQUIRE(ias5);
  REQUIRE(ias6);
  CHECK(ias5->value == 9);
  CHECK(ias6->value == 9);
  CHECK(ias6->witness == WitnessKind::cited);
  CHECK(ias6->witness_ref.find("Rees") != std::string::npos);
  // monotonicity bookkeeping: lower on RP6 and upper on RP5
  CHECK(find(records, "I_as(RP6)", BoundKind::lower) != nullptr);
  CHECK(find(records, "I_as(RP5)", BoundKind::upper) != nullptr);
}

TEST_CASE("table validation rejects inconsistencies") {
  std::vector<BoundRecord> bad = {
      {"E(9)", BoundKind::lower, 17, "x", WitnessKind::arithmetic, ""},
      {"E(9)", BoundKind::upper, 16, "x", WitnessKind::arithmetic, ""},
  };
  CHECK_THROWS_AS(BoundsTable(std::move(bad)), std::logic_error);

  std::vector<BoundRecord> conflicting = {
      {"E(9)", BoundKind::exact, 17, "x", WitnessKind::arithmetic, ""},
      {"E(9)", BoundKind::exact, 18, "x", WitnessKind::arithmetic, ""},
  };
  CHECK_THROWS_AS(BoundsTable(std::move(conflicting)), std::logic_error);
}

TEST_CASE("full table renders in all formats") {
  BoundsTable table = bounds_table(2, true);
  const auto& records = table.records();
  CHECK(find(records, "E(5)", BoundKind::exact)->value == 9);
  CHECK(find(records, "N(6)", BoundKind::exact)->value == 10);
  CHECK(find(records, "I_as(RP6)", BoundKind::exact)->value == 9);

  std::string md = table.to_markdown();
  CHECK(md.find("E(5)") != std::string::npos);
  CHECK(md.find("[Thm 16, engine-verified]") != std::string::npos);
  CHECK(md.find("[Cor 15, cites Rees]") != std::string::npos);
  CHECK(md.find("[Thm 4]") != std::string::npos);

  std::string csv = table.to_csv();
  CHECK(csv.find("quantity,kind,value,provenance,witness,witness_ref") == 0);
  CHECK(csv.find("E(5),exact,9") != std::string::npos);

  std::string json = table.to_json(0);
  CHECK(json.find("\"schema_version\": 1") != std::string::npos);
  CHECK(json.find("\"quantity\": \"E(5)\"") != std::string::npos);

  // byte-identical rendering across calls
  CHECK(md == bounds_table(2, true).to_markdown());
}

}  // TEST_SUITE
