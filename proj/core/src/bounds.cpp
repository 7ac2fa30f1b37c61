#include "confcoh/bounds.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "confcoh/presentations.hpp"

#include "json.hpp"

namespace confcoh {

std::string to_string(BoundKind k) {
  switch (k) {
    case BoundKind::lower: return "lower";
    case BoundKind::upper: return "upper";
    case BoundKind::exact: return "exact";
  }
  return "?";
}

std::string to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::engine_verified: return "engine-verified";
    case WitnessKind::formula_only: return "formula-only";
    case WitnessKind::cited: return "cited";
    case WitnessKind::arithmetic: return "arithmetic";
  }
  return "?";
}

namespace {

std::string quantity_E(long long k) { return "E(" + std::to_string(k) + ")"; }
std::string quantity_N(long long k) { return "N(" + std::to_string(k) + ")"; }
std::string quantity_ias(long long k) { return "I_as(RP" + std::to_string(k) + ")"; }

// provenance cell in the rendered tables: "[Thm 16, engine-verified]" etc.
std::string provenance_cell(const BoundRecord& rec) {
  std::string suffix;
  switch (rec.witness) {
    case WitnessKind::engine_verified: suffix = "engine-verified"; break;
    case WitnessKind::formula_only: suffix = "formula-only"; break;
    case WitnessKind::cited:
      if (rec.witness_ref.find("Rees") != std::string::npos) suffix = "cites Rees";
      break;
    case WitnessKind::arithmetic: break;
  }
  return suffix.empty() ? "[" + rec.provenance + "]" : "[" + rec.provenance + ", " + suffix + "]";
}

}  // namespace

std::vector<BoundRecord> chain_for(int k) {
  if (k < 2) throw std::invalid_argument("chain_for: k must be >= 2");
  const long long lower_e = k + 2;
  const long long cap = (k % 2 == 1) ? 2 * k - 1 : 2 * k;  // cap on N(k+1) - 1
  const std::string poly_witness =
      (k % 2 == 1) ? "complex_poly_mult(" + std::to_string(k + 1) + ")"
                   : "real_poly_mult(" + std::to_string(k + 1) + ")";

  std::vector<BoundRecord> out;
  if (lower_e == cap) {
    // the two ends of k+2 <= E(k) <= N(k+1)-1 <= cap meet
    out.push_back({quantity_E(k), BoundKind::exact, cap, "Thm 4", WitnessKind::arithmetic,
                   "squeeze: non-embedding lower bound meets the polynomial-product cap"});
    out.push_back({quantity_N(k + 1), BoundKind::exact, cap + 1, "Thm 4", WitnessKind::arithmetic,
                   "squeeze via " + poly_witness});
    return out;
  }
  out.push_back({quantity_E(k), BoundKind::lower, lower_e, "Thm 4", WitnessKind::cited,
                 "Hopf non-embedding (Thm 3): RP^k has no Euclidean model in R^{k+1}"});
  out.push_back({quantity_E(k), BoundKind::upper, cap, "Thm 4", WitnessKind::cited,
                 "Hopf construction on " + poly_witness + ", one dimension dropped"});
  out.push_back({quantity_N(k + 1), BoundKind::lower, lower_e + 1, "Thm 4",
                 WitnessKind::arithmetic, "E(k) <= N(k+1) - 1 rearranged"});
  out.push_back({quantity_N(k + 1), BoundKind::upper, cap + 1, "Thm 4", WitnessKind::cited,
                 "construction " + poly_witness});
  return out;
}

BoundRecord ias_lower_bound(int m_exp, bool run_engine) {
  if (m_exp < 1) throw std::invalid_argument("ias_lower_bound: m_exp must be >= 1");
  const int m = (1 << m_exp) + 1;
  const long long value = (1LL << (m_exp + 1)) + 1;
  BoundRecord rec{quantity_ias(m), BoundKind::lower, value, "Thm 14", WitnessKind::formula_only,
                  ""};

  const bool feasible = m_exp <= 3;  // larger rings exceed the desk-scale budget
  if (run_engine && feasible) {
    NilpotencyResult nil = height_of_b(m);
    std::ostringstream os;
    os << "height_of_b(" << m << "): nilindex=" << nil.nilindex << " status="
       << (nil.status == HeightStatus::exact ? "exact" : "bound_reached");
    if (nil.status == HeightStatus::exact) {
      if (nil.nilindex != expected_nilindex_of_b(m))
        throw std::logic_error("ias_lower_bound: engine nilindex contradicts the formula");
      rec.witness = WitnessKind::engine_verified;
      os << "; b^" << (m - 1) << " != 0 witnesses the bound";
    }
    rec.witness_ref = os.str();
  } else {
    rec.witness_ref = "engine run skipped; value from the nilpotency formula";
  }
  return rec;
}

std::vector<BoundRecord> closed_chain(int m_exp, bool run_engine) {
  if (m_exp < 1) throw std::invalid_argument("closed_chain: m_exp must be >= 1");
  const long long k = (1LL << m_exp) + 1;  // odd
  BoundRecord lower = ias_lower_bound(m_exp, run_engine);

  // upper end of the squeeze: N(k+1) - 1 <= 2k - 1 for odd k
  const long long cap = 2 * k - 1;
  if (lower.value != cap)
    throw std::logic_error("closed_chain: squeeze failed, lower end " +
                           std::to_string(lower.value) + " != cap " + std::to_string(cap));

  const WitnessKind witness = lower.witness;
  const std::string ref = lower.witness_ref + "; cap 2k-1 = " + std::to_string(cap) +
                          " from the complex polynomial product";
  std::vector<BoundRecord> out;
  out.push_back(lower);
  out.push_back({quantity_E(k), BoundKind::exact, cap, "Thm 16", witness, ref});
  out.push_back({quantity_ias(k), BoundKind::exact, cap, "Thm 16", witness, ref});
  out.push_back({quantity_N(k + 1), BoundKind::exact, cap + 1, "Thm 16", witness, ref});
  return out;
}

std::vector<BoundRecord> rees_corollary(bool run_engine) {
  std::vector<BoundRecord> out;
  out.push_back(ias_lower_bound(2, run_engine));  // I_as(RP5) >= 9
  out.push_back({quantity_ias(6), BoundKind::lower, 9, "Cor 15", WitnessKind::arithmetic,
                 "monotonicity: I_as(RP5) <= I_as(RP6)"});
  out.push_back({quantity_ias(6), BoundKind::upper, 9, "Cor 15", WitnessKind::cited,
                 "Rees: antisymmetric map for RP^6 into S^8 exists"});
  out.push_back({quantity_ias(5), BoundKind::upper, 9, "Cor 15", WitnessKind::cited,
                 "monotonicity against the Rees RP^6 bound"});
  out.push_back({quantity_ias(5), BoundKind::exact, 9, "Cor 15", WitnessKind::cited,
                 "Thm 14 lower bound + Rees upper bound via monotonicity"});
  out.push_back({quantity_ias(6), BoundKind::exact, 9, "Cor 15", WitnessKind::cited,
                 "Thm 14 lower bound via monotonicity + Rees upper bound"});
  return out;
}

BoundsTable::BoundsTable(std::vector<BoundRecord> records) : records_(std::move(records)) {
  validate();
}

void BoundsTable::validate() const {
  struct Range {
    long long lo = std::numeric_limits<long long>::min();
    long long hi = std::numeric_limits<long long>::max();
    std::optional<long long> exact;
  };
  std::map<std::string, Range> by_quantity;
  for (const auto& rec : records_) {
    Range& r = by_quantity[rec.quantity];
    switch (rec.kind) {
      case BoundKind::lower: r.lo = std::max(r.lo, rec.value); break;
      case BoundKind::upper: r.hi = std::min(r.hi, rec.value); break;
      case BoundKind::exact:
        if (r.exact && *r.exact != rec.value)
          throw std::logic_error("bounds table: conflicting exact values for " + rec.quantity);
        r.exact = rec.value;
        break;
    }
  }
  for (const auto& [quantity, r] : by_quantity) {
    if (r.lo > r.hi)
      throw std::logic_error("bounds table: lower bound exceeds upper bound for " + quantity);
    if (r.exact && (*r.exact < r.lo || *r.exact > r.hi))
      throw std::logic_error("bounds table: exact value outside bounds for " + quantity);
  }
}

std::string BoundsTable::to_json(std::uint64_t seed) const {
  nlohmann::ordered_json doc;
  doc["schema_version"] = 1;
  doc["seed"] = seed;
  doc["records"] = nlohmann::ordered_json::array();
  for (const auto& rec : records_) {
    nlohmann::ordered_json row;
    row["quantity"] = rec.quantity;
    row["kind"] = to_string(rec.kind);
    row["value"] = rec.value;
    row["provenance"] = rec.provenance;
    row["witness"] = to_string(rec.witness);
    row["witness_ref"] = rec.witness_ref;
    doc["records"].push_back(std::move(row));
  }
  return doc.dump(2) + "\n";
}

std::string BoundsTable::to_csv() const {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream os;
  os << "quantity,kind,value,provenance,witness,witness_ref\n";
  for (const auto& rec : records_)
    os << rec.quantity << "," << to_string(rec.kind) << "," << rec.value << ","
       << quote(rec.provenance) << "," << to_string(rec.witness) << "," << quote(rec.witness_ref)
       << "\n";
  return os.str();
}

std::string BoundsTable::to_markdown() const {
  const std::vector<std::string> headers = {"quantity", "kind", "value", "provenance",
                                            "witness-ref"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& rec : records_)
    rows.push_back({rec.quantity, to_string(rec.kind), std::to_string(rec.value),
                    provenance_cell(rec), rec.witness_ref});
  std::vector<std::size_t> width(headers.size());
  for (std::size_t c = 0; c < headers.size(); ++c) width[c] = headers[c].size();
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());

  auto emit_row = [&](const std::vector<std::string>& row, std::ostringstream& os) {
    os << "|";
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << " " << row[c] << std::string(width[c] - row[c].size(), ' ') << " |";
    }
    os << "\n";
  };
  std::ostringstream os;
  emit_row(headers, os);
  os << "|";
  for (std::size_t c = 0; c < headers.size(); ++c) os << std::string(width[c] + 2, '-') << "|";
  os << "\n";
  for (const auto& row : rows) emit_row(row, os);
  return os.str();
}

BoundsTable bounds_table(int m_exp_max, bool run_engine) {
  if (m_exp_max < 1) throw std::invalid_argument("bounds_table: m_exp_max must be >= 1");
  std::vector<BoundRecord> records;
  for (int k : {2, 3})
    for (auto& rec : chain_for(k)) records.push_back(std::move(rec));
  for (int m_exp = 1; m_exp <= m_exp_max; ++m_exp)
    for (auto& rec : closed_chain(m_exp, run_engine)) records.push_back(std::move(rec));
  for (auto& rec : rees_corollary(run_engine)) records.push_back(std::move(rec));
  return BoundsTable(std::move(records));
}

}  // namespace confcoh
