#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace confcoh {

enum class BoundKind { lower, upper, exact };

/// How a record's value is backed. A value is engine_verified only when this
/// process actually ran the witnessing computation; externally cited facts
/// never carry that mark.
enum class WitnessKind { engine_verified, formula_only, cited, arithmetic };

/// One inequality or exact value among E(k), N(k), I_as(RP^k).
/// E(k): minimal Euclidean dimension embedding RP^k. N(k): minimal target
/// dimension of a nonsingular symmetric bilinear map on R^k. I_as(RP^k):
/// minimal n admitting an antisymmetric map to S^{n-1} (records store n).
struct BoundRecord {
  std::string quantity;  // "E(5)", "N(6)", "I_as(RP5)"
  BoundKind kind = BoundKind::exact;
  long long value = 0;
  std::string provenance;   // citation label, e.g. "Thm 16"
  WitnessKind witness = WitnessKind::cited;
  std::string witness_ref;  // detail, e.g. "height_of_b(5): nilindex=5 exact"
};

std::string to_string(BoundKind k);
std::string to_string(WitnessKind k);

/// k+2 <= E(k) <= N(k+1)-1 <= 2k-1 (k odd) / 2k (k even); records collapse
/// to exact values when the two ends meet (k = 2, 3). Requires k >= 2.
std::vector<BoundRecord> chain_for(int k);

/// I_as(RP^{2^m+1}) >= 2^{m+1}+1, witnessed by the nonvanishing of b^{2^m}
/// in the integral ring. engine_verified only when the height computation
/// actually returned nilindex 2^m + 1; otherwise formula_only.
BoundRecord ias_lower_bound(int m_exp, bool run_engine);

/// Exact E(2^m+1) = I_as(RP^{2^m+1}) = 2^{m+1}+1 and N(2^m+2) = 2^{m+1}+2.
/// Both ends of the squeeze are recomputed and must meet; throws
/// std::logic_error otherwise.
std::vector<BoundRecord> closed_chain(int m_exp, bool run_engine);

/// I_as(RP^5) = I_as(RP^6) = 9: engine lower bound for RP^5, cited upper
/// bound for RP^6 (Rees), monotonicity closing the square.
std::vector<BoundRecord> rees_corollary(bool run_engine);

class BoundsTable {
public:
  explicit BoundsTable(std::vector<BoundRecord> records);

  const std::vector<BoundRecord>& records() const { return records_; }

  /// lower <= upper per quantity and exact records agree; throws
  /// std::logic_error on internal inconsistency.
  void validate() const;

  std::string to_json(std::uint64_t seed) const;
  std::string to_csv() const;
  std::string to_markdown() const;

private:
  std::vector<BoundRecord> records_;
};

/// Full table: the k = 2, 3 chains, closed chains for m_exp = 1..m_exp_max
/// with their lower-bound witnesses, and the Rees rows. Engine verification
/// is attempted for m_exp <= 3 when run_engine is set (larger parameters are
/// marked formula_only).
BoundsTable bounds_table(int m_exp_max, bool run_engine);

}  // namespace confcoh
