#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "confcoh/graded_ring.hpp"

namespace confcoh {

/// Exact binomial coefficient; 0 when k > n. Requires n, k >= 0.
Int binom_exact(long long n, long long k);

/// binom(n, k) mod 2 by Lucas: 1 iff every binary digit of k is at most the
/// matching digit of n, i.e. (k & (n - k)) == 0.
bool binom_mod2(std::uint64_t n, std::uint64_t k);

/// Mod-2 cohomology ring of the Grassmannian of unoriented 2-planes in R^r:
/// F2[v, w] with |v| = 1, |w| = 2 modulo two binomial relation sums.
struct Mod2GrassmannRing {
  int r = 0;
  std::shared_ptr<const Presentation> presentation;
};

/// Mod-2 cohomology ring of the unordered configuration space of two points
/// in RP^{r-1}: F2[u, v, w] modulo the Grassmann sums and uv + u^2.
struct Mod2ConfigRing {
  int r = 0;
  std::shared_ptr<const Presentation> presentation;
};

struct IntegralOptions {
  /// Drop the relation expressing c*e (order-of-c*e caveat exploration).
  bool omit_ce_relation = false;
  /// 0 = presentation default (twice the projective-space dimension).
  int degree_bound_override = 0;
};

/// Integral cohomology ring of the unordered configuration space of two
/// points in RP^m, presented on the five classes a, b, c, d, e.
struct IntegralConfigRing {
  int m = 0;
  int t = 0;      // m = 2t or m = 2t + 1
  int l = 0;      // t = 2l + kappa
  int kappa = 0;  // in {0, 1}
  bool ce_relation_included = true;
  /// m = 5 carries an unresolved coefficient in the c*e relation; the
  /// builder uses c*e = 2 d^{l+1} and flags the ring.
  bool ce_coefficient_caveat = false;
  std::shared_ptr<const Presentation> presentation;
};

Mod2GrassmannRing build_grassmann_mod2(int r);           // r >= 2
Mod2ConfigRing build_unordered_config_mod2(int r);       // r >= 2
IntegralConfigRing build_integral(int m, const IntegralOptions& opts = {});  // m >= 2

/// Sq^1 extended from the declared generator values as a derivation.
/// Throws when the presentation has no declared Sq^1 (integral rings).
RingElement sq1(const RingElement& e);

/// True iff Sq^1 of every ideal generator reduces to zero in the quotient,
/// for both the Grassmann and the configuration ring of parameter r.
bool verify_sq1_ideal_invariance(int r);

struct NilpotencyResult {
  int nilindex = 0;  // smallest k with b^k = 0 when exact
  HeightStatus status = HeightStatus::exact;
};

/// Engine-computed nilpotency index of b in the integral ring for RP^m.
NilpotencyResult height_of_b(int m, const IntegralOptions& opts = {});

/// Engine-computed height of v in the mod-2 configuration ring for RP^{r-1}.
HeightResult height_of_v(int r, int degree_bound_override = 0);

/// Closed-form nilpotency index of b: 2^e when m = 2^e, else 2^e + 1 for
/// 2^e < m < 2^{e+1}. Valid for m >= 2.
int expected_nilindex_of_b(int m);

/// Closed-form height of v: 2^{k+1} - 1 where r = 2^k + s, 1 <= s <= 2^k.
/// Valid for r >= 2.
int expected_height_of_v(int r);

struct IdentityCheck {
  std::string description;
  bool holds = false;
};

/// Element identities satisfied by the integral ring (power-of-two families),
/// plus the engine-vs-formula nilpotency comparison. All should hold.
std::vector<IdentityCheck> integral_identity_checks(const IntegralConfigRing& ring);

}  // namespace confcoh
