#pragma once

#include <string>
#include <vector>

namespace einstein4 {

// Betti data of a compact oriented 4-manifold. chi = 2 - 2 b1 + b+ + b-,
// tau = b+ - b-; finite fundamental group forces b1 = 0.
struct TopologyDescriptor {
  int b_plus = 0;
  int b_minus = 0;
  int b_one = 0;
  bool orientable = true;
  bool simply_connected = false;
  bool finite_pi1 = true;

  int euler_char() const { return 2 - 2 * effective_b1() + b_plus + b_minus; }
  int signature() const { return b_plus - b_minus; }
  int effective_b1() const { return finite_pi1 ? 0 : b_one; }
  void validate() const;  // non-negative counts, parity when b1 = 0
};

// All gates use exact integer arithmetic; margins are reported as integers so
// no boundary case depends on floating comparisons.
struct GateResult {
  bool ok = false;
  long long margin = 0;  // positive = inside, in the units stated by `detail`
  std::string detail;
};

/// 9 >= chi and chi > (15/4)|tau|, decided as 4 chi - 15 |tau| > 0.
/// Rejects chi != tau (mod 2).
GateResult chi_tau_window_gate(int chi, int tau);

/// Hitchin's classical bound chi >= (3/2)^{3/2} |tau|, decided as
/// 8 chi^2 >= 27 tau^2 (with chi >= 0). Rejects parity violations.
GateResult hitchin_gate(int chi, int tau);

// From chi > (15/4)|tau| and chi == tau (mod 2): the least admissible Euler
// characteristic, and the covering-space argument for simple connectivity
// (a k-fold cover scales chi by k and must still satisfy chi <= 9).
struct SimplyConnectedResult {
  bool applicable = false;  // needs |tau| >= 1
  int min_chi = 0;
  bool admissible = false;  // min_chi <= 9
  int max_cover_order = 0;  // largest k with k * min_chi <= 9
  std::string reasoning;
};
SimplyConnectedResult simply_connected_deduction(int tau);

// Positive-definite intersection form hypotheses (b- = 0, b+ != 0) and the
// verdict the gates force for an Einstein metric of non-negative sectional
// curvature with that topology.
struct PositiveFormVerdict {
  bool hypotheses_met = false;
  std::string conclusion;
};
PositiveFormVerdict positive_intersection_verdict(const TopologyDescriptor& t);

// One unoriented homeomorphism class of simply connected candidates.
struct HomeotypeClass {
  int b_plus = 0;   // representative orientation with b+ >= b-
  int b_minus = 0;
  int chi = 0;
  int tau = 0;
  bool even_form = false;  // even (hyperbolic) vs odd (diagonal) intersection form
  std::string representative;
  std::string branch;  // "window" or "self-dual"
};

/// Brute-force enumeration of the simply connected candidate classes:
/// everything passing the (chi, tau) window with chi <= 9, split by even/odd
/// form type (even forms need tau = 0 in this range), identified under
/// orientation reversal, united with the self-dual classification branch.
/// The list is a derived reconstruction; its count (twelve) is the anchor.
std::vector<HomeotypeClass> enumerate_homeotypes();

}  // namespace einstein4
