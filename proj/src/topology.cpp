#include "einstein4/topology.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace einstein4 {

namespace {

void require_parity(int chi, int tau) {
  if (((chi - tau) % 2 + 2) % 2 != 0) {
    std::ostringstream os;
    os << "chi = " << chi << " and tau = " << tau
       << " violate chi == tau (mod 2); not realizable with b1 = 0";
    throw std::invalid_argument(os.str());
  }
}

}  // namespace

void TopologyDescriptor::validate() const {
  if (b_plus < 0 || b_minus < 0 || b_one < 0) {
    throw std::invalid_argument("TopologyDescriptor: negative Betti number");
  }
  if (simply_connected && (b_one != 0 || !finite_pi1)) {
    throw std::invalid_argument("TopologyDescriptor: simply connected requires b1 = 0");
  }
}

GateResult chi_tau_window_gate(int chi, int tau) {
  require_parity(chi, tau);
  GateResult r;
  const long long window = 4LL * chi - 15LL * std::abs((long long)tau);
  const long long ceiling = 9LL - chi;
  r.ok = window > 0 && ceiling >= 0;
  r.margin = window;
  std::ostringstream os;
  os << "4*chi - 15*|tau| = " << window << " (need > 0), 9 - chi = " << ceiling
     << " (need >= 0)";
  r.detail = os.str();
  return r;
}

GateResult hitchin_gate(int chi, int tau) {
  require_parity(chi, tau);
  GateResult r;
  const long long lhs = 8LL * chi * chi;
  const long long rhs = 27LL * (long long)tau * tau;
  r.ok = chi >= 0 && lhs >= rhs;
  r.margin = lhs - rhs;
  std::ostringstream os;
  os << "8*chi^2 - 27*tau^2 = " << r.margin << " (need >= 0 with chi >= 0)";
  r.detail = os.str();
  return r;
}

SimplyConnectedResult simply_connected_deduction(int tau) {
  SimplyConnectedResult out;
  const int at = std::abs(tau);
  if (at < 1) {
    out.reasoning =
        "inapplicable for tau = 0: a non-simply-connected example with non-negative "
        "sectional curvature exists (the Z2 quotient of the product of 2-spheres)";
    return out;
  }
  out.applicable = true;
  // Least chi with 4 chi > 15 |tau| and chi == tau (mod 2).
  int chi = (15 * at) / 4 + 1;
  if (((chi - at) % 2 + 2) % 2 != 0) ++chi;
  out.min_chi = chi;
  out.admissible = chi <= 9;
  out.max_cover_order = out.admissible ? 9 / chi : 0;
  std::ostringstream os;
  if (!out.admissible) {
    os << "no chi <= 9 satisfies 4*chi > 15*" << at << "; the window is empty";
  } else {
    os << "least admissible chi is " << chi << "; a k-fold cover would have chi = " << chi
       << "*k > 9 for k >= " << (out.max_cover_order + 1)
       << ", so the fundamental group is trivial";
  }
  out.reasoning = os.str();
  return out;
}

PositiveFormVerdict positive_intersection_verdict(const TopologyDescriptor& t) {
  t.validate();
  PositiveFormVerdict out;
  out.hypotheses_met = t.b_minus == 0 && t.b_plus != 0;
  if (!out.hypotheses_met) {
    out.conclusion = "hypotheses not met (need b- = 0 and b+ != 0)";
    return out;
  }
  const int chi = 2 + t.b_plus;
  const int tau = t.b_plus;
  const GateResult window = chi_tau_window_gate(chi, tau);
  const GateResult hitchin = hitchin_gate(chi, tau);
  std::ostringstream os;
  if (t.b_plus == 1) {
    os << "an Einstein metric of non-negative sectional curvature on this manifold is "
          "homothetic to the Fubini-Study metric on the complex projective plane "
          "(window gate fails -> metric is half conformally flat; tau > 0 forces W- = 0; "
          "the self-dual classification then pins the metric)";
  } else {
    os << "no Einstein metric of non-negative sectional curvature exists: the window gate "
          "fails (margin " << window.margin
       << "), forcing W+ = 0 or W- = 0, and the self-dual classification only allows "
          "b+ <= 1";
    if (hitchin.ok) os << "; note Hitchin's bound alone does not exclude this case";
  }
  out.conclusion = os.str();
  return out;
}

std::vector<HomeotypeClass> enumerate_homeotypes() {
  std::vector<HomeotypeClass> out;

  auto representative = [](int bp, int bm, bool even) -> std::string {
    if (bp == 0 && bm == 0) return "S4";
    if (bp == 1 && bm == 0) return "CP2";
    if (even) {
      std::ostringstream os;
      if (bp == 1) return "S2 x S2";
      os << "#" << bp << "(S2 x S2)";
      return os.str();
    }
    std::ostringstream os;
    if (bp == 1) {
      os << "CP2";
    } else {
      os << "#" << bp << " CP2";
    }
    if (bm == 1) {
      os << " # conj(CP2)";
    } else if (bm > 1) {
      os << " # " << bm << " conj(CP2)";
    }
    return os.str();
  };

  // Window branch: unoriented classes (b+ >= b-) with chi <= 9 passing the
  // (chi, tau) window. Even forms are only realizable for tau = 0 here (an
  // even indefinite form with tau != 0 needs 8 | tau, out of range).
  for (int bp = 0; bp <= 7; ++bp) {
    for (int bm = 0; bm <= bp; ++bm) {
      const int chi = 2 + bp + bm;
      const int tau = bp - bm;
      if (chi > 9) continue;
      if (4 * chi <= 15 * tau) continue;
      const int rank = bp + bm;
      if (rank == 0) {
        out.push_back({bp, bm, chi, tau, true, representative(bp, bm, true), "window"});
        continue;
      }
      out.push_back({bp, bm, chi, tau, false, representative(bp, bm, false), "window"});
      if (tau == 0) {
        out.push_back({bp, bm, chi, tau, true, representative(bp, bm, true), "window"});
      }
    }
  }

  // Self-dual branch: classes allowed despite failing the window because the
  // metric is then half conformally flat and classified: only CP2 is new.
  out.push_back({1, 0, 3, 1, false, representative(1, 0, false), "self-dual"});

  return out;
}

}  // namespace einstein4
