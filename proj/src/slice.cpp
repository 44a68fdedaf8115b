#include "eqcoh/slice.hpp"

#include "eqcoh/cellular.hpp"
#include "eqcoh/error.hpp"

namespace eqcoh {

bool in_tau_geq(const VirtualRep& V, int level) {
  if (!V.is_actual()) throw DomainError("in_tau_geq needs an actual representation, got " + V.str());
  for (int d : divisors(V.order()))
    if (static_cast<long long>(fixed_dim(V, d)) * d < level) return false;
  return true;
}

std::string to_string(SliceFamily f) { return f == SliceFamily::Complex ? "complex" : "quat"; }

SliceFamily slice_family_from_string(const std::string& s) {
  if (s == "complex" || s == "regular") return SliceFamily::Complex;
  if (s == "quat") return SliceFamily::Quaternionic;
  throw DomainError("unknown slice family '" + s + "'");
}

namespace {

// Expected C_m fixed dimension of the summand from the q, s split of l.
int closed_form_fixed(SliceFamily f, int ell, int m) {
  if (f == SliceFamily::Complex) return 2 * (ell / m) + 2;
  if (ell == 0) return 4;
  return 4 + 2 * ((2 * ell - 1) / m + (ell % m == 0 ? 1 : 0));
}

}  // namespace

SliceCertificate certify_slice(SliceFamily family, int n, int ell) {
  if (n < 1 || ell < 0) throw DomainError("certify_slice needs n >= 1 and l >= 0");
  SliceCertificate c;
  c.family = family;
  c.n = n;
  c.ell = ell;
  if (family == SliceFamily::Complex) {
    c.summand = phi(ell, n) + VirtualRep::trivial(n, 2);
    c.level = 2 * ell + 2;
  } else {
    c.summand = quat_w(ell, n) + VirtualRep::trivial(n, 4);
    c.level = 4 * ell + 4;
  }
  c.connective = in_tau_geq(c.summand, c.level);

  c.closed_form_agrees = true;
  c.coconnective = true;
  for (int m : divisors(n)) {
    int f = fixed_dim(c.summand, m);
    if (f != closed_form_fixed(family, ell, m) || static_cast<long long>(f) * m < c.level)
      c.closed_form_agrees = false;

    // beta(k, r) = k rho_H + r - res(summand) has fixed dimensions increasing in
    // k and r, so the enumeration stops once everything is positive.
    VirtualRep res = restrict_to(c.summand, m);
    VirtualRep rho = VirtualRep::real_regular(m);
    for (int k = c.level / m + 1;; ++k) {
      bool any = false;
      for (int r = 0;; ++r) {
        VirtualRep beta = k * rho + VirtualRep::trivial(m, r) - res;
        auto rule = vanishing_reason(beta);
        if (rule == VanishingRule::AllFixedPositive) break;
        any = true;
        SliceInstance inst{m, k, r, beta, rule};
        if (!rule) {
          inst.chain_zero = cellular_pi(beta).is_zero();
          if (!inst.chain_zero) c.coconnective = false;
        }
        c.instances.push_back(std::move(inst));
      }
      if (!any) break;
    }
  }
  return c;
}

}  // namespace eqcoh
