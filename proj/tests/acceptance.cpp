// One line per acceptance criterion. Exit status is nonzero if a criterion
// fails outside the short list of known, explained failures (printed as
// "FAIL [known: ...]"); those still print FAIL.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <tuple>
#include <string>
#include <vector>

#include "eqcoh/cellular.hpp"
#include "eqcoh/coeff.hpp"
#include "eqcoh/cohops.hpp"
#include "eqcoh/decomp.hpp"
#include "eqcoh/degree.hpp"
#include "eqcoh/reps.hpp"
#include "eqcoh/ringstr.hpp"
#include "eqcoh/slice.hpp"

using namespace eqcoh;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
  std::string known;  // nonempty: failure is expected and explained
};

int unexpected = 0;

void run(const char* id, const std::function<Outcome()>& f) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = f();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
    o.known.clear();
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool slow = s >= 10.0;
  std::string status = (o.pass && !slow) ? "PASS" : "FAIL";
  if (slow) o.detail += " (over 10 s)";
  if (status == "FAIL" && !o.known.empty() && !slow)
    status += " [known: " + o.known + "]";
  else if (status == "FAIL")
    ++unexpected;
  std::printf("%-5s %-40s %6.2fs  %s\n", id, status.c_str(), s, o.detail.c_str());
  std::fflush(stdout);
}

VirtualRep L(int p, int k, int triv = 0) { return VirtualRep::lambda(p, 1, k) + VirtualRep::trivial(p, triv); }

Outcome ac1() {
  Outcome o{true, ""};
  for (int p : {3, 5, 7, 11}) {
    std::vector<int> m(p, 0);
    m[0] = 1, m[1] = 2, m[2] = 1;
    std::vector<VirtualRep> want = {L(p, 0), L(p, 1), L(p, 2), L(p, 2, 2)};
    if (decompose_cp(p, m).summands != want) o.pass = false;
    m[0] = 3, m[1] = 2, m[2] = 4;
    want = {L(p, 0), L(p, 1), L(p, 2), L(p, 2, 2), L(p, 3, 2), L(p, 4, 2), L(p, 4, 4), L(p, 5, 4), L(p, 5, 6)};
    if (decompose_cp(p, m).summands != want) o.pass = false;
  }
  o.detail = "both worked examples, p in {3,5,7,11}";
  return o;
}

Outcome ac2() {
  std::mt19937 rng(2024);
  const int primes[] = {2, 3, 5, 7};
  int bad = 0;
  for (int t = 0; t < 500; ++t) {
    int p = primes[rng() % 4];
    int dim = std::uniform_int_distribution<int>(1, 12)(rng);
    std::vector<int> m(p, 0);
    for (int i = 0; i < dim; ++i) ++m[rng() % p];
    Decomposition d = decompose_cp(p, m);
    std::vector<int> dims;
    for (auto& s : d.summands) dims.push_back(s.dim());
    std::sort(dims.begin(), dims.end());
    bool ok = static_cast<int>(dims.size()) == dim;
    for (int i = 0; ok && i < dim; ++i) ok = dims[i] == 2 * i;
    ok = ok && !check_free_hypothesis(d.cells) && d.splits();
    bad += !ok;
  }
  return {bad == 0, std::to_string(500 - bad) + "/500 random reps decompose"};
}

Outcome ac3() {
  std::mt19937 rng(3);
  int bad = 0, zero = 0, dead = 0;
  for (int t = 0; t < 10000; ++t) {
    int n = std::uniform_int_distribution<int>(1, 24)(rng);
    int ell = std::uniform_int_distribution<int>(-4, 14)(rng);
    VirtualRep a = VirtualRep::trivial(n, ell);
    std::vector<std::pair<int, int>> b;
    for (int d : divisors(n))
      if (d < n) {
        b.emplace_back(d, std::uniform_int_distribution<int>(0, 3)(rng));
        a -= VirtualRep::lambda(n, d, b.back().second);
      }
    // A monomial takes ell/2 u-factors; the rest of the b's are a-factors.
    // Its order is at most n / lcm(a-divisors), so it can be 1.
    bool any = false, live = false;
    if (ell % 2 == 0 && ell >= 0) {
      // l = 0 stands for "no a-factor yet"; such a monomial is free
      auto rec = [&](auto&& self, std::size_t i, int left, long long l) -> void {
        if (i == b.size()) {
          if (left == 0) any = true, live = live || l == 0 || l < n;
          return;
        }
        auto [d, bd] = b[i];
        for (int y = 0; y <= std::min(bd, left); ++y)
          self(self, i + 1, left - y, y < bd ? (l == 0 ? d : std::lcm(l, 1LL * d)) : l);
      };
      rec(rec, 0, ell / 2, 0);
    }
    CoeffGroup g = pi_star_e(a);
    bool is_zero = g.kind == CoeffGroup::Kind::Zero;
    bool rule = vanishing_reason(a).has_value();
    bool predicted = rule || !live;
    dead += is_zero && !rule && any && !live;
    zero += is_zero;
    CoeffGroup s = pi_star_e_smith(a);
    if (is_zero != predicted || s.kind != g.kind || s.order != g.order) ++bad;
  }
  int order_bad = 0;
  for (int n = 2; n <= 24; ++n)
    for (int d : divisors(n))
      if (d < n) {
        CoeffGroup g = pi_star_e(-VirtualRep::lambda(n, d));
        if (g.kind != CoeffGroup::Kind::Cyclic || g.order != n / d) ++order_bad;
      }
  int cross_bad = 0, cross = 0;
  for (int n = 2; n <= 24; ++n)
    for (int d : divisors(n))
      for (int s : divisors(n)) {
        if (d >= n || s >= n || d == s) continue;
        CoeffGroup g = pi_star_e(VirtualRep::trivial(n, 2) - VirtualRep::lambda(n, s) - VirtualRep::lambda(n, d));
        Monomial lhs, rhs;
        lhs.a[s] = 1, lhs.u[d] = 1, rhs.a[d] = 1, rhs.u[s] = 1;
        long long gg = std::gcd(d, s);
        long long l = (d / gg) * g.residue(lhs), r = (s / gg) * g.residue(rhs);
        ++cross;
        if (g.kind != CoeffGroup::Kind::Cyclic || mod(l - r, static_cast<int>(g.order)) != 0) ++cross_bad;
      }
  return {bad + order_bad + cross_bad == 0,
          "10^4 degrees (" + std::to_string(zero) + " zero, " + std::to_string(dead) +
              " only through monomials of order 1), " + std::to_string(bad) + " mismatches; a-orders " +
              std::to_string(order_bad) + " bad; cross " + std::to_string(cross - cross_bad) + "/" +
              std::to_string(cross)};
}

Outcome ac4() {
  int checked = 0, bad = 0;
  for (int p : {2, 3})
    for (int m = 1; m <= 2; ++m)
      for (auto mode : {CoeffMode::Z, CoeffMode::ModP}) {
        auto R = make_ring(p, m, mode);
        for (int d : {1, 2, 3, 4, 9}) {
          if (d > R->pm()) continue;  // phi_d only exists as a generator up to p^m
          ++checked;
          bad += !(q0_via_tau(R, d) == q0_closed(R, d));
        }
      }
  return {bad == 0, std::to_string(checked - bad) + "/" + std::to_string(checked) + " (p,m,d,mode) with d <= p^m"};
}

Outcome ac5() {
  const std::vector<std::tuple<int, int, int>> grid = {{2, 1, 1}, {2, 2, 1}, {2, 2, 2}, {3, 1, 1},
                                                       {3, 2, 1}, {3, 2, 2}, {5, 1, 1}};
  std::string fails;
  for (auto [p, m, r] : grid)
    for (auto k : {RelationKind::Rho, RelationKind::Mu})
      if (!verify_relation(k, p, m, r).holds)
        fails += " " + to_string(k) + std::to_string(p) + std::to_string(m) + std::to_string(r);
  for (int p : {2, 3, 5, 7})
    if (!verify_relation(RelationKind::Lewis, p, 1, 1).holds) fails += " lewis" + std::to_string(p);
  for (int p : {2, 3, 5, 7, 11})
    if (!verify_relation(RelationKind::Lemma, p, 2, 2).holds) fails += " lemma" + std::to_string(p);
  return {fails.empty(), fails.empty() ? "rho, mu on 7 triples; lewis x4; lemma x5" : "failed:" + fails};
}

Outcome ac6() {
  int n = 0, bad = 0;
  for (int p : {2, 3, 5})
    for (int m = 1; m <= 3; ++m)
      for (int r = 0; r <= m; ++r) {
        ++n;
        bad += !series_terms(p, m, r).factorization_holds;
      }
  return {bad == 0, std::to_string(n - bad) + "/" + std::to_string(n) + " (p,m,r)"};
}

Outcome ac7() {
  int n = 0, bad = 0, diag = 0;
  for (int p : {2, 3})
    for (int m = 1; m <= 3; ++m)
      for (int j = 1; j <= m; ++j) {
        ++n;
        InjectivityProfile q = injectivity_profile(p, m, j);
        long long pj = ipow(p, j), tors = ipow(p, m - j + 1);
        long long free = std::count(q.source_orders.begin(), q.source_orders.end(), 0LL);
        long long cyc = std::count(q.source_orders.begin(), q.source_orders.end(), tors);
        bool src = free == 1 && cyc == pj && static_cast<long long>(q.source_orders.size()) == pj + 1;
        bad += !(q.lower_triangular && q.matrix.at(0).at(0) == 1 && src && q.sources_match);
        diag += q.diagonal_matches;
      }
  return {bad == 0, std::to_string(n - bad) + "/" + std::to_string(n) + " profiles; predicted diagonal holds in " +
                        std::to_string(diag) + "/" + std::to_string(n)};
}

Outcome ac8() {
  int total = 0, bad = 0;
  std::set<std::pair<std::string, int>> failing;
  for (auto fam : {SliceFamily::Complex, SliceFamily::Quaternionic})
    for (int n : {2, 3, 4, 6, 8, 9, 12})
      for (int l = 0; l <= 40; ++l) {
        ++total;
        if (!certify_slice(fam, n, l).ok()) failing.insert({to_string(fam), n}), ++bad;
      }
  std::string where;
  for (auto& [f, n] : failing) where += " " + f + "@" + std::to_string(n);
  Outcome o{bad == 0, std::to_string(total - bad) + "/" + std::to_string(total) + " certificates" +
                          (where.empty() ? "" : "; failing:" + where)};
  if (failing == std::set<std::pair<std::string, int>>{{"quat", 8}, {"quat", 9}})
    o.known = "chain model finds nonzero groups for quaternionic n=8,9";
  return o;
}

Outcome ac9() {
  std::string detail;
  bool ok = true;
  for (auto [p, r] : {std::pair{3, 4}, {5, 8}}) {
    ObstructionReport o = obstruction_check(p, r);
    MackeySum zp;
    zp.p = p;
    zp.add(MackeyName::Const);
    ok = ok && o.verdict == Verdict::LiftExcluded && o.source == zp && o.target[MackeyName::Dual] > 0 &&
         o.target[MackeyName::Const] == 0;
    detail += "p=" + std::to_string(p) + ": " + o.source.str() + " -> " + o.target.str() + "; ";
  }
  ObstructionReport c = obstruction_check_c2(2);
  ok = ok && c.verdict == Verdict::LiftExcluded && c.target.str() == "<Lambda>";
  detail += "C_2 r=2 target " + c.target.str();
  return {ok, detail};
}

Outcome ac10() {
  std::string detail;
  bool ok = true, only_odd = true;
  for (int p : {3, 5, 7}) {  // the value is claimed for odd p
    VirtualRep a = VirtualRep::lambda(p, 1) + VirtualRep::trivial(p, 2 * p - 2);
    std::string want = "Z/" + std::to_string(p) + "*";
    std::string got = cohomology_query_infinite(Family::Regular, p, a, Mode::ModP).str();
    std::string printed = cohomology_query_infinite(Family::Regular, p, a, Mode::ModPPrinted).str();
    if (got != want) {
      ok = false;
      only_odd = only_odd && printed == want;
      detail += "p=" + std::to_string(p) + " gives " + got + " (printed table: " + printed + "); ";
    }
  }
  std::string conj = cohomology_query(decompose_conj(2), parse_degree("3 + s", 2), Mode::ModP).str();
  if (conj != "<Lambda>") {
    ok = false, only_odd = false;
    detail += "CP^2 at rho+2 gives " + conj;
  } else {
    detail += "CP^2 at rho+2: <Lambda>";
  }
  Outcome o{ok, detail};
  if (!ok && only_odd) o.known = "odd-p table parity rows; corrected table adds <Z/p> summands";
  return o;
}

Outcome ac11() {
  int n = 0, bad = 0;
  for (int p : {2, 3, 5})
    for (int m = 1; m <= 2; ++m)
      for (auto mode : {CoeffMode::Z, CoeffMode::ModP}) {
        auto R = make_ring(p, m, mode);
        for (int d = 0; d <= std::min<long long>(p * p, R->pm()); ++d) {
          ++n;
          bad += !(q0_closed(R, d).underlying() == Poly::var(R, R->x(), d));
        }
      }
  return {bad == 0, std::to_string(n - bad) + "/" + std::to_string(n) + " (p,m,d,mode)"};
}

// The two standard case tables, written out row by row; first match wins.
MackeyName displayed(int p, int dim, int fixed) {
  struct Row {
    std::function<bool(int, int)> when;
    MackeyName name;
  };
  std::vector<Row> rows;
  if (p == 2) {
    rows = {{[](int d, int f) { return d == 0 && f == -1; }, MackeyName::Lambda},
            {[](int d, int f) { return d == 0 && f >= 0; }, MackeyName::Const},
            {[](int d, int f) { return d == 0 && f < 0; }, MackeyName::Dual},
            {[](int d, int f) { return d < 0 && f >= 0; }, MackeyName::Point},
            {[](int d, int f) { return d > 0 && f < -1; }, MackeyName::Point}};
  } else {
    rows = {{[](int d, int f) { return d == 0 && f >= 0; }, MackeyName::Const},
            {[](int d, int f) { return d == 0 && f < 0; }, MackeyName::Dual},
            {[](int d, int f) { return d < 0 && f >= 0 && d % 2 == 0; }, MackeyName::Point},
            {[](int d, int f) { return d > 0 && f < -1 && d % 2 != 0; }, MackeyName::Point}};
  }
  for (auto& r : rows)
    if (r.when(dim, fixed)) return r.name;
  return MackeyName::Zero;
}

Outcome ac12() {
  int n = 0, bad = 0;
  for (int p : {2, 3, 5, 7})
    for (int dim = -6; dim <= 6; ++dim)
      for (int fixed = -6; fixed <= 6; ++fixed) {
        if (p != 2 && (dim - fixed) % 2 != 0) continue;  // odd p: lambdas change |alpha| by 2
        VirtualRep a = VirtualRep::trivial(p, fixed);
        if (p == 2)
          a += (dim - fixed) * VirtualRep::sign(2);
        else
          a += VirtualRep::lambda(p, 1, (dim - fixed) / 2);
        ++n;
        bad += mackey_modp_table(a) != displayed(p, dim, fixed);
      }
  return {bad == 0, std::to_string(n - bad) + "/" + std::to_string(n) + " grid points, p in {2,3,5,7}"};
}

}  // namespace

int main() {
  run("AC1", ac1);
  run("AC2", ac2);
  run("AC3", ac3);
  run("AC4", ac4);
  run("AC5", ac5);
  run("AC6", ac6);
  run("AC7", ac7);
  run("AC8", ac8);
  run("AC9", ac9);
  run("AC10", ac10);
  run("AC11", ac11);
  run("AC12", ac12);
  std::printf("unexpected failures: %d\n", unexpected);
  return unexpected == 0 ? 0 : 1;
}
