#include <doctest.h>

#include <algorithm>
#include <random>

#include "eqcoh/decomp.hpp"
#include "eqcoh/degree.hpp"
#include "eqcoh/error.hpp"

using namespace eqcoh;

namespace {

VirtualRep L(int n, int mult, int triv = 0) { return VirtualRep::lambda(n, 1, mult) + VirtualRep::trivial(n, triv); }

}  // namespace

TEST_CASE("freeness hypothesis on the two line orders") {
  const int p = 5;
  auto bad = check_free_hypothesis(cells_from_lines(p, {0, 1, 1, 2}));
  REQUIRE(bad.has_value());
  CHECK(std::max(bad->i, bad->j) == 3);
  CHECK_FALSE(check_free_hypothesis(cells_from_lines(p, {0, 1, 2, 1})).has_value());
  CHECK_FALSE(check_free_hypothesis(cells_from_lines(p, {0})).has_value());
}

TEST_CASE("decompose_cp worked examples") {
  for (int p : {3, 5, 7}) {
    std::vector<int> m(p, 0);
    m[0] = 1, m[1] = 2, m[2] = 1;
    Decomposition d = decompose_cp(p, m);
    CHECK(d.summands == std::vector<VirtualRep>{L(p, 0), L(p, 1), L(p, 2), L(p, 2, 2)});
    CHECK(d.splits());
    m[0] = 3, m[1] = 2, m[2] = 4;
    d = decompose_cp(p, m);
    CHECK(d.summands == std::vector<VirtualRep>{L(p, 0), L(p, 1), L(p, 2), L(p, 2, 2), L(p, 3, 2), L(p, 4, 2),
                                                L(p, 4, 4), L(p, 5, 4), L(p, 5, 6)});
    CHECK(d.splits());
  }
  CHECK(decompose_cp(3, {1, 0, 0}).summands == std::vector<VirtualRep>{VirtualRep(3)});
  CHECK_THROWS_AS(decompose_cp(3, {0, 0, 0}), DomainError);
  CHECK_THROWS_AS(decompose_cp(4, {1, 1, 1, 1}), DomainError);
}

TEST_CASE("property: random C_p decompositions") {
  std::mt19937 rng(29);
  const int primes[] = {2, 3, 5, 7};
  for (int trial = 0; trial < 300; ++trial) {
    int p = primes[rng() % 4];
    std::vector<int> m(p, 0);
    int dim = 0;
    int target = std::uniform_int_distribution<int>(1, 12)(rng);
    while (dim < target) {
      ++m[rng() % p];
      ++dim;
    }
    Decomposition d = decompose_cp(p, m);
    REQUIRE(static_cast<int>(d.summands.size()) == dim);
    std::vector<int> dims;
    for (auto& s : d.summands) dims.push_back(s.dim());
    std::sort(dims.begin(), dims.end());
    for (int i = 0; i < dim; ++i) CHECK(dims[i] == 2 * i);
    CHECK_FALSE(check_free_hypothesis(d.cells).has_value());
    CHECK(d.splits());
    // relabeling the lines only moves the twist
    std::vector<int> rot(p);
    int k = static_cast<int>(rng() % p);
    for (int i = 0; i < p; ++i) rot[(i + k) % p] = m[i];
    CHECK(decompose_cp(p, rot).summands == d.summands);
  }
}

TEST_CASE("balanced multiplicities agree with the regular family") {
  for (int p : {2, 3, 5})
    for (int m = 1; m <= 3; ++m) {
      Decomposition a = decompose_cp(p, std::vector<int>(p, m));
      Decomposition b = decompose_regular(p, m);
      std::vector<std::string> x, y;
      for (auto& s : a.summands) x.push_back(hz_normalize(s).str());
      for (auto& s : b.summands) y.push_back(hz_normalize(s).str());
      std::sort(x.begin(), x.end());
      std::sort(y.begin(), y.end());
      CHECK(x == y);
    }
}

TEST_CASE("regular, quaternionic and conjugation families") {
  CHECK(decompose_regular(2, 1).summands == std::vector<VirtualRep>{VirtualRep(2), VirtualRep::lambda(2, 1)});
  CHECK(decompose_regular(3, 1).summands == std::vector<VirtualRep>{phi(0, 3), phi(1, 3), phi(2, 3)});
  CHECK(decompose_quat(2, 1).summands == std::vector<VirtualRep>{VirtualRep(2), VirtualRep::lambda(2, 1, 2)});
  Decomposition c = decompose_conj(2);
  CHECK(c.summands == std::vector<VirtualRep>{VirtualRep(2), parse_degree("1+s", 2), parse_degree("2+2s", 2)});
  CHECK(decompose_conj(0).summands.size() == 1);
  for (int n : {2, 3, 4, 6, 8, 9, 12}) {
    CHECK(decompose_regular(n, 2).splits());
    CHECK(decompose_quat(n, 2).splits());
  }
  CHECK(decompose_conj(6).splits());
}

TEST_CASE("connecting obstructions") {
  CHECK(connecting_obstruction(phi(2, 3), phi(0, 3)).rule == VanishingRule::OddWithCondition);
  VirtualRep w = phi(3, 4);
  Obstruction self = connecting_obstruction(w, w);
  CHECK(self.alpha == VirtualRep::trivial(4, -1));
  CHECK(self.rule == VanishingRule::AllFixedNegative);
}

TEST_CASE("cohomology queries") {
  CohomologyAnswer zero = cohomology_query_infinite(Family::Regular, 5, VirtualRep(5), Mode::Z);
  REQUIRE(zero.groups.size() == 1);
  CHECK(zero.groups[0].kind == CoeffGroup::Kind::FreeZ);

  // the printed table gives the value used in the obstruction argument
  for (int p : {3, 5}) {
    VirtualRep a = VirtualRep::lambda(p, 1) + VirtualRep::trivial(p, 2 * p - 2);
    CHECK(cohomology_query_infinite(Family::Regular, p, a, Mode::ModPPrinted).str() == "Z/" + std::to_string(p) + "*");
  }
  VirtualRep a2 = parse_degree("3 + s", 2);
  CHECK(cohomology_query(decompose_conj(2), a2, Mode::ModP).str() == "<Lambda>");
  CHECK(cohomology_query(decompose_conj(2), a2, Mode::ModPPrinted).str() == "<Lambda>");
}
