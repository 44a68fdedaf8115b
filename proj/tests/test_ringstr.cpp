#include <doctest.h>

#include "eqcoh/error.hpp"
#include "eqcoh/ringstr.hpp"

using namespace eqcoh;

TEST_CASE("normalized classes") {
  auto R = make_ring(3, 2, CoeffMode::Z);
  CHECK(normalize_class(R, ClassKind::A, 6).str() == "2*a1");
  CHECK(normalize_class(R, ClassKind::U, 6).str() == "u1");
  CHECK(normalize_class(R, ClassKind::A, 9).is_zero());
  CHECK(normalize_class(R, ClassKind::U, 18).str() == "1");
  CHECK(normalize_class(R, ClassKind::A, 4).str() == "4*a0");
  CHECK_THROWS_AS(make_ring(4, 1, CoeffMode::Z), DomainError);
  CHECK_THROWS_AS(make_ring(3, 0, CoeffMode::Z), DomainError);
}

TEST_CASE("closed formulas at small order") {
  auto R = make_ring(2, 1, CoeffMode::Z);
  CHECK(q0_closed(R, 0).str() == "1");
  CHECK(q0_closed(R, 1).str() == "u0*x");
  CHECK(q0_closed(R, 2).str() == "u0*x^2 + a0*x");
  CHECK(q0_closed(make_ring(3, 2, CoeffMode::Z), 3).str() == "u0^2*u1*x^3 + a1*u0^2*x^2 + 2*a0^2*u1*x");
}

TEST_CASE("tau calculus agrees with the closed formulas; underlying is x^d") {
  for (int p : {2, 3, 5})
    for (int m = 1; m <= 3; ++m) {
      if (p == 5 && m == 3) continue;
      for (auto mode : {CoeffMode::Z, CoeffMode::ModP}) {
        auto R = make_ring(p, m, mode);
        for (int d = 0; d <= R->pm() && d <= 30; ++d) {
          CAPTURE(p); CAPTURE(m); CAPTURE(d);
          Poly c = q0_closed(R, d);
          CHECK(c == q0_via_tau(R, d));
          CHECK(c.underlying() == Poly::var(R, R->x(), d));
        }
      }
    }
}

TEST_CASE("relations hold") {
  for (int p : {2, 3, 5})
    for (int m = 1; m <= 3; ++m)
      for (int r = 1; r <= m; ++r) {
        CAPTURE(p); CAPTURE(m); CAPTURE(r);
        CHECK(verify_relation(RelationKind::Rho, p, m, r).holds);
        CHECK(verify_relation(RelationKind::Mu, p, m, r).holds);
      }
  for (int p : {2, 3, 5, 7}) CHECK(verify_relation(RelationKind::Lewis, p, 1, 1).holds);
  for (int p : {2, 3, 5, 7, 11}) CHECK(verify_relation(RelationKind::Lemma, p, 2, 2).holds);
  CHECK(verify_relation(RelationKind::Rho, 2, 1, 1).residual == "0");
  CHECK(relation_from_string("mu") == RelationKind::Mu);
  CHECK_THROWS_AS(relation_from_string("nope"), DomainError);
}

TEST_CASE("series identities") {
  for (int p : {2, 3, 5})
    for (int m = 1; m <= 3; ++m)
      for (int r = 0; r <= m; ++r) {
        if (p == 5 && m == 3) continue;
        SeriesTerms s = series_terms(p, m, r, true);
        CAPTURE(p); CAPTURE(m); CAPTURE(r);
        CHECK(s.images_match_closed);
        CHECK(s.factorization_holds);
        CHECK(s.symbolic_maps_to_images);
      }
}

TEST_CASE("injectivity profile structure") {
  for (int p : {2, 3})
    for (int m = 1; m <= 3; ++m)
      for (int j = 1; j <= m; ++j) {
        InjectivityProfile q = injectivity_profile(p, m, j);
        CAPTURE(p); CAPTURE(m); CAPTURE(j);
        CHECK(q.sources_match);
        CHECK(q.targets_match);
        CHECK(q.lower_triangular);
        CHECK(q.matrix.at(0).at(0) == 1);
        // The predicted diagonal only survives for the first generator.
        CHECK(q.diagonal_matches == (j == 1));
      }
  // a_{lambda^2} u_lambda = 2 a_lambda u_{lambda^2} kills this entry over C_4
  InjectivityProfile q = injectivity_profile(2, 2, 2);
  CHECK(q.matrix[3][3] == 0);
}

TEST_CASE("basis monomials and the conjugation ring") {
  BasisMonomial b = basis_monomial(2, 5, 2, 3);
  CHECK(b.str() == "alpha8^2*alpha4*alpha1");
  CHECK(b.res_degree == 21);
  ConjRing c = conj_ring(4);
  CHECK(c.matches_decomposition);
  CHECK(c.res_degrees == std::vector<int>{0, 1, 2, 3, 4});
}
