#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "loophecke/closure.hpp"

namespace {

using lh::GFp;
using lh::MWord;
using lh::Rational;

MWord S(int i) { return MWord(1, lh::sigma_code(i)); }
MWord R(int i) { return MWord(1, lh::rho_code(i)); }

}  // namespace

TEST_CASE("closure dimensions of the tensor representation") {
  CHECK(lh::close(lh::fe_rep(1, Rational(2))).dim() == 1);
  CHECK(lh::close(lh::fe_rep(2, Rational(2))).dim() == 3);
  CHECK(lh::close(lh::fe_rep(3, Rational(2))).dim() == 10);
  CHECK(lh::close(lh::fe_rep(4, Rational(2))).dim() == 35);
}

TEST_CASE("closure dimension is parameter independent away from t = 1") {
  for (Rational t : {Rational(-1), Rational(0), Rational(7, 5)})
    CHECK(lh::close(lh::fe_rep(3, t)).dim() == 10);
  CHECK(lh::close(lh::fe_rep(3, Rational(1))).dim() == 6);
}

TEST_CASE("closure works over a prime field") {
  GFp t = GFp::from_long(2, lh::kPrimeA);
  CHECK(lh::close(lh::fe_rep(4, t)).dim() == 35);
  CHECK(lh::close(lh::fe_rep(5, t)).dim() == 126);
}

TEST_CASE("witnesses reproduce their basis elements in deterministic order") {
  auto alg = lh::close(lh::fe_rep(3, Rational(2)));
  REQUIRE(alg.dim() == 10);
  CHECK(alg.witnesses[0] == MWord{});
  CHECK(alg.witnesses[1] == S(1));
  CHECK(alg.witnesses[2] == R(1));
  for (long k = 0; k < alg.dim(); ++k)
    CHECK(alg.elements[k] == alg.to_block(alg.rep.image_of_mword(alg.witnesses[k])));
}

TEST_CASE("one more closure pass adds nothing") {
  CHECK(lh::closure_is_fixpoint(lh::close(lh::fe_rep(3, Rational(2)))));
  CHECK(lh::closure_is_fixpoint(lh::close(lh::fe_rep(2, Rational(0)))));
}

TEST_CASE("grading choice does not change the computed dimension") {
  auto rep = lh::fe_rep(3, Rational(2));
  auto graded = lh::close(rep);
  auto trivial = lh::close(rep, std::make_shared<lh::Grading>(lh::Grading::trivial(rep.dim)));
  CHECK(graded.dim() == trivial.dim());
  CHECK(graded.grading->nsectors == 4);
  CHECK(trivial.grading->nsectors == 1);
}

TEST_CASE("chi elements") {
  Rational t(2);
  auto chi = lh::chi_element(1, t);
  CHECK(chi.terms().size() == 2);
  CHECK(chi.coeff(S(1), Rational(0)) == Rational(-1));
  CHECK(chi.coeff(R(1), Rational(0)) == Rational(1));
  CHECK_THROWS_AS(lh::chi_element(1, Rational(1)), lh::ForbiddenParameter);
  CHECK_THROWS_AS(lh::chi_chain({2, 1}, Rational(1)), lh::ForbiddenParameter);

  auto chain = lh::chi_chain({2, 1}, t);
  CHECK(chain.terms().size() == 4);
  CHECK(chain.coeff(S(2) + S(1), Rational(0)) == Rational(1));
  CHECK(chain.coeff(S(2) + R(1), Rational(0)) == Rational(-1));
  CHECK(chain.coeff(R(2) + S(1), Rational(0)) == Rational(-1));
  CHECK(chain.coeff(R(2) + R(1), Rational(0)) == Rational(1));

  auto alg = lh::close(lh::fe_rep(2, t));
  auto img = alg.image_of_element(lh::chi_element(1, t));
  CHECK(img * img == img);
}

TEST_CASE("corner and ideal dimensions around chi") {
  Rational t(2);
  auto rep2 = lh::localisation_checks(lh::close(lh::fe_rep(2, t)));
  CHECK(rep2.corner_dim == 1);
  CHECK(rep2.expected_corner == 1);
  CHECK(rep2.ideal_dim == 2);
  CHECK(rep2.corner_matches);
  CHECK(rep2.ideal_matches);

  auto rep3 = lh::localisation_checks(lh::close(lh::fe_rep(3, t)));
  CHECK(rep3.corner_dim == 3);
  CHECK(rep3.ideal_dim == 9);
  CHECK(rep3.corner_matches);
  CHECK(rep3.ideal_matches);

  auto rep4 = lh::localisation_checks(lh::close(lh::fe_rep(4, t)));
  CHECK(rep4.corner_dim == 10);
  CHECK(rep4.ideal_dim == 34);
  CHECK(rep4.corner_matches);
  CHECK(rep4.ideal_matches);
}

TEST_CASE("closed-form expectations") {
  auto e1 = lh::pascal_expectations(1);
  CHECK(e1.dim == 1);
  CHECK(e1.block_dims == std::vector<long>{1, 1});

  auto e5 = lh::pascal_expectations(5);
  CHECK(e5.dim == 126);
  CHECK(e5.irrep_dims == std::vector<long>{1, 4, 6, 4, 1});
  CHECK(e5.dim_t_one == 70);

  auto e3 = lh::pascal_expectations(3);
  CHECK(e3.cartan == std::vector<std::vector<long>>{{1, 0, 0}, {1, 1, 0}, {0, 1, 1}});
  CHECK(e3.lh_dim_t_minus_one == 11);

  auto e7 = lh::pascal_expectations(7);
  CHECK(e7.dim == 1716);
  CHECK(e7.lh_dim_t_minus_one == 2510);

  CHECK(lh::pascal_expectations(4).block_dims == std::vector<long>{1, 4, 6, 4, 1});
  CHECK(lh::pascal_expectations(5).lh_dim_t_minus_one == 163);
  CHECK(lh::binomial(6, 3) == 20);
  CHECK(lh::binomial(3, 5) == 0);
}
