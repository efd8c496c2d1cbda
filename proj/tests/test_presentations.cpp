#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "loophecke/presentations.hpp"

namespace {

using lh::AlgebraElement;
using lh::GenKind;
using lh::MWord;
using lh::Rational;
using lh::Relation;

const Rational kQ0(0);

MWord S(int i) { return MWord(1, lh::sigma_code(i)); }
MWord R(int i) { return MWord(1, lh::rho_code(i)); }

template <class K>
const Relation<K>* find_rel(const std::vector<Relation<K>>& rels, const std::string& label) {
  for (const auto& r : rels)
    if (r.label == label) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("word parsing and printing round-trips") {
  auto w = lh::parse_gword("s1 r2 s1");
  CHECK(w.size() == 3);
  CHECK(w[0] == lh::Generator{GenKind::sigma, 1});
  CHECK(w[1] == lh::Generator{GenKind::rho, 2});
  CHECK(lh::gword_str(w) == "s1 r2 s1");

  auto inv = lh::parse_gword("s2^-1 s1");
  CHECK(inv[0] == lh::Generator{GenKind::sigma_inv, 2});
  CHECK(lh::gword_str(inv) == "s2^-1 s1");
  CHECK_THROWS_AS(lh::parse_gword("x1"), lh::WordParseError);
  CHECK_THROWS_AS(lh::to_mword(inv), lh::WordParseError);
}

TEST_CASE("degree-lexicographic word order") {
  CHECK(lh::deglex_compare(S(1), R(1) + S(2)) < 0);  // shorter first
  CHECK(lh::deglex_compare(S(1) + R(1), R(1) + S(1)) < 0);  // s1 < r1 at first letter
  CHECK(lh::deglex_compare(S(2), R(1)) > 0);  // r1 < s2 in letter rank
  CHECK(lh::deglex_compare(S(1) + S(1), S(1) + S(1)) == 0);
}

TEST_CASE("translate shifts generator indices") {
  MWord w = S(3) + S(4) + R(2);
  CHECK(lh::translate(w, 1) == S(4) + S(5) + R(3));
  CHECK(lh::translate(w, 0) == w);
  CHECK(lh::translate(MWord(), 5) == MWord());
  CHECK_THROWS_AS(lh::translate(R(1), -1), lh::IndexOutOfRange);

  auto e = AlgebraElement<Rational>::monomial(w, Rational(2));
  CHECK(e.translated(1).leading_word() == S(4) + S(5) + R(3));
}

TEST_CASE("algebra element arithmetic") {
  auto x = AlgebraElement<Rational>::monomial(S(1), Rational(1));
  auto y = AlgebraElement<Rational>::monomial(R(1), Rational(1));
  auto p = (x + y) * (x - y);
  // free algebra: (x+y)(x-y) = xx - xy + yx - yy
  CHECK(p.size() == 4);
  CHECK(p.coeff(S(1) + S(1), kQ0) == Rational(1));
  CHECK(p.coeff(S(1) + R(1), kQ0) == Rational(-1));
  CHECK(p.coeff(R(1) + S(1), kQ0) == Rational(1));
  CHECK(p.coeff(R(1) + R(1), kQ0) == Rational(-1));
  CHECK((p - p).is_zero());
  CHECK(p.leading_word() == R(1) + R(1));
}

TEST_CASE("loop braid relation lists") {
  CHECK(lh::loop_braid_relations(1, kQ0).empty());

  auto r2 = lh::loop_braid_relations(2, kQ0);
  REQUIRE(r2.size() == 1);
  CHECK(r2[0].label == "rho_sq_1");
  CHECK(r2[0].lhs == AlgebraElement<Rational>::monomial(R(1) + R(1), Rational(1)));
  CHECK(r2[0].rhs == AlgebraElement<Rational>::unit(kQ0));

  auto r3 = lh::loop_braid_relations(3, kQ0);
  auto* m1 = find_rel(r3, "mixed1_1");
  REQUIRE(m1 != nullptr);
  CHECK(m1->lhs.leading_word() == R(1) + R(2) + S(1));
  CHECK(m1->rhs.leading_word() == S(2) + R(1) + R(2));
  auto* m2 = find_rel(r3, "mixed2_1");
  REQUIRE(m2 != nullptr);
  CHECK(m2->lhs.leading_word() == R(1) + S(2) + S(1));
  CHECK(m2->rhs.leading_word() == S(2) + S(1) + R(2));

  // distant commutators appear from n=4 on
  auto r4 = lh::loop_braid_relations(4, kQ0);
  for (const char* label : {"distant_ss_1_3", "distant_rr_1_3", "distant_sr_1_3",
                            "distant_rs_1_3"})
    CHECK(find_rel(r4, label) != nullptr);
}

TEST_CASE("straightening relations at a parameter") {
  Rational t(7, 5);
  auto rels = lh::lh_relations(2, t);
  REQUIRE(rels.size() == 4);

  auto* r1 = find_rel(rels, "r1_1");
  REQUIRE(r1 != nullptr);
  // s1^2 = (1-t) s1 + t, same as expanding (s1 - 1)(s1 + t) = 0
  CHECK(r1->rhs.coeff(S(1), t) == Rational(1) - t);
  CHECK(r1->rhs.coeff(MWord(), t) == t);
  auto s = AlgebraElement<Rational>::monomial(S(1), Rational(1));
  auto unit = AlgebraElement<Rational>::unit(kQ0);
  auto factored = (s - unit) * (s + unit.scaled(t));
  CHECK(factored == r1->lhs - r1->rhs);

  auto* r1i = find_rel(rels, "r1i_1");
  REQUIRE(r1i != nullptr);
  CHECK(r1i->lhs.leading_word() == R(1) + S(1));
  CHECK(r1i->rhs.coeff(R(1), t) == -t);
  CHECK(r1i->rhs.coeff(S(1), t) == Rational(1));
  CHECK(r1i->rhs.coeff(MWord(), t) == t);

  auto* r1ii = find_rel(rels, "r1ii_1");
  REQUIRE(r1ii != nullptr);
  CHECK(r1ii->lhs.leading_word() == S(1) + R(1));
  CHECK(r1ii->rhs.coeff(S(1), t) == Rational(-1));
  CHECK(r1ii->rhs.coeff(R(1), t) == Rational(1));
  CHECK(r1ii->rhs.coeff(MWord(), t) == Rational(1));

  CHECK(lh::lh_relations(2, t, false, true).size() == 3);
  CHECK(lh::lh_relations(2, t, true, false).size() == 3);
}

TEST_CASE("index reversal maps the relation set into itself except mixed2") {
  // Under i -> n-i the braid, involution and distant families map to each
  // other (up to swapping sides); mixed1 maps to the derivable relation
  // qm0r; mixed2 maps to the reversed form that genuinely fails, so it is
  // excluded here and covered by the representation-level negative test.
  for (int n : {3, 4, 5}) {
    auto rels = lh::loop_braid_relations(n, kQ0);
    std::set<std::string> relators;
    for (const auto& r : rels) {
      relators.insert(r.relator().str());
      relators.insert((-r.relator()).str());
    }
    for (int i = 1; i + 1 <= n - 1; ++i) {
      relators.insert(lh::derived_mixed1_reversal(i, kQ0).relator().str());
      relators.insert((-lh::derived_mixed1_reversal(i, kQ0).relator()).str());
    }
    for (const auto& r : rels) {
      if (r.label.rfind("mixed2_", 0) == 0) continue;
      auto image = lh::index_reversal(r, n);
      CHECK_MESSAGE(relators.count(image.relator().str()) == 1,
                    "missing image of " << r.label << " at n=" << n);
    }
    // and mixed2's image is exactly the designed-to-fail reversed relation
    auto img = lh::index_reversal(*find_rel(rels, "mixed2_1"), n);
    auto rev = lh::reversed_mixed2(n - 2, kQ0);
    CHECK(img.relator() == -rev.relator());
  }
}
