#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "loophecke/alexander.hpp"

namespace {

using lh::Matrix;
using lh::RatFunc;

std::string alex(const std::string& word, int n) {
  return lh::alexander_polynomial(word, n).str();
}

}  // namespace

TEST_CASE("reduced Burau of a single crossing in B_2 is the 1x1 block (-t)") {
  auto r = lh::reduced_burau_image(lh::parse_gword("s1"), 2);
  CHECK(r.rows() == 1);
  CHECK(r.at(0, 0) == -RatFunc::t());
}

TEST_CASE("knot anchors") {
  CHECK(alex("s1", 2) == "1");
  CHECK(alex("s1 s1 s1", 2) == "t^2 - t + 1");
  CHECK(alex("s1 s2^-1 s1 s2^-1", 3) == "t^2 - 3t + 1");
  CHECK(alex("s1 s1 s1 s1 s1", 2) == "t^4 - t^3 + t^2 - t + 1");
}

TEST_CASE("invariance under stabilization and conjugation") {
  CHECK(alex("s1 s1 s1 s2", 3) == "t^2 - t + 1");
  CHECK(alex("s2 s1 s1 s1", 3) == "t^2 - t + 1");
  CHECK(alex("s2^-1 s1 s2^-1 s1", 3) == alex("s1 s2^-1 s1 s2^-1", 3));
}

TEST_CASE("split closures give zero") {
  CHECK(lh::alexander_polynomial(lh::GWord{}, 2).is_zero());
  CHECK(lh::alexander_polynomial("s1 s1 s1", 3).is_zero());
}

TEST_CASE("inverse letters invert the Burau image") {
  auto rep = lh::burau_gb(3, RatFunc::t());
  auto s1 = rep.image_of_generator({lh::GenKind::sigma, 1});
  auto s1inv = rep.image_of_generator({lh::GenKind::sigma_inv, 1});
  CHECK(s1 * s1inv == Matrix<RatFunc>::identity(3, RatFunc()));
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(lh::alexander_polynomial("r1", 2), lh::WordParseError);
  CHECK_THROWS_AS(lh::alexander_polynomial("s2", 2), lh::IndexOutOfRange);
  CHECK_THROWS_AS(lh::alexander_polynomial("s1", 1), lh::IndexOutOfRange);
}
