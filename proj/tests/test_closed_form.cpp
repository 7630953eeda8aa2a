#include <stdexcept>
#include <utility>
#include <vector>

#include "doctest.h"
#include "simplex/closed_form.hpp"
#include "simplex/errors.hpp"

namespace {
using namespace simplex;
}  // namespace

TEST_CASE("integer helpers") {
  CHECK(int_pow(2, 10) == 1024);
  CHECK(int_pow(7, 0) == 1);
  CHECK_THROWS_AS(int_pow(2, -1), std::invalid_argument);
  CHECK(rat_pow(BigRat(1, 2), -2) == BigRat(4));
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(0) == 1);
  CHECK(double_factorial(5) == 15);
  CHECK(double_factorial(6) == 48);
  CHECK(double_factorial(7) == 105);
  CHECK(require_integer(BigRat(6, 3), "ratio") == 2);
  CHECK_THROWS_AS(require_integer(BigRat(1, 2), "ratio"), IntegralityError);
}

TEST_CASE("independence number") {
  CHECK(independence_number({1, 0}) == 1);
  CHECK(independence_number({1, 1}) == 3);
  CHECK(independence_number({1, 2}) == 9);
  CHECK(independence_number({2, 1}) == 6);
  CHECK(independence_number({3, 1}) == 10);
  CHECK(independence_number({2, 2}) == 36);
}

TEST_CASE("domination number") {
  CHECK(domination_number({1, 0}) == 1);
  CHECK(domination_number({3, 0}) == 1);
  CHECK(domination_number({1, 1}) == 2);
  CHECK(domination_number({2, 1}) == 3);
  CHECK(domination_number({3, 1}) == 4);
  CHECK(domination_number({1, 2}) == 3);
}

TEST_CASE("domination never exceeds independence") {
  for (unsigned q = 1; q <= 4; ++q) {
    for (unsigned g = 0; g <= 4; ++g) {
      CHECK(domination_number({q, g}) <= independence_number({q, g}));
    }
  }
}

TEST_CASE("shared chromatic exponent") {
  CHECK(chromatic_exponent({1, 0}) == 1);
  CHECK(chromatic_exponent({1, 1}) == 4);
  CHECK(chromatic_exponent({1, 2}) == 13);
  CHECK(chromatic_exponent({2, 1}) == 7);
  CHECK(chromatic_exponent({3, 1}) == 11);
  for (unsigned q = 1; q <= 5; ++q) {
    BigInt m = BigInt(q + 1) * (q + 2) / 2;
    for (unsigned g = 0; g <= 6; ++g) {
      BigInt geometric = 0;
      for (unsigned t = 0; t <= g; ++t) geometric += int_pow(m, t);
      CHECK(chromatic_exponent({q, g}) == geometric);
    }
  }
}

TEST_CASE("chromatic polynomial shape and values") {
  FactoredPolynomial p11 = chromatic_polynomial({1, 1});
  CHECK(p11.to_string() == "x*(x-1)*(x-2)^4");
  CHECK(p11.degree() == 6);

  std::vector<BigInt> coeffs = expand_polynomial(p11);
  std::vector<BigInt> expected = {0, -16, 48, -56, 32, -9, 1};
  CHECK(coeffs == expected);

  CHECK(eval_polynomial(p11, 0) == 0);
  CHECK(eval_polynomial(p11, 1) == 0);
  CHECK(eval_polynomial(p11, 2) == 0);
  CHECK(eval_polynomial(p11, 3) == BigRat(6));
  CHECK(eval_polynomial(p11, 4) == BigRat(192));

  FactoredPolynomial p21 = chromatic_polynomial({2, 1});
  CHECK(eval_polynomial(p21, 3) == 0);
  CHECK(eval_polynomial(p21, 4) == BigRat(1536));
  CHECK(eval_polynomial(p21, 5) == BigRat(5598720));

  CHECK(chromatic_number({1, 1}) == 3);
  CHECK(chromatic_number({4, 3}) == 6);
}

TEST_CASE("chromatic polynomial degree equals node count") {
  for (unsigned q = 1; q <= 4; ++q) {
    for (unsigned g = 0; g <= 3; ++g) {
      CHECK(chromatic_polynomial({q, g}).degree() == node_count({q, g}));
    }
  }
}

TEST_CASE("polynomial container edge cases") {
  FactoredPolynomial constant{.leading = 5, .factors = {}};
  CHECK(constant.to_string() == "5");
  CHECK(constant.degree() == 0);
  CHECK(eval_polynomial(constant, 123) == BigRat(5));

  FactoredPolynomial scaled{.leading = 2, .factors = {{BigInt(-1), 3}}};
  CHECK(scaled.to_string() == "2*(x+1)^3");
  CHECK(eval_polynomial(scaled, 1) == BigRat(16));

  FactoredPolynomial huge{.leading = 1, .factors = {{BigInt(0), 1000000}}};
  CHECK_THROWS_AS(expand_polynomial(huge), std::overflow_error);
}

TEST_CASE("orientation counts") {
  CHECK(acyclic_orientations({1, 0}) == 6);
  CHECK(acyclic_orientations({2, 0}) == 24);
  CHECK(acyclic_orientations({3, 0}) == 120);
  CHECK(acyclic_orientations({1, 1}) == 162);
  CHECK(root_connected_acyclic({1, 0}) == 2);
  CHECK(root_connected_acyclic({2, 0}) == 6);
  CHECK(root_connected_acyclic({1, 1}) == 16);
}

TEST_CASE("x-axis rank polynomial ties the orientation counts together") {
  for (unsigned q = 1; q <= 3; ++q) {
    for (unsigned g = 0; g <= 2; ++g) {
      FactoredPolynomial t = tutte_x_axis({q, g});
      CHECK(eval_polynomial(t, 2) == BigRat(acyclic_orientations({q, g})));
      CHECK(eval_polynomial(t, 1) == BigRat(root_connected_acyclic({q, g})));
      CHECK(t.degree() == node_count({q, g}) - 1);
    }
  }
}

TEST_CASE("matching exponent and perfect matchings") {
  CHECK(matching_exponent({2, 0}) == 0);
  CHECK(matching_exponent({2, 1}) == -4);
  CHECK(matching_exponent({4, 0}) == 0);
  CHECK_THROWS_AS(matching_exponent({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(perfect_matchings({3, 0}), std::invalid_argument);

  CHECK(perfect_matchings({2, 0}) == 3);
  CHECK(perfect_matchings({2, 1}) == 27);
  CHECK(perfect_matchings({4, 0}) == 15);
}

TEST_CASE("matching profile recursion") {
  MatchingProfile p20 = matching_profile_recursive({2, 0});
  CHECK(p20.hubs_vacant == 1);
  CHECK(p20.perfect == 3);

  MatchingProfile p21 = matching_profile_recursive({2, 1});
  CHECK(p21.hubs_vacant == 3);
  CHECK(p21.perfect == 27);

  for (unsigned q : {2u, 4u}) {
    for (unsigned g = 0; g <= 3; ++g) {
      MatchingProfile prof = matching_profile_recursive({q, g});
      CHECK(prof.perfect ==
            prof.hubs_vacant * int_pow(BigInt(q + 1), g + 1));
      CHECK(prof.perfect == perfect_matchings({q, g}));
    }
  }
  CHECK_THROWS_AS(matching_profile_recursive({3, 1}), std::invalid_argument);
}

TEST_CASE("spanning tree exponents and counts") {
  using Exp = std::pair<BigInt, BigInt>;
  CHECK(spanning_tree_exponents({1, 0}) == Exp{0, 1});
  CHECK(spanning_tree_exponents({2, 0}) == Exp{0, 2});
  CHECK(spanning_tree_exponents({3, 0}) == Exp{0, 3});
  CHECK(spanning_tree_exponents({1, 1}) == Exp{1, 3});
  CHECK(spanning_tree_exponents({2, 1}) == Exp{3, 11});
  CHECK(spanning_tree_exponents({1, 2}) == Exp{5, 8});

  CHECK(spanning_trees({1, 0}) == 3);
  CHECK(spanning_trees({2, 0}) == 16);
  CHECK(spanning_trees({3, 0}) == 125);
  CHECK(spanning_trees({1, 1}) == 54);
  CHECK(spanning_trees({2, 1}) == BigInt(1) << 25);
  CHECK(spanning_trees({1, 2}) == 209952);
}

TEST_CASE("spanning tree recursion matches the exponent form") {
  for (unsigned q = 1; q <= 3; ++q) {
    for (unsigned g = 0; g <= 6; ++g) {
      CHECK(spanning_trees_recursive({q, g}) == spanning_trees({q, g}));
    }
  }
}

TEST_CASE("two-component separating forests in a complete graph") {
  CHECK_THROWS_AS(forests_separating_pair_in_complete(2),
                  std::invalid_argument);
  CHECK(forests_separating_pair_in_complete(3) == 2);
  CHECK(forests_separating_pair_in_complete(4) == 8);
  CHECK(forests_separating_pair_in_complete(7) == 4802);
}

// Exponents only: raising them would materialize numbers with 10^11+ bits.
TEST_CASE("every closed-form exponent stays integral across the sweep") {
  for (unsigned q = 1; q <= 6; ++q) {
    for (unsigned g = 0; g <= 8; ++g) {
      FamilyParams p{q, g};
      CHECK_NOTHROW(node_count(p));
      CHECK_NOTHROW(domination_number(p));
      CHECK_NOTHROW(chromatic_exponent(p));
      CHECK_NOTHROW(spanning_tree_exponents(p));
      if (q % 2 == 0) CHECK_NOTHROW(matching_exponent(p));
    }
  }
}
