#pragma once

#include <string>
#include <utility>
#include <vector>

#include "simplex/bigint.hpp"
#include "simplex/family.hpp"

namespace simplex {

/// Polynomial kept as leading * prod (x - root)^multiplicity.
/// Multiplicities are exact integers because they grow geometrically in g;
/// evaluation and expansion refuse exponents too large to materialize.
struct FactoredPolynomial {
  struct Factor {
    BigInt root;
    BigInt multiplicity;  // >= 1
  };

  BigInt leading = 1;
  std::vector<Factor> factors;  // distinct roots, construction order

  BigInt degree() const;

  /// Renders like "x*(x-1)*(x-2)^4"; a non-unit leading coefficient is
  /// prefixed as "c*".
  std::string to_string() const;
};

BigRat eval_polynomial(const FactoredPolynomial& fp, const BigRat& x);

/// Coefficients ascending by power. Guards against degrees too large to
/// expand (std::overflow_error).
std::vector<BigInt> expand_polynomial(const FactoredPolynomial& fp);

/// Counts of maximum matchings by coverage: `hubs_vacant` leaves exactly two
/// designated hubs uncovered, `perfect` covers everything.
struct MatchingProfile {
  BigInt hubs_vacant;
  BigInt perfect;

  friend bool operator==(const MatchingProfile&,
                         const MatchingProfile&) = default;
};

// Every function below is a pure formula in (q, g); none builds a graph.
// Rational intermediates are reduced and checked for integrality, so a
// transcription slip surfaces as IntegralityError instead of a wrong value.

BigInt independence_number(FamilyParams p);

BigInt domination_number(FamilyParams p);

BigInt chromatic_number(FamilyParams p);

/// Shared multiplicity E(q,g) of the non-trivial chromatic roots; also the
/// exponent in the orientation and Tutte formulas.
BigInt chromatic_exponent(FamilyParams p);

/// lambda (lambda-1) prod_{i=2..q+1} (lambda-i)^E
FactoredPolynomial chromatic_polynomial(FamilyParams p);

/// T(x, 0) = x prod_{i=1..q} (x+i)^E
FactoredPolynomial tutte_x_axis(FamilyParams p);

BigInt acyclic_orientations(FamilyParams p);

/// Acyclic orientations with a unique fixed sink (count is independent of
/// which node is the sink).
BigInt root_connected_acyclic(FamilyParams p);

/// Exponent F(q,g) in the perfect-matching formula; integral only for even
/// q, and perfect matchings only exist there (odd q gives odd node counts).
/// Throws IntegralityError or std::invalid_argument on odd q.
BigInt matching_exponent(FamilyParams p);

/// ((q+1)!!)^E (q+1)^F, even q only.
BigInt perfect_matchings(FamilyParams p);

/// Two-variable recursion for (hubs_vacant, perfect); even q only.
/// Closed under iteration from (q-1)!!, (q+1)!! at g = 0.
MatchingProfile matching_profile_recursive(FamilyParams p);

/// Exponents (a, b) with spanning trees = 2^a (q+2)^b.
std::pair<BigInt, BigInt> spanning_tree_exponents(FamilyParams p);

BigInt spanning_trees(FamilyParams p);

/// Same count through the per-round product recursion
/// N(g+1) = 2^(M-N+1) (q+2)^((q-1)M+N-1) N(g); independent route used to
/// cross-check spanning_trees.
BigInt spanning_trees_recursive(FamilyParams p);

/// Spanning forests of K_q with exactly two trees separating a fixed node
/// pair: 2 q^(q-3), q >= 3. Equivalently the spanning trees of K_q through
/// a fixed edge (add the edge to such a forest, or delete it from a tree).
BigInt forests_separating_pair_in_complete(unsigned q);

}  // namespace simplex
