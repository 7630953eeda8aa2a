#include "simplex/closed_form.hpp"

#include <limits>
#include <stdexcept>

namespace simplex {

namespace {

BigInt pair_count(unsigned q) { return BigInt(q + 1) * (q + 2) / 2; }

void require_even_q(FamilyParams p, const char* what) {
  if (p.q % 2 != 0) {
    throw std::invalid_argument(std::string(what) +
                                " requires even q (odd q gives an odd node "
                                "count, so no perfect matching exists)");
  }
}

std::size_t checked_size(const BigInt& v, const char* what) {
  if (v < 0 || v > std::numeric_limits<std::size_t>::max() / 2) {
    throw std::overflow_error(std::string(what) + " too large: " + v.str());
  }
  return v.convert_to<std::size_t>();
}

}  // namespace

BigInt FactoredPolynomial::degree() const {
  BigInt d = 0;
  for (const auto& f : factors) d += f.multiplicity;
  return d;
}

std::string FactoredPolynomial::to_string() const {
  if (factors.empty()) return leading.str();
  std::string out;
  if (leading != 1) out = leading.str() + "*";
  bool first = true;
  for (const auto& f : factors) {
    if (!first) out += "*";
    first = false;
    if (f.root == 0) {
      out += "x";
    } else if (f.root > 0) {
      out += "(x-" + f.root.str() + ")";
    } else {
      out += "(x+" + BigInt(-f.root).str() + ")";
    }
    if (f.multiplicity != 1) out += "^" + f.multiplicity.str();
  }
  return out;
}

BigRat eval_polynomial(const FactoredPolynomial& fp, const BigRat& x) {
  BigRat result = fp.leading;
  for (const auto& f : fp.factors) {
    BigRat base = x - BigRat(f.root);
    if (base == 0) return 0;  // root hit; multiplicity size is irrelevant
    result *= rat_pow(base, f.multiplicity);
  }
  return result;
}

std::vector<BigInt> expand_polynomial(const FactoredPolynomial& fp) {
  constexpr std::size_t kMaxDegree = 4096;
  std::size_t deg = checked_size(fp.degree(), "polynomial degree");
  if (deg > kMaxDegree) {
    throw std::overflow_error("polynomial degree " + std::to_string(deg) +
                              " above expansion limit");
  }
  std::vector<BigInt> coeffs{fp.leading};
  coeffs.reserve(deg + 1);
  for (const auto& f : fp.factors) {
    std::size_t mult = checked_size(f.multiplicity, "factor multiplicity");
    for (std::size_t i = 0; i < mult; ++i) {
      // multiply by (x - root)
      coeffs.push_back(0);
      for (std::size_t k = coeffs.size() - 1; k > 0; --k) {
        coeffs[k] = coeffs[k - 1] - f.root * coeffs[k];
      }
      coeffs[0] = -f.root * coeffs[0];
    }
  }
  return coeffs;
}

BigInt independence_number(FamilyParams p) {
  validate(p);
  return int_pow(pair_count(p.q), p.g);
}

BigInt domination_number(FamilyParams p) {
  validate(p);
  if (p.g == 0) return 1;
  BigInt q = p.q;
  BigRat value =
      BigRat((q * q + 2 * q - 1) * int_pow(pair_count(p.q), p.g - 1) +
                 2 * (q + 2),
             q + 3);
  return require_integer(value, "domination number");
}

BigInt chromatic_number(FamilyParams p) {
  validate(p);
  return p.q + 2;
}

BigInt chromatic_exponent(FamilyParams p) {
  validate(p);
  BigInt q = p.q;
  BigRat e = BigRat(2 * (int_pow(pair_count(p.q), p.g + 1) - 1),
                    q * (q + 3));
  return require_integer(e, "chromatic root multiplicity");
}

FactoredPolynomial chromatic_polynomial(FamilyParams p) {
  validate(p);
  BigInt e = chromatic_exponent(p);
  FactoredPolynomial fp;
  fp.factors.push_back({0, 1});
  fp.factors.push_back({1, 1});
  for (unsigned i = 2; i <= p.q + 1; ++i) fp.factors.push_back({i, e});
  return fp;
}

FactoredPolynomial tutte_x_axis(FamilyParams p) {
  validate(p);
  BigInt e = chromatic_exponent(p);
  FactoredPolynomial fp;
  fp.factors.push_back({0, 1});
  for (unsigned i = 1; i <= p.q; ++i) fp.factors.push_back({-BigInt(i), e});
  return fp;
}

BigInt acyclic_orientations(FamilyParams p) {
  validate(p);
  return 2 * int_pow(factorial(p.q + 2) / 2, chromatic_exponent(p));
}

BigInt root_connected_acyclic(FamilyParams p) {
  validate(p);
  return int_pow(factorial(p.q + 1), chromatic_exponent(p));
}

BigInt matching_exponent(FamilyParams p) {
  validate(p);
  require_even_q(p, "matching exponent");
  BigInt q = p.q;
  BigInt qp3sq = (q + 3) * (q + 3);
  BigRat f = BigRat(-2 * (q + 2), q * qp3sq) *
                 BigRat(int_pow(pair_count(p.q), p.g + 1)) +
             BigRat((q + 2) * p.g, q + 3) +
             BigRat((q + 1) * (q + 2) * (q + 2), q * qp3sq);
  return require_integer(f, "matching exponent");
}

BigInt perfect_matchings(FamilyParams p) {
  validate(p);
  require_even_q(p, "perfect matching count");
  BigRat value =
      BigRat(int_pow(double_factorial(p.q + 1), chromatic_exponent(p))) *
      rat_pow(BigRat(p.q + 1), matching_exponent(p));
  return require_integer(value, "perfect matching count");
}

MatchingProfile matching_profile_recursive(FamilyParams p) {
  validate(p);
  require_even_q(p, "matching profile");
  const unsigned q = p.q;
  // A = matchings leaving exactly the two tracked hubs vacant, B = perfect.
  BigInt a = double_factorial(static_cast<long>(q) - 1);
  BigInt b = double_factorial(static_cast<long>(q) + 1);
  for (unsigned round = 0; round < p.g; ++round) {
    BigInt a_next = double_factorial(static_cast<long>(q) - 1) *
                    int_pow(b, q / 2) * int_pow(a, (q * q + 2 * q + 2) / 2);
    BigInt b_next = double_factorial(static_cast<long>(q) + 1) *
                    int_pow(b, q / 2 + 1) * int_pow(a, q * (q + 2) / 2);
    a = std::move(a_next);
    b = std::move(b_next);
  }
  return {a, b};
}

std::pair<BigInt, BigInt> spanning_tree_exponents(FamilyParams p) {
  validate(p);
  BigInt q = p.q;
  BigInt qp3sq = (q + 3) * (q + 3);
  BigInt mp = int_pow(pair_count(p.q), p.g + 1);
  BigRat a = BigRat(2 * (q + 1), q * qp3sq) * BigRat(mp) -
             BigRat((q + 1) * p.g, q + 3) -
             BigRat((q + 1) * (q + 1) * (q + 2), q * qp3sq);
  BigRat b = BigRat(2 * (q * q + 2 * q - 1), q * qp3sq) * BigRat(mp) +
             BigRat((q + 1) * p.g, q + 3) +
             BigRat(q * q * q + 2 * q * q - q + 2, q * qp3sq);
  return {require_integer(a, "spanning tree exponent of 2"),
          require_integer(b, "spanning tree exponent of q+2")};
}

BigInt spanning_trees(FamilyParams p) {
  auto [a, b] = spanning_tree_exponents(p);
  return int_pow(2, a) * int_pow(p.q + 2, b);
}

BigInt spanning_trees_recursive(FamilyParams p) {
  validate(p);
  BigInt count = int_pow(p.q + 2, p.q);  // K_{q+2} by the complete-graph rule
  for (unsigned round = 0; round < p.g; ++round) {
    BigInt m_round = edge_count({p.q, round});
    BigInt n_round = node_count({p.q, round});
    count *= int_pow(2, m_round - n_round + 1) *
             int_pow(p.q + 2, (p.q - 1) * m_round + n_round - 1);
  }
  return count;
}

BigInt forests_separating_pair_in_complete(unsigned q) {
  if (q < 3) {
    throw std::invalid_argument(
        "two-component forest count needs q >= 3");
  }
  return 2 * int_pow(q, q - 3);
}

}  // namespace simplex
