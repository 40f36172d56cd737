#pragma once

// Symmetric functions in noncommuting variables, stored over set partitions
// in the monomial (M), power-sum (P) or elementary (E) basis, together with
// their commutative images over integer partitions.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rbnc/permutation.hpp"
#include "rbnc/rational.hpp"
#include "rbnc/setpart.hpp"

namespace rbnc {

enum class Basis { M, P, E };

char basis_letter(Basis b);  // 'm', 'p', 'e'
/// Accepts m/p/e in either case. Throws ParseError.
Basis parse_basis(std::string_view text);

class NCSymElement {
 public:
  using Terms = std::map<SetPartition, Rational>;

  explicit NCSymElement(int degree = 0, Basis basis = Basis::P);

  static NCSymElement basis_element(Basis basis, const SetPartition& pi, const Rational& coeff = 1);
  /// The empty product: degree 0, coefficient 1.
  static NCSymElement one(Basis basis = Basis::P);

  int degree() const noexcept { return degree_; }
  Basis basis() const noexcept { return basis_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rational coefficient(const SetPartition& pi) const;

  /// Accumulates coeff onto key pi; a vanishing sum removes the key.
  void add_term(const SetPartition& pi, const Rational& coeff);

  bool has_integer_coefficients() const;

  /// "p[1/2] - 2*p[12]"; "0" for the zero element.
  std::string to_string() const;

  /// Same degree, same basis tag, same terms. Convert first to compare
  /// elements written in different bases.
  friend bool operator==(const NCSymElement&, const NCSymElement&) = default;

 private:
  int degree_;
  Basis basis_;
  Terms terms_;
};

class CSymElement {
 public:
  using Terms = std::map<IntPartition, Rational>;

  explicit CSymElement(int degree = 0, Basis basis = Basis::P);

  int degree() const noexcept { return degree_; }
  Basis basis() const noexcept { return basis_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rational coefficient(const IntPartition& lambda) const;
  void add_term(const IntPartition& lambda, const Rational& coeff);

  std::string to_string() const;  // "p(2,1) + 6*p(1,1,1)"

  friend bool operator==(const CSymElement&, const CSymElement&) = default;

 private:
  int degree_;
  Basis basis_;
  Terms terms_;
};

/// Rewrites x in the target basis. Every route passes through P.
NCSymElement to_basis(const NCSymElement& x, Basis target);

/// Sum in x's basis; y is converted when its basis differs.
NCSymElement add(const NCSymElement& x, const NCSymElement& y);
NCSymElement scale(const Rational& c, const NCSymElement& x);

NCSymElement operator+(const NCSymElement& x, const NCSymElement& y);
NCSymElement operator-(const NCSymElement& x, const NCSymElement& y);
NCSymElement operator-(const NCSymElement& x);

/// Product of power series; p_π p_ρ = p_{π ⊔ shift(ρ)}. Result in x's basis.
NCSymElement multiply(const NCSymElement& x, const NCSymElement& y);

/// x↑: doubles the last variable of each monomial. M stays M; P and E give P.
NCSymElement induct(const NCSymElement& x);

/// δ∘x: permutes variable positions. M stays M; P and E give P.
NCSymElement act(const Permutation& delta, const NCSymElement& x);

/// Letting the variables commute. Keeps the basis letter.
CSymElement commutative_image(const NCSymElement& x);

/// Commutative power-sum product; both operands must be in the p basis.
CSymElement multiply(const CSymElement& x, const CSymElement& y);

/// Word -> coefficient for all monomials with letters 1..k. Letters in the
/// returned words are one-based. Exponential in degree; a test oracle.
std::map<std::vector<int>, Rational> expand_truncated(const NCSymElement& x, int k);

}  // namespace rbnc
