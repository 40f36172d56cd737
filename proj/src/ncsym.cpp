#include "rbnc/ncsym.hpp"

#include <bit>
#include <cctype>

#include "rbnc/errors.hpp"

namespace rbnc {

namespace {

template <typename Key>
void accumulate(std::map<Key, Rational>& terms, const Key& key, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  }
}

template <typename Terms>
std::string render(const Terms& terms, char letter, std::string_view open, std::string_view close) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, coeff] : terms) {
    Rational c = coeff;
    if (first) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    if (c != 1) out += to_string(c) + "*";
    out += letter;
    out += open;
    out += key.to_string();
    out += close;
    first = false;
  }
  return out;
}

NCSymElement to_power_sum(const NCSymElement& x) {
  NCSymElement out(x.degree(), Basis::P);
  switch (x.basis()) {
    case Basis::P:
      return x;
    case Basis::M:
      // m_π = Σ_{σ ≥ π} μ(π, σ) p_σ
      for (const auto& [pi, c] : x.terms())
        for (const auto& sigma : coarsenings(pi)) out.add_term(sigma, c * Rational(mobius(pi, sigma)));
      return out;
    case Basis::E:
      // e_π = Σ_{σ ≤ π} μ(0̂, σ) p_σ
      for (const auto& [pi, c] : x.terms())
        for (const auto& sigma : refinements(pi)) out.add_term(sigma, c * Rational(mobius_from_bottom(sigma)));
      return out;
  }
  throw InvariantViolation("unknown basis");
}

NCSymElement from_power_sum(const NCSymElement& x, Basis target) {
  NCSymElement out(x.degree(), target);
  switch (target) {
    case Basis::P:
      return x;
    case Basis::M:
      // p_π = Σ_{π ≤ σ} m_σ
      for (const auto& [pi, c] : x.terms())
        for (const auto& sigma : coarsenings(pi)) out.add_term(sigma, c);
      return out;
    case Basis::E:
      // p_π = (1/μ(0̂, π)) Σ_{σ ≤ π} μ(σ, π) e_σ
      for (const auto& [pi, c] : x.terms()) {
        const Rational factor = c / Rational(mobius_from_bottom(pi));
        for (const auto& sigma : refinements(pi)) out.add_term(sigma, factor * Rational(mobius(sigma, pi)));
      }
      return out;
  }
  throw InvariantViolation("unknown basis");
}

NCSymElement retag(const NCSymElement& x, Basis basis) {
  NCSymElement out(x.degree(), basis);
  for (const auto& [pi, c] : x.terms()) out.add_term(pi, c);
  return out;
}

}  // namespace

char basis_letter(Basis b) {
  switch (b) {
    case Basis::M:
      return 'm';
    case Basis::P:
      return 'p';
    case Basis::E:
      return 'e';
  }
  return '?';
}

Basis parse_basis(std::string_view text) {
  if (text.size() == 1) {
    switch (std::tolower(static_cast<unsigned char>(text[0]))) {
      case 'm':
        return Basis::M;
      case 'p':
        return Basis::P;
      case 'e':
        return Basis::E;
      default:
        break;
    }
  }
  throw ParseError("unknown basis '" + std::string(text) + "' (expected m, p or e)");
}

NCSymElement::NCSymElement(int degree, Basis basis) : degree_(degree), basis_(basis) {
  if (degree < 0 || degree > SetPartition::kMaxSize) throw SizeLimitError("degree out of range");
}

NCSymElement NCSymElement::basis_element(Basis basis, const SetPartition& pi, const Rational& coeff) {
  NCSymElement out(pi.size(), basis);
  out.add_term(pi, coeff);
  return out;
}

NCSymElement NCSymElement::one(Basis basis) { return basis_element(basis, SetPartition(), 1); }

Rational NCSymElement::coefficient(const SetPartition& pi) const {
  auto it = terms_.find(pi);
  return it == terms_.end() ? Rational(0) : it->second;
}

void NCSymElement::add_term(const SetPartition& pi, const Rational& coeff) {
  if (pi.size() != degree_)
    throw DegreeMismatchError("term " + pi.to_string() + " in an element of degree " + std::to_string(degree_));
  accumulate(terms_, pi, coeff);
}

bool NCSymElement::has_integer_coefficients() const {
  for (const auto& [pi, c] : terms_)
    if (!is_integer(c)) return false;
  return true;
}

std::string NCSymElement::to_string() const { return render(terms_, basis_letter(basis_), "[", "]"); }

CSymElement::CSymElement(int degree, Basis basis) : degree_(degree), basis_(basis) {
  if (degree < 0) throw SizeLimitError("degree out of range");
}

Rational CSymElement::coefficient(const IntPartition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Rational(0) : it->second;
}

void CSymElement::add_term(const IntPartition& lambda, const Rational& coeff) {
  if (lambda.weight() != degree_)
    throw DegreeMismatchError("term " + lambda.to_string() + " in an element of degree " + std::to_string(degree_));
  accumulate(terms_, lambda, coeff);
}

std::string CSymElement::to_string() const { return render(terms_, basis_letter(basis_), "", ""); }

NCSymElement to_basis(const NCSymElement& x, Basis target) {
  if (x.basis() == target) return x;
  // In degree 0 the three bases coincide.
  if (x.degree() == 0) return retag(x, target);
  return from_power_sum(to_power_sum(x), target);
}

NCSymElement add(const NCSymElement& x, const NCSymElement& y) {
  if (x.degree() != y.degree())
    throw DegreeMismatchError("adding elements of degree " + std::to_string(x.degree()) + " and " +
                              std::to_string(y.degree()));
  NCSymElement out = x;
  const NCSymElement rhs = to_basis(y, x.basis());
  for (const auto& [pi, c] : rhs.terms()) out.add_term(pi, c);
  return out;
}

NCSymElement scale(const Rational& c, const NCSymElement& x) {
  NCSymElement out(x.degree(), x.basis());
  if (c == 0) return out;
  for (const auto& [pi, coeff] : x.terms()) out.add_term(pi, c * coeff);
  return out;
}

NCSymElement operator+(const NCSymElement& x, const NCSymElement& y) { return add(x, y); }
NCSymElement operator-(const NCSymElement& x, const NCSymElement& y) { return add(x, scale(-1, y)); }
NCSymElement operator-(const NCSymElement& x) { return scale(-1, x); }

NCSymElement multiply(const NCSymElement& x, const NCSymElement& y) {
  const NCSymElement px = to_basis(x, Basis::P);
  const NCSymElement py = to_basis(y, Basis::P);
  NCSymElement product(x.degree() + y.degree(), Basis::P);
  for (const auto& [pi, a] : px.terms())
    for (const auto& [rho, b] : py.terms()) product.add_term(shift_union(pi, rho), a * b);
  return to_basis(product, x.basis());
}

NCSymElement induct(const NCSymElement& x) {
  if (x.degree() < 1) throw PreconditionError("induction needs degree >= 1");
  const NCSymElement source = x.basis() == Basis::E ? to_basis(x, Basis::P) : x;
  NCSymElement out(source.degree() + 1, source.basis());
  for (const auto& [pi, c] : source.terms()) out.add_term(insert_last(pi), c);
  return out;
}

NCSymElement act(const Permutation& delta, const NCSymElement& x) {
  if (delta.size() != x.degree())
    throw DegreeMismatchError("permutation of degree " + std::to_string(delta.size()) +
                              " acting on an element of degree " + std::to_string(x.degree()));
  const NCSymElement source = x.basis() == Basis::E ? to_basis(x, Basis::P) : x;
  NCSymElement out(source.degree(), source.basis());
  for (const auto& [pi, c] : source.terms()) out.add_term(apply_perm(delta, pi), c);
  return out;
}

CSymElement commutative_image(const NCSymElement& x) {
  CSymElement out(x.degree(), x.basis());
  for (const auto& [pi, c] : x.terms()) {
    switch (x.basis()) {
      case Basis::M:
        out.add_term(lambda_of(pi), c * Rational(multiplicity_weight(pi)));
        break;
      case Basis::P:
        out.add_term(lambda_of(pi), c);
        break;
      case Basis::E:
        out.add_term(lambda_of(pi), c * Rational(factorial_weight(pi)));
        break;
    }
  }
  return out;
}

CSymElement multiply(const CSymElement& x, const CSymElement& y) {
  if (x.basis() != Basis::P || y.basis() != Basis::P)
    throw PreconditionError("commutative products are implemented in the p basis only");
  CSymElement out(x.degree() + y.degree(), Basis::P);
  for (const auto& [lambda, a] : x.terms()) {
    for (const auto& [mu, b] : y.terms()) {
      std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
      parts.insert(parts.end(), mu.parts().begin(), mu.parts().end());
      out.add_term(IntPartition(std::move(parts)), a * b);
    }
  }
  return out;
}

std::map<std::vector<int>, Rational> expand_truncated(const NCSymElement& x, int k) {
  if (k < 1) throw PreconditionError("expand_truncated needs k >= 1");
  const int n = x.degree();
  std::map<std::vector<int>, Rational> out;
  std::vector<int> word(static_cast<std::size_t>(n), 1);
  while (true) {
    const SetPartition pattern = SetPartition::from_labels(word);
    Rational total = 0;
    for (const auto& [pi, c] : x.terms()) {
      bool hit = false;
      switch (x.basis()) {
        case Basis::M:
          hit = pattern == pi;
          break;
        case Basis::P:
          hit = refines(pi, pattern);
          break;
        case Basis::E: {
          hit = true;
          for (auto block : pi.blocks()) {
            std::vector<bool> used(static_cast<std::size_t>(k) + 1, false);
            for (auto m = block; m && hit; m &= m - 1) {
              const int letter = word[static_cast<std::size_t>(std::countr_zero(m))];
              if (used[static_cast<std::size_t>(letter)]) hit = false;
              used[static_cast<std::size_t>(letter)] = true;
            }
          }
          break;
        }
      }
      if (hit) total += c;
    }
    if (total != 0) out.emplace(word, total);

    int i = n - 1;
    while (i >= 0 && word[static_cast<std::size_t>(i)] == k) word[static_cast<std::size_t>(i--)] = 1;
    if (i < 0) break;
    ++word[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace rbnc
