#pragma once

#include <vector>

#include "hgf/field.hpp"

// Dense polynomials over GF(p^r), coefficients low degree first, no trailing zeros.
namespace hgf::poly {

using Poly = std::vector<FieldElement>;

struct Root {
  FieldElement value;
  unsigned multiplicity;
  friend bool operator==(const Root&, const Root&) = default;
};

void trim(Poly& f);
int degree(const Poly& f);
Poly lift(const ExtField& F, const fp::Poly& f);
bool in_prime_field(const ExtField& F, const Poly& f);
fp::Poly restrict_to_prime(const ExtField& F, const Poly& f);

Poly add(const ExtField& F, const Poly& a, const Poly& b);
Poly sub(const ExtField& F, const Poly& a, const Poly& b);
Poly mul(const ExtField& F, const Poly& a, const Poly& b);
Poly scale(const ExtField& F, const Poly& a, const FieldElement& c);
std::pair<Poly, Poly> divrem(const ExtField& F, const Poly& a, const Poly& b);
Poly rem(const ExtField& F, const Poly& a, const Poly& b);
Poly monic(const ExtField& F, const Poly& a);
Poly gcd(const ExtField& F, Poly a, Poly b);
FieldElement eval(const ExtField& F, const Poly& a, const FieldElement& x);

// Roots of f in F with multiplicity, sorted lexicographically by coefficient vector.
// Polynomials with F_p coefficients are factored over F_p first; the general path splits
// gcd(f, x^q - x) by Cantor-Zassenhaus.
std::vector<Root> roots_in_field(const ExtField& F, const Poly& f);
// All roots in F of an irreducible u in F_p[x] with deg u dividing r, sorted.
std::vector<FieldElement> roots_of_irreducible(const ExtField& F, const fp::Poly& u);
// The general path, exposed so tests can compare it with the F_p shortcut.
std::vector<Root> roots_generic(const ExtField& F, const Poly& f);

}  // namespace hgf::poly
