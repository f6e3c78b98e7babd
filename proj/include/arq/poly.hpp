#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arq/field.hpp"
#include "arq/linalg.hpp"

namespace arq {

/// Univariate polynomial over a Field, coefficients from low to high degree.
/// The zero polynomial has no coefficients.
using Poly = std::vector<Scalar>;

Poly poly_trim(Poly p);
long poly_degree(const Poly& p);
Poly poly_add(const Field& f, const Poly& a, const Poly& b);
Poly poly_sub(const Field& f, const Poly& a, const Poly& b);
Poly poly_mul(const Field& f, const Poly& a, const Poly& b);
/// Quotient and remainder of a by a nonzero b.
std::pair<Poly, Poly> poly_divmod(const Field& f, const Poly& a, const Poly& b);
Poly poly_monic(const Field& f, const Poly& p);
Poly poly_gcd(const Field& f, Poly a, Poly b);
Poly poly_powmod(const Field& f, Poly base, mpz_class e, const Poly& mod);

/// Parses expressions such as "x^2+x+1", "x-1" or "2x^3 - x".
Poly parse_poly(const Field& f, const std::string& text);
std::string poly_to_string(const Poly& p);

/// Irreducibility verdict. Over F_p the test is exact (Ben-Or); over Q it
/// is exact up to degree 3 (rational roots) and `trusted` beyond.
struct IrreducibilityVerdict {
    bool irreducible = false;
    bool trusted = false;
};
IrreducibilityVerdict is_irreducible(const Field& f, const Poly& p);

/// Roots lying in the field (exact over Q by the rational root theorem;
/// exhaustive search over small F_p).
std::vector<Scalar> field_roots(const Field& f, const Poly& p);

/// Minimal polynomial of a square matrix (monic).
Poly minimal_polynomial(const Field& f, const Matrix& a);
/// Evaluates p at a square matrix.
Matrix poly_eval_matrix(const Field& f, const Poly& p, const Matrix& a);

}  // namespace arq
