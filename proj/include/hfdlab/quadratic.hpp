#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hfdlab/errors.hpp"

namespace hfdlab {

/// An element a + b*sqrt(-d) of the order Z[sqrt(-d)], d positive and
/// squarefree.  Units are exactly the elements of norm 1, which is ±1 in
/// every such order.
struct QuadraticInteger {
    long long a = 0;
    long long b = 0;
    int d = 0;

    bool operator==(const QuadraticInteger&) const = default;
};

/// Validates d (positive, squarefree) and builds an element; throws
/// InvalidParameterError on a bad radicand.
QuadraticInteger make_quadratic(long long a, long long b, int d);

long long qi_norm(const QuadraticInteger& x);
QuadraticInteger qi_conj(const QuadraticInteger& x);
QuadraticInteger qi_neg(const QuadraticInteger& x);
QuadraticInteger qi_add(const QuadraticInteger& x, const QuadraticInteger& y);
QuadraticInteger qi_sub(const QuadraticInteger& x, const QuadraticInteger& y);

/// (a1*a2 - d*b1*b2) + (a1*b2 + a2*b1) sqrt(-d); throws
/// IncompatibleRingError when the radicands differ.
QuadraticInteger qi_mul(const QuadraticInteger& x, const QuadraticInteger& y);

bool qi_is_zero(const QuadraticInteger& x);
bool qi_is_unit(const QuadraticInteger& x);

/// Exact division: value / divisor when the quotient stays in the order.
std::optional<QuadraticInteger> qi_div(const QuadraticInteger& value,
                                       const QuadraticInteger& divisor);
bool qi_divides(const QuadraticInteger& divisor, const QuadraticInteger& value);

/// All x with qi_norm(x) = n, one representative per pair {x, -x};
/// n >= 1.  Used to enumerate potential divisors by norm.
std::vector<QuadraticInteger> norm_representations(long long n, int d);

/// True iff x has no factorization into two elements of norm > 1; decided
/// by checking every divisor norm n with 1 < n < norm(x) against the norm
/// representations.  Throws ZeroOrUnitError when x is zero or a unit.
bool qi_is_atom(const QuadraticInteger& x);

/// Verdict for a claimed equality of two atom products.
struct EqualityReport {
    bool equal = false;
    bool all_atoms = false;
    int lhs_length = 0;
    int rhs_length = 0;
    bool balanced = false;
    /// No proper nonempty subproduct of one side is a unit multiple (±1)
    /// of a proper nonempty subproduct of the other.
    bool irredundant = false;
};

/// Checks product equality, atomicity of every factor, lengths, and
/// irredundance by exhaustive sub-multiset comparison.  All factors must
/// share one radicand (IncompatibleRingError), be nonzero nonunits
/// (ZeroOrUnitError), and both sides must be nonempty
/// (InvalidParameterError).
EqualityReport verify_atomic_equality(const std::vector<QuadraticInteger>& lhs,
                                      const std::vector<QuadraticInteger>& rhs);

/// Polynomial over Z[sqrt(-d)], coefficients lowest degree first, trailing
/// zeros stripped; the zero polynomial has no coefficients.
struct QuadraticPolynomial {
    std::vector<QuadraticInteger> coefficients;
    int d = 0;

    bool operator==(const QuadraticPolynomial&) const = default;
};

QuadraticPolynomial make_polynomial(std::vector<QuadraticInteger> coefficients, int d);
int poly_degree(const QuadraticPolynomial& p); // -1 for the zero polynomial
QuadraticPolynomial poly_mul(const QuadraticPolynomial& p, const QuadraticPolynomial& q);
bool poly_is_zero(const QuadraticPolynomial& p);
bool poly_is_unit(const QuadraticPolynomial& p);

/// Atom test in Z[sqrt(-d)][X] for degree <= 2: constants via qi_is_atom,
/// degree 1 via common-divisor search on the two coefficients, degree 2 via
/// content check plus exhaustive (linear)x(linear) splitting over divisor
/// candidates.  Degree >= 3 throws InvalidParameterError; zero and units
/// throw ZeroOrUnitError.
bool poly_is_atom(const QuadraticPolynomial& p);

/// Verdict for the fixed identity 2 * 2 * (X^2+X+1) =
/// (2X+1+sqrt(-3)) * (2X+1-sqrt(-3)) over Z[sqrt(-3)][X].
struct PolynomialIdentityReport {
    bool product_equal = false;
    bool factors_are_atoms = false;
    bool irredundant = false;
    int lhs_length = 0;
    int rhs_length = 0;
    bool unbalanced = false;
    /// All of the above together: the constant 2 sits in an irredundant
    /// unbalanced atomic equality, so it is a bad atom of the ring.
    bool two_is_bad = false;
};

/// Runs the four checks on the fixed identity: coefficient-exact product
/// equality, atomicity of all five factors, irredundance over all proper
/// sub-multiset pairs (compared up to ±1), and the 3 vs 2 length gap.
PolynomialIdentityReport verify_polynomial_identity();

/// Parses "5+2i14", "-3", "i3" (= sqrt(-3)) into an element of
/// Z[sqrt(-d)]; the written radicand must match d.  Throws
/// InvalidParameterError on syntax or radicand mismatch.
QuadraticInteger parse_quadratic(const std::string& text, int d);

/// Parses "2X+1+i3", "X^2+X+1" into a polynomial, accumulating terms.
QuadraticPolynomial parse_quadratic_polynomial(const std::string& text, int d);

} // namespace hfdlab
