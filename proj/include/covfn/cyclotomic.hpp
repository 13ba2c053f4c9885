#ifndef COVFN_CYCLOTOMIC_HPP
#define COVFN_CYCLOTOMIC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "covfn/residue.hpp"

namespace covfn {

/// Dense integer polynomial, lowest degree first, no trailing zeros.
/// The zero polynomial has an empty coefficient vector.
struct IntPolynomial {
    std::vector<Int> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    std::int64_t degree() const { return static_cast<std::int64_t>(coeffs.size()) - 1; }
    const Int& leading() const { return coeffs.back(); }

    /// Coefficient of x^i, zero beyond the degree.
    const Int& coeff(std::size_t i) const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
};

IntPolynomial make_polynomial(std::vector<Int> coeffs); // strips trailing zeros
IntPolynomial x_pow_minus_one(std::uint64_t d);

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_sub(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);

/// Quotient of an exact division; throws precondition_error if b does not
/// divide a over the integers.
IntPolynomial poly_divexact(const IntPolynomial& a, const IntPolynomial& b);

std::string to_string(const IntPolynomial& p, const std::string& var = "x");

std::uint64_t euler_phi(std::uint64_t n);

/// The d-th cyclotomic polynomial: monic, degree phi(d), obtained by dividing
/// x^d - 1 by the cyclotomic polynomials of the proper divisors of d.
/// Memoized internally; safe to call concurrently.
IntPolynomial cyclotomic_poly(std::uint64_t d);

/// An element of Z[zeta_d] in the power basis 1, zeta, ..., zeta^{phi(d)-1},
/// fully reduced mod the d-th cyclotomic polynomial.  Elements of different
/// orders combine only after an explicit lift; equality lifts both sides to
/// the lcm of the orders.
class CyclotomicElement {
public:
    CyclotomicElement() : order_(1), coeffs_(1, Int(0)) {}

    static CyclotomicElement zero(std::uint64_t order);
    static CyclotomicElement from_integer(std::uint64_t order, const Int& value);

    std::uint64_t order() const { return order_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    /// Rewrites this element in Z[zeta_target]; order must divide target.
    CyclotomicElement lifted_to(std::uint64_t target) const;

    CyclotomicElement& operator+=(const CyclotomicElement& rhs);
    CyclotomicElement& operator-=(const CyclotomicElement& rhs);
    CyclotomicElement& operator*=(const CyclotomicElement& rhs);

    friend CyclotomicElement operator+(CyclotomicElement lhs, const CyclotomicElement& rhs) {
        return lhs += rhs;
    }
    friend CyclotomicElement operator-(CyclotomicElement lhs, const CyclotomicElement& rhs) {
        return lhs -= rhs;
    }
    friend CyclotomicElement operator*(CyclotomicElement lhs, const CyclotomicElement& rhs) {
        return lhs *= rhs;
    }
    friend CyclotomicElement operator-(CyclotomicElement x);

    friend bool operator==(const CyclotomicElement& lhs, const CyclotomicElement& rhs);

private:
    friend CyclotomicElement make_element(std::uint64_t, std::vector<Int>);

    std::uint64_t order_;
    std::vector<Int> coeffs_; // size euler_phi(order_)
};

/// Builds an element from coefficients of zeta^0, zeta^1, ... (any length)
/// and reduces to the power basis.
CyclotomicElement make_element(std::uint64_t order, std::vector<Int> power_coeffs);

/// zeta_d^e, e taken mod d.
CyclotomicElement from_root(std::uint64_t d, const Int& e);

CyclotomicElement cyc_scale(const CyclotomicElement& x, const Int& c);

/// Whether x/m is an algebraic integer.  For m >= 1 this is coefficientwise
/// divisibility in the power basis (the cyclotomic ring of integers is
/// Z[zeta_d]); m = 0 asks whether x = 0.
bool divisible_by_integer(const CyclotomicElement& x, const Int& m);

/// gcd of the power-basis coefficients; 0 for the zero element.
Int coefficient_gcd(const CyclotomicElement& x);

std::string to_string(const CyclotomicElement& x);

/// A frequency alpha = c/d in lowest terms with 0 < numerator < denominator.
struct ReducedFrequency {
    Int numerator;
    std::uint64_t denominator;
};

/// Normalizes alpha = c/d, requiring alpha not an integer and alpha*N an
/// integer; throws invalid_frequency_error otherwise.
ReducedFrequency reduce_frequency(const Int& c, const Int& d, const Int& period_lcm);

/// The weighted exponential sum over classes whose modulus is compatible with
/// alpha = c/d: sum of lambda_s * (N/n_s) * zeta^(c*a_s) over s with
/// alpha*n_s integral.  The result lives in Z[zeta_D] with D the reduced
/// denominator of alpha.
CyclotomicElement exp_sum(const ResidueSystem& system, const Int& c, const Int& d);

/// Checks that sum over a period of w(r)*zeta^r equals exp_sum at the same
/// frequency -- an exact identity tying the profile to the exponential sum.
bool fourier_identity_check(const ResidueSystem& system, const Int& c, const Int& d,
                            std::uint64_t cap = kDefaultCap);

} // namespace covfn

#endif
