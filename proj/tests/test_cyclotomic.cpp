#include <doctest.h>

#include <complex>
#include <cstdint>
#include <vector>

#include "covfn/cyclotomic.hpp"
#include "covfn/errors.hpp"
#include "covfn/generate.hpp"
#include "covfn/residue.hpp"
#include "oracles.hpp"

using covfn::CyclotomicElement;
using covfn::Int;
using covfn::IntPolynomial;

namespace {

IntPolynomial poly_of(std::initializer_list<long> coeffs) {
    std::vector<Int> v;
    for (long c : coeffs) v.emplace_back(c);
    return covfn::make_polynomial(std::move(v));
}

bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-7) {
    return std::abs(a - b) <= tol;
}

} // namespace

TEST_CASE("polynomials normalize away trailing zeros") {
    IntPolynomial p = covfn::make_polynomial({Int(1), Int(2), Int(0), Int(0)});
    CHECK(p.coeffs.size() == 2);
    CHECK(p.degree() == 1);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == 2);
    CHECK(p.coeff(7) == 0); // beyond the degree

    IntPolynomial z = covfn::make_polynomial({Int(0), Int(0)});
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
}

TEST_CASE("polynomial arithmetic agrees with schoolbook convolution") {
    IntPolynomial a = poly_of({1, -3, 0, 2});
    IntPolynomial b = poly_of({5, 1});

    CHECK(covfn::poly_add(a, b) == poly_of({6, -2, 0, 2}));
    CHECK(covfn::poly_sub(a, b) == poly_of({-4, -4, 0, 2}));
    CHECK(covfn::poly_sub(a, a).is_zero());
    CHECK(covfn::poly_mul(a, b) == poly_of({5, -14, -3, 10, 2}));
    CHECK(covfn::poly_mul(a, IntPolynomial{}).is_zero());

    // Random-ish products against the reference convolution.
    covfn::Xoshiro256ss rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Int> u, v;
        const std::uint64_t du = 1 + rng.below(6), dv = 1 + rng.below(6);
        for (std::uint64_t i = 0; i <= du; ++i) u.emplace_back(static_cast<long>(rng.below(9)) - 4);
        for (std::uint64_t i = 0; i <= dv; ++i) v.emplace_back(static_cast<long>(rng.below(9)) - 4);
        IntPolynomial prod = covfn::poly_mul(covfn::make_polynomial(u), covfn::make_polynomial(v));
        CHECK(prod == covfn::make_polynomial(oracles::poly_mul(u, v)));
    }
}

TEST_CASE("exact division inverts multiplication and rejects non-divisors") {
    IntPolynomial a = poly_of({2, 0, -1, 4});
    IntPolynomial b = poly_of({-1, 1, 1});
    CHECK(covfn::poly_divexact(covfn::poly_mul(a, b), b) == a);
    CHECK(covfn::poly_divexact(covfn::poly_mul(a, b), a) == b);

    CHECK_THROWS_AS(covfn::poly_divexact(poly_of({1, 1, 1}), poly_of({1, 1})),
                    covfn::precondition_error);
    CHECK_THROWS_AS(covfn::poly_divexact(poly_of({0, 0, 1}), poly_of({0, 2})),
                    covfn::precondition_error); // leading divides, content does not
    CHECK_THROWS_AS(covfn::poly_divexact(poly_of({1}), IntPolynomial{}),
                    covfn::precondition_error); // division by zero
    CHECK(covfn::poly_divexact(IntPolynomial{}, b).is_zero());
}

TEST_CASE("euler_phi matches the counting definition") {
    CHECK(covfn::euler_phi(1) == 1);
    CHECK(covfn::euler_phi(2) == 1);
    CHECK(covfn::euler_phi(12) == 4);
    CHECK(covfn::euler_phi(97) == 96);
    CHECK(covfn::euler_phi(105) == 48);
    for (std::uint64_t n = 1; n <= 300; ++n) CHECK(covfn::euler_phi(n) == oracles::phi(n));
    CHECK_THROWS_AS(covfn::euler_phi(0), covfn::precondition_error);
}

TEST_CASE("small cyclotomic polynomials have their textbook coefficients") {
    CHECK(covfn::cyclotomic_poly(1) == poly_of({-1, 1}));
    CHECK(covfn::cyclotomic_poly(2) == poly_of({1, 1}));
    CHECK(covfn::cyclotomic_poly(3) == poly_of({1, 1, 1}));
    CHECK(covfn::cyclotomic_poly(4) == poly_of({1, 0, 1}));
    CHECK(covfn::cyclotomic_poly(6) == poly_of({1, -1, 1}));
    CHECK(covfn::cyclotomic_poly(12) == poly_of({1, 0, -1, 0, 1}));

    // Prime index: all-ones of degree p-1.
    for (std::uint64_t p : {5ull, 7ull, 13ull, 31ull}) {
        IntPolynomial phi_p = covfn::cyclotomic_poly(p);
        CHECK(phi_p.degree() == static_cast<std::int64_t>(p) - 1);
        for (const Int& c : phi_p.coeffs) CHECK(c == 1);
    }

    // 105 = 3*5*7 is the first index with a coefficient outside {-1, 0, 1}.
    IntPolynomial phi105 = covfn::cyclotomic_poly(105);
    CHECK(phi105.degree() == 48);
    CHECK(phi105.coeff(7) == -2);
    CHECK(phi105.coeff(41) == -2);
}

TEST_CASE("cyclotomic polynomials multiply back to x^d - 1") {
    for (std::uint64_t d = 1; d <= 200; ++d) {
        IntPolynomial phi_d = covfn::cyclotomic_poly(d);
        CHECK(phi_d.degree() == static_cast<std::int64_t>(covfn::euler_phi(d)));
        CHECK(phi_d.leading() == 1);

        std::vector<Int> prod{Int(1)};
        for (std::uint64_t e : covfn::divisors_ascending(d))
            prod = oracles::poly_mul(prod, covfn::cyclotomic_poly(e).coeffs);
        CHECK(covfn::make_polynomial(prod) == covfn::x_pow_minus_one(d));
    }
}

TEST_CASE("elements reduce to the power basis") {
    CHECK(CyclotomicElement{}.is_zero());
    CHECK(CyclotomicElement::zero(12).order() == 12);
    CHECK(CyclotomicElement::zero(12).coeffs().size() == 4);
    CHECK(CyclotomicElement::from_integer(12, Int(5)).coeffs()[0] == 5);

    // zeta_4^2 = -1, zeta_4^4 = 1: exponents past phi(d) fold down.
    CHECK(covfn::make_element(4, {Int(0), Int(0), Int(1)}) ==
          CyclotomicElement::from_integer(4, Int(-1)));
    CHECK(covfn::make_element(4, {Int(0), Int(0), Int(0), Int(0), Int(1)}) ==
          CyclotomicElement::from_integer(4, Int(1)));

    CHECK(covfn::from_root(2, Int(1)).coeffs() == std::vector<Int>{Int(-1)});
    CHECK(covfn::from_root(3, Int(2)).coeffs() == std::vector<Int>{Int(-1), Int(-1)});
    CHECK(covfn::from_root(4, Int(2)) == CyclotomicElement::from_integer(4, Int(-1)));
    // Exponents are taken mod the order, including negatives.
    CHECK(covfn::from_root(5, Int(7)) == covfn::from_root(5, Int(2)));
    CHECK(covfn::from_root(5, Int(-1)) == covfn::from_root(5, Int(4)));
    CHECK_THROWS_AS(covfn::from_root(0, Int(1)), covfn::invalid_frequency_error);
}

TEST_CASE("root powers behave like d-th roots of unity") {
    for (std::uint64_t d = 2; d <= 50; ++d) {
        // Sum over all d-th roots vanishes.
        CyclotomicElement sum = CyclotomicElement::zero(d);
        for (std::uint64_t r = 0; r < d; ++r) sum += covfn::from_root(d, Int(static_cast<long>(r)));
        CHECK(sum.is_zero());

        // zeta^d = 1 by repeated multiplication.
        CyclotomicElement pow = CyclotomicElement::from_integer(d, Int(1));
        const CyclotomicElement zeta = covfn::from_root(d, Int(1));
        for (std::uint64_t i = 0; i < d; ++i) pow *= zeta;
        CHECK(pow == CyclotomicElement::from_integer(d, Int(1)));
    }
}

TEST_CASE("arithmetic tracks the complex embedding") {
    covfn::Xoshiro256ss rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        const std::uint64_t d = 2 + rng.below(29);
        std::vector<Int> u, v;
        for (std::uint64_t i = 0; i < d; ++i) {
            u.emplace_back(static_cast<long>(rng.below(11)) - 5);
            v.emplace_back(static_cast<long>(rng.below(11)) - 5);
        }
        CyclotomicElement x = covfn::make_element(d, u);
        CyclotomicElement y = covfn::make_element(d, v);

        std::complex<double> ex = 0.0, ey = 0.0;
        for (std::uint64_t i = 0; i < d; ++i) {
            const auto root = std::polar(1.0, oracles::kTau * static_cast<double>(i) /
                                                  static_cast<double>(d));
            ex += u[i].get_d() * root;
            ey += v[i].get_d() * root;
        }
        CHECK(close(oracles::eval(x), ex, 1e-6));
        CHECK(close(oracles::eval(x + y), ex + ey, 1e-6));
        CHECK(close(oracles::eval(x - y), ex - ey, 1e-6));
        CHECK(close(oracles::eval(x * y), ex * ey, 1e-5));
        CHECK(close(oracles::eval(-x), -ex, 1e-6));
    }
}

TEST_CASE("orders lift to common multiples") {
    // zeta_6^2 and zeta_3 are the same number even though the orders differ.
    CHECK(covfn::from_root(6, Int(2)) == covfn::from_root(3, Int(1)));
    CHECK(covfn::from_root(6, Int(3)) == covfn::from_root(2, Int(1)));
    CHECK(covfn::from_root(4, Int(2)) == covfn::from_root(2, Int(1)));

    // Mixed-order arithmetic lands in the lcm.
    CyclotomicElement mixed = covfn::from_root(2, Int(1)) + covfn::from_root(3, Int(1));
    CHECK(mixed.order() == 6);
    CHECK(close(oracles::eval(mixed), std::polar(1.0, oracles::kTau / 2.0) +
                                          std::polar(1.0, oracles::kTau / 3.0)));

    CyclotomicElement lifted = covfn::from_root(4, Int(1)).lifted_to(12);
    CHECK(lifted.order() == 12);
    CHECK(lifted == covfn::from_root(12, Int(3)));
    CHECK_THROWS_AS(covfn::from_root(4, Int(1)).lifted_to(6), covfn::order_mismatch_error);
}

TEST_CASE("product of 1 - zeta^r over nontrivial roots equals the order") {
    for (std::uint64_t d = 2; d <= 30; ++d) {
        CyclotomicElement prod = CyclotomicElement::from_integer(d, Int(1));
        const CyclotomicElement one = CyclotomicElement::from_integer(d, Int(1));
        for (std::uint64_t r = 1; r < d; ++r)
            prod *= one - covfn::from_root(d, Int(static_cast<long>(r)));
        CHECK(prod == CyclotomicElement::from_integer(d, Int(static_cast<long>(d))));
    }
}

TEST_CASE("integer divisibility is coefficientwise in the power basis") {
    CyclotomicElement x = covfn::make_element(5, {Int(3), Int(3)});
    CHECK(covfn::divisible_by_integer(x, Int(3)));
    CHECK_FALSE(covfn::divisible_by_integer(x, Int(2)));
    CHECK(covfn::coefficient_gcd(x) == 3);

    // 1 - zeta_4 has norm 2 but is not 2 times an algebraic integer.
    CyclotomicElement y =
        CyclotomicElement::from_integer(4, Int(1)) - covfn::from_root(4, Int(1));
    CHECK_FALSE(covfn::divisible_by_integer(y, Int(2)));
    CHECK(covfn::coefficient_gcd(y) == 1);

    CHECK(covfn::divisible_by_integer(CyclotomicElement::zero(9), Int(0)));
    CHECK(covfn::divisible_by_integer(CyclotomicElement::zero(9), Int(1234)));
    CHECK_FALSE(covfn::divisible_by_integer(x, Int(0)));
    CHECK(covfn::divisible_by_integer(x, Int(1)));
    CHECK(covfn::divisible_by_integer(x, Int(-3)));
    CHECK(covfn::coefficient_gcd(CyclotomicElement::zero(9)) == 0);

    covfn::Xoshiro256ss rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const std::uint64_t d = 2 + rng.below(20);
        std::vector<Int> u;
        for (std::uint64_t i = 0; i < d; ++i)
            u.emplace_back(static_cast<long>(rng.below(21)) - 10);
        const Int m(static_cast<long>(2 + rng.below(9)));
        CHECK(covfn::divisible_by_integer(covfn::cyc_scale(covfn::make_element(d, u), m), m));
    }
}

TEST_CASE("rendering uses the order-tagged variable") {
    CHECK(covfn::to_string(covfn::cyclotomic_poly(12)) == "x^4 - x^2 + 1");
    CHECK(covfn::to_string(CyclotomicElement::zero(6)) == "0");
    CHECK(covfn::to_string(CyclotomicElement::from_integer(12, Int(-3))) == "-3");
    CHECK(covfn::to_string(covfn::make_element(5, {Int(2), Int(0), Int(-1)})) == "-z5^2 + 2");
}

TEST_CASE("frequency reduction keeps only proper fractions of the period") {
    covfn::ReducedFrequency f = covfn::reduce_frequency(Int(1), Int(12), Int(12));
    CHECK(f.numerator == 1);
    CHECK(f.denominator == 12);

    f = covfn::reduce_frequency(Int(2), Int(4), Int(12));
    CHECK(f.numerator == 1);
    CHECK(f.denominator == 2);

    f = covfn::reduce_frequency(Int(-1), Int(3), Int(12));
    CHECK(f.numerator == 2);
    CHECK(f.denominator == 3);

    f = covfn::reduce_frequency(Int(9), Int(6), Int(12));
    CHECK(f.numerator == 1);
    CHECK(f.denominator == 2);

    CHECK_THROWS_AS(covfn::reduce_frequency(Int(2), Int(1), Int(12)),
                    covfn::invalid_frequency_error); // integer alpha
    CHECK_THROWS_AS(covfn::reduce_frequency(Int(4), Int(2), Int(12)),
                    covfn::invalid_frequency_error); // reduces to an integer
    CHECK_THROWS_AS(covfn::reduce_frequency(Int(0), Int(5), Int(12)),
                    covfn::invalid_frequency_error); // zero is an integer
    CHECK_THROWS_AS(covfn::reduce_frequency(Int(1), Int(5), Int(12)),
                    covfn::invalid_frequency_error); // alpha * 12 not integral
    CHECK_THROWS_AS(covfn::reduce_frequency(Int(1), Int(0), Int(12)),
                    covfn::invalid_frequency_error); // zero denominator
}

TEST_CASE("exponential sums of the running example") {
    const covfn::ResidueSystem sys = oracles::fixture();

    CyclotomicElement full = covfn::exp_sum(sys, Int(1), Int(12));
    CHECK(full.order() == 12);
    CHECK(full == CyclotomicElement::from_integer(12, Int(1)));

    CyclotomicElement half = covfn::exp_sum(sys, Int(1), Int(2));
    CHECK(half.order() == 2);
    CHECK(half.is_zero());

    // Unreduced input lands at the reduced order.
    CHECK(covfn::exp_sum(sys, Int(2), Int(24)) == covfn::exp_sum(sys, Int(1), Int(12)));
    CHECK(covfn::exp_sum(sys, Int(6), Int(12)).order() == 2);

    CHECK_THROWS_AS(covfn::exp_sum(sys, Int(3), Int(3)), covfn::invalid_frequency_error);
    CHECK_THROWS_AS(covfn::exp_sum(sys, Int(1), Int(5)), covfn::invalid_frequency_error);
}

TEST_CASE("weighted exponential sums cancel for the constant weighted system") {
    const covfn::ResidueSystem sys =
        covfn::system_of({{0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}},
                         std::vector<Int>{Int(3), Int(3), Int(-2), Int(-2), Int(-2)});
    CHECK(covfn::exp_sum(sys, Int(1), Int(2)).is_zero());
    CHECK(covfn::exp_sum(sys, Int(1), Int(3)).is_zero());
    CHECK(covfn::exp_sum(sys, Int(2), Int(3)).is_zero());
    CHECK(covfn::exp_sum(sys, Int(1), Int(6)).is_zero());
}

TEST_CASE("exponential sums agree with the floating-point reference") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        covfn::GeneratorSpec spec;
        spec.seed = seed;
        spec.class_count = 2 + seed % 4;
        spec.modulus_pool = {2, 3, 4, 5, 6, 8, 9, 10, 12};
        const covfn::ResidueSystem sys = covfn::random_system(spec);
        const long n_lcm = covfn::system_lcm(sys).get_si();
        for (long d : covfn::divisors_ascending(static_cast<std::uint64_t>(n_lcm))) {
            if (d == 1) continue;
            for (long c = 1; c < d; ++c) {
                if (std::gcd(c, d) != 1) continue;
                CyclotomicElement lhs = covfn::exp_sum(sys, Int(c), Int(d));
                CHECK(close(oracles::eval(lhs), oracles::exp_sum(sys, c, d), 1e-6));
            }
        }
    }
}

TEST_CASE("the profile transform matches the class-side exponential sum") {
    const covfn::ResidueSystem sys = oracles::fixture();
    CHECK(covfn::fourier_identity_check(sys, Int(1), Int(12)));
    CHECK(covfn::fourier_identity_check(sys, Int(1), Int(2)));
    CHECK(covfn::fourier_identity_check(sys, Int(5), Int(6)));

    // The identity is exact for every admissible frequency; spot-check a few
    // numerators per divisor of the period across a spread of systems.
    covfn::Xoshiro256ss pick(404);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        covfn::GeneratorSpec spec;
        spec.seed = 1000 + seed;
        spec.class_count = 2 + seed % 5;
        spec.modulus_pool = {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
        const covfn::ResidueSystem sys2 = covfn::random_system(spec);
        const std::uint64_t n_lcm = covfn::system_lcm(sys2).get_ui();
        for (std::uint64_t d : covfn::divisors_ascending(n_lcm)) {
            if (d == 1) continue;
            for (std::uint64_t c : {std::uint64_t{1}, d - 1, 1 + pick.below(d - 1)})
                CHECK(covfn::fourier_identity_check(sys2, Int(static_cast<long>(c)),
                                                    Int(static_cast<long>(d))));
        }
    }

    CHECK_THROWS_AS(covfn::fourier_identity_check(sys, Int(1), Int(12), 5),
                    covfn::period_too_large_error);
}
