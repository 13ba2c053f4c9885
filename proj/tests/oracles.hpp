#ifndef COVFN_TESTS_ORACLES_HPP
#define COVFN_TESTS_ORACLES_HPP

/// Slow reference computations for the tests, deliberately written along
/// different code paths than the library (plain remainder arithmetic,
/// schoolbook convolution, floating-point roots of unity).

#include <complex>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "covfn/cyclotomic.hpp"
#include "covfn/residue.hpp"

namespace oracles {

/// The running example {1(2), 2(4), 1(3), 2(6), 0(12)}.
inline covfn::ResidueSystem fixture() {
    return covfn::system_of({{1, 2}, {2, 4}, {1, 3}, {2, 6}, {0, 12}});
}

/// w(x) straight from the definition, in machine integers.
inline long multiplicity(const covfn::ResidueSystem& sys, long x) {
    long total = 0;
    for (std::size_t s = 0; s < sys.size(); ++s) {
        const long a = sys.classes[s].residue.get_si();
        const long n = sys.classes[s].modulus.get_si();
        long r = (x - a) % n;
        if (r < 0) r += n;
        if (r == 0) total += sys.weight(s).get_si();
    }
    return total;
}

/// Covering check from the definition with all weights read as 1.
inline bool covers(const covfn::ResidueSystem& sys, long period) {
    for (long x = 0; x < period; ++x) {
        bool hit = false;
        for (std::size_t s = 0; s < sys.size() && !hit; ++s) {
            const long a = sys.classes[s].residue.get_si();
            const long n = sys.classes[s].modulus.get_si();
            hit = ((x - a) % n + n) % n == 0;
        }
        if (!hit) return false;
    }
    return true;
}

/// gcd over x, y of w(x) - w(y), from brute-force values.
inline long spread(const covfn::ResidueSystem& sys, long period) {
    long g = 0;
    const long base = multiplicity(sys, 0);
    for (long x = 0; x < period; ++x) g = std::gcd(g, multiplicity(sys, x) - base);
    return g < 0 ? -g : g;
}

/// Euler phi by counting coprime residues.
inline std::uint64_t phi(std::uint64_t d) {
    std::uint64_t count = 0;
    for (std::uint64_t i = 1; i <= d; ++i)
        if (std::gcd(i, d) == 1) ++count;
    return count;
}

/// Schoolbook convolution on raw coefficient vectors.
inline std::vector<covfn::Int> poly_mul(const std::vector<covfn::Int>& a,
                                        const std::vector<covfn::Int>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<covfn::Int> c(a.size() + b.size() - 1, covfn::Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

constexpr double kTau = 6.283185307179586476925286766559;

/// Numeric value of a cyclotomic element at zeta = e^(2 pi i / order).
inline std::complex<double> eval(const covfn::CyclotomicElement& x) {
    std::complex<double> acc = 0.0;
    for (std::size_t j = 0; j < x.coeffs().size(); ++j)
        acc += x.coeffs()[j].get_d() *
               std::polar(1.0, kTau * static_cast<double>(j) / static_cast<double>(x.order()));
    return acc;
}

/// Floating-point evaluation of the weighted exponential sum at c/d.
inline std::complex<double> exp_sum(const covfn::ResidueSystem& sys, long c, long d) {
    const long n_lcm = covfn::system_lcm(sys).get_si();
    std::complex<double> acc = 0.0;
    for (std::size_t s = 0; s < sys.size(); ++s) {
        const long n = sys.classes[s].modulus.get_si();
        if ((static_cast<long long>(c) * n) % d != 0) continue; // alpha*n not integral
        const double angle = kTau * static_cast<double>(c) / static_cast<double>(d) *
                             sys.classes[s].residue.get_d();
        acc += static_cast<double>(sys.weight(s).get_si()) *
               static_cast<double>(n_lcm / n) * std::polar(1.0, angle);
    }
    return acc;
}

} // namespace oracles

#endif
