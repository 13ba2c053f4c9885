#include "covfn/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <utility>

#include "covfn/errors.hpp"

namespace covfn {

namespace {

const Int kZero = 0;

/// Orders must stay addressable as dense coefficient vectors.
constexpr std::uint64_t kMaxOrder = 0xFFFFFFFFull;

void strip_trailing_zeros(std::vector<Int>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

std::uint64_t checked_order(const Int& d) {
    if (d < 1) throw invalid_frequency_error("root order must be positive, got " + d.get_str());
    if (!d.fits_ulong_p() || d.get_ui() > kMaxOrder)
        throw period_too_large_error("root order " + d.get_str() + " exceeds the supported limit");
    return d.get_ui();
}

} // namespace

const Int& IntPolynomial::coeff(std::size_t i) const {
    return i < coeffs.size() ? coeffs[i] : kZero;
}

IntPolynomial make_polynomial(std::vector<Int> coeffs) {
    strip_trailing_zeros(coeffs);
    return IntPolynomial{std::move(coeffs)};
}

IntPolynomial x_pow_minus_one(std::uint64_t d) {
    if (d == 0) throw precondition_error("x^0 - 1 is the zero polynomial; need d >= 1");
    std::vector<Int> c(d + 1, Int(0));
    c[0] = -1;
    c[d] = 1;
    return IntPolynomial{std::move(c)};
}

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> c(std::max(a.coeffs.size(), b.coeffs.size()), Int(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    strip_trailing_zeros(c);
    return IntPolynomial{std::move(c)};
}

IntPolynomial poly_sub(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> c(std::max(a.coeffs.size(), b.coeffs.size()), Int(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    strip_trailing_zeros(c);
    return IntPolynomial{std::move(c)};
}

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> c(a.coeffs.size() + b.coeffs.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            mpz_addmul(c[i + j].get_mpz_t(), a.coeffs[i].get_mpz_t(), b.coeffs[j].get_mpz_t());
    }
    strip_trailing_zeros(c);
    return IntPolynomial{std::move(c)};
}

IntPolynomial poly_divexact(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw precondition_error("polynomial division by zero");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree())
        throw precondition_error("inexact polynomial division: degree too small");

    std::vector<Int> rem = a.coeffs;
    const std::size_t db = b.coeffs.size() - 1;
    std::vector<Int> quot(rem.size() - db, Int(0));
    for (std::size_t i = rem.size(); i-- > db;) {
        if (rem[i] == 0) continue;
        Int q;
        mpz_tdiv_qr(q.get_mpz_t(), rem[i].get_mpz_t(), rem[i].get_mpz_t(), b.leading().get_mpz_t());
        if (rem[i] != 0) throw precondition_error("inexact polynomial division: leading coefficient");
        for (std::size_t j = 0; j < db; ++j)
            mpz_submul(rem[i - db + j].get_mpz_t(), q.get_mpz_t(), b.coeffs[j].get_mpz_t());
        quot[i - db] = std::move(q);
    }
    strip_trailing_zeros(rem);
    if (!rem.empty()) throw precondition_error("inexact polynomial division: nonzero remainder");
    strip_trailing_zeros(quot);
    return IntPolynomial{std::move(quot)};
}

std::string to_string(const IntPolynomial& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = p.coeffs.size(); i-- > 0;) {
        const Int& c = p.coeffs[i];
        if (c == 0) continue;
        Int mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const bool unit = (mag == 1);
        if (i == 0) {
            out << mag.get_str();
        } else {
            if (!unit) out << mag.get_str() << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0) throw precondition_error("euler_phi(0) is undefined");
    std::uint64_t phi = n;
    std::uint64_t m = n;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        phi -= phi / p;
        while (m % p == 0) m /= p;
    }
    if (m > 1) phi -= phi / m;
    return phi;
}

IntPolynomial cyclotomic_poly(std::uint64_t d) {
    if (d == 0) throw precondition_error("cyclotomic polynomial index must be positive");

    static std::mutex cache_mutex;
    static std::map<std::uint64_t, IntPolynomial> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(d);
        if (it != cache.end()) return it->second;
    }

    IntPolynomial result;
    if (d == 1) {
        result = make_polynomial({-1, 1});
    } else {
        result = x_pow_minus_one(d);
        for (std::uint64_t e : divisors_ascending(d)) {
            if (e == d) break;
            result = poly_divexact(result, cyclotomic_poly(e));
        }
    }

    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(d, std::move(result)).first->second;
}

CyclotomicElement CyclotomicElement::zero(std::uint64_t order) {
    return make_element(order, {});
}

CyclotomicElement CyclotomicElement::from_integer(std::uint64_t order, const Int& value) {
    return make_element(order, {value});
}

bool CyclotomicElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c == 0; });
}

CyclotomicElement make_element(std::uint64_t order, std::vector<Int> power_coeffs) {
    if (order == 0 || order > kMaxOrder)
        throw period_too_large_error("unsupported root order " + std::to_string(order));

    // Fold exponents mod the order (zeta^order = 1), then reduce by the
    // cyclotomic polynomial, which divides x^order - 1.
    std::vector<Int> v;
    if (power_coeffs.size() > order) {
        v.assign(order, Int(0));
        for (std::size_t i = 0; i < power_coeffs.size(); ++i) v[i % order] += power_coeffs[i];
    } else {
        v = std::move(power_coeffs);
    }

    const IntPolynomial phi = cyclotomic_poly(order);
    const std::size_t deg = static_cast<std::size_t>(phi.degree());
    for (std::size_t i = v.size(); i-- > deg;) {
        if (v[i] == 0) continue;
        Int c = std::move(v[i]);
        v[i] = 0;
        for (std::size_t j = 0; j < deg; ++j)
            mpz_submul(v[i - deg + j].get_mpz_t(), c.get_mpz_t(), phi.coeffs[j].get_mpz_t());
    }
    v.resize(deg, Int(0));

    CyclotomicElement x;
    x.order_ = order;
    x.coeffs_ = std::move(v);
    return x;
}

CyclotomicElement from_root(std::uint64_t d, const Int& e) {
    if (d == 0) throw invalid_frequency_error("root order must be positive");
    Int r;
    mpz_mod_ui(r.get_mpz_t(), e.get_mpz_t(), d);
    std::vector<Int> v(r.get_ui() + 1, Int(0));
    v.back() = 1;
    return make_element(d, std::move(v));
}

CyclotomicElement CyclotomicElement::lifted_to(std::uint64_t target) const {
    if (target == order_) return *this;
    if (target == 0 || target % order_ != 0)
        throw order_mismatch_error("cannot rewrite a root of order " + std::to_string(order_) +
                                   " at order " + std::to_string(target));
    const std::uint64_t stretch = target / order_;
    std::vector<Int> v;
    if (!coeffs_.empty()) {
        v.assign((coeffs_.size() - 1) * stretch + 1, Int(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * stretch] = coeffs_[i];
    }
    return make_element(target, std::move(v));
}

namespace {

/// Brings both operands to a common order (the lcm) before a binary op.
std::uint64_t common_order(const CyclotomicElement& a, const CyclotomicElement& b) {
    const std::uint64_t oa = a.order(), ob = b.order();
    if (oa == ob) return oa;
    const std::uint64_t g = std::gcd(oa, ob);
    const std::uint64_t big = oa / g;
    if (ob > kMaxOrder / big)
        throw period_too_large_error("common root order exceeds the supported limit");
    return big * ob;
}

} // namespace

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& rhs) {
    const std::uint64_t target = common_order(*this, rhs);
    if (order_ != target) *this = lifted_to(target);
    if (rhs.order() != target) return *this += rhs.lifted_to(target);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

CyclotomicElement& CyclotomicElement::operator-=(const CyclotomicElement& rhs) {
    const std::uint64_t target = common_order(*this, rhs);
    if (order_ != target) *this = lifted_to(target);
    if (rhs.order() != target) return *this -= rhs.lifted_to(target);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

CyclotomicElement& CyclotomicElement::operator*=(const CyclotomicElement& rhs) {
    const std::uint64_t target = common_order(*this, rhs);
    if (order_ != target) *this = lifted_to(target);
    const CyclotomicElement other = rhs.order() != target ? rhs.lifted_to(target) : rhs;

    if (coeffs_.empty() || other.coeffs_.empty()) return *this = zero(target);
    std::vector<Int> prod(coeffs_.size() + other.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            mpz_addmul(prod[i + j].get_mpz_t(), coeffs_[i].get_mpz_t(),
                       other.coeffs_[j].get_mpz_t());
    }
    return *this = make_element(target, std::move(prod));
}

CyclotomicElement operator-(CyclotomicElement x) {
    for (Int& c : x.coeffs_) c = -c;
    return x;
}

bool operator==(const CyclotomicElement& lhs, const CyclotomicElement& rhs) {
    if (lhs.order() == rhs.order()) return lhs.coeffs_ == rhs.coeffs_;
    const std::uint64_t target = common_order(lhs, rhs);
    return lhs.lifted_to(target).coeffs_ == rhs.lifted_to(target).coeffs_;
}

CyclotomicElement cyc_scale(const CyclotomicElement& x, const Int& c) {
    std::vector<Int> v = x.coeffs();
    for (Int& a : v) a *= c;
    return make_element(x.order(), std::move(v));
}

bool divisible_by_integer(const CyclotomicElement& x, const Int& m) {
    if (m == 0) return x.is_zero();
    return std::all_of(x.coeffs().begin(), x.coeffs().end(), [&](const Int& c) {
        return mpz_divisible_p(c.get_mpz_t(), m.get_mpz_t()) != 0;
    });
}

Int coefficient_gcd(const CyclotomicElement& x) {
    Int g = 0;
    for (const Int& c : x.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

std::string to_string(const CyclotomicElement& x) {
    IntPolynomial p = make_polynomial(x.coeffs());
    return to_string(p, "z" + std::to_string(x.order()));
}

ReducedFrequency reduce_frequency(const Int& c, const Int& d, const Int& period_lcm) {
    if (d == 0) throw invalid_frequency_error("frequency denominator must be nonzero");
    Rational alpha(c, d);
    alpha.canonicalize();
    const Int& den = alpha.get_den();
    if (den == 1)
        throw invalid_frequency_error("frequency " + alpha.get_str() + " is an integer");
    if (!mpz_divisible_p(period_lcm.get_mpz_t(), den.get_mpz_t()))
        throw invalid_frequency_error("frequency " + alpha.get_str() +
                                      " times the period " + period_lcm.get_str() +
                                      " is not an integer");
    Int num;
    mpz_mod(num.get_mpz_t(), alpha.get_num().get_mpz_t(), den.get_mpz_t());
    return ReducedFrequency{num, checked_order(den)};
}

CyclotomicElement exp_sum(const ResidueSystem& system, const Int& c, const Int& d) {
    const Int N = system_lcm(system);
    const ReducedFrequency f = reduce_frequency(c, d, N);
    const std::uint64_t den = f.denominator;

    std::vector<Int> v(den, Int(0));
    for (std::size_t s = 0; s < system.size(); ++s) {
        const Int& n = system.classes[s].modulus;
        // alpha * n is an integer exactly when the reduced denominator
        // divides n; other classes contribute nothing at this frequency.
        if (!mpz_divisible_ui_p(n.get_mpz_t(), den)) continue;
        Int e = f.numerator * system.classes[s].residue;
        mpz_mod_ui(e.get_mpz_t(), e.get_mpz_t(), den);
        v[e.get_ui()] += system.weight(s) * (N / n);
    }
    return make_element(den, std::move(v));
}

bool fourier_identity_check(const ResidueSystem& system, const Int& c, const Int& d,
                            std::uint64_t cap) {
    const CyclotomicElement rhs = exp_sum(system, c, d);
    const Profile prof = profile(system, cap);
    const std::uint64_t den = rhs.order();
    const Int N = system_lcm(system);
    const ReducedFrequency f = reduce_frequency(c, d, N);
    const std::uint64_t step = f.numerator.get_ui() % den;

    std::vector<Int> v(den, Int(0));
    std::uint64_t e = 0;
    for (std::uint64_t r = 0; r < prof.period; ++r) {
        v[e] += prof.values[r];
        e += step;
        if (e >= den) e -= den;
    }
    return make_element(den, std::move(v)) == rhs;
}

} // namespace covfn
