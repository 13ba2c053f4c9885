#include "covfn/residue.hpp"

#include <algorithm>
#include <utility>

namespace covfn {

namespace {

const Int kOne = 1;

// N as a dense-enumeration length, or a refusal.
std::uint64_t checked_period(const ResidueSystem& system, std::uint64_t cap) {
    Int n = system_lcm(system);
    if (n > cap) {
        throw period_too_large_error("period " + n.get_str() + " exceeds cap " +
                                     std::to_string(cap));
    }
    return n.get_ui();
}

} // namespace

ResidueClass make_class(const Int& a, const Int& n) {
    if (n < 1) {
        throw invalid_modulus_error("modulus must be positive, got " + n.get_str());
    }
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t()); // mpz_mod is nonnegative
    return ResidueClass{std::move(r), n};
}

const Int& ResidueSystem::weight(std::size_t s) const {
    return weights ? (*weights)[s] : kOne;
}

bool ResidueSystem::unit_weights() const {
    if (!weights) return true;
    return std::all_of(weights->begin(), weights->end(),
                       [](const Int& w) { return w == 1; });
}

bool ResidueSystem::distinct_moduli() const {
    std::set<Int> seen;
    for (const auto& c : classes) {
        if (!seen.insert(c.modulus).second) return false;
    }
    return true;
}

ResidueSystem make_system(std::vector<ResidueClass> classes,
                          std::optional<std::vector<Int>> weights) {
    if (classes.empty()) {
        throw precondition_error("a residue system needs at least one class");
    }
    if (weights && weights->size() != classes.size()) {
        throw precondition_error("weight count does not match class count");
    }
    for (const auto& c : classes) {
        if (c.modulus < 1 || c.residue < 0 || c.residue >= c.modulus) {
            throw precondition_error("class not normalized: " + c.residue.get_str() +
                                     "(" + c.modulus.get_str() + ")");
        }
    }
    return ResidueSystem{std::move(classes), std::move(weights)};
}

ResidueSystem system_of(std::initializer_list<std::pair<long, long>> pairs,
                        std::optional<std::vector<Int>> weights) {
    std::vector<ResidueClass> classes;
    classes.reserve(pairs.size());
    for (const auto& [a, n] : pairs) classes.push_back(make_class(Int(a), Int(n)));
    return make_system(std::move(classes), std::move(weights));
}

Int system_lcm(const ResidueSystem& system) {
    Int n = 1;
    for (const auto& c : system.classes) {
        mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), c.modulus.get_mpz_t());
    }
    return n;
}

Int multiplicity(const ResidueSystem& system, const Int& x) {
    Int total = 0;
    Int diff;
    for (std::size_t s = 0; s < system.size(); ++s) {
        diff = x - system.classes[s].residue;
        if (mpz_divisible_p(diff.get_mpz_t(), system.classes[s].modulus.get_mpz_t())) {
            total += system.weight(s);
        }
    }
    return total;
}

Profile profile(const ResidueSystem& system, std::uint64_t cap) {
    const std::uint64_t n = checked_period(system, cap);
    Profile prof;
    prof.period = n;
    prof.values.assign(n, Int(0));
    // Every class contributes along an arithmetic progression; total work is
    // N * sum(1/n_s) rather than N * k.
    for (std::size_t s = 0; s < system.size(); ++s) {
        const std::uint64_t step = system.classes[s].modulus.get_ui();
        const std::uint64_t first = system.classes[s].residue.get_ui();
        const Int& w = system.weight(s);
        for (std::uint64_t r = first; r < n; r += step) prof.values[r] += w;
    }
    return prof;
}

Rational mean_value(const ResidueSystem& system) {
    Rational mean = 0;
    for (std::size_t s = 0; s < system.size(); ++s) {
        Rational term(system.weight(s), system.classes[s].modulus);
        term.canonicalize();
        mean += term;
    }
    return mean;
}

RangeSpread range_and_spread(const Profile& prof) {
    RangeSpread rs;
    rs.spread = 0;
    const Int& base = prof.values[0];
    Int diff;
    for (const auto& v : prof.values) {
        rs.range.insert(v);
        diff = v - base;
        mpz_gcd(rs.spread.get_mpz_t(), rs.spread.get_mpz_t(), diff.get_mpz_t());
    }
    return rs;
}

RangeSpread range_and_spread(const ResidueSystem& system, std::uint64_t cap) {
    return range_and_spread(profile(system, cap));
}

Int minimal_period(const Profile& prof, const Int& m) {
    Int mod = abs(m);
    const std::uint64_t n = prof.period;
    Int diff;
    for (std::uint64_t cand : divisors_ascending(n)) {
        if (cand == n) break; // the full period always works
        bool ok = true;
        for (std::uint64_t r = 0; r + cand < n && ok; ++r) {
            // shifted index never wraps: r + cand < n
            diff = prof.values[r + cand] - prof.values[r];
            if (mod == 0 ? diff != 0
                         : !mpz_divisible_p(diff.get_mpz_t(), mod.get_mpz_t())) {
                ok = false;
            }
        }
        if (ok) return Int(cand);
    }
    return Int(n);
}

Int minimal_period(const ResidueSystem& system, const Int& m, std::uint64_t cap) {
    return minimal_period(profile(system, cap), m);
}

MaximalModuli maximal_moduli(const ResidueSystem& system) {
    MaximalModuli result;
    const auto& cs = system.classes;
    for (std::size_t t = 0; t < cs.size(); ++t) {
        bool divides_other = false;
        for (std::size_t s = 0; s < cs.size() && !divides_other; ++s) {
            if (s == t) continue;
            if (mpz_divisible_p(cs[s].modulus.get_mpz_t(), cs[t].modulus.get_mpz_t())) {
                divides_other = true;
            }
        }
        if (!divides_other) result.moduli.push_back(cs[t].modulus);
    }
    std::sort(result.moduli.begin(), result.moduli.end());
    result.distinct =
        std::adjacent_find(result.moduli.begin(), result.moduli.end()) ==
        result.moduli.end();
    return result;
}

Int constancy_window_size(const ResidueSystem& system) {
    std::set<Rational> fractions;
    for (const auto& c : system.classes) {
        for (Int r = 0; r < c.modulus; ++r) {
            Rational q(r, c.modulus);
            q.canonicalize();
            fractions.insert(q);
        }
    }
    return Int(static_cast<unsigned long>(fractions.size()));
}

bool is_cover(const ResidueSystem& system, std::uint64_t cap) {
    const std::uint64_t n = checked_period(system, cap);
    std::vector<bool> hit(n, false);
    for (const auto& c : system.classes) {
        const std::uint64_t step = c.modulus.get_ui();
        for (std::uint64_t r = c.residue.get_ui(); r < n; r += step) hit[r] = true;
    }
    return std::find(hit.begin(), hit.end(), false) == hit.end();
}

std::vector<std::uint64_t> divisors_ascending(std::uint64_t n) {
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::uint64_t smallest_prime_factor(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    for (std::uint64_t p = 3; p * p <= n; p += 2) {
        if (n % p == 0) return p;
    }
    return n;
}

} // namespace covfn
