#ifndef COVFN_RESIDUE_HPP
#define COVFN_RESIDUE_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "covfn/errors.hpp"

namespace covfn {

using Int = mpz_class;
using Rational = mpq_class; // always reduced, positive denominator

// Residues above this many classes per period are never enumerated densely
// unless the caller raises the cap explicitly.
inline constexpr std::uint64_t kDefaultCap = 10'000'000;

/// The residue class a(n) = { x : x = a (mod n) }, with 0 <= residue < modulus.
struct ResidueClass {
    Int residue;
    Int modulus;

    friend bool operator==(const ResidueClass&, const ResidueClass&) = default;
    friend bool operator<(const ResidueClass& lhs, const ResidueClass& rhs) {
        if (lhs.modulus != rhs.modulus) return lhs.modulus < rhs.modulus;
        return lhs.residue < rhs.residue;
    }
};

/// Normalizes a into [0, n). Throws invalid_modulus_error for n < 1.
ResidueClass make_class(const Int& a, const Int& n);

/// An ordered finite system of residue classes with optional integer weights.
/// Absent weights mean every class counts once.
struct ResidueSystem {
    std::vector<ResidueClass> classes;
    std::optional<std::vector<Int>> weights;

    std::size_t size() const { return classes.size(); }
    const Int& weight(std::size_t s) const;
    bool unit_weights() const;
    bool distinct_moduli() const;
};

/// Builds a system, validating that classes are nonempty and that weights,
/// if given, match the class count.
ResidueSystem make_system(std::vector<ResidueClass> classes,
                          std::optional<std::vector<Int>> weights = std::nullopt);

/// Convenience: build from (a, n) pairs, normalizing each class.
ResidueSystem system_of(std::initializer_list<std::pair<long, long>> pairs,
                        std::optional<std::vector<Int>> weights = std::nullopt);

/// N = lcm(n_1, ..., n_k).
Int system_lcm(const ResidueSystem& system);

/// The covering function w(x): the weight sum over classes containing x.
/// Streaming; works for any x and any period.
Int multiplicity(const ResidueSystem& system, const Int& x);

/// One full period of the covering function.
struct Profile {
    std::uint64_t period = 0;
    std::vector<Int> values;
};

/// Tabulates w over [0, N). Throws period_too_large_error when N > cap.
Profile profile(const ResidueSystem& system, std::uint64_t cap = kDefaultCap);

/// Sum of lambda_s / n_s; equals the average of w over a period.
Rational mean_value(const ResidueSystem& system);

/// The distinct values of w over a period, and the spread g = gcd over all x
/// of w(x) - w(0).  g = 0 iff w is constant; for m >= 1 the range lies in a
/// single residue class mod m iff m | g (every m when g = 0).
struct RangeSpread {
    std::set<Int> range;
    Int spread;
};

RangeSpread range_and_spread(const Profile& prof);
RangeSpread range_and_spread(const ResidueSystem& system, std::uint64_t cap = kDefaultCap);

/// Smallest n0 >= 1 with w(x + n0) = w(x) (mod m) for all x; m = 0 means exact
/// equality and a negative m counts as |m|.  The search runs over divisors of
/// the period in increasing order; the result always divides N.
Int minimal_period(const Profile& prof, const Int& m);
Int minimal_period(const ResidueSystem& system, const Int& m,
                   std::uint64_t cap = kDefaultCap);

/// Moduli that divide no other modulus of the system (s != t; a duplicated
/// modulus divides its twin and is excluded).  `distinct` reports whether the
/// returned moduli are pairwise distinct, which the strict reading makes
/// vacuously true.
struct MaximalModuli {
    std::vector<Int> moduli; // sorted ascending
    bool distinct = true;
};

MaximalModuli maximal_moduli(const ResidueSystem& system);

/// |S| with S = { r/n_s : 0 <= r < n_s, 1 <= s <= k } as exact rationals.
/// A run of this many equal consecutive values forces w to be constant.
Int constancy_window_size(const ResidueSystem& system);

/// True iff every integer lies in at least one class. Weights are ignored.
bool is_cover(const ResidueSystem& system, std::uint64_t cap = kDefaultCap);

/// Divisors of n in increasing order.
std::vector<std::uint64_t> divisors_ascending(std::uint64_t n);

/// Smallest prime factor of n >= 2.
std::uint64_t smallest_prime_factor(std::uint64_t n);

} // namespace covfn

#endif
