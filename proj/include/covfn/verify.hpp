#ifndef COVFN_VERIFY_HPP
#define COVFN_VERIFY_HPP

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "covfn/residue.hpp"
#include "covfn/verdict.hpp"

namespace covfn {

/// Theorem: if the range of w lies in a residue class mod m, then every
/// modulus n_t with m*n_t not dividing N divides some other modulus.
/// Hypothesis gate: m | g (g the range spread; g = 0 counts for every m).
/// Cyclotomic corroboration at alpha = 1/n_t is attached as evidence for the
/// divisibility-maximal moduli, but does not decide the verdict.
VerdictReport check_theorem_1_1(const ResidueSystem& system, const Int& m,
                                std::uint64_t cap = kDefaultCap);
VerdictReport check_theorem_1_1(const ResidueSystem& system, const Int& m,
                                const RangeSpread& spread);

/// Corollary: if w is constant, every modulus divides another one, and the
/// two largest moduli coincide.
VerdictReport check_corollary_1_1(const ResidueSystem& system, std::uint64_t cap = kDefaultCap);
VerdictReport check_corollary_1_1(const ResidueSystem& system, const RangeSpread& spread);

/// Corollary: if the divisibility-maximal moduli are distinct, the range of
/// w lies in no residue class other than 0(1) (spread g = 1), and both
/// parities occur among the w-values.
VerdictReport check_corollary_1_2(const ResidueSystem& system, std::uint64_t cap = kDefaultCap);
VerdictReport check_corollary_1_2(const ResidueSystem& system, const Profile& prof);

/// Theorem: two systems with distinct moduli whose covering functions agree
/// mod m, for some m not dividing N, are identical.  Also replays the
/// proof's largest-modulus matching procedure and records its trace.
VerdictReport check_theorem_1_2(const ResidueSystem& a, const ResidueSystem& b, const Int& m,
                                std::uint64_t cap = kDefaultCap);
VerdictReport check_theorem_1_2(const ResidueSystem& a, const ResidueSystem& b, const Int& m,
                                const Profile& prof_a, const Profile& prof_b,
                                std::uint64_t cap = kDefaultCap);

/// Per-divisor data assembled for Theorem 1.3: the index set I(d), the
/// residues a_s mod d on it, the exact integer N * sum of lambda_s/n_s over
/// I(d), the minimum of d/(d,n_s) over s outside I(d) (index 0 standing for
/// the minimal period n0), and the smallest prime factor p(d).
struct Theorem13Divisor {
    std::uint64_t d = 0;
    std::vector<std::size_t> members;
    std::set<std::uint64_t> residues;
    Int weighted_sum;
    std::uint64_t min_quotient = 0;
    std::uint64_t smallest_prime = 0;
};

struct Theorem13Context {
    Int n0;
    std::vector<Theorem13Divisor> candidates; // ascending d
};

/// Candidate divisors are those d dividing some modulus but not n0; this is
/// exactly the set with I(d) nonempty and d not a period divisor.
Theorem13Context theorem13_context(const ResidueSystem& system, const Int& m,
                                   std::uint64_t cap = kDefaultCap);

/// Theorem: with n0 the minimal period of w mod m, every candidate d
/// satisfies branch A (m divides the exact integer N * sum_{s in I(d)}
/// lambda_s/n_s) or the chain
///   |I(d)| >= |{a_s mod d}| >= min_{s not in I(d)} d/(d,n_s) >= p(d).
VerdictReport check_theorem_1_3(const ResidueSystem& system, const Int& m,
                                std::uint64_t cap = kDefaultCap);

/// Proof-technique check for Theorem 1.3: u_n = sum of c_r zeta_d^{rn}
/// obeys a linear recurrence of order |R|, so divisibility of u_1..u_|R| by
/// m propagates to all n up to d, and u_d equals the plain coefficient sum.
/// Residues are the map keys and must lie in [0, d).
VerdictReport power_sum_evidence(const std::map<std::uint64_t, Int>& coefficients,
                                 std::uint64_t d, const Int& m);

} // namespace covfn

#endif
