#ifndef COVFN_GENERATE_HPP
#define COVFN_GENERATE_HPP

#include <cstdint>
#include <vector>

#include "covfn/residue.hpp"

namespace covfn {

/// SplitMix64 (Steele, Lea, Flood).  Used for seeding and for deriving
/// per-task seeds; the algorithm is part of the replay contract.
struct SplitMix64 {
    std::uint64_t state = 0;
    std::uint64_t next();
};

/// xoshiro256** 1.0 (Blackman, Vigna), state seeded from four consecutive
/// SplitMix64 outputs.  Fixed here, never the platform default generator,
/// so fuzz findings replay identically on any machine.
class Xoshiro256ss {
public:
    explicit Xoshiro256ss(std::uint64_t seed);
    std::uint64_t next();

    /// Uniform draw in [0, bound) by rejecting the top remainder band.
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t s_[4];
};

/// Sub-seed for task `index` of a run with master seed `seed`: one
/// SplitMix64 step starting from seed + index * 0x9E3779B97F4A7C15.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

struct GeneratorSpec {
    std::uint64_t seed = 0;
    std::size_t class_count = 1;
    std::vector<std::uint64_t> modulus_pool; // treated as a set, values >= 2
    bool distinct_moduli = false;
};

/// Deterministic function of its GeneratorSpec.  Draw order: all moduli first (a
/// partial Fisher-Yates shuffle of the sorted pool when distinct_moduli,
/// otherwise independent picks), then one residue per class, uniform in
/// [0, modulus).  Unit weights.
ResidueSystem random_system(const GeneratorSpec& spec);

/// The distinct-moduli cover of Z for odd n >= 3: classes 2^{s-1}(2^s) for
/// s = 1..n-1 together with 2^{n-1}*i (2^{i-1}*n) for i = 1..n, residues
/// normalized.  The construction is re-verified on the spot (distinct
/// moduli always; covering whenever N = 2^{n-1}*n is within cap) and fails
/// loudly rather than returning an unverified system.
ResidueSystem erdos_cover(std::uint64_t n, std::uint64_t cap = kDefaultCap);

/// The classic five-class cover {0(2), 0(3), 1(4), 5(6), 7(12)} with
/// distinct moduli; verified covering with range spread 1 at construction.
ResidueSystem classic_cover();

} // namespace covfn

#endif
