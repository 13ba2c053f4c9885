#include "covfn/generate.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "covfn/errors.hpp"

namespace covfn {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

} // namespace

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state += kGolden);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

Xoshiro256ss::Xoshiro256ss(std::uint64_t seed) {
    SplitMix64 mix{seed};
    for (std::uint64_t& w : s_) w = mix.next();
}

std::uint64_t Xoshiro256ss::next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

std::uint64_t Xoshiro256ss::below(std::uint64_t bound) {
    if (bound == 0) throw precondition_error("uniform draw from an empty range");
    // Largest multiple of bound representable in 64 bits; draws at or above
    // it would bias the remainder and are rejected.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / bound * bound;
    std::uint64_t r;
    do {
        r = next();
    } while (r >= limit);
    return r % bound;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mix{seed + index * kGolden};
    return mix.next();
}

ResidueSystem random_system(const GeneratorSpec& spec) {
    if (spec.class_count == 0) throw precondition_error("generator needs at least one class");
    std::vector<std::uint64_t> pool = spec.modulus_pool;
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    if (pool.empty()) throw precondition_error("generator modulus pool is empty");
    if (pool.front() < 2) throw precondition_error("generator moduli must be >= 2");
    if (spec.distinct_moduli && spec.class_count > pool.size())
        throw precondition_error("modulus pool too small for " +
                                 std::to_string(spec.class_count) + " distinct moduli");

    Xoshiro256ss rng(spec.seed);
    std::vector<std::uint64_t> moduli(spec.class_count);
    if (spec.distinct_moduli) {
        // Partial Fisher-Yates over the sorted pool: the first class_count
        // entries after the swaps are the chosen moduli.
        for (std::size_t i = 0; i < spec.class_count; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
            std::swap(pool[i], pool[j]);
            moduli[i] = pool[i];
        }
    } else {
        for (std::size_t i = 0; i < spec.class_count; ++i)
            moduli[i] = pool[static_cast<std::size_t>(rng.below(pool.size()))];
    }

    std::vector<ResidueClass> classes;
    classes.reserve(spec.class_count);
    for (std::uint64_t n : moduli) classes.push_back(make_class(Int(rng.below(n)), Int(n)));
    return make_system(std::move(classes));
}

ResidueSystem erdos_cover(std::uint64_t n, std::uint64_t cap) {
    if (n < 3 || n % 2 == 0)
        throw precondition_error("the construction needs an odd n >= 3, got " + std::to_string(n));

    std::vector<ResidueClass> classes;
    classes.reserve(2 * n - 1);
    Int pow2 = 1; // 2^{s-1}
    for (std::uint64_t s = 1; s <= n - 1; ++s) {
        classes.push_back(make_class(pow2, pow2 * 2));
        pow2 *= 2;
    }
    const Int top = pow2; // 2^{n-1}
    Int modulus = n;      // 2^{i-1} * n
    for (std::uint64_t i = 1; i <= n; ++i) {
        classes.push_back(make_class(top * i, modulus));
        modulus *= 2;
    }

    ResidueSystem system = make_system(std::move(classes));
    if (!system.distinct_moduli())
        throw verification_error("construction produced repeated moduli for n = " +
                                 std::to_string(n));
    const Int N = system_lcm(system);
    if (N.fits_ulong_p() && N.get_ui() <= cap && !is_cover(system, cap))
        throw verification_error("construction failed to cover the integers for n = " +
                                 std::to_string(n));
    return system;
}

ResidueSystem classic_cover() {
    ResidueSystem system = system_of({{0, 2}, {0, 3}, {1, 4}, {5, 6}, {7, 12}});
    if (!system.distinct_moduli() || !is_cover(system) ||
        range_and_spread(system).spread != 1)
        throw verification_error("classic cover failed its construction checks");
    return system;
}

} // namespace covfn
