#include "covfn/verify.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <utility>

#include "covfn/cyclotomic.hpp"
#include "covfn/errors.hpp"

namespace covfn {

namespace {

void require_multiple_classes(const ResidueSystem& sys, const char* what) {
    if (sys.size() < 2)
        throw precondition_error(std::string(what) + " needs at least two residue classes");
}

void require_unit_weights(const ResidueSystem& sys, const char* what) {
    if (!sys.unit_weights())
        throw precondition_error(std::string(what) + " applies to unit weights only");
}

Int positive_modulus(const Int& m, const char* what) {
    Int mm = abs(m);
    if (mm == 0) throw precondition_error(std::string(what) + ": modulus m must be nonzero");
    return mm;
}

bool divides(const Int& d, const Int& n) {
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

std::string class_string(const ResidueSystem& sys, std::size_t s) {
    return sys.classes[s].residue.get_str() + "(" + sys.classes[s].modulus.get_str() + ")";
}

/// Strict reading: n_t divides no other modulus; a duplicated modulus
/// divides its twin and therefore disqualifies both.
bool divisibility_maximal(const ResidueSystem& sys, std::size_t t) {
    for (std::size_t s = 0; s < sys.size(); ++s) {
        if (s == t) continue;
        if (divides(sys.classes[t].modulus, sys.classes[s].modulus)) return false;
    }
    return true;
}

/// The "n_t | n_s for some s != t" conclusion shared by Theorem 1.1 and
/// Corollary 1.1.
CheckItem divisor_witness_item(const ResidueSystem& sys, std::size_t t) {
    const Int& nt = sys.classes[t].modulus;
    CheckItem item;
    item.subject = "t = " + std::to_string(t + 1) + ", n_t = " + nt.get_str();
    item.expected = "n_t divides n_s for some s != t";
    for (std::size_t s = 0; s < sys.size(); ++s) {
        if (s == t) continue;
        if (divides(nt, sys.classes[s].modulus)) {
            item.observed = "n_t | n_s for s = " + std::to_string(s + 1);
            item.witness = class_string(sys, s);
            item.passed = true;
            return item;
        }
    }
    item.observed = "no other modulus is divisible by n_t";
    item.passed = false;
    return item;
}

} // namespace

VerdictReport check_theorem_1_1(const ResidueSystem& system, const Int& m,
                                const RangeSpread& spread) {
    require_multiple_classes(system, "theorem 1.1");
    require_unit_weights(system, "theorem 1.1");
    const Int mm = positive_modulus(m, "theorem 1.1");
    const Int N = system_lcm(system);

    // Range contained in a residue class mod m <=> m | g (g = 0 for
    // constant w counts for every m).
    const bool hyp = divides(mm, spread.spread);
    std::string note = "range spread g = " + spread.spread.get_str() + "; the range of w " +
                       (hyp ? "lies in a residue class mod " : "is in no residue class mod ") +
                       mm.get_str();

    std::vector<CheckItem> items;
    for (std::size_t t = 0; t < system.size(); ++t) {
        // The theorem only constrains t with m*n_t not dividing N.
        if (divides(mm * system.classes[t].modulus, N)) continue;
        items.push_back(divisor_witness_item(system, t));
    }

    std::vector<std::string> evidence;
    if (hyp) {
        // The proof's alpha = 1/n_t step for the divisibility-maximal
        // moduli; recorded, never used for the verdict.
        for (std::size_t t = 0; t < system.size(); ++t) {
            if (!divisibility_maximal(system, t)) continue;
            const Int& nt = system.classes[t].modulus;
            const CyclotomicElement e = exp_sum(system, 1, nt);
            const bool div = divisible_by_integer(e, mm);
            evidence.push_back("alpha = 1/" + nt.get_str() + ": exp_sum = " + to_string(e) +
                               "; divisible by " + mm.get_str() + ": " + (div ? "yes" : "no"));
        }
    }
    return make_report("1.1", hyp, std::move(note), std::move(items), std::move(evidence));
}

VerdictReport check_theorem_1_1(const ResidueSystem& system, const Int& m, std::uint64_t cap) {
    return check_theorem_1_1(system, m, range_and_spread(system, cap));
}

VerdictReport check_corollary_1_1(const ResidueSystem& system, const RangeSpread& spread) {
    require_multiple_classes(system, "corollary 1.1");
    require_unit_weights(system, "corollary 1.1");

    const bool hyp = spread.spread == 0;
    std::string note = hyp ? "w is constant, value " + spread.range.begin()->get_str()
                           : "w is not constant (spread g = " + spread.spread.get_str() + ")";

    std::vector<CheckItem> items;
    for (std::size_t t = 0; t < system.size(); ++t) items.push_back(divisor_witness_item(system, t));

    std::vector<Int> moduli;
    moduli.reserve(system.size());
    for (const ResidueClass& c : system.classes) moduli.push_back(c.modulus);
    std::sort(moduli.begin(), moduli.end());
    CheckItem top;
    top.subject = "largest moduli";
    top.expected = "n_(k) = n_(k-1) once sorted ascending";
    top.observed = "n_(k) = " + moduli.back().get_str() +
                   ", n_(k-1) = " + moduli[moduli.size() - 2].get_str();
    top.passed = moduli.back() == moduli[moduli.size() - 2];
    items.push_back(std::move(top));

    return make_report("c1.1", hyp, std::move(note), std::move(items));
}

VerdictReport check_corollary_1_1(const ResidueSystem& system, std::uint64_t cap) {
    return check_corollary_1_1(system, range_and_spread(system, cap));
}

VerdictReport check_corollary_1_2(const ResidueSystem& system, const Profile& prof) {
    require_multiple_classes(system, "corollary 1.2");
    require_unit_weights(system, "corollary 1.2");

    const MaximalModuli mx = maximal_moduli(system);
    const bool hyp = mx.distinct && !mx.moduli.empty();
    std::string note;
    {
        std::ostringstream out;
        out << "divisibility-maximal moduli {";
        for (std::size_t i = 0; i < mx.moduli.size(); ++i)
            out << (i ? ", " : "") << mx.moduli[i].get_str();
        out << "}";
        if (mx.moduli.empty()) out << " (every modulus divides another)";
        else out << (mx.distinct ? ", pairwise distinct" : ", with repetitions");
        note = out.str();
    }

    const RangeSpread spread = range_and_spread(prof);
    std::vector<CheckItem> items;
    {
        CheckItem item;
        item.subject = "range spread";
        item.expected = "g = 1: the range lies in no residue class other than 0(1)";
        item.observed = "g = " + spread.spread.get_str();
        item.passed = spread.spread == 1;
        items.push_back(std::move(item));
    }
    {
        // Remark 1.2: values of both parities must occur.
        std::optional<std::uint64_t> at_even, at_odd;
        for (std::uint64_t r = 0; r < prof.period && !(at_even && at_odd); ++r) {
            if (mpz_even_p(prof.values[r].get_mpz_t())) {
                if (!at_even) at_even = r;
            } else if (!at_odd) {
                at_odd = r;
            }
        }
        CheckItem item;
        item.subject = "parity";
        item.expected = "w takes both even and odd values";
        if (at_even && at_odd) {
            item.observed = "w(" + std::to_string(*at_even) + ") = " +
                            prof.values[*at_even].get_str() + ", w(" + std::to_string(*at_odd) +
                            ") = " + prof.values[*at_odd].get_str();
            item.passed = true;
        } else {
            item.observed = at_even ? "all values even" : "all values odd";
            item.passed = false;
        }
        items.push_back(std::move(item));
    }
    return make_report("c1.2", hyp, std::move(note), std::move(items));
}

VerdictReport check_corollary_1_2(const ResidueSystem& system, std::uint64_t cap) {
    return check_corollary_1_2(system, profile(system, cap));
}

VerdictReport check_theorem_1_2(const ResidueSystem& a, const ResidueSystem& b, const Int& m,
                                const Profile& prof_a, const Profile& prof_b, std::uint64_t cap) {
    if (!a.distinct_moduli())
        throw precondition_error("theorem 1.2: first system must have pairwise distinct moduli");
    if (!b.distinct_moduli())
        throw precondition_error("theorem 1.2: second system must have pairwise distinct moduli");
    require_unit_weights(a, "theorem 1.2");
    require_unit_weights(b, "theorem 1.2");
    const Int mm = positive_modulus(m, "theorem 1.2");

    Int N;
    mpz_lcm(N.get_mpz_t(), Int(prof_a.period).get_mpz_t(), Int(prof_b.period).get_mpz_t());
    if (!N.fits_ulong_p() || N.get_ui() > cap)
        throw period_too_large_error("combined period " + N.get_str() + " exceeds cap " +
                                     std::to_string(cap));
    const std::uint64_t period = N.get_ui();

    // Hypothesis: w_A == w_B (mod m) over one combined period, and m does
    // not divide N.
    bool congruent = true;
    std::uint64_t bad_x = 0;
    for (std::uint64_t r = 0; r < period; ++r) {
        Int diff = prof_a.values[r % prof_a.period] - prof_b.values[r % prof_b.period];
        if (!divides(mm, diff)) {
            congruent = false;
            bad_x = r;
            break;
        }
    }
    const bool m_free = !divides(mm, N);
    const bool hyp = congruent && m_free;
    std::string note;
    if (!congruent)
        note = "w_A(x) != w_B(x) (mod " + mm.get_str() + ") at x = " + std::to_string(bad_x);
    else if (!m_free)
        note = "m = " + mm.get_str() + " divides N = " + N.get_str();
    else
        note = "w_A == w_B (mod " + mm.get_str() + ") over a period, and " + mm.get_str() +
               " does not divide N = " + N.get_str();

    std::vector<CheckItem> items;
    {
        CheckItem item;
        item.subject = "class sets";
        item.expected = "A and B are identical as sets of residue classes";
        std::vector<ResidueClass> sa = a.classes, sb = b.classes;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa == sb) {
            item.observed = "identical, " + std::to_string(sa.size()) + " classes";
            item.passed = true;
        } else {
            std::vector<ResidueClass> diff;
            std::set_symmetric_difference(sa.begin(), sa.end(), sb.begin(), sb.end(),
                                          std::back_inserter(diff));
            item.observed = "differ in " + std::to_string(diff.size()) + " classes";
            item.witness = diff.front().residue.get_str() + "(" + diff.front().modulus.get_str() +
                           ") occurs in only one system";
            item.passed = false;
        }
        items.push_back(std::move(item));
    }

    // Replay of the proof: repeatedly match and strip the largest modulus.
    std::vector<std::string> evidence;
    {
        std::map<Int, Int> ra, rb; // modulus -> residue; moduli are distinct
        for (const ResidueClass& c : a.classes) ra.emplace(c.modulus, c.residue);
        for (const ResidueClass& c : b.classes) rb.emplace(c.modulus, c.residue);
        CheckItem item;
        item.subject = "matching procedure";
        item.expected = "largest-modulus pairing strips both systems to empty";
        item.passed = true;
        while (!ra.empty() || !rb.empty()) {
            Int d = 0;
            if (!ra.empty()) d = ra.rbegin()->first;
            if (!rb.empty() && rb.rbegin()->first > d) d = rb.rbegin()->first;
            auto ita = ra.find(d), itb = rb.find(d);
            if (ita == ra.end() || itb == rb.end()) {
                item.observed = "modulus " + d.get_str() + " occurs in only one system";
                item.passed = false;
                break;
            }
            if (ita->second != itb->second) {
                item.observed = "modulus " + d.get_str() + " carries residues " +
                                ita->second.get_str() + " and " + itb->second.get_str();
                item.passed = false;
                break;
            }
            evidence.push_back("matched " + ita->second.get_str() + "(" + d.get_str() +
                               ") in both systems");
            ra.erase(ita);
            rb.erase(itb);
        }
        if (item.passed) item.observed = "all classes paired";
        items.push_back(std::move(item));
    }

    return make_report("1.2", hyp, std::move(note), std::move(items), std::move(evidence));
}

VerdictReport check_theorem_1_2(const ResidueSystem& a, const ResidueSystem& b, const Int& m,
                                std::uint64_t cap) {
    return check_theorem_1_2(a, b, m, profile(a, cap), profile(b, cap), cap);
}

Theorem13Context theorem13_context(const ResidueSystem& system, const Int& m, std::uint64_t cap) {
    require_multiple_classes(system, "theorem 1.3");
    const Int mm = abs(m); // m = 0 reads the congruence as equality

    const Profile prof = profile(system, cap);
    Theorem13Context ctx;
    ctx.n0 = minimal_period(prof, mm);
    const std::uint64_t n0 = ctx.n0.get_ui();
    const Int N = Int(prof.period);

    // Every d with I(d) nonempty divides some modulus, so this candidate
    // set is the theorem's quantifier domain made finite.
    std::set<std::uint64_t> cands;
    for (const ResidueClass& c : system.classes)
        for (std::uint64_t d : divisors_ascending(c.modulus.get_ui()))
            if (n0 % d != 0) cands.insert(d);

    for (std::uint64_t d : cands) {
        Theorem13Divisor rec;
        rec.d = d;
        rec.smallest_prime = smallest_prime_factor(d);
        rec.weighted_sum = 0;
        rec.min_quotient = d / std::gcd(d, n0); // index s = 0 contributes n0
        for (std::size_t s = 0; s < system.size(); ++s) {
            const std::uint64_t ns = system.classes[s].modulus.get_ui();
            if (ns % d == 0) {
                rec.members.push_back(s);
                rec.residues.insert(mpz_fdiv_ui(system.classes[s].residue.get_mpz_t(), d));
                rec.weighted_sum += system.weight(s) * (N / system.classes[s].modulus);
            } else {
                rec.min_quotient = std::min(rec.min_quotient, d / std::gcd(d, ns));
            }
        }
        ctx.candidates.push_back(std::move(rec));
    }
    return ctx;
}

VerdictReport check_theorem_1_3(const ResidueSystem& system, const Int& m, std::uint64_t cap) {
    const Theorem13Context ctx = theorem13_context(system, m, cap);
    const Int mm = abs(m);

    std::string note = "minimal period of w mod " + mm.get_str() + " is n0 = " +
                       ctx.n0.get_str() + "; " + std::to_string(ctx.candidates.size()) +
                       " candidate divisors";

    std::vector<CheckItem> items;
    for (const Theorem13Divisor& rec : ctx.candidates) {
        CheckItem item;
        item.subject = "d = " + std::to_string(rec.d);
        item.expected = "m | N*sum_{s in I(d)} lambda_s/n_s, or chain (1.3)";
        {
            std::ostringstream w;
            w << "I(d) = {";
            for (std::size_t i = 0; i < rec.members.size(); ++i)
                w << (i ? "," : "") << rec.members[i] + 1;
            w << "}";
            item.witness = w.str();
        }
        const bool branch_a =
            mpz_divisible_p(rec.weighted_sum.get_mpz_t(), mm.get_mpz_t()) != 0;
        if (branch_a) {
            item.observed = "branch A: " + mm.get_str() + " | " + rec.weighted_sum.get_str();
            item.passed = true;
        } else {
            const std::size_t members = rec.members.size();
            const std::size_t residues = rec.residues.size();
            const bool chain = members >= residues && residues >= rec.min_quotient &&
                               rec.min_quotient >= rec.smallest_prime;
            std::ostringstream out;
            out << "branch B (N*sum = " << rec.weighted_sum.get_str() << "): |I(d)| = " << members
                << " >= |{a_s mod d}| = " << residues << " >= min d/(d,n_s) = " << rec.min_quotient
                << " >= p(d) = " << rec.smallest_prime;
            if (!chain) out << " -- violated";
            item.observed = out.str();
            item.passed = chain;
        }
        items.push_back(std::move(item));
    }
    return make_report("1.3", true, std::move(note), std::move(items));
}

VerdictReport power_sum_evidence(const std::map<std::uint64_t, Int>& coefficients,
                                 std::uint64_t d, const Int& m) {
    if (d == 0) throw precondition_error("power_sum_evidence: d must be positive");
    for (const auto& [r, c] : coefficients) {
        (void)c;
        if (r >= d)
            throw precondition_error("power_sum_evidence: residue " + std::to_string(r) +
                                     " is out of range [0, " + std::to_string(d) + ")");
    }
    const Int mm = abs(m);
    const std::size_t order = coefficients.size(); // the recurrence order |R|

    auto u_at = [&](std::uint64_t n) {
        std::vector<Int> v(d, Int(0));
        for (const auto& [r, c] : coefficients)
            v[static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) * n % d)] += c;
        return make_element(d, std::move(v));
    };

    bool hyp = true;
    std::vector<std::string> evidence;
    for (std::uint64_t n = 1; n <= order; ++n) {
        const CyclotomicElement u = u_at(n);
        const bool div = divisible_by_integer(u, mm);
        evidence.push_back("u_" + std::to_string(n) + " = " + to_string(u) + "; divisible by " +
                           mm.get_str() + ": " + (div ? "yes" : "no"));
        if (!div) hyp = false;
    }
    std::string note = hyp ? "u_n divisible by " + mm.get_str() + " for n = 1.." +
                                 std::to_string(order)
                           : "some u_n with n <= |R| = " + std::to_string(order) +
                                 " is not divisible by " + mm.get_str();

    std::vector<CheckItem> items;
    for (std::uint64_t n = order + 1; n <= d; ++n) {
        const CyclotomicElement u = u_at(n);
        CheckItem item;
        item.subject = "n = " + std::to_string(n);
        item.expected = "u_n divisible by m (recurrence of order |R|)";
        item.observed = "u_n = " + to_string(u);
        item.passed = divisible_by_integer(u, mm);
        items.push_back(std::move(item));
    }
    {
        const CyclotomicElement ud = u_at(d);
        Int sum = 0;
        for (const auto& [r, c] : coefficients) {
            (void)r;
            sum += c;
        }
        CheckItem item;
        item.subject = "u_d";
        item.expected = "u_d equals the plain coefficient sum and is divisible by m";
        item.observed = "u_d = " + to_string(ud) + ", sum = " + sum.get_str();
        item.passed = ud == CyclotomicElement::from_integer(d, sum) &&
                      divisible_by_integer(ud, mm);
        items.push_back(std::move(item));
    }
    return make_report("power-sum", hyp, std::move(note), std::move(items), std::move(evidence));
}

} // namespace covfn
