#include <cstdint>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "covfn/cyclotomic.hpp"
#include "covfn/errors.hpp"
#include "covfn/generate.hpp"
#include "covfn/io.hpp"
#include "covfn/residue.hpp"
#include "covfn/verdict.hpp"
#include "covfn/verify.hpp"

namespace {

using covfn::Int;
using nlohmann::json;

Int parse_int_arg(const std::string& s, const std::string& what) {
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
        throw covfn::parse_error(what + ": \"" + s + "\" is not an integer");
    return Int(s, 10);
}

std::uint64_t parse_u64_arg(const std::string& s, const std::string& what) {
    const Int v = parse_int_arg(s, what);
    if (v < 0 || !v.fits_ulong_p())
        throw covfn::parse_error(what + ": \"" + s + "\" is out of range");
    return v.get_ui();
}

/// "LO..HI" inclusive, or a comma list of values.
std::vector<std::uint64_t> parse_value_set(const std::string& s, const std::string& what) {
    std::vector<std::uint64_t> values;
    const std::size_t dots = s.find("..");
    if (dots != std::string::npos) {
        const std::uint64_t lo = parse_u64_arg(s.substr(0, dots), what);
        const std::uint64_t hi = parse_u64_arg(s.substr(dots + 2), what);
        if (lo > hi) throw covfn::parse_error(what + ": empty range " + s);
        if (hi - lo > 1'000'000) throw covfn::parse_error(what + ": range " + s + " is too wide");
        for (std::uint64_t v = lo; v <= hi; ++v) values.push_back(v);
        return values;
    }
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const std::size_t comma = std::min(s.find(',', pos), s.size());
        values.push_back(parse_u64_arg(s.substr(pos, comma - pos), what));
        pos = comma + 1;
    }
    return values;
}

json range_to_json(const std::set<Int>& range) {
    json out = json::array();
    for (const Int& v : range) out.push_back(covfn::int_to_json(v));
    return out;
}

int run_analyze(const std::string& input, const std::string& mod_str, std::uint64_t cap,
                bool as_json) {
    const covfn::SystemDocument doc = covfn::load_system(input);
    const covfn::ResidueSystem& sys = doc.system;
    const Int m = mod_str.empty() ? Int(0) : parse_int_arg(mod_str, "--mod");

    const Int N = covfn::system_lcm(sys);
    const covfn::Rational mean = covfn::mean_value(sys);
    const covfn::Profile prof = covfn::profile(sys, cap);
    const covfn::RangeSpread spread = covfn::range_and_spread(prof);
    const Int period = covfn::minimal_period(prof, m);
    const covfn::MaximalModuli mx = covfn::maximal_moduli(sys);
    const Int window = covfn::constancy_window_size(sys);
    const bool cover = covfn::is_cover(sys, cap);

    if (as_json) {
        json mxj = json::array();
        for (const Int& v : mx.moduli) mxj.push_back(covfn::int_to_json(v));
        json out{{"k", sys.size()},
                 {"N", covfn::int_to_json(N)},
                 {"mean", mean.get_str()},
                 {"range", range_to_json(spread.range)},
                 {"spread", covfn::int_to_json(spread.spread)},
                 {"minimal_period", covfn::int_to_json(period)},
                 {"mod", covfn::int_to_json(m)},
                 {"maximal_moduli", {{"moduli", std::move(mxj)}, {"distinct", mx.distinct}}},
                 {"constancy_window", covfn::int_to_json(window)},
                 {"cover", cover}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    std::cout << "k: " << sys.size() << "\n";
    std::cout << "N: " << N.get_str() << "\n";
    std::cout << "mean: " << mean.get_str() << "\n";
    std::cout << "range: {";
    for (auto it = spread.range.begin(); it != spread.range.end(); ++it)
        std::cout << (it == spread.range.begin() ? "" : ", ") << it->get_str();
    std::cout << "}\n";
    std::cout << "spread g: " << spread.spread.get_str() << "\n";
    if (m == 0)
        std::cout << "minimal period: " << period.get_str() << "\n";
    else
        std::cout << "minimal period mod " << m.get_str() << ": " << period.get_str() << "\n";
    std::cout << "maximal moduli: {";
    for (std::size_t i = 0; i < mx.moduli.size(); ++i)
        std::cout << (i ? ", " : "") << mx.moduli[i].get_str();
    std::cout << "}" << (mx.distinct ? " (distinct)" : " (repeated)") << "\n";
    std::cout << "constancy window: " << window.get_str() << "\n";
    std::cout << "cover: " << (cover ? "yes" : "no") << "\n";
    return 0;
}

int run_verify(const std::string& theorem, const std::vector<std::string>& inputs,
               const std::string& mod_str, std::uint64_t cap, bool as_json) {
    const bool needs_pair = theorem == "1.2";
    if (inputs.size() != (needs_pair ? 2u : 1u))
        throw covfn::parse_error("theorem " + theorem + " takes " +
                                 (needs_pair ? std::string("two input files") :
                                               std::string("one input file")));
    const bool needs_mod = theorem == "1.1" || theorem == "1.2";
    if (needs_mod && mod_str.empty())
        throw covfn::parse_error("theorem " + theorem + " requires --mod");
    const Int m = mod_str.empty() ? Int(0) : parse_int_arg(mod_str, "--mod");

    covfn::VerdictReport report;
    if (theorem == "1.1") {
        report = covfn::check_theorem_1_1(covfn::load_system(inputs[0]).system, m, cap);
    } else if (theorem == "1.2") {
        report = covfn::check_theorem_1_2(covfn::load_system(inputs[0]).system,
                                          covfn::load_system(inputs[1]).system, m, cap);
    } else if (theorem == "1.3") {
        report = covfn::check_theorem_1_3(covfn::load_system(inputs[0]).system, m, cap);
    } else if (theorem == "c1.1") {
        report = covfn::check_corollary_1_1(covfn::load_system(inputs[0]).system, cap);
    } else {
        report = covfn::check_corollary_1_2(covfn::load_system(inputs[0]).system, cap);
    }

    if (as_json)
        std::cout << covfn::report_to_json(report).dump(2) << "\n";
    else
        std::cout << covfn::format_report(report);
    return covfn::exit_code(report.verdict);
}

int run_construct(const std::string& kind, std::uint64_t n, const std::string& out_path) {
    covfn::ResidueSystem sys;
    json meta{{"generator", kind}};
    if (kind == "erdos") {
        sys = covfn::erdos_cover(n);
        meta["n"] = n;
    } else {
        sys = covfn::classic_cover();
    }
    const json doc = covfn::system_to_json(sys, meta);
    if (out_path.empty()) {
        std::cout << doc.dump(2) << "\n";
    } else {
        covfn::save_system(out_path, sys, meta);
        std::cout << "wrote " << sys.size() << " classes, N = "
                  << covfn::system_lcm(sys).get_str() << ", to " << out_path << "\n";
    }
    return 0;
}

int run_expsum(const std::string& input, const std::string& c_str, const std::string& d_str,
               std::uint64_t cap, bool as_json) {
    const covfn::ResidueSystem sys = covfn::load_system(input).system;
    const Int c = parse_int_arg(c_str, "--c");
    const Int d = parse_int_arg(d_str, "--d");

    const covfn::CyclotomicElement e = covfn::exp_sum(sys, c, d);
    bool identity = false, identity_known = true;
    try {
        identity = covfn::fourier_identity_check(sys, c, d, cap);
    } catch (const covfn::period_too_large_error&) {
        identity_known = false;
    }
    const Int gcd = covfn::coefficient_gcd(e);
    const Int N = covfn::system_lcm(sys);

    // m | exp_sum coefficientwise <=> m divides the coefficient gcd; gcd 0
    // means the zero element, divisible by everything.
    const bool all_m = gcd == 0;
    const std::uint64_t limit = N > cap ? cap : N.get_ui();
    std::vector<std::uint64_t> ms;
    if (!all_m)
        for (std::uint64_t m = 2; m <= limit; ++m)
            if (mpz_divisible_ui_p(gcd.get_mpz_t(), m)) ms.push_back(m);

    if (as_json) {
        json coeffs = json::array();
        for (const Int& v : e.coeffs()) coeffs.push_back(covfn::int_to_json(v));
        json out{{"order", e.order()},
                 {"coefficients", std::move(coeffs)},
                 {"element", covfn::to_string(e)},
                 {"coefficient_gcd", covfn::int_to_json(gcd)},
                 {"fourier_identity", identity_known ? json(identity) : json(nullptr)},
                 {"divisible", {{"all", all_m}, {"m", ms}, {"scanned_to", limit}}}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    std::cout << "order: " << e.order() << "\n";
    std::cout << "coefficients: [";
    for (std::size_t i = 0; i < e.coeffs().size(); ++i)
        std::cout << (i ? ", " : "") << e.coeffs()[i].get_str();
    std::cout << "]\n";
    std::cout << "element: " << covfn::to_string(e) << "\n";
    std::cout << "coefficient gcd: " << gcd.get_str() << "\n";
    if (identity_known)
        std::cout << "fourier identity: " << (identity ? "true" : "false") << "\n";
    else
        std::cout << "fourier identity: not checked (period exceeds cap)\n";
    std::cout << "divisible by m in 2.." << limit << ": ";
    if (all_m) {
        std::cout << "every m (element is 0)\n";
    } else if (ms.empty()) {
        std::cout << "none\n";
    } else {
        for (std::size_t i = 0; i < ms.size(); ++i) std::cout << (i ? ", " : "") << ms[i];
        std::cout << "\n";
    }
    return 0;
}

struct FuzzTally {
    std::uint64_t checks = 0;
    std::uint64_t consistent = 0;
    std::uint64_t vacuous = 0;
    std::uint64_t falsified = 0;
};

void tally_verdict(FuzzTally& tally, const covfn::VerdictReport& report) {
    ++tally.checks;
    switch (report.verdict) {
    case covfn::Verdict::consistent: ++tally.consistent; break;
    case covfn::Verdict::hypothesis_not_satisfied: ++tally.vacuous; break;
    case covfn::Verdict::falsified: ++tally.falsified; break;
    }
}

int run_fuzz(const std::string& theorem, std::uint64_t seed, std::uint64_t count,
             std::uint64_t max_k, const std::string& pool_str, const std::string& mod_str,
             bool distinct, std::uint64_t cap, const std::string& replay_prefix, bool as_json) {
    const std::vector<std::uint64_t> pool = parse_value_set(pool_str, "--pool");
    const std::vector<std::uint64_t> mods = parse_value_set(mod_str, "--mod-range");
    if (max_k < 2) throw covfn::parse_error("--k must be at least 2");
    const bool weighted = theorem == "1.3";

    FuzzTally tally;
    std::string first_falsified;

    for (std::uint64_t task = 0; task < count; ++task) {
        // Every draw for this task comes from one sub-seeded generator, so a
        // single task replays from (seed, task) alone.
        covfn::Xoshiro256ss aux(covfn::mix_seed(seed, task));
        const std::size_t k = 2 + static_cast<std::size_t>(aux.below(max_k - 1));

        covfn::GeneratorSpec spec;
        spec.class_count = k;
        spec.modulus_pool = pool;
        spec.distinct_moduli = distinct || theorem == "1.2";
        spec.seed = aux.next();
        covfn::ResidueSystem sys = covfn::random_system(spec);

        covfn::ResidueSystem other;
        if (theorem == "1.2") {
            if (aux.below(2) == 0) {
                other = sys; // half the pairs are identical by construction
            } else {
                covfn::GeneratorSpec spec_b = spec;
                spec_b.class_count = 2 + static_cast<std::size_t>(aux.below(max_k - 1));
                spec_b.seed = aux.next();
                other = covfn::random_system(spec_b);
            }
        }
        if (weighted) {
            std::vector<Int> weights(k);
            for (Int& w : weights)
                w = static_cast<long>(aux.below(7)) - 3; // uniform in [-3, 3]
            sys = covfn::make_system(sys.classes, std::move(weights));
        }

        auto handle = [&](const covfn::VerdictReport& report, const Int& m) {
            tally_verdict(tally, report);
            if (report.verdict != covfn::Verdict::falsified || !first_falsified.empty()) return;
            json meta{{"fuzz", {{"seed", seed},
                                {"task", task},
                                {"theorem", theorem},
                                {"m", covfn::int_to_json(m)}}}};
            if (theorem == "1.2") {
                covfn::save_system(replay_prefix + "-a.json", sys, meta);
                covfn::save_system(replay_prefix + "-b.json", other, meta);
                first_falsified = replay_prefix + "-a.json, " + replay_prefix + "-b.json";
            } else {
                covfn::save_system(replay_prefix + ".json", sys, meta);
                first_falsified = replay_prefix + ".json";
            }
        };

        if (theorem == "c1.1") {
            handle(covfn::check_corollary_1_1(sys, cap), 0);
        } else if (theorem == "c1.2") {
            handle(covfn::check_corollary_1_2(sys, cap), 0);
        } else if (theorem == "1.1") {
            const covfn::RangeSpread spread = covfn::range_and_spread(sys, cap);
            for (std::uint64_t m : mods)
                handle(covfn::check_theorem_1_1(sys, Int(m), spread), Int(m));
        } else if (theorem == "1.2") {
            const covfn::Profile pa = covfn::profile(sys, cap);
            const covfn::Profile pb = covfn::profile(other, cap);
            for (std::uint64_t m : mods)
                handle(covfn::check_theorem_1_2(sys, other, Int(m), pa, pb, cap), Int(m));
        } else {
            for (std::uint64_t m : mods)
                handle(covfn::check_theorem_1_3(sys, Int(m), cap), Int(m));
        }
    }

    if (as_json) {
        json out{{"theorem", theorem},
                 {"seed", seed},
                 {"tasks", count},
                 {"checks", tally.checks},
                 {"consistent", tally.consistent},
                 {"hypothesis_not_satisfied", tally.vacuous},
                 {"falsified", tally.falsified}};
        if (!first_falsified.empty()) out["replay"] = first_falsified;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "fuzz theorem=" << theorem << " seed=" << seed << " tasks=" << count
                  << "\n";
        std::cout << "checks=" << tally.checks << " consistent=" << tally.consistent
                  << " hypothesis-not-satisfied=" << tally.vacuous
                  << " FALSIFIED=" << tally.falsified << "\n";
        if (!first_falsified.empty())
            std::cout << "replay written to " << first_falsified << "\n";
    }
    return tally.falsified > 0 ? 3 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis of covering systems of residue classes"};
    app.require_subcommand(1);

    const std::vector<std::string> theorems{"1.1", "1.2", "1.3", "c1.1", "c1.2"};

    std::string an_input, an_mod;
    std::uint64_t an_cap = covfn::kDefaultCap;
    bool an_json = false;
    CLI::App* analyze = app.add_subcommand("analyze", "covering-function report for a system");
    analyze->add_option("input", an_input, "system JSON file")->required();
    analyze->add_option("--mod", an_mod, "compute the minimal period mod M instead of exactly");
    analyze->add_option("--cap", an_cap, "dense enumeration cap");
    analyze->add_flag("--json", an_json, "machine-readable output");

    std::string ve_theorem, ve_mod;
    std::vector<std::string> ve_inputs;
    std::uint64_t ve_cap = covfn::kDefaultCap;
    bool ve_json = false;
    CLI::App* verify = app.add_subcommand("verify", "check a theorem on concrete systems");
    verify->add_option("--theorem", ve_theorem, "which statement to check")
        ->required()
        ->check(CLI::IsMember(theorems));
    verify->add_option("input", ve_inputs, "system JSON file(s); theorem 1.2 takes two")
        ->required()
        ->expected(1, 2);
    verify->add_option("--mod", ve_mod, "modulus m (required for 1.1 and 1.2; 0 = exact for 1.3)");
    verify->add_option("--cap", ve_cap, "dense enumeration cap");
    verify->add_flag("--json", ve_json, "machine-readable output");

    std::string co_kind, co_out;
    std::uint64_t co_n = 3;
    CLI::App* construct = app.add_subcommand("construct", "emit a known cover as a document");
    construct->add_option("kind", co_kind, "erdos or classic")
        ->required()
        ->check(CLI::IsMember({"erdos", "classic"}));
    construct->add_option("--n", co_n, "parameter for the erdos construction (odd, >= 3)");
    construct->add_option("-o,--output", co_out, "write the document to this path");

    std::string fz_theorem = "1.1", fz_pool = "2..12", fz_mods = "2..13",
                fz_replay = "falsified";
    std::uint64_t fz_seed = 1, fz_count = 100, fz_k = 5, fz_cap = covfn::kDefaultCap;
    bool fz_distinct = false, fz_json = false;
    CLI::App* fuzz = app.add_subcommand("fuzz", "run a verifier over seeded random systems");
    fuzz->add_option("--theorem", fz_theorem, "which statement to fuzz")
        ->check(CLI::IsMember(theorems));
    fuzz->add_option("--seed", fz_seed, "master seed");
    fuzz->add_option("--count", fz_count, "number of generated systems");
    fuzz->add_option("--k", fz_k, "maximum class count (drawn uniformly from 2..k)");
    fuzz->add_option("--pool", fz_pool, "modulus pool, LO..HI or comma list");
    fuzz->add_option("--mod-range", fz_mods, "moduli m to check, LO..HI or comma list");
    fuzz->add_flag("--distinct", fz_distinct, "draw pairwise distinct moduli");
    fuzz->add_option("--cap", fz_cap, "dense enumeration cap");
    fuzz->add_option("--replay", fz_replay, "path prefix for the counterexample dump");
    fuzz->add_flag("--json", fz_json, "machine-readable summary");

    std::string ex_input, ex_c, ex_d;
    std::uint64_t ex_cap = covfn::kDefaultCap;
    bool ex_json = false;
    CLI::App* expsum = app.add_subcommand("expsum", "exponential sum at frequency c/d");
    expsum->add_option("input", ex_input, "system JSON file")->required();
    expsum->add_option("--c", ex_c, "frequency numerator")->required();
    expsum->add_option("--d", ex_d, "frequency denominator")->required();
    expsum->add_option("--cap", ex_cap, "dense enumeration cap");
    expsum->add_flag("--json", ex_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (analyze->parsed()) return run_analyze(an_input, an_mod, an_cap, an_json);
        if (verify->parsed()) return run_verify(ve_theorem, ve_inputs, ve_mod, ve_cap, ve_json);
        if (construct->parsed()) return run_construct(co_kind, co_n, co_out);
        if (fuzz->parsed())
            return run_fuzz(fz_theorem, fz_seed, fz_count, fz_k, fz_pool, fz_mods, fz_distinct,
                            fz_cap, fz_replay, fz_json);
        if (expsum->parsed()) return run_expsum(ex_input, ex_c, ex_d, ex_cap, ex_json);
    } catch (const covfn::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
