#ifndef COVFN_VERDICT_HPP
#define COVFN_VERDICT_HPP

#include <string>
#include <utility>
#include <vector>

namespace covfn {

/// Outcome of a theorem check.  A failed hypothesis is not an error: fuzzers
/// must tell "the theorem said nothing here" apart from "the theorem's
/// conclusion held".
enum class Verdict { consistent, hypothesis_not_satisfied, falsified };

std::string to_string(Verdict v);

/// Process exit code for a verdict: 0 consistent, 2 hypothesis not
/// satisfied, 3 falsified.
int exit_code(Verdict v);

/// One checked conclusion: what was inspected, what the theorem demands,
/// what actually happened.
struct CheckItem {
    std::string subject;
    std::string expected;
    std::string observed;
    bool passed = true;
    std::string witness;
};

struct VerdictReport {
    std::string theorem;
    bool hypothesis_satisfied = false;
    std::string hypothesis_note;
    std::vector<CheckItem> items;
    std::vector<std::string> evidence;
    Verdict verdict = Verdict::hypothesis_not_satisfied;

    bool all_items_passed() const;
};

/// Assembles a report and derives the verdict: hypothesis failure wins,
/// otherwise falsified exactly when some item failed.
VerdictReport make_report(std::string theorem, bool hypothesis_satisfied,
                          std::string hypothesis_note, std::vector<CheckItem> items,
                          std::vector<std::string> evidence = {});

} // namespace covfn

#endif
