#include "covfn/verdict.hpp"

#include <algorithm>

namespace covfn {

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::consistent: return "consistent";
    case Verdict::hypothesis_not_satisfied: return "hypothesis-not-satisfied";
    case Verdict::falsified: return "FALSIFIED";
    }
    return "unknown";
}

int exit_code(Verdict v) {
    switch (v) {
    case Verdict::consistent: return 0;
    case Verdict::hypothesis_not_satisfied: return 2;
    case Verdict::falsified: return 3;
    }
    return 1;
}

bool VerdictReport::all_items_passed() const {
    return std::all_of(items.begin(), items.end(),
                       [](const CheckItem& it) { return it.passed; });
}

VerdictReport make_report(std::string theorem, bool hypothesis_satisfied,
                          std::string hypothesis_note, std::vector<CheckItem> items,
                          std::vector<std::string> evidence) {
    VerdictReport report;
    report.theorem = std::move(theorem);
    report.hypothesis_satisfied = hypothesis_satisfied;
    report.hypothesis_note = std::move(hypothesis_note);
    report.items = std::move(items);
    report.evidence = std::move(evidence);
    if (!report.hypothesis_satisfied)
        report.verdict = Verdict::hypothesis_not_satisfied;
    else
        report.verdict = report.all_items_passed() ? Verdict::consistent : Verdict::falsified;
    return report;
}

} // namespace covfn
