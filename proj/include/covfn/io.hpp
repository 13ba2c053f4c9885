#ifndef COVFN_IO_HPP
#define COVFN_IO_HPP

#include <string>

#include <json.hpp>

#include "covfn/residue.hpp"
#include "covfn/verdict.hpp"

namespace covfn {

/// On-disk form of a system: {"classes":[{"a":..,"n":..},...],
/// "weights":[..]?, "metadata":{..}?}.  Residues may arrive unnormalized
/// and are reduced on load.  Values outside the 64-bit range travel as
/// decimal strings.
struct SystemDocument {
    ResidueSystem system;
    nlohmann::json metadata; // null when absent
};

/// Integer <-> JSON: a JSON integer when it fits 64 bits, a decimal string
/// otherwise; both accepted on input.
nlohmann::json int_to_json(const Int& v);
Int json_to_int(const nlohmann::json& v, const std::string& what);

SystemDocument system_from_json(const nlohmann::json& j);
nlohmann::json system_to_json(const ResidueSystem& system,
                              const nlohmann::json& metadata = nullptr);

/// File variants; throw parse_error on unreadable files or schema
/// violations.
SystemDocument load_system(const std::string& path);
void save_system(const std::string& path, const ResidueSystem& system,
                 const nlohmann::json& metadata = nullptr);

nlohmann::json report_to_json(const VerdictReport& report);
std::string format_report(const VerdictReport& report);

} // namespace covfn

#endif
