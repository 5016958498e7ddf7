#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "regsep/separability.hpp"
#include "regsep/vass.hpp"

namespace regsep {

using nlohmann::json;

// Instance files: {"dimension": d, "alphabet": {"dyck": n} | {"letters": [..]},
// "states": [..], "initial": s, "finals": [..], "transitions":
// [{"from","to","word": [[letter,count],..], "update": [int or decimal string,..]}]}
// Updates beyond the int64 range are written as decimal strings.
BuchiVass instance_from_json(const json& j, std::vector<std::string>* diagnostics = nullptr);
json instance_to_json(const BuchiVass& v);

BuchiVass load_instance(const std::string& path);
void save_instance(const BuchiVass& v, const std::string& path);

// Inline UP word syntax: "a1^2 A1^3 @ a1 A1" ('@' splits prefix and period,
// '^' carries run counts; Dyck letters may be juxtaposed without spaces).
UPWord parse_upword(const std::string& text, const Alphabet& alphabet);
std::string upword_to_string(const UPWord& w, const Alphabet& alphabet);

json verdict_to_json(const Verdict& v);
json report_to_json(const DecideTrace& tr, double seconds);

std::string km_dump(const KarpMillerGraph& km);
std::string profiles_dump(const KarpMillerGraph& km, const std::vector<Profile>& profiles);
std::string pump_dump(const PumpArtifacts& pa);

}  // namespace regsep
