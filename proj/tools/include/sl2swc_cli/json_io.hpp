#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"
#include "sl2swc/characters.hpp"
#include "sl2swc/cohomology.hpp"
#include "sl2swc/oracle.hpp"
#include "sl2swc/swc.hpp"

namespace sl2swc::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "sl2swc/1";

// "sl2" or "gl2".
std::string group_kind(const Group& g);
GroupPtr make_group(const std::string& kind, int q);

json table_json(const CharacterTable& t);
// Rebuilds a table on `group` from table_json output; throws CacheError if the
// document does not match the group or fails validation.
TablePtr table_from_json(const json& j, const GroupPtr& group);

// degree -> monomial strings.
json terms_json(const GradedClass& c);

json swc_json(const SwcReport& r, const std::string& rep);
json case_json(const CaseResult& c);
json suite_json(const SuiteReport& r, std::size_t max_failures = 50);
json dickson_json(const DicksonResult& d, int rank);
json cohomology_json(const std::string& group, const RingPresentation& p, int max_degree);
json error_json(const std::string& kind, const std::string& detail);

std::string dump(const json& j);

}  // namespace sl2swc::cli
