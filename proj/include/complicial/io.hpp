#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "complicial/categorify.hpp"
#include "complicial/factorization.hpp"
#include "complicial/lifting.hpp"
#include "complicial/polygraph.hpp"
#include "complicial/tdelta.hpp"
#include "complicial/twocat.hpp"

namespace complicial {

// Insertion-ordered so that written files are stable and readable.
using Json = nlohmann::ordered_json;

// Cells are referenced by name. Table triples are [second, first, result] for
// vcomp, [c, alpha, result] for whisker_l (c after alpha) and
// [beta, a, result] for whisker_r (beta after a). Tables must be total.
Json to_json(const FiniteTwoCategory& c);
FiniteTwoCategory category_from_json(const Json& j);

// Simplices and tokens are named; structure maps refer to positions.
Json to_json(const TDeltaSet& x);
TDeltaSet tdelta_from_json(const Json& j);

Json to_json(const TDeltaMap& f);
TDeltaMap map_from_json(const Json& j);

Json to_json(const TwoPolygraph& p);
TwoPolygraph polygraph_from_json(const Json& j);

// Witnesses are written with the target simplex names of every source simplex.
Json to_json(const FibrancyReport& r, const TDeltaSet& target);
Json to_json(const FactorizationReport& r);
Json to_json(const CounitReport& r);
Json to_json(const SectionReport& r);

// Throws InputError on unreadable or malformed files.
Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace complicial
