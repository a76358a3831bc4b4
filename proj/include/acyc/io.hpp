#pragma once

// JSON ingestion and serialization for complexes, actions, mirrored
// complexes, groups and homology profiles.

#include "acyc/constructions.hpp"
#include "acyc/group_action.hpp"
#include "acyc/homology.hpp"
#include "acyc/simplicial.hpp"

#include "json.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>

namespace acyc {

using Json = nlohmann::ordered_json;

class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parse errors carry the file name and the parser's byte position.
Json read_json_file(const std::filesystem::path& path);
Json parse_json(const std::string& text, const std::string& source = "<input>");

/// { "vertices": [...], "facets": [[...], ...] }; vertices may be omitted
/// and labels may be strings or integers.
SimplicialComplex complex_from_json(const Json& j);
Json complex_to_json(const SimplicialComplex& c);

/// { "complex": <complex or relative path>, "generators": [ { "name": ..,
/// "map": { label: label, ... }, "abstract": [...] } ] }.  Unmapped
/// vertices are fixed.
GroupAction action_from_json(const Json& j, const std::filesystem::path& base_dir,
                             std::size_t max_order = kDefaultMaxGroupOrder);

/// Complex JSON plus "boundary_facets".
MirroredComplex mirrored_from_json(const Json& j);

/// { "catalog": name } or { "generators": [[permutation], ...] }.
FiniteGroup group_from_json(const Json& j, std::size_t max_order = kDefaultMaxGroupOrder);

/// Small integers as JSON numbers, anything else as a decimal string.
Json integer_to_json(const Integer& z);
Integer integer_from_json(const Json& j);

Json profile_to_json(const HomologyProfile& p);
HomologyProfile profile_from_json(const Json& j);

}  // namespace acyc
