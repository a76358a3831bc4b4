#pragma once

// Fixture loading shared by the unit tests and the acceptance binary.

#include "acyc/io.hpp"

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

#ifndef ACYC_FIXTURE_DIR
#error "ACYC_FIXTURE_DIR must be defined by the build"
#endif

namespace acyc::testing {

inline std::filesystem::path fixture_dir() { return ACYC_FIXTURE_DIR; }

inline std::filesystem::path fixture(const std::string& relative) { return fixture_dir() / relative; }

inline SimplicialComplex load_complex(const std::string& name) {
    return complex_from_json(read_json_file(fixture("complexes/" + name + ".json")));
}

inline GroupAction load_action(const std::string& name) {
    const auto path = fixture("actions/" + name + ".json");
    return action_from_json(read_json_file(path), path.parent_path());
}

inline MirroredComplex load_mirrored(const std::string& name) {
    return mirrored_from_json(read_json_file(fixture("mirrored/" + name + ".json")));
}

inline FiniteGroup load_group(const std::string& name) {
    return group_from_json(read_json_file(fixture("groups/" + name + ".json")));
}

inline const Json& expected() {
    static const Json j = read_json_file(fixture("expected.json"));
    return j;
}

inline std::vector<std::string> names_in(const std::string& kind) {
    std::vector<std::string> out;
    for (const auto& e : std::filesystem::directory_iterator(fixture(kind)))
        if (e.path().extension() == ".json") out.push_back(e.path().stem().string());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace acyc::testing
