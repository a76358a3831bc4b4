#include "acyc/io.hpp"

#include "acyc/catalog.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace acyc {

namespace {

std::string label_of(const Json& j, const std::string& where) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw InputError(where + ": vertex labels must be strings or integers");
}

const Json& member(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw InputError(where + ": expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw InputError(where + ": missing \"" + key + "\"");
    return *it;
}

std::vector<std::vector<std::string>> facet_list(const Json& j, const std::string& where) {
    if (!j.is_array()) throw InputError(where + " must be an array of arrays");
    std::vector<std::vector<std::string>> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array() || j[i].empty())
            throw InputError(where + "[" + std::to_string(i) + "] must be a nonempty array");
        std::vector<std::string> f;
        for (const auto& v : j[i]) f.push_back(label_of(v, where));
        out.push_back(std::move(f));
    }
    return out;
}

Permutation permutation_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) throw InputError(where + " must be an array of integers");
    Permutation p;
    for (const auto& x : j) {
        if (!x.is_number_integer() || x.get<long long>() < 0 ||
            x.get<long long>() > std::numeric_limits<std::uint32_t>::max())
            throw InputError(where + " must be an array of nonnegative integers");
        p.push_back(x.get<std::uint32_t>());
    }
    return p;
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(source + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_json(buffer.str(), path.string());
}

SimplicialComplex complex_from_json(const Json& j) {
    const auto facets = facet_list(member(j, "facets", "complex"), "facets");
    std::vector<std::string> vertices;
    if (j.contains("vertices")) {
        if (!j["vertices"].is_array()) throw InputError("complex: \"vertices\" must be an array");
        for (const auto& v : j["vertices"]) vertices.push_back(label_of(v, "vertices"));
    } else {
        std::set<std::string> seen;
        for (const auto& f : facets)
            for (const auto& v : f)
                if (seen.insert(v).second) vertices.push_back(v);
    }
    try {
        return SimplicialComplex::from_facets(std::move(vertices), facets);
    } catch (const ComplexError& e) {
        throw InputError(std::string("complex: ") + e.what());
    }
}

Json complex_to_json(const SimplicialComplex& c) {
    Json facets = Json::array();
    for (const auto& f : c.facets()) facets.push_back(c.simplex_labels(f));
    return Json{{"vertices", c.vertices()}, {"facets", facets}};
}

GroupAction action_from_json(const Json& j, const std::filesystem::path& base_dir, std::size_t max_order) {
    const Json& cj = member(j, "complex", "action");
    SimplicialComplex complex;
    if (cj.is_string()) {
        std::filesystem::path p = cj.get<std::string>();
        if (p.is_relative()) p = base_dir / p;
        complex = complex_from_json(read_json_file(p));
    } else {
        complex = complex_from_json(cj);
    }

    const Json& gens = member(j, "generators", "action");
    if (!gens.is_array()) throw InputError("action: \"generators\" must be an array");
    std::vector<GeneratorSpec> specs;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const std::string where = "generator " + std::to_string(i);
        const Json& g = gens[i];
        if (!g.is_object()) throw InputError(where + " must be an object");
        GeneratorSpec spec;
        spec.name = g.contains("name") ? label_of(g["name"], where) : "g" + std::to_string(i);
        spec.vertices = identity_permutation(complex.vertex_count());
        if (g.contains("map")) {
            if (!g["map"].is_object()) throw InputError(where + ": \"map\" must be an object of labels");
            for (const auto& [from, to] : g["map"].items()) {
                auto a = complex.find_vertex(from);
                auto b = complex.find_vertex(label_of(to, where));
                if (!a || !b) throw InputError(where + " maps an unknown vertex '" + (a ? label_of(to, where) : from) + "'");
                spec.vertices[*a] = *b;
            }
        }
        if (g.contains("abstract")) spec.abstract = permutation_from_json(g["abstract"], where + " abstract");
        specs.push_back(std::move(spec));
    }
    try {
        return GroupAction::from_generators(std::move(complex), specs, max_order);
    } catch (const GroupError& e) {
        throw InputError(std::string("action: ") + e.what());
    } catch (const ActionError& e) {
        throw InputError(std::string("action: ") + e.what());
    }
}

MirroredComplex mirrored_from_json(const Json& j) {
    SimplicialComplex space = complex_from_json(j);
    const auto boundary_facets = facet_list(member(j, "boundary_facets", "mirrored complex"), "boundary_facets");
    std::set<std::string> seen;
    std::vector<std::string> vertices;
    for (const auto& f : boundary_facets)
        for (const auto& v : f) {
            if (!space.find_vertex(v)) throw InputError("boundary mentions unknown vertex '" + v + "'");
            if (seen.insert(v).second) vertices.push_back(v);
        }
    try {
        return make_mirrored(std::move(space), SimplicialComplex::from_facets(vertices, boundary_facets));
    } catch (const ComplexError& e) {
        throw InputError(std::string("mirrored complex: ") + e.what());
    } catch (const ConstructionError& e) {
        throw InputError(std::string("mirrored complex: ") + e.what());
    }
}

FiniteGroup group_from_json(const Json& j, std::size_t max_order) {
    try {
        if (j.is_object() && j.contains("catalog")) {
            if (!j["catalog"].is_string()) throw InputError("group: \"catalog\" must be a string");
            FiniteGroup g = catalog_group(j["catalog"].get<std::string>());
            if (g.order() > max_order)
                throw InputError("group order " + std::to_string(g.order()) + " exceeds the bound of " +
                                 std::to_string(max_order));
            return g;
        }
        const Json& gens = member(j, "generators", "group");
        if (!gens.is_array()) throw InputError("group: \"generators\" must be an array");
        std::vector<Permutation> perms;
        for (std::size_t i = 0; i < gens.size(); ++i)
            perms.push_back(permutation_from_json(gens[i], "group generator " + std::to_string(i)));
        if (perms.empty()) return FiniteGroup();
        return group_closure(perms, max_order);
    } catch (const GroupError& e) {
        throw InputError(std::string("group: ") + e.what());
    }
}

Json integer_to_json(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
    if (j.is_string()) return Integer(j.get<std::string>());
    throw InputError("expected an integer");
}

Json profile_to_json(const HomologyProfile& p) {
    Json degrees = Json::array();
    for (const auto& d : p.degrees) {
        Json torsion = Json::array();
        for (const auto& t : d.torsion) torsion.push_back(integer_to_json(t));
        degrees.push_back(Json{{"degree", d.degree}, {"betti", d.betti}, {"torsion", torsion}});
    }
    return Json{{"reduced", p.reduced}, {"degrees", degrees}};
}

HomologyProfile profile_from_json(const Json& j) {
    HomologyProfile p;
    p.reduced = member(j, "reduced", "profile").get<bool>();
    for (const auto& d : member(j, "degrees", "profile")) {
        DegreeHomology h;
        h.degree = d.at("degree").get<int>();
        h.betti = d.at("betti").get<std::size_t>();
        for (const auto& t : d.at("torsion")) h.torsion.push_back(integer_from_json(t));
        p.degrees.push_back(std::move(h));
    }
    return p;
}

}  // namespace acyc
