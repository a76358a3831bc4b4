#include "acyc/cli.hpp"

#include "acyc/catalog.hpp"
#include "acyc/constructions.hpp"
#include "acyc/group_ring.hpp"
#include "acyc/homology.hpp"
#include "acyc/io.hpp"
#include "acyc/orbit.hpp"

#include "CLI11.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#ifndef ACYC_DEFAULT_FIXTURES
#define ACYC_DEFAULT_FIXTURES "fixtures"
#endif
#ifndef ACYC_VERSION
#define ACYC_VERSION "0.0.0"
#endif

namespace acyc {

namespace fs = std::filesystem;

std::filesystem::path fixtures_dir() {
    if (const char* env = std::getenv("ACYC_FIXTURES"); env && *env) return env;
    return ACYC_DEFAULT_FIXTURES;
}

std::string sha256_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string data = buffer.str();
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 failed");
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return hex.str();
}

namespace {

struct Options {
    std::string input;
    std::string ring = "Z";
    bool reduced = false;
    bool json = false;
    int jobs = 1;
    std::size_t max_group_order = kDefaultMaxGroupOrder;
    std::size_t max_cells = kDefaultMaxCells;
    bool assert_simply_connected = false;
    int n = 0;
};

struct Outcome {
    Json result;
    std::vector<fs::path> inputs;
    int exit_code = kExitOk;
    std::string text_prefix;
};

fs::path resolve_input(const std::string& arg, const std::string& kind) {
    const fs::path p = arg;
    if (fs::exists(p)) return p;
    if (p.is_relative()) {
        const fs::path base = fixtures_dir();
        for (const fs::path& dir : {base, base / kind})
            for (const fs::path& candidate : {dir / p, dir / (arg + ".json")})
                if (fs::exists(candidate)) return candidate;
    }
    throw InputError("input file not found: " + arg);
}

Json f_vector(const SimplicialComplex& c) {
    Json f = Json::array();
    for (int d = 0; d <= c.dimension(); ++d) f.push_back(c.count(d));
    return f;
}

Json complex_summary(const SimplicialComplex& c) {
    return Json{{"vertices", c.vertex_count()}, {"dimension", c.dimension()}, {"f_vector", f_vector(c)}};
}

/// Shortest word in the named generators, found by breadth-first search.
std::vector<std::string> element_words(const FiniteGroup& g, const std::vector<std::string>& names) {
    std::vector<std::string> word(g.order());
    std::vector<char> seen(g.order(), 0);
    std::deque<std::size_t> queue{g.identity()};
    seen[g.identity()] = 1;
    word[g.identity()] = "e";
    while (!queue.empty()) {
        const auto x = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < g.generators().size(); ++i) {
            const auto y = g.multiply(x, g.generators()[i]);
            if (seen[y]) continue;
            seen[y] = 1;
            const std::string name = i < names.size() ? names[i] : "g" + std::to_string(i);
            word[y] = x == g.identity() ? name : word[x] + "*" + name;
            queue.push_back(y);
        }
    }
    return word;
}

Json subgroup_json(const Subgroup& h, const std::vector<std::string>& words) {
    Json gens = Json::array();
    for (auto x : h.generators) gens.push_back(words.at(x));
    return Json{{"order", h.order()}, {"generators", gens}};
}

Json moved_vertices(const GroupAction& a, std::size_t g) {
    Json map = Json::object();
    const auto& c = a.complex();
    for (VertexId v = 0; v < c.vertex_count(); ++v)
        if (a.vertex_map(g)[v] != v) map[c.label(v)] = c.label(a.vertex_map(g)[v]);
    return map;
}

Json table_json(const FixedSetTable& table, const std::vector<std::string>& words) {
    Json rows = Json::array();
    for (const auto& row : table.rows)
        rows.push_back(Json{{"subgroup", subgroup_json(row.subgroup, words)},
                            {"class", row.class_index},
                            {"component", row.component},
                            {"chi", row.chi},
                            {"f_vector", f_vector(row.complex)}});
    return rows;
}

GroupAction load_action(const Options& o, Outcome& out) {
    const fs::path p = resolve_input(o.input, "actions");
    out.inputs.push_back(p);
    const Json j = read_json_file(p);
    if (j.is_object() && j.contains("complex") && j["complex"].is_string()) {
        fs::path c = j["complex"].get<std::string>();
        out.inputs.push_back(c.is_relative() ? p.parent_path() / c : c);
    }
    return action_from_json(j, p.parent_path(), o.max_group_order);
}

SimplicialComplex load_complex(const Options& o, Outcome& out) {
    const fs::path p = resolve_input(o.input, "complexes");
    out.inputs.push_back(p);
    return complex_from_json(read_json_file(p));
}

// --- commands ---------------------------------------------------------------

Outcome cmd_homology(const Options& o) {
    Outcome out;
    const auto c = load_complex(o, out);
    if (o.ring != "Z" && o.ring != "Q") throw InputError("--ring must be Z or Q");
    const Ring ring = o.ring == "Z" ? Ring::Z : Ring::Q;
    auto profile = homology(c, o.reduced, o.jobs);
    if (ring == Ring::Q)
        for (auto& d : profile.degrees) d.torsion.clear();
    out.result = Json{{"complex", complex_summary(c)},
                      {"ring", o.ring},
                      {"reduced", o.reduced},
                      {"homology", profile_to_json(profile)},
                      {"euler_characteristic", euler_characteristic(c)},
                      {"flag", is_flag(c)}};
    if (o.reduced) out.result["acyclic"] = profile.vanishes(ring);
    return out;
}

Outcome cmd_check_fh(const Options& o) {
    Outcome out;
    const auto a = load_action(o, out);
    const auto words = element_words(a.group(), a.generator_names());
    const bool regular = is_regular(a);
    const auto v = fh_verdict(a, o.jobs);
    Json witness = Json::object();
    if (v.kind == VerdictKind::Obstructed) {
        witness = Json{{"element", words.at(*v.element)},
                       {"moves", moved_vertices(a, *v.element)},
                       {"subgroup", subgroup_json(*v.subgroup, words)},
                       {"chi", v.chi}};
        out.exit_code = kExitObstructed;
    } else if (v.kind == VerdictKind::Indeterminate) {
        witness = Json{{"subgroup", subgroup_json(*v.subgroup, words)}, {"component", *v.component}, {"chi", v.chi}};
        out.exit_code = kExitIndeterminate;
    }
    const char* meaning = v.kind == VerdictKind::Obstructed ? "a cyclic fixed set has nonzero Euler characteristic, "
                                                               "so the group is not FH(Q)"
                          : v.kind == VerdictKind::SufficientHolds
                              ? "every fixed-set component of every nontrivial subgroup has Euler characteristic 0, "
                                "so the group is FH(Q)"
                              : "cyclic totals vanish but some component does not; neither criterion applies";
    out.result = Json{{"verdict", to_string(v.kind)},
                      {"interpretation", meaning},
                      {"witness", witness},
                      {"group_order", a.group().order()},
                      {"regular", regular},
                      {"complex", complex_summary(regular ? a.complex() : regularize(a).complex())},
                      {"table", table_json(v.table, words)}};
    out.text_prefix = "verdict: " + to_string(v.kind) + "\n";
    return out;
}

Outcome cmd_fixed_sets(const Options& o) {
    Outcome out;
    const auto a = load_action(o, out);
    const auto words = element_words(a.group(), a.generator_names());
    const bool regular = is_regular(a);
    const auto table = fixed_components_euler(a, true, o.jobs);
    Json classes = Json::array();
    for (std::size_t i = 0; i < table.classes.size(); ++i) {
        Json comps = Json::array();
        long long total = 0;
        for (const auto& row : table.rows)
            if (row.class_index == i) {
                comps.push_back(Json{{"component", row.component}, {"chi", row.chi}, {"f_vector", f_vector(row.complex)}});
                total += row.chi;
            }
        classes.push_back(Json{{"subgroup", subgroup_json(table.classes[i], words)},
                               {"cyclic", is_cyclic(a.group(), table.classes[i])},
                               {"chi", total},
                               {"components", comps}});
    }
    Json elements = Json::array();
    for (std::size_t g = 0; g < a.group().order(); ++g)
        elements.push_back(Json{{"element", words[g]}, {"order", a.group().element_order(g)}, {"moves", moved_vertices(a, g)}});
    out.result = Json{{"group_order", a.group().order()},
                      {"regular", regular},
                      {"elements", elements},
                      {"classes", classes}};
    return out;
}

Outcome cmd_basic_construction(const Options& o) {
    Outcome out;
    const fs::path p = resolve_input(o.input, "mirrored");
    out.inputs.push_back(p);
    const auto m = mirrored_from_json(read_json_file(p));
    const auto r = basic_construction(m, o.max_cells, o.jobs);
    Json census = Json::array();
    for (const auto& [key, count] : r.support_census)
        census.push_back(Json{{"dimension", key.first}, {"support", key.second}, {"count", count}});
    Json mirror_json = Json::object();
    for (const auto& [label, d] : m.mirror_map) mirror_json[label] = complex_summary(d);
    const auto q = quotient_group_choice(m.boundary);
    const int dim = m.space.dimension();
    out.result = Json{{"space", complex_summary(m.space)},
                      {"boundary", complex_summary(m.boundary)},
                      {"subdivided", complex_summary(m.subdivided)},
                      {"mirrors", mirror_json},
                      {"quotient", Json{{"index", q.index}, {"description", q.description}}},
                      {"copy_count", r.copy_count},
                      {"support_census", census},
                      {"glued", complex_summary(r.complex)},
                      {"chi_by_formula", r.chi_by_formula},
                      {"chi_direct", r.chi_direct},
                      {"pseudomanifold", is_pseudomanifold(r.complex, dim)}};
    if (r.chi_by_formula != r.chi_direct) throw std::logic_error("support-count formula disagrees with the glued complex");
    return out;
}

Outcome cmd_bb_report(const Options& o) {
    Outcome out;
    const auto c = load_complex(o, out);
    const auto r = bb_report(c, o.assert_simply_connected, o.jobs);
    Json lines = Json::array();
    for (const auto& l : r.lines) lines.push_back(Json{{"key", l.key}, {"text", l.text}});
    out.result = Json{{"complex", complex_summary(c)},
                      {"flag", r.flag},
                      {"homology_z", profile_to_json(r.homology_z)},
                      {"homology_q", profile_to_json(r.homology_q)},
                      {"z_acyclic", r.z_acyclic},
                      {"q_acyclic", r.q_acyclic},
                      {"user_asserted_simply_connected", r.user_asserted_simply_connected},
                      {"lines", lines},
                      {"warnings", r.warnings}};
    return out;
}

Outcome cmd_salvetti(const Options& o) {
    Outcome out;
    const auto c = load_complex(o, out);
    out.result = Json{{"complex", complex_summary(c)}, {"homology", profile_to_json(salvetti_homology(c))}};
    return out;
}

Json map_json(const FreeModuleMap& m) {
    Json rows = Json::array();
    for (const auto& row : m.entries) {
        Json r = Json::array();
        for (const auto& e : row) r.push_back(e.to_string());
        rows.push_back(r);
    }
    return rows;
}

Outcome cmd_verify_resolution(const Options& o) {
    Outcome out;
    const auto report = verify_resolution(o.n, o.jobs);
    Json candidates = Json::array();
    for (std::size_t i = 0; i < report.candidates.size(); ++i) {
        const auto& c = report.candidates[i];
        Json entry{{"index", i},
                   {"name", c.candidate.name},
                   {"printed", c.candidate.printed},
                   {"augmentation_kills_d1", c.augmentation_kills_d1},
                   {"d1_d2_zero", c.d1_d2_zero},
                   {"tensor_betti", c.tensor_betti},
                   {"passes", c.passes()}};
        entry["duplicate_of"] = c.duplicate_of ? Json(*c.duplicate_of) : Json(nullptr);
        candidates.push_back(std::move(entry));
    }
    const auto& sel = report.candidates[report.selected];
    out.result = Json{{"n", report.n},
                      {"candidates", candidates},
                      {"selected", report.selected},
                      {"selected_name", sel.candidate.name},
                      {"printed_passes", report.printed_passes},
                      {"d1", map_json(sel.candidate.d1)},
                      {"d2", map_json(sel.candidate.d2)},
                      {"tensor_homology", sel.tensor_betti},
                      {"left_inverse",
                       Json{{"found", report.left_inverse_found},
                            {"u", report.left_inverse_u.to_string()},
                            {"v", report.left_inverse_v.to_string()}}}};
    out.text_prefix = report.ledger();
    return out;
}

Outcome cmd_orbit_category(const Options& o) {
    Outcome out;
    const fs::path p = resolve_input(o.input, "groups");
    out.inputs.push_back(p);
    const OrbitCategory oc(group_from_json(read_json_file(p), o.max_group_order));
    const auto& g = oc.group();
    Json elements = Json::array();
    for (std::size_t i = 0; i < g.order(); ++i) elements.push_back(g.element(i));
    Json objects = Json::array();
    for (std::size_t i = 0; i < oc.object_count(); ++i)
        objects.push_back(Json{{"index", i}, {"order", oc.object(i).order()}, {"elements", oc.object(i).elements}});
    Json hom = Json::array();
    for (std::size_t i = 0; i < oc.object_count(); ++i)
        for (std::size_t j = 0; j < oc.object_count(); ++j)
            hom.push_back(Json{{"from", i}, {"to", j}, {"count", oc.hom(i, j).size()}, {"morphisms", oc.hom(i, j)}});
    out.result = Json{{"group_order", g.order()},
                      {"elements", elements},
                      {"objects", objects},
                      {"hom", hom},
                      {"composition_verified", oc.verify()}};
    return out;
}

// --- rendering --------------------------------------------------------------

bool is_scalar_array(const Json& j) {
    for (const auto& x : j)
        if (x.is_structured()) return false;
    return true;
}

void render(const Json& j, std::ostream& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_structured() && !(v.is_array() && is_scalar_array(v)) && !v.empty()) {
                out << pad << k << ":\n";
                render(v, out, indent + 2);
            } else {
                out << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_object()) {
                out << pad << "-\n";
                render(v, out, indent + 2);
            } else {
                out << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else {
        out << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact simplicial homology, group actions on complexes, and FH(Q) criteria", "acyc"};
    app.set_version_flag("--version", std::string(ACYC_VERSION));
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", o.json, "Emit the report as JSON");
    app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--max-group-order", o.max_group_order, "Largest group order accepted")->check(CLI::PositiveNumber);
    app.add_option("--max-cells", o.max_cells, "Size bound for the basic construction")->check(CLI::PositiveNumber);
    app.add_option("--ring", o.ring, "Coefficient ring")->check(CLI::IsMember({"Z", "Q"}));
    app.add_flag("--reduced", o.reduced, "Reduced homology");
    app.add_flag("--assert-simply-connected", o.assert_simply_connected,
                 "Declare the complex simply connected for the Bestvina-Brady report");

    struct Command {
        const char* name;
        const char* help;
        Outcome (*run)(const Options&);
    };
    const Command commands[] = {
        {"homology", "Homology of a complex", cmd_homology},
        {"check-fh", "FH(Q) verdict for a group action", cmd_check_fh},
        {"fixed-sets", "Fixed sets of every subgroup class", cmd_fixed_sets},
        {"basic-construction", "Glue the (Z/2)^V copies of a mirrored complex", cmd_basic_construction},
        {"bb-report", "Bestvina-Brady classification for a flag complex", cmd_bb_report},
        {"salvetti", "Homology of the Salvetti complex of a flag complex", cmd_salvetti},
        {"verify-resolution", "Check the free resolution of Q over Q[Z x Z/n]", cmd_verify_resolution},
        {"orbit-category", "Orbit category of a finite group", cmd_orbit_category},
    };
    std::vector<std::pair<CLI::App*, const Command*>> subs;
    for (const auto& c : commands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        if (std::string(c.name) == "verify-resolution")
            sub->add_option("n", o.n, "Order of the torsion factor")->required();
        else
            sub->add_option("input", o.input, "Input file or fixture name")->required();
        subs.emplace_back(sub, &c);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    const Command* chosen = nullptr;
    for (const auto& [sub, c] : subs)
        if (sub->parsed()) chosen = c;

    try {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome = chosen->run(o);
        const auto ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        Json inputs = Json::array();
        for (const auto& p : outcome.inputs) inputs.push_back(Json{{"path", p.generic_string()}, {"sha256", sha256_file(p)}});
        Json report{{"command", chosen->name},
                    {"result", outcome.result},
                    {"provenance", Json{{"inputs", inputs}, {"version", ACYC_VERSION}, {"timing_ms", ms}}}};
        if (o.json) {
            out << report.dump(2) << "\n";
        } else {
            out << outcome.text_prefix;
            render(report, out, 0);
        }
        return outcome.exit_code;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const Json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace acyc
