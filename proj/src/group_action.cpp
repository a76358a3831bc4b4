#include "acyc/group_action.hpp"

#include "acyc/parallel.hpp"

#include <algorithm>

namespace acyc {

GroupAction::GroupAction(FiniteGroup group, SimplicialComplex complex, std::vector<Permutation> vertex_action,
                         std::vector<std::string> generator_names)
    : group_(std::move(group)),
      complex_(std::move(complex)),
      vertex_action_(std::move(vertex_action)),
      generator_names_(std::move(generator_names)) {
    const std::size_t n = complex_.vertex_count();
    if (vertex_action_.size() != group_.order())
        throw ActionError("action lists " + std::to_string(vertex_action_.size()) + " vertex maps for a group of order " +
                          std::to_string(group_.order()));
    for (std::size_t g = 0; g < vertex_action_.size(); ++g) {
        const auto& p = vertex_action_[g];
        if (p.size() != n || !is_bijection(p))
            throw ActionError("element " + std::to_string(g) + " does not permute the vertices");
        for (int d = 1; d <= complex_.dimension(); ++d)
            for (const auto& s : complex_.simplices(d))
                if (!complex_.contains(image(s, p)))
                    throw ActionError("element " + std::to_string(g) + " sends " + complex_.simplex_label(s) +
                                      " to a non-simplex");
    }
    if (vertex_action_[group_.identity()] != identity_permutation(n))
        throw ActionError("identity element acts nontrivially");
    for (std::size_t a = 0; a < group_.order(); ++a)
        for (std::size_t b = 0; b < group_.order(); ++b)
            if (vertex_action_[group_.multiply(a, b)] != compose(vertex_action_[a], vertex_action_[b]))
                throw ActionError("vertex action is not a homomorphism");
}

GroupAction GroupAction::from_generators(SimplicialComplex complex, const std::vector<GeneratorSpec>& generators,
                                         std::size_t max_order) {
    const std::size_t n = complex.vertex_count();
    std::size_t letters = 0;
    for (const auto& g : generators) letters = std::max(letters, g.abstract.size());

    std::vector<Permutation> combined;
    std::vector<std::string> names;
    for (const auto& g : generators) {
        if (!is_bijection(g.abstract)) throw ActionError("generator '" + g.name + "': abstract part is not a permutation");
        if (g.vertices.size() != n || !is_bijection(g.vertices))
            throw ActionError("generator '" + g.name + "' is not a bijection of the vertex set");
        Permutation p = g.abstract;
        for (std::size_t i = g.abstract.size(); i < letters; ++i) p.push_back(static_cast<std::uint32_t>(i));
        for (auto v : g.vertices) p.push_back(static_cast<std::uint32_t>(v + letters));
        combined.push_back(std::move(p));
        names.push_back(g.name);
    }
    if (combined.empty()) combined.push_back(identity_permutation(letters + n));
    FiniteGroup group = group_closure(combined, max_order);
    std::vector<Permutation> action;
    action.reserve(group.order());
    for (const auto& e : group.elements()) {
        Permutation p;
        p.reserve(n);
        for (std::size_t i = letters; i < e.size(); ++i) p.push_back(static_cast<std::uint32_t>(e[i] - letters));
        action.push_back(std::move(p));
    }
    return GroupAction(std::move(group), std::move(complex), std::move(action), std::move(names));
}

GroupAction GroupAction::trivial(FiniteGroup group, SimplicialComplex complex) {
    std::vector<Permutation> action(group.order(), identity_permutation(complex.vertex_count()));
    return GroupAction(std::move(group), std::move(complex), std::move(action));
}

GroupAction subdivide(const GroupAction& a) {
    const auto& c = a.complex();
    SimplicialComplex sd = barycentric_subdivision(c);
    // new_id[d][i] = vertex id in sd of the i-th d-simplex of c.
    std::vector<std::vector<VertexId>> new_id(c.dimension() + 1);
    for (int d = 0; d <= c.dimension(); ++d)
        for (const auto& s : c.simplices(d)) new_id[d].push_back(*sd.find_vertex(barycenter_label(c, s)));

    std::vector<Permutation> action(a.group().order(), Permutation(sd.vertex_count()));
    for (std::size_t g = 0; g < a.group().order(); ++g)
        for (int d = 0; d <= c.dimension(); ++d) {
            const auto& level = c.simplices(d);
            for (std::size_t i = 0; i < level.size(); ++i)
                action[g][new_id[d][i]] = new_id[d][*c.index_of(a.act(g, level[i]))];
        }
    return GroupAction(a.group(), std::move(sd), std::move(action), a.generator_names());
}

bool is_regular(const GroupAction& a) {
    const auto& c = a.complex();
    for (std::size_t g = 1; g < a.group().order(); ++g) {
        const auto& p = a.vertex_map(g);
        for (int d = 1; d <= c.dimension(); ++d)
            for (const auto& s : c.simplices(d)) {
                bool moved = false;
                for (VertexId v : s) moved = moved || p[v] != v;
                if (moved && a.act(g, s) == s) return false;
            }
    }
    return true;
}

GroupAction regularize(const GroupAction& a) { return subdivide(subdivide(a)); }

GroupAction ensure_regular(const GroupAction& a) { return is_regular(a) ? a : regularize(a); }

std::vector<VertexId> fixed_vertices(const GroupAction& a, const Subgroup& h) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < a.complex().vertex_count(); ++v) {
        bool fixed = true;
        for (auto g : h.elements) fixed = fixed && a.vertex_map(g)[v] == v;
        if (fixed) out.push_back(v);
    }
    return out;
}

SimplicialComplex fixed_vertex_subcomplex(const GroupAction& a, const Subgroup& h) {
    return full_subcomplex(a.complex(), fixed_vertices(a, h));
}

SimplicialComplex fixed_subcomplex(const GroupAction& a, const Subgroup& h) {
    if (is_regular(a)) return fixed_vertex_subcomplex(a, h);
    return fixed_vertex_subcomplex(regularize(a), h);
}

FixedSetTable fixed_components_euler(const GroupAction& a, bool include_trivial, int jobs) {
    const GroupAction r = ensure_regular(a);
    FixedSetTable table;
    table.classes = enumerate_subgroups(r.group(), true);
    std::vector<std::vector<FixedSetRow>> per_class(table.classes.size());
    parallel_for(table.classes.size(), jobs, [&](std::size_t i) {
        const auto& h = table.classes[i];
        if (h.trivial() && !include_trivial) return;
        auto comps = connected_components(fixed_vertex_subcomplex(r, h));
        for (std::size_t k = 0; k < comps.size(); ++k) {
            const long long chi = euler_characteristic(comps[k]);
            per_class[i].push_back(FixedSetRow{h, i, k, std::move(comps[k]), chi});
        }
    });
    for (auto& rows : per_class)
        for (auto& row : rows) table.rows.push_back(std::move(row));
    return table;
}

}  // namespace acyc
