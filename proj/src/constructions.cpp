#include "acyc/constructions.hpp"

#include "acyc/parallel.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace acyc {

namespace {

std::string mask_bits(std::uint64_t mask, std::size_t width) {
    std::string out(width, '0');
    for (std::size_t i = 0; i < width; ++i)
        if (mask >> i & 1) out[i] = '1';
    return out;
}

std::uint64_t copy_count_for(std::size_t mirrors) {
    if (mirrors >= 63) throw ConstructionError("too many mirrors for a (Z/2)^V quotient");
    return std::uint64_t{1} << mirrors;
}

}  // namespace

std::map<std::string, SimplicialComplex> mirrors(const SimplicialComplex& l) {
    if (!is_flag(l)) throw ConstructionError("mirrors need a flag complex");
    const SimplicialComplex sd = barycentric_subdivision(l);
    std::map<std::string, SimplicialComplex> out;
    for (VertexId v = 0; v < l.vertex_count(); ++v)
        out.emplace(l.label(v), star(sd, barycenter_label(l, {v})));
    return out;
}

MirroredComplex make_mirrored(SimplicialComplex space, SimplicialComplex boundary) {
    if (boundary.empty()) throw ConstructionError("boundary subcomplex is empty");
    if (!is_subcomplex(boundary, space)) throw ConstructionError("boundary is not a subcomplex of the space");
    MirroredComplex m;
    m.mirror_map = mirrors(boundary);
    m.subdivided = barycentric_subdivision(space);
    for (const auto& [label, d] : m.mirror_map) {
        std::vector<VertexId> ids;
        for (const auto& w : d.vertices()) ids.push_back(*m.subdivided.find_vertex(w));
        if (full_subcomplex(m.subdivided, ids).size() != d.size())
            throw ConstructionError("mirror of " + label + " is not a full subcomplex");
    }
    m.space = std::move(space);
    m.boundary = std::move(boundary);
    return m;
}

BasicConstructionResult basic_construction(const MirroredComplex& n, std::size_t max_cells, int jobs) {
    const SimplicialComplex& sd = n.subdivided;
    const std::size_t k = n.boundary.vertex_count();
    const std::uint64_t copies = copy_count_for(k);
    if (sd.size() > max_cells / copies)
        throw ConstructionError("basic construction needs " + std::to_string(copies) + " copies of " +
                                std::to_string(sd.size()) + " simplices, over the bound of " +
                                std::to_string(max_cells));

    BasicConstructionResult r;
    r.copy_count = copies;
    r.mirror_labels = n.boundary.vertices();

    r.vertex_support.assign(sd.vertex_count(), 0);
    for (std::size_t i = 0; i < k; ++i)
        for (const auto& w : n.mirror_map.at(r.mirror_labels[i]).vertices())
            r.vertex_support[*sd.find_vertex(w)] |= std::uint64_t{1} << i;

    const std::uint64_t all = copies - 1;
    for (int d = 0; d <= sd.dimension(); ++d)
        for (const auto& s : sd.simplices(d)) {
            std::uint64_t support = all;
            for (VertexId w : s) support &= r.vertex_support[w];
            const auto size = static_cast<std::size_t>(std::popcount(support));
            ++r.support_census[{d, size}];
            const long long copies_of = static_cast<long long>(std::uint64_t{1} << (k - size));
            r.chi_by_formula += d % 2 == 0 ? copies_of : -copies_of;
        }

    // Union-find over vertex copies (w, g); roots are the least copy index.
    const std::size_t nv = sd.vertex_count();
    std::vector<std::size_t> parent(nv * copies);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (VertexId w = 0; w < nv; ++w)
        for (std::uint64_t g = 0; g < copies; ++g)
            for (std::size_t i = 0; i < k; ++i)
                if (r.vertex_support[w] >> i & 1) {
                    const auto a = find(w * copies + g);
                    const auto b = find(w * copies + (g ^ (std::uint64_t{1} << i)));
                    if (a != b) parent[std::max(a, b)] = std::min(a, b);
                }

    std::vector<std::string> labels;
    std::vector<std::size_t> glued_id(parent.size(), SIZE_MAX);
    std::map<std::string, std::pair<VertexId, std::uint64_t>> origin_of;
    for (std::size_t x = 0; x < parent.size(); ++x) {
        const auto root = find(x);
        if (glued_id[root] == SIZE_MAX) {
            const VertexId w = static_cast<VertexId>(root / copies);
            const std::uint64_t g = root % copies;
            glued_id[root] = labels.size();
            labels.push_back(sd.label(w) + "@" + mask_bits(g, k));
            origin_of.emplace(labels.back(), std::pair{w, g});
        }
        glued_id[x] = glued_id[root];
    }

    const auto facets = sd.facets();
    std::vector<std::vector<Simplex>> per_copy(copies);
    parallel_for(copies, jobs, [&](std::size_t g) {
        for (const auto& f : facets) {
            Simplex s;
            for (VertexId w : f) s.push_back(static_cast<VertexId>(glued_id[w * copies + g]));
            per_copy[g].push_back(std::move(s));
        }
    });
    std::vector<Simplex> generators;
    for (auto& list : per_copy)
        for (auto& s : list) generators.push_back(std::move(s));
    r.complex = SimplicialComplex(std::move(labels), generators);
    r.chi_direct = euler_characteristic(r.complex);
    for (const auto& label : r.complex.vertices()) r.origin.push_back(origin_of.at(label));
    return r;
}

GroupAction copy_action(const BasicConstructionResult& r) {
    const std::size_t k = r.mirror_labels.size();
    std::map<std::pair<VertexId, std::uint64_t>, VertexId> id_of;
    for (VertexId v = 0; v < r.origin.size(); ++v) id_of.emplace(r.origin[v], v);
    std::vector<GeneratorSpec> specs;
    for (std::size_t i = 0; i < k; ++i) {
        GeneratorSpec spec{r.mirror_labels[i], {}, Permutation(r.origin.size())};
        for (VertexId v = 0; v < r.origin.size(); ++v) {
            const auto [w, g] = r.origin[v];
            const std::uint64_t target = (g ^ (std::uint64_t{1} << i)) & ~r.vertex_support[w];
            spec.vertices[v] = id_of.at({w, target});
        }
        specs.push_back(std::move(spec));
    }
    return GroupAction::from_generators(r.complex, specs, std::max<std::size_t>(r.copy_count, kDefaultMaxGroupOrder));
}

QuotientChoice quotient_group_choice(const SimplicialComplex& l) {
    QuotientChoice q;
    q.index = copy_count_for(l.vertex_count());
    q.description =
        "G' = kernel of the map from the right-angled Coxeter group W_L onto (Z/2)^V sending each generator to its "
        "basis vector; the glued complex is the quotient by G'";
    return q;
}

HomologyProfile salvetti_homology(const SimplicialComplex& l) {
    if (!is_flag(l)) throw ConstructionError("Salvetti complex needs a flag complex");
    // Cell of degree k <-> (k-1)-simplex of L, with the empty simplex in degree 0.
    const int top = l.dimension() + 1;
    std::vector<std::size_t> ranks;
    for (int k = 0; k <= top; ++k) ranks.push_back(k == 0 ? 1 : l.count(k - 1));
    std::vector<IntegerMatrix> boundary{IntegerMatrix(0, ranks[0])};
    for (int k = 1; k <= top; ++k) {
        IntegerMatrix m(ranks[k - 1], ranks[k]);
        const auto& cells = l.simplices(k - 1);
        for (std::size_t c = 0; c < cells.size(); ++c)
            for (std::size_t i = 0; i < cells[c].size(); ++i) {
                // The two faces of the cube orthogonal to direction i are both
                // the torus of the face sigma - v_i.
                Simplex face = cells[c];
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
                const std::size_t row = face.empty() ? 0 : *l.index_of(face);
                const long sign = i % 2 == 0 ? 1 : -1;
                m.add(row, c, sign);
                m.add(row, c, -sign);
            }
        boundary.push_back(std::move(m));
    }
    return homology_of_chains(ranks, boundary, false);
}

BBReport bb_report(const SimplicialComplex& l, bool asserts_simply_connected, int jobs) {
    if (l.empty()) throw ConstructionError("Bestvina-Brady report needs a nonempty complex");
    BBReport r;
    r.flag = is_flag(l);
    if (!r.flag) throw ConstructionError("Bestvina-Brady report needs a flag complex");
    r.user_asserted_simply_connected = asserts_simply_connected;
    r.homology_z = homology(l, true, jobs);
    r.homology_q = r.homology_z;
    for (auto& d : r.homology_q.degrees) d.torsion.clear();
    r.z_acyclic = r.homology_z.vanishes(Ring::Z);
    r.q_acyclic = r.homology_q.vanishes(Ring::Q);

    if (r.z_acyclic) r.lines.push_back({"fh_z", "L is Z-acyclic, so the kernel is FH(Z)"});
    if (r.q_acyclic) r.lines.push_back({"fh_q", "L is Q-acyclic, so the kernel is FH(Q)"});
    if (asserts_simply_connected)
        r.lines.push_back({"finitely_presented", "L is asserted simply connected, so the kernel is finitely presented"});
    if (!r.z_acyclic) r.lines.push_back({"not_fp_z", "L is not Z-acyclic, so the kernel is not FP(Z)"});
    if (!r.q_acyclic) r.lines.push_back({"not_fp_q", "L is not Q-acyclic, so the kernel is not FP(Q)"});

    if (asserts_simply_connected && l.dimension() >= 1 &&
        (r.homology_z.betti(1) != 0 || !r.homology_z.torsion(1).empty()))
        r.warnings.push_back("H_1(L; Z) is nonzero, which contradicts the simple-connectivity assertion");
    return r;
}

GroupAction equivariant_join(const GroupAction& a, const GroupAction& b) {
    const bool a_trivial = a.group().order() == 1;
    const bool b_trivial = b.group().order() == 1;
    const auto& ga = a.group().generators();
    const auto& gb = b.group().generators();
    if (!a_trivial && !b_trivial && ga.size() != gb.size())
        throw ConstructionError("group mismatch: the actions have different numbers of generators");

    const SimplicialComplex j = join(a.complex(), b.complex());
    const bool relabel = join_needs_relabel(a.complex(), b.complex());
    auto ids = [&](const SimplicialComplex& c, const std::string& prefix) {
        std::vector<VertexId> out;
        for (const auto& l : c.vertices()) out.push_back(*j.find_vertex(relabel ? prefix + l : l));
        return out;
    };
    const auto ida = ids(a.complex(), "a:");
    const auto idb = ids(b.complex(), "b:");

    const std::size_t count = std::max(a_trivial ? 0 : ga.size(), b_trivial ? 0 : gb.size());
    std::vector<GeneratorSpec> specs;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t ea = a_trivial ? a.group().identity() : ga[i];
        const std::size_t eb = b_trivial ? b.group().identity() : gb[i];
        GeneratorSpec spec;
        spec.name = i < a.generator_names().size() ? a.generator_names()[i]
                    : i < b.generator_names().size() ? b.generator_names()[i]
                                                      : "g" + std::to_string(i);
        spec.abstract = a.group().element(ea);
        for (auto x : b.group().element(eb)) spec.abstract.push_back(static_cast<std::uint32_t>(x + a.group().degree()));
        spec.vertices = Permutation(j.vertex_count());
        for (VertexId v = 0; v < ida.size(); ++v) spec.vertices[ida[v]] = ida[a.vertex_map(ea)[v]];
        for (VertexId v = 0; v < idb.size(); ++v) spec.vertices[idb[v]] = idb[b.vertex_map(eb)[v]];
        specs.push_back(std::move(spec));
    }
    GroupAction out = GroupAction::from_generators(j, specs);
    const std::size_t expect = std::max(a.group().order(), b.group().order());
    if (out.group().order() != expect || (!a_trivial && !b_trivial && a.group().order() != b.group().order()))
        throw ConstructionError("group mismatch: paired generators do not define the same group");
    return out;
}

}  // namespace acyc
