#include "acyc/simplicial.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

namespace acyc {

namespace {

const std::vector<Simplex> kNoSimplices;

struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<std::size_t> parent;
};

void close_under_faces(const Simplex& s, std::vector<std::set<Simplex>>& out) {
    const std::size_t d = s.size() - 1;
    if (out.size() <= d) out.resize(d + 1);
    if (!out[d].insert(s).second) return;
    if (s.size() == 1) return;
    for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex face;
        face.reserve(s.size() - 1);
        for (std::size_t j = 0; j < s.size(); ++j)
            if (j != i) face.push_back(s[j]);
        close_under_faces(face, out);
    }
}

// Restricts `c` to the labelled vertices in `keep` (ascending ids) and the
// given simplices, which must only mention kept vertices.
SimplicialComplex restrict_to(const SimplicialComplex& c, const std::vector<VertexId>& keep,
                              const std::vector<Simplex>& generators) {
    std::vector<std::string> labels;
    labels.reserve(keep.size());
    std::unordered_map<VertexId, VertexId> remap;
    for (VertexId v : keep) {
        remap.emplace(v, static_cast<VertexId>(labels.size()));
        labels.push_back(c.label(v));
    }
    std::vector<Simplex> gens;
    gens.reserve(generators.size());
    for (const auto& s : generators) {
        Simplex t;
        t.reserve(s.size());
        for (VertexId v : s) t.push_back(remap.at(v));
        gens.push_back(std::move(t));
    }
    return SimplicialComplex(std::move(labels), gens);
}

std::vector<std::vector<VertexId>> adjacency(const SimplicialComplex& c) {
    std::vector<std::vector<VertexId>> adj(c.vertex_count());
    for (const auto& e : c.simplices(1)) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

}  // namespace

void Graph::validate() const {
    std::set<std::string> names;
    for (const auto& v : vertices)
        if (!names.insert(v).second) throw ComplexError("graph: duplicate vertex '" + v + "'");
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& [a, b] : edges) {
        if (!names.count(a) || !names.count(b))
            throw ComplexError("graph: edge {" + a + "," + b + "} mentions an unlisted vertex");
        if (a == b) throw ComplexError("graph: loop at '" + a + "'");
        auto key = std::minmax(a, b);
        if (!seen.insert({key.first, key.second}).second)
            throw ComplexError("graph: repeated edge {" + a + "," + b + "}");
    }
}

SimplicialComplex::SimplicialComplex(std::vector<std::string> labels, const std::vector<Simplex>& generators) {
    const std::size_t n = labels.size();
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return labels[a] < labels[b]; });
    std::vector<VertexId> rank(n);
    labels_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        rank[order[i]] = static_cast<VertexId>(i);
        labels_.push_back(std::move(labels[order[i]]));
        if (i > 0 && labels_[i] == labels_[i - 1])
            throw ComplexError("duplicate vertex label '" + labels_[i] + "'");
    }

    std::vector<std::set<Simplex>> closed;
    for (VertexId v = 0; v < n; ++v) close_under_faces({v}, closed);
    for (const auto& g : generators) {
        if (g.empty()) throw ComplexError("empty simplex in generator list");
        Simplex s;
        s.reserve(g.size());
        for (VertexId v : g) {
            if (v >= n) throw ComplexError("simplex mentions vertex id out of range");
            s.push_back(rank[v]);
        }
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw ComplexError("simplex repeats a vertex");
        close_under_faces(s, closed);
    }
    by_dim_.reserve(closed.size());
    for (auto& level : closed) by_dim_.emplace_back(level.begin(), level.end());
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> vertices,
                                                 const std::vector<std::vector<std::string>>& facets) {
    std::unordered_map<std::string, VertexId> ids;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (!ids.emplace(vertices[i], static_cast<VertexId>(i)).second)
            throw ComplexError("duplicate vertex label '" + vertices[i] + "'");
    std::vector<Simplex> gens;
    gens.reserve(facets.size());
    for (std::size_t f = 0; f < facets.size(); ++f) {
        Simplex s;
        for (const auto& label : facets[f]) {
            auto it = ids.find(label);
            if (it == ids.end()) {
                std::string text = "[";
                for (std::size_t k = 0; k < facets[f].size(); ++k)
                    text += (k ? "," : "") + facets[f][k];
                throw ComplexError("facet " + std::to_string(f) + " " + text + "] mentions unknown vertex '" +
                                   label + "'");
            }
            s.push_back(it->second);
        }
        if (s.empty()) throw ComplexError("facet " + std::to_string(f) + " is empty");
        gens.push_back(std::move(s));
    }
    return SimplicialComplex(std::move(vertices), gens);
}

std::optional<VertexId> SimplicialComplex::find_vertex(std::string_view label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) return std::nullopt;
    return static_cast<VertexId>(it - labels_.begin());
}

const std::vector<Simplex>& SimplicialComplex::simplices(int dim) const {
    if (dim < 0 || dim >= static_cast<int>(by_dim_.size())) return kNoSimplices;
    return by_dim_[dim];
}

std::size_t SimplicialComplex::size() const {
    std::size_t total = 0;
    for (const auto& level : by_dim_) total += level.size();
    return total;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
    if (s.empty()) return std::nullopt;
    const auto& level = simplices(static_cast<int>(s.size()) - 1);
    auto it = std::lower_bound(level.begin(), level.end(), s);
    if (it == level.end() || *it != s) return std::nullopt;
    return static_cast<std::size_t>(it - level.begin());
}

bool SimplicialComplex::contains(const Simplex& s) const { return index_of(s).has_value(); }

std::vector<Simplex> SimplicialComplex::facets() const {
    std::vector<Simplex> out;
    for (int d = 0; d <= dimension(); ++d) {
        // A simplex is maximal iff no coface one dimension up contains it.
        std::set<Simplex> covered;
        for (const auto& up : simplices(d + 1))
            for (std::size_t i = 0; i < up.size(); ++i) {
                Simplex face;
                for (std::size_t j = 0; j < up.size(); ++j)
                    if (j != i) face.push_back(up[j]);
                covered.insert(std::move(face));
            }
        for (const auto& s : simplices(d))
            if (!covered.count(s)) out.push_back(s);
    }
    return out;
}

std::string SimplicialComplex::simplex_label(const Simplex& s) const {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += labels_.at(s[i]);
    }
    return out + "}";
}

std::vector<std::string> SimplicialComplex::simplex_labels(const Simplex& s) const {
    std::vector<std::string> out;
    out.reserve(s.size());
    for (VertexId v : s) out.push_back(labels_.at(v));
    return out;
}

Simplex SimplicialComplex::simplex_of(const std::vector<std::string>& labels) const {
    Simplex s;
    for (const auto& l : labels) {
        auto v = find_vertex(l);
        if (!v) throw ComplexError("unknown vertex '" + l + "'");
        s.push_back(*v);
    }
    std::sort(s.begin(), s.end());
    return s;
}

SimplicialComplex flag_complex(const Graph& g) {
    g.validate();
    std::unordered_map<std::string, VertexId> ids;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) ids.emplace(g.vertices[i], static_cast<VertexId>(i));
    std::vector<std::vector<VertexId>> adj(g.vertices.size());
    for (const auto& [a, b] : g.edges) {
        adj[ids[a]].push_back(ids[b]);
        adj[ids[b]].push_back(ids[a]);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());

    // Every clique is reached by appending vertices in increasing id order.
    std::vector<Simplex> cliques;
    std::vector<Simplex> frontier;
    for (VertexId v = 0; v < g.vertices.size(); ++v) frontier.push_back({v});
    while (!frontier.empty()) {
        std::vector<Simplex> next;
        for (const auto& s : frontier) {
            std::vector<VertexId> common = adj[s.front()];
            for (std::size_t i = 1; i < s.size(); ++i) {
                std::vector<VertexId> tmp;
                std::set_intersection(common.begin(), common.end(), adj[s[i]].begin(), adj[s[i]].end(),
                                      std::back_inserter(tmp));
                common = std::move(tmp);
            }
            for (VertexId w : common)
                if (w > s.back()) {
                    Simplex t = s;
                    t.push_back(w);
                    next.push_back(std::move(t));
                }
        }
        for (auto& s : frontier) cliques.push_back(std::move(s));
        frontier = std::move(next);
    }
    return SimplicialComplex(g.vertices, cliques);
}

Graph one_skeleton(const SimplicialComplex& c) {
    Graph g;
    g.vertices = c.vertices();
    for (const auto& e : c.simplices(1)) g.edges.emplace_back(c.label(e[0]), c.label(e[1]));
    return g;
}

bool is_flag(const SimplicialComplex& c) {
    // A minimal missing clique K is (K minus its largest vertex) plus that
    // vertex, so it suffices to test one-vertex extensions of simplices.
    const auto adj = adjacency(c);
    for (int d = 0; d <= c.dimension(); ++d)
        for (const auto& s : c.simplices(d)) {
            std::vector<VertexId> common = adj[s.front()];
            for (std::size_t i = 1; i < s.size() && !common.empty(); ++i) {
                std::vector<VertexId> tmp;
                std::set_intersection(common.begin(), common.end(), adj[s[i]].begin(), adj[s[i]].end(),
                                      std::back_inserter(tmp));
                common = std::move(tmp);
            }
            for (VertexId w : common) {
                if (w <= s.back()) continue;
                Simplex t = s;
                t.push_back(w);
                if (!c.contains(t)) return false;
            }
        }
    return true;
}

std::string barycenter_label(const SimplicialComplex& c, const Simplex& s) {
    return "b" + c.simplex_label(s);
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& c) {
    std::vector<std::string> labels;
    std::vector<std::size_t> offset(c.dimension() + 2, 0);
    for (int d = 0; d <= c.dimension(); ++d) {
        offset[d + 1] = offset[d] + c.count(d);
        for (const auto& s : c.simplices(d)) labels.push_back(barycenter_label(c, s));
    }
    auto id_of = [&](const Simplex& s) {
        return static_cast<VertexId>(offset[s.size() - 1] + *c.index_of(s));
    };

    // Maximal chains inside a facet correspond to orderings of its vertices.
    std::vector<Simplex> chains;
    for (const auto& facet : c.facets()) {
        Simplex order = facet;
        do {
            Simplex chain;
            Simplex prefix;
            for (VertexId v : order) {
                prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
                chain.push_back(id_of(prefix));
            }
            chains.push_back(std::move(chain));
        } while (std::next_permutation(order.begin(), order.end()));
    }
    return SimplicialComplex(std::move(labels), chains);
}

SimplicialComplex link(const SimplicialComplex& c, std::string_view vertex) {
    auto v = c.find_vertex(vertex);
    if (!v) throw ComplexError("link: unknown vertex '" + std::string(vertex) + "'");
    std::vector<Simplex> gens;
    std::set<VertexId> used;
    for (int d = 1; d <= c.dimension(); ++d)
        for (const auto& s : c.simplices(d)) {
            if (!std::binary_search(s.begin(), s.end(), *v)) continue;
            Simplex t;
            for (VertexId w : s)
                if (w != *v) {
                    t.push_back(w);
                    used.insert(w);
                }
            gens.push_back(std::move(t));
        }
    return restrict_to(c, {used.begin(), used.end()}, gens);
}

SimplicialComplex star(const SimplicialComplex& c, std::string_view vertex) {
    auto v = c.find_vertex(vertex);
    if (!v) throw ComplexError("star: unknown vertex '" + std::string(vertex) + "'");
    std::vector<Simplex> gens;
    std::set<VertexId> used{*v};
    for (int d = 1; d <= c.dimension(); ++d)
        for (const auto& s : c.simplices(d))
            if (std::binary_search(s.begin(), s.end(), *v)) {
                gens.push_back(s);
                used.insert(s.begin(), s.end());
            }
    return restrict_to(c, {used.begin(), used.end()}, gens);
}

bool join_needs_relabel(const SimplicialComplex& a, const SimplicialComplex& b) {
    for (const auto& l : a.vertices())
        if (b.find_vertex(l)) return true;
    return false;
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    const bool relabel = join_needs_relabel(a, b);
    std::vector<std::string> labels;
    for (const auto& l : a.vertices()) labels.push_back(relabel ? "a:" + l : l);
    for (const auto& l : b.vertices()) labels.push_back(relabel ? "b:" + l : l);
    const auto shift = static_cast<VertexId>(a.vertex_count());

    std::vector<Simplex> gens;
    const auto fa = a.facets();
    const auto fb = b.facets();
    if (fa.empty() || fb.empty()) {
        for (const auto& s : fa) gens.push_back(s);
        for (const auto& t : fb) {
            Simplex u;
            for (VertexId w : t) u.push_back(w + shift);
            gens.push_back(std::move(u));
        }
    } else {
        for (const auto& s : fa)
            for (const auto& t : fb) {
                Simplex u = s;
                for (VertexId w : t) u.push_back(w + shift);
                gens.push_back(std::move(u));
            }
    }
    return SimplicialComplex(std::move(labels), gens);
}

SimplicialComplex full_subcomplex(const SimplicialComplex& c, const std::vector<VertexId>& keep) {
    std::vector<VertexId> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<char> in(c.vertex_count(), 0);
    for (VertexId v : sorted) in.at(v) = 1;
    std::vector<Simplex> gens;
    for (int d = 1; d <= c.dimension(); ++d)
        for (const auto& s : c.simplices(d))
            if (std::all_of(s.begin(), s.end(), [&](VertexId v) { return in[v]; })) gens.push_back(s);
    return restrict_to(c, sorted, gens);
}

SimplicialComplex subcomplex(const SimplicialComplex& c, const std::vector<Simplex>& generators) {
    std::set<VertexId> used;
    for (const auto& s : generators) {
        if (!c.contains(s)) throw ComplexError("subcomplex: generator is not a simplex of the complex");
        used.insert(s.begin(), s.end());
    }
    return restrict_to(c, {used.begin(), used.end()}, generators);
}

bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& c) {
    std::vector<VertexId> map(sub.vertex_count());
    for (VertexId v = 0; v < sub.vertex_count(); ++v) {
        auto w = c.find_vertex(sub.label(v));
        if (!w) return false;
        map[v] = *w;
    }
    for (int d = 1; d <= sub.dimension(); ++d)
        for (const auto& s : sub.simplices(d))
            if (!c.contains(image(s, map))) return false;
    return true;
}

std::vector<SimplicialComplex> connected_components(const SimplicialComplex& c) {
    UnionFind uf(c.vertex_count());
    for (const auto& e : c.simplices(1)) uf.unite(e[0], e[1]);
    // Union-find roots are the smallest id of each class, and ids follow
    // label order, so iterating roots in id order gives the required order.
    std::vector<std::vector<VertexId>> groups;
    std::vector<std::size_t> slot(c.vertex_count(), SIZE_MAX);
    for (VertexId v = 0; v < c.vertex_count(); ++v) {
        const auto r = uf.find(v);
        if (slot[r] == SIZE_MAX) {
            slot[r] = groups.size();
            groups.emplace_back();
        }
        groups[slot[r]].push_back(v);
    }
    std::vector<SimplicialComplex> out;
    out.reserve(groups.size());
    for (const auto& g : groups) out.push_back(full_subcomplex(c, g));
    return out;
}

long long euler_characteristic(const SimplicialComplex& c) {
    long long chi = 0;
    for (int d = 0; d <= c.dimension(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(c.count(d));
    return chi;
}

bool is_pseudomanifold(const SimplicialComplex& c, int d) {
    if (d < 0 || c.dimension() != d) return false;
    for (const auto& f : c.facets())
        if (static_cast<int>(f.size()) != d + 1) return false;
    const auto& tops = c.simplices(d);
    if (d == 0) return tops.size() == 2;

    std::vector<std::vector<std::size_t>> cofaces(c.count(d - 1));
    for (std::size_t i = 0; i < tops.size(); ++i)
        for (std::size_t k = 0; k < tops[i].size(); ++k) {
            Simplex face;
            for (std::size_t j = 0; j < tops[i].size(); ++j)
                if (j != k) face.push_back(tops[i][j]);
            cofaces[*c.index_of(face)].push_back(i);
        }
    UnionFind uf(tops.size());
    for (const auto& cf : cofaces) {
        if (cf.size() != 2) return false;
        uf.unite(cf[0], cf[1]);
    }
    for (std::size_t i = 0; i < tops.size(); ++i)
        if (uf.find(i) != 0) return false;
    return true;
}

Simplex image(const Simplex& s, const std::vector<VertexId>& vertex_map) {
    Simplex t;
    t.reserve(s.size());
    for (VertexId v : s) t.push_back(vertex_map.at(v));
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    return t;
}

}  // namespace acyc
