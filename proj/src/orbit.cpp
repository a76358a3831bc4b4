#include "acyc/orbit.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace acyc {

namespace {

struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<std::size_t> parent;
};

std::size_t position(const std::vector<std::size_t>& sorted, std::size_t value) {
    return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), value) - sorted.begin());
}

}  // namespace

OrbitCategory::OrbitCategory(FiniteGroup group)
    : group_(std::move(group)), objects_(enumerate_subgroups(group_, true)) {
    const std::size_t n = group_.order();
    for (const auto& k : objects_) {
        std::vector<std::size_t> rep(n);
        std::set<std::size_t> reps;
        for (std::size_t g = 0; g < n; ++g) {
            std::size_t best = n;
            for (auto e : k.elements) best = std::min(best, group_.multiply(g, e));
            rep[g] = best;
            reps.insert(best);
        }
        coset_rep_.push_back(std::move(rep));
        cosets_.emplace_back(reps.begin(), reps.end());
    }
    const std::size_t m = objects_.size();
    hom_.resize(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (auto g : cosets_[j]) {
                const std::size_t gi = group_.inverse_of(g);
                bool ok = true;
                for (auto h : objects_[i].elements)
                    ok = ok && objects_[j].contains(group_.multiply(group_.multiply(gi, h), g));
                if (ok) hom_[i * m + j].push_back(g);
            }
}

std::size_t OrbitCategory::compose(std::size_t, std::size_t, std::size_t k, std::size_t f, std::size_t f2) const {
    return coset_rep(group_.multiply(f, f2), k);
}

bool OrbitCategory::verify() const {
    const std::size_t m = objects_.size();
    auto in_hom = [&](std::size_t i, std::size_t j, std::size_t f) {
        const auto& h = hom(i, j);
        return std::binary_search(h.begin(), h.end(), f);
    };
    for (std::size_t i = 0; i < m; ++i) {
        if (!in_hom(i, i, identity(i))) return false;
        for (std::size_t j = 0; j < m; ++j)
            for (auto f : hom(i, j)) {
                if (compose(i, i, j, identity(i), f) != f) return false;
                if (compose(i, j, j, f, identity(j)) != f) return false;
                for (std::size_t k = 0; k < m; ++k)
                    for (auto f2 : hom(j, k)) {
                        const std::size_t fg = compose(i, j, k, f, f2);
                        if (!in_hom(i, k, fg)) return false;
                        for (std::size_t l = 0; l < m; ++l)
                            for (auto f3 : hom(k, l))
                                if (compose(i, k, l, fg, f3) != compose(i, j, l, f, compose(j, k, l, f2, f3)))
                                    return false;
                    }
            }
    }
    return true;
}

// --- G-sets -----------------------------------------------------------------

GSet GSet::cosets(const FiniteGroup& g, const Subgroup& h) {
    std::vector<std::size_t> rep(g.order());
    std::set<std::size_t> reps;
    for (std::size_t x = 0; x < g.order(); ++x) {
        std::size_t best = g.order();
        for (auto e : h.elements) best = std::min(best, g.multiply(x, e));
        rep[x] = best;
        reps.insert(best);
    }
    const std::vector<std::size_t> list(reps.begin(), reps.end());
    GSet s;
    s.size = list.size();
    s.action.assign(g.order(), std::vector<std::uint32_t>(s.size));
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t i = 0; i < list.size(); ++i)
            s.action[a][i] = static_cast<std::uint32_t>(position(list, rep[g.multiply(a, list[i])]));
    return s;
}

GSet GSet::disjoint_union(const GSet& a, const GSet& b) {
    if (a.action.size() != b.action.size()) throw DiagramError("disjoint union of G-sets over different groups");
    GSet s;
    s.size = a.size + b.size;
    s.action.resize(a.action.size());
    for (std::size_t g = 0; g < a.action.size(); ++g) {
        s.action[g] = a.action[g];
        for (auto x : b.action[g]) s.action[g].push_back(static_cast<std::uint32_t>(x + a.size));
    }
    return s;
}

void GSet::validate(const FiniteGroup& g) const {
    if (action.size() != g.order()) throw DiagramError("G-set table has the wrong number of elements");
    for (const auto& row : action)
        if (row.size() != size || !is_bijection(row)) throw DiagramError("G-set element does not act bijectively");
    for (std::size_t x = 0; x < size; ++x)
        if (action[g.identity()][x] != x) throw DiagramError("identity acts nontrivially on the G-set");
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = 0; b < g.order(); ++b)
            for (std::size_t x = 0; x < size; ++x)
                if (action[g.multiply(a, b)][x] != action[a][action[b][x]])
                    throw DiagramError("G-set table is not an action");
}

std::vector<std::uint32_t> GSet::fixed_points(const Subgroup& h) const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t x = 0; x < size; ++x) {
        bool fixed = true;
        for (auto e : h.elements) fixed = fixed && action[e][x] == x;
        if (fixed) out.push_back(x);
    }
    return out;
}

std::vector<std::size_t> GSet::orbit_sizes() const {
    UnionFind uf(size);
    for (const auto& row : action)
        for (std::size_t x = 0; x < size; ++x) uf.unite(x, row[x]);
    std::map<std::size_t, std::size_t> counts;
    for (std::size_t x = 0; x < size; ++x) ++counts[uf.find(x)];
    std::vector<std::size_t> out;
    for (const auto& [root, n] : counts) out.push_back(n);
    std::sort(out.begin(), out.end());
    return out;
}

bool isomorphic(const FiniteGroup& g, const GSet& s, const GSet& t) {
    if (s.size != t.size) return false;
    for (const auto& h : enumerate_subgroups(g, true))
        if (s.fixed_points(h).size() != t.fixed_points(h).size()) return false;
    return true;
}

// --- diagrams ---------------------------------------------------------------

OrbitDiagramOfSets fixed_point_diagram(const OrbitCategory& oc, const GSet& s,
                                       std::vector<std::vector<std::uint32_t>>* points) {
    s.validate(oc.group());
    const std::size_t m = oc.object_count();
    std::vector<std::vector<std::uint32_t>> fixed(m);
    OrbitDiagramOfSets x;
    for (std::size_t i = 0; i < m; ++i) {
        fixed[i] = s.fixed_points(oc.object(i));
        x.sizes.push_back(fixed[i].size());
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (auto f : oc.hom(i, j)) {
                std::vector<std::uint32_t> map;
                for (auto p : fixed[j]) {
                    const auto q = s.action[f][p];
                    auto it = std::lower_bound(fixed[i].begin(), fixed[i].end(), q);
                    if (it == fixed[i].end() || *it != q) throw DiagramError("restriction leaves the fixed set");
                    map.push_back(static_cast<std::uint32_t>(it - fixed[i].begin()));
                }
                x.maps.emplace(MorphismKey{i, j, f}, std::move(map));
            }
    if (points) *points = std::move(fixed);
    return x;
}

CovariantOrbitDiagram nabla(const OrbitCategory& oc) {
    const auto& g = oc.group();
    const std::size_t m = oc.object_count();
    CovariantOrbitDiagram y;
    for (std::size_t i = 0; i < m; ++i) y.values.push_back(GSet::cosets(g, oc.object(i)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (auto f : oc.hom(i, j)) {
                std::vector<std::uint32_t> map;
                for (auto x : oc.cosets(i))
                    map.push_back(static_cast<std::uint32_t>(
                        position(oc.cosets(j), oc.coset_rep(g.multiply(x, f), j))));
                y.maps.emplace(MorphismKey{i, j, f}, std::move(map));
            }
    return y;
}

namespace {

const std::vector<std::uint32_t>& lookup(const std::map<MorphismKey, std::vector<std::uint32_t>>& maps,
                                         std::size_t i, std::size_t j, std::size_t f) {
    auto it = maps.find({i, j, f});
    if (it == maps.end()) throw DiagramError("diagram is missing the map for a morphism");
    return it->second;
}

}  // namespace

void check_functorial(const OrbitCategory& oc, const OrbitDiagramOfSets& x) {
    const std::size_t m = oc.object_count();
    if (x.sizes.size() != m) throw DiagramError("diagram has the wrong number of objects");
    for (std::size_t i = 0; i < m; ++i) {
        const auto& id = lookup(x.maps, i, i, oc.identity(i));
        for (std::size_t p = 0; p < x.sizes[i]; ++p)
            if (id.at(p) != p) throw DiagramError("identity morphism does not act as the identity");
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (auto f : oc.hom(i, j)) {
                const auto& xf = lookup(x.maps, i, j, f);
                if (xf.size() != x.sizes[j]) throw DiagramError("map has the wrong domain");
                for (auto v : xf)
                    if (v >= x.sizes[i]) throw DiagramError("map leaves its codomain");
                for (std::size_t k = 0; k < m; ++k)
                    for (auto f2 : oc.hom(j, k)) {
                        const auto& xf2 = lookup(x.maps, j, k, f2);
                        const auto& xc = lookup(x.maps, i, k, oc.compose(i, j, k, f, f2));
                        for (std::size_t p = 0; p < x.sizes[k]; ++p)
                            if (xc[p] != xf[xf2[p]]) throw DiagramError("contravariant diagram is not functorial");
                    }
            }
}

void check_functorial(const OrbitCategory& oc, const CovariantOrbitDiagram& y) {
    const auto& g = oc.group();
    const std::size_t m = oc.object_count();
    if (y.values.size() != m) throw DiagramError("diagram has the wrong number of objects");
    for (const auto& v : y.values) v.validate(g);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& id = lookup(y.maps, i, i, oc.identity(i));
        for (std::size_t p = 0; p < y.values[i].size; ++p)
            if (id.at(p) != p) throw DiagramError("identity morphism does not act as the identity");
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (auto f : oc.hom(i, j)) {
                const auto& yf = lookup(y.maps, i, j, f);
                if (yf.size() != y.values[i].size) throw DiagramError("map has the wrong domain");
                for (std::size_t a = 0; a < g.order(); ++a)
                    for (std::size_t p = 0; p < yf.size(); ++p)
                        if (yf[y.values[i].action[a][p]] != y.values[j].action[a][yf[p]])
                            throw DiagramError("covariant diagram map is not equivariant");
                for (std::size_t k = 0; k < m; ++k)
                    for (auto f2 : oc.hom(j, k)) {
                        const auto& yf2 = lookup(y.maps, j, k, f2);
                        const auto& yc = lookup(y.maps, i, k, oc.compose(i, j, k, f, f2));
                        for (std::size_t p = 0; p < yf.size(); ++p)
                            if (yc[p] != yf2[yf[p]]) throw DiagramError("covariant diagram is not functorial");
                    }
            }
}

GSet balanced_product_sets(const OrbitCategory& oc, const OrbitDiagramOfSets& x, const CovariantOrbitDiagram& y) {
    check_functorial(oc, x);
    check_functorial(oc, y);
    const std::size_t m = oc.object_count();
    std::vector<std::size_t> offset(m + 1, 0);
    for (std::size_t i = 0; i < m; ++i) offset[i + 1] = offset[i] + x.sizes[i] * y.values[i].size;
    auto id = [&](std::size_t i, std::size_t p, std::size_t q) { return offset[i] + p * y.values[i].size + q; };

    UnionFind uf(offset[m]);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (auto f : oc.hom(i, j)) {
                const auto& xf = lookup(x.maps, i, j, f);
                const auto& yf = lookup(y.maps, i, j, f);
                for (std::size_t p = 0; p < x.sizes[j]; ++p)
                    for (std::size_t q = 0; q < y.values[i].size; ++q) uf.unite(id(i, xf[p], q), id(j, p, yf[q]));
            }

    std::vector<std::size_t> cls(offset[m], SIZE_MAX);
    std::size_t count = 0;
    for (std::size_t e = 0; e < offset[m]; ++e) {
        const auto r = uf.find(e);
        if (cls[r] == SIZE_MAX) cls[r] = count++;
        cls[e] = cls[r];
    }

    const auto& g = oc.group();
    GSet out;
    out.size = count;
    out.action.assign(g.order(), std::vector<std::uint32_t>(count, UINT32_MAX));
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t p = 0; p < x.sizes[i]; ++p)
                for (std::size_t q = 0; q < y.values[i].size; ++q) {
                    const auto from = cls[id(i, p, q)];
                    const auto to = static_cast<std::uint32_t>(cls[id(i, p, y.values[i].action[a][q])]);
                    if (out.action[a][from] == UINT32_MAX)
                        out.action[a][from] = to;
                    else if (out.action[a][from] != to)
                        throw DiagramError("G-action does not descend to the balanced product");
                }
    out.validate(g);
    return out;
}

// --- obstruction ------------------------------------------------------------

bool WallVector::vanishes_off_trivial() const {
    for (std::size_t i = 0; i < objects.size(); ++i)
        if (!objects[i].subgroup.trivial() && coefficients[i] != 0) return false;
    return true;
}

bool WallVector::is_zero() const {
    return std::all_of(coefficients.begin(), coefficients.end(), [](long long c) { return c == 0; });
}

WallVector wall_vector(const GroupAction& a, int jobs) {
    const auto table = fixed_components_euler(a, true, jobs);
    WallVector w;
    for (const auto& row : table.rows) {
        w.objects.push_back(ComponentObject{row.class_index, row.subgroup, row.component});
        w.coefficients.push_back(row.chi);
    }
    return w;
}

OrbitModuleClass classifying_space_class(const FiniteGroup& g) {
    OrbitModuleClass b;
    b.objects = enumerate_subgroups(g, true);
    b.degree.assign(b.objects.size(), 0);
    b.rank.assign(b.objects.size(), 1);
    return b;
}

WallVector wall_product(const WallVector& y, const OrbitModuleClass& b) {
    for (std::size_t i = 0; i < b.objects.size(); ++i)
        if (b.degree.at(i) != 0 || b.rank.at(i) != 1)
            throw DiagramError("second factor is not the rank-one degree-zero class of B Or(G)");
    WallVector out = y;
    for (std::size_t i = 0; i < y.objects.size(); ++i) {
        auto it = std::find(b.objects.begin(), b.objects.end(), y.objects[i].subgroup);
        if (it == b.objects.end()) throw DiagramError("second factor has no object for a subgroup class");
        out.coefficients[i] = y.coefficients[i] * b.rank[static_cast<std::size_t>(it - b.objects.begin())];
    }
    return out;
}

std::string to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::Obstructed:
            return "obstructed";
        case VerdictKind::SufficientHolds:
            return "sufficient";
        case VerdictKind::Indeterminate:
            return "indeterminate";
    }
    return "unknown";
}

bool is_cyclic(const FiniteGroup& g, const Subgroup& h, std::size_t* generator) {
    for (auto e : h.elements)
        if (g.element_order(e) == h.order()) {
            if (generator) *generator = e;
            return true;
        }
    return false;
}

FhVerdict fh_verdict(const GroupAction& a, int jobs) {
    FhVerdict v;
    v.table = fixed_components_euler(a, false, jobs);
    const auto& g = a.group();

    std::map<std::size_t, long long> total;
    for (const auto& row : v.table.rows) total[row.class_index] += row.chi;
    for (std::size_t c = 0; c < v.table.classes.size(); ++c) {
        const auto& h = v.table.classes[c];
        std::size_t gen = 0;
        if (h.trivial() || !is_cyclic(g, h, &gen)) continue;
        // A class with an empty fixed set has no rows and total 0.
        const long long chi = total.count(c) ? total[c] : 0;
        if (chi != 0) {
            v.kind = VerdictKind::Obstructed;
            v.element = gen;
            v.subgroup = h;
            v.chi = chi;
            return v;
        }
    }
    for (const auto& row : v.table.rows)
        if (row.chi != 0) {
            v.kind = VerdictKind::Indeterminate;
            v.subgroup = row.subgroup;
            v.component = row.component;
            v.chi = row.chi;
            return v;
        }
    v.kind = VerdictKind::SufficientHolds;
    return v;
}

}  // namespace acyc
