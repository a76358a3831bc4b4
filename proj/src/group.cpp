#include "acyc/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <string>

namespace acyc {

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw GroupError("compose: permutations of different degree");
    Permutation out(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) out[i] = p[q[i]];
    return out;
}

Permutation inverse(const Permutation& p) {
    Permutation out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<std::uint32_t>(i);
    return out;
}

Permutation identity_permutation(std::size_t n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0u);
    return p;
}

bool is_bijection(const Permutation& p) {
    std::vector<char> seen(p.size(), 0);
    for (auto x : p) {
        if (x >= p.size() || seen[x]) return false;
        seen[x] = 1;
    }
    return true;
}

FiniteGroup::FiniteGroup(std::vector<Permutation> elements, std::vector<std::size_t> generators)
    : elements_(std::move(elements)), generators_(std::move(generators)) {
    if (elements_.empty()) throw GroupError("a group has at least one element");
    const std::size_t n = elements_.front().size();
    if (elements_.front() != identity_permutation(n)) throw GroupError("element 0 must be the identity");
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (elements_[i].size() != n || !is_bijection(elements_[i]))
            throw GroupError("element " + std::to_string(i) + " is not a permutation of " + std::to_string(n) +
                             " letters");
        if (!lookup_.emplace(elements_[i], i).second) throw GroupError("repeated group element");
    }
    for (auto g : generators_)
        if (g >= elements_.size()) throw GroupError("generator index out of range");
    const std::size_t m = elements_.size();
    table_.resize(m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            auto it = lookup_.find(compose(elements_[a], elements_[b]));
            if (it == lookup_.end()) throw GroupError("element list is not closed under composition");
            table_[a * m + b] = it->second;
        }
    inverses_.resize(m);
    for (std::size_t a = 0; a < m; ++a) inverses_[a] = lookup_.at(inverse(elements_[a]));
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
    std::size_t k = 1;
    for (std::size_t x = a; x != identity(); x = multiply(x, a)) ++k;
    return k;
}

std::size_t FiniteGroup::index_of(const Permutation& p) const {
    auto it = lookup_.find(p);
    if (it == lookup_.end()) throw GroupError("permutation is not a group element");
    return it->second;
}

FiniteGroup group_closure(const std::vector<Permutation>& generators, std::size_t max_order) {
    const std::size_t n = generators.empty() ? 0 : generators.front().size();
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (generators[i].size() != n) throw GroupError("generators act on different numbers of letters");
        if (!is_bijection(generators[i]))
            throw GroupError("generator " + std::to_string(i) + " is not a bijection");
    }
    std::vector<Permutation> elements{identity_permutation(n)};
    std::map<Permutation, std::size_t> seen{{elements.front(), 0}};
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const std::size_t x = queue.front();
        queue.pop_front();
        for (const auto& s : generators) {
            Permutation y = compose(s, elements[x]);
            if (seen.count(y)) continue;
            if (elements.size() >= max_order)
                throw GroupError("group order exceeds the bound of " + std::to_string(max_order));
            seen.emplace(y, elements.size());
            queue.push_back(elements.size());
            elements.push_back(std::move(y));
        }
    }
    std::vector<std::size_t> gens;
    for (const auto& s : generators) gens.push_back(seen.at(s));
    return FiniteGroup(std::move(elements), std::move(gens));
}

bool Subgroup::contains(std::size_t g) const { return std::binary_search(elements.begin(), elements.end(), g); }

bool Subgroup::is_subset_of(const Subgroup& other) const {
    return std::includes(other.elements.begin(), other.elements.end(), elements.begin(), elements.end());
}

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
}

Subgroup generated_subgroup(const FiniteGroup& g, std::vector<std::size_t> generators) {
    std::set<std::size_t> members{g.identity()};
    std::deque<std::size_t> queue{g.identity()};
    while (!queue.empty()) {
        const std::size_t x = queue.front();
        queue.pop_front();
        for (auto s : generators) {
            const std::size_t y = g.multiply(s, x);
            if (members.insert(y).second) queue.push_back(y);
        }
    }
    return Subgroup{{members.begin(), members.end()}, std::move(generators)};
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup{{g.identity()}, {}}; }

Subgroup whole_group(const FiniteGroup& g) {
    std::vector<std::size_t> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup{all, g.generators()};
}

Subgroup cyclic_subgroup(const FiniteGroup& g, std::size_t element) { return generated_subgroup(g, {element}); }

Subgroup conjugate(const FiniteGroup& g, const Subgroup& h, std::size_t x) {
    const std::size_t xi = g.inverse_of(x);
    Subgroup out;
    for (auto e : h.elements) out.elements.push_back(g.multiply(g.multiply(x, e), xi));
    for (auto e : h.generators) out.generators.push_back(g.multiply(g.multiply(x, e), xi));
    std::sort(out.elements.begin(), out.elements.end());
    return out;
}

bool are_conjugate(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return false;
    for (std::size_t x = 0; x < g.order(); ++x)
        if (conjugate(g, a, x) == b) return true;
    return false;
}

std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g, bool up_to_conjugacy) {
    std::map<std::vector<std::size_t>, Subgroup> found;
    std::vector<Subgroup> frontier;
    for (std::size_t x = 0; x < g.order(); ++x) {
        Subgroup c = cyclic_subgroup(g, x);
        if (found.emplace(c.elements, c).second) frontier.push_back(c);
    }
    std::vector<Subgroup> cyclic;
    for (const auto& [k, s] : found) cyclic.push_back(s);
    // Every subgroup is a join of cyclic subgroups, so joining new subgroups
    // with cyclic ones reaches a fixed point containing all of them.
    while (!frontier.empty()) {
        std::vector<Subgroup> next;
        for (const auto& h : frontier)
            for (const auto& c : cyclic) {
                if (c.is_subset_of(h)) continue;
                auto gens = h.generators;
                gens.insert(gens.end(), c.generators.begin(), c.generators.end());
                Subgroup j = generated_subgroup(g, gens);
                if (found.emplace(j.elements, j).second) next.push_back(std::move(j));
            }
        frontier = std::move(next);
    }
    std::vector<Subgroup> all;
    for (auto& [k, s] : found) all.push_back(std::move(s));
    std::sort(all.begin(), all.end(), subgroup_less);
    if (!up_to_conjugacy) return all;

    std::vector<Subgroup> reps;
    std::set<std::vector<std::size_t>> covered;
    for (const auto& h : all) {
        if (covered.count(h.elements)) continue;
        reps.push_back(h);
        for (std::size_t x = 0; x < g.order(); ++x) covered.insert(conjugate(g, h, x).elements);
    }
    return reps;
}

std::size_t class_of(const FiniteGroup& g, const std::vector<Subgroup>& reps, const Subgroup& h) {
    for (std::size_t i = 0; i < reps.size(); ++i)
        if (are_conjugate(g, reps[i], h)) return i;
    throw GroupError("subgroup has no representative in the list");
}

}  // namespace acyc
