#include "acyc/homology.hpp"

#include "acyc/parallel.hpp"

#include <algorithm>
#include <string>

namespace acyc {

namespace {

const std::vector<Integer> kNoTorsion;

// Sign of the permutation sorting `v` (entries distinct).
int sort_sign(std::vector<VertexId>& v) {
    int sign = 1;
    for (std::size_t i = 1; i < v.size(); ++i)
        for (std::size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
            std::swap(v[j - 1], v[j]);
            sign = -sign;
        }
    return sign;
}

}  // namespace

std::size_t HomologyProfile::betti(int k) const {
    for (const auto& d : degrees)
        if (d.degree == k) return d.betti;
    return 0;
}

const std::vector<Integer>& HomologyProfile::torsion(int k) const {
    for (const auto& d : degrees)
        if (d.degree == k) return d.torsion;
    return kNoTorsion;
}

std::vector<std::size_t> HomologyProfile::betti_numbers() const {
    std::vector<std::size_t> out;
    for (const auto& d : degrees) out.push_back(d.betti);
    return out;
}

bool HomologyProfile::vanishes(Ring ring) const {
    for (const auto& d : degrees) {
        if (d.betti != 0) return false;
        if (ring == Ring::Z && !d.torsion.empty()) return false;
    }
    return true;
}

ChainComplexZ chain_complex(const SimplicialComplex& c) {
    ChainComplexZ cc;
    const int top = c.dimension();
    for (int k = 0; k <= top; ++k) cc.basis.push_back(c.simplices(k));
    for (int k = 0; k <= top; ++k) {
        if (k == 0) {
            cc.boundary.emplace_back(0, c.count(0));
            continue;
        }
        IntegerMatrix d(c.count(k - 1), c.count(k));
        const auto& simplices = c.simplices(k);
        for (std::size_t j = 0; j < simplices.size(); ++j)
            for (std::size_t i = 0; i < simplices[j].size(); ++i) {
                Simplex face;
                face.reserve(simplices[j].size() - 1);
                for (std::size_t t = 0; t < simplices[j].size(); ++t)
                    if (t != i) face.push_back(simplices[j][t]);
                d.set(*c.index_of(face), j, i % 2 == 0 ? 1 : -1);
            }
        cc.boundary.push_back(std::move(d));
    }
    return cc;
}

HomologyProfile homology_of_chains(const std::vector<std::size_t>& ranks,
                                   const std::vector<IntegerMatrix>& boundary, bool reduced, int jobs) {
    HomologyProfile out;
    out.reduced = reduced;
    const std::size_t count = ranks.size();
    if (count == 0) return out;

    // factors[k] = invariant factors of d_k, k >= 1.
    std::vector<std::vector<Integer>> factors(count + 1);
    parallel_for(count - 1, jobs, [&](std::size_t i) {
        const std::size_t k = i + 1;
        const auto& d = boundary.at(k);
        if (d.rows() != ranks[k - 1] || d.cols() != ranks[k])
            throw std::invalid_argument("homology: boundary shape does not match chain ranks");
        factors[k] = invariant_factors(d);
    });

    for (std::size_t k = 0; k < count; ++k) {
        std::size_t rank_out = k == 0 ? ((reduced && ranks[0] > 0) ? 1 : 0) : factors[k].size();
        std::size_t rank_in = factors[k + 1].size();
        DegreeHomology h;
        h.degree = static_cast<int>(k);
        h.betti = ranks[k] - rank_out - rank_in;
        for (const auto& f : factors[k + 1])
            if (f > 1) h.torsion.push_back(f);
        out.degrees.push_back(std::move(h));
    }
    return out;
}

HomologyProfile homology(const SimplicialComplex& c, bool reduced, int jobs) {
    const auto cc = chain_complex(c);
    std::vector<std::size_t> ranks;
    for (const auto& b : cc.basis) ranks.push_back(b.size());
    return homology_of_chains(ranks, cc.boundary, reduced, jobs);
}

bool is_acyclic(const SimplicialComplex& c, Ring ring) {
    if (c.empty()) throw std::invalid_argument("acyclicity is undefined for the empty complex");
    return homology(c, true).vanishes(ring);
}

void check_simplicial_map(const SimplicialComplex& c, const std::vector<VertexId>& f) {
    if (f.size() != c.vertex_count())
        throw SimplicialMapError("vertex map has " + std::to_string(f.size()) + " entries, complex has " +
                                 std::to_string(c.vertex_count()) + " vertices");
    for (VertexId v : f)
        if (v >= c.vertex_count()) throw SimplicialMapError("vertex map leaves the vertex set");
    for (int d = 1; d <= c.dimension(); ++d)
        for (const auto& s : c.simplices(d))
            if (!c.contains(image(s, f)))
                throw SimplicialMapError("image of " + c.simplex_label(s) + " is not a simplex");
}

IntegerMatrix chain_map(const SimplicialComplex& c, const std::vector<VertexId>& f, int k) {
    IntegerMatrix m(c.count(k), c.count(k));
    const auto& simplices = c.simplices(k);
    for (std::size_t j = 0; j < simplices.size(); ++j) {
        std::vector<VertexId> img;
        for (VertexId v : simplices[j]) img.push_back(f.at(v));
        const int sign = sort_sign(img);
        if (std::adjacent_find(img.begin(), img.end()) != img.end()) continue;
        auto idx = c.index_of(img);
        if (!idx) throw SimplicialMapError("image of " + c.simplex_label(simplices[j]) + " is not a simplex");
        m.set(*idx, j, sign);
    }
    return m;
}

// --- rational homology ------------------------------------------------------

void RationalHomology::insert(Echelon& e, SparseQ v, long tag) {
    const std::size_t pivot = v.rbegin()->first;
    const Rational lead = v.rbegin()->second;
    for (auto& [i, x] : v) x /= lead;
    e.by_pivot.emplace(pivot, e.vecs.size());
    e.vecs.push_back(std::move(v));
    e.tag.push_back(tag);
}

void RationalHomology::reduce(const Echelon& e, SparseQ& v, std::vector<std::pair<std::size_t, Rational>>* used) {
    while (!v.empty()) {
        const auto [pivot, lead] = *v.rbegin();
        auto it = e.by_pivot.find(pivot);
        if (it == e.by_pivot.end()) return;
        const Rational alpha = lead;
        for (const auto& [i, x] : e.vecs[it->second]) {
            auto [slot, fresh] = v.emplace(i, -alpha * x);
            if (!fresh) slot->second -= alpha * x;
            if (slot->second == 0) v.erase(slot);
        }
        if (used) used->emplace_back(it->second, alpha);
    }
}

RationalHomology::RationalHomology(const SimplicialComplex& c) : complex_(&c) {
    const auto cc = chain_complex(c);
    const int top = cc.top_degree();
    tables_.resize(top + 1);
    reps_.resize(top + 1);

    auto column = [](const IntegerMatrix& m, std::size_t j) {
        SparseQ v;
        for (const auto& [i, x] : m.column(j)) v.emplace(i, Rational(x));
        return v;
    };

    for (int k = 0; k <= top; ++k) {
        auto& table = tables_[k];
        if (k + 1 <= top) {
            const auto& d = cc.boundary[k + 1];
            for (std::size_t j = 0; j < d.cols(); ++j) {
                SparseQ v = column(d, j);
                reduce(table, v, nullptr);
                if (!v.empty()) insert(table, std::move(v), -1);
            }
        }

        // Kernel of d_k by column reduction with a tracked combination.
        std::vector<SparseQ> cycles;
        if (k == 0) {
            for (std::size_t j = 0; j < c.count(0); ++j) cycles.push_back(SparseQ{{j, Rational(1)}});
        } else {
            const auto& d = cc.boundary[k];
            std::map<std::size_t, std::pair<SparseQ, SparseQ>> pivots;  // pivot -> (image, combo)
            for (std::size_t j = 0; j < d.cols(); ++j) {
                SparseQ v = column(d, j);
                SparseQ t{{j, Rational(1)}};
                while (!v.empty()) {
                    auto it = pivots.find(v.rbegin()->first);
                    if (it == pivots.end()) break;
                    const Rational alpha = v.rbegin()->second / it->second.first.rbegin()->second;
                    for (const auto& [i, x] : it->second.first) {
                        auto [slot, fresh] = v.emplace(i, -alpha * x);
                        if (!fresh) slot->second -= alpha * x;
                        if (slot->second == 0) v.erase(slot);
                    }
                    for (const auto& [i, x] : it->second.second) {
                        auto [slot, fresh] = t.emplace(i, -alpha * x);
                        if (!fresh) slot->second -= alpha * x;
                        if (slot->second == 0) t.erase(slot);
                    }
                }
                if (v.empty())
                    cycles.push_back(std::move(t));
                else {
                    const std::size_t key = v.rbegin()->first;
                    pivots.emplace(key, std::make_pair(std::move(v), std::move(t)));
                }
            }
        }

        for (auto& z : cycles) {
            reduce(table, z, nullptr);
            if (z.empty()) continue;
            insert(table, z, static_cast<long>(reps_[k].size()));
            reps_[k].push_back(table.vecs.back());
        }
    }
}

RationalHomology::SparseQ RationalHomology::push_forward(const std::vector<VertexId>& f, int k,
                                                         const SparseQ& chain) const {
    SparseQ out;
    const auto& simplices = complex_->simplices(k);
    for (const auto& [j, x] : chain) {
        std::vector<VertexId> img;
        for (VertexId v : simplices[j]) img.push_back(f[v]);
        const int sign = sort_sign(img);
        if (std::adjacent_find(img.begin(), img.end()) != img.end()) continue;
        auto idx = complex_->index_of(img);
        if (!idx) throw SimplicialMapError("image of " + complex_->simplex_label(simplices[j]) + " is not a simplex");
        auto [slot, fresh] = out.emplace(*idx, sign * x);
        if (!fresh) slot->second += sign * x;
        if (slot->second == 0) out.erase(slot);
    }
    return out;
}

std::vector<RationalMatrix> RationalHomology::induced(const std::vector<VertexId>& f) const {
    check_simplicial_map(*complex_, f);
    std::vector<RationalMatrix> out;
    for (int k = 0; k <= top_degree(); ++k) {
        const std::size_t b = reps_[k].size();
        RationalMatrix m(b, std::vector<Rational>(b, 0));
        for (std::size_t i = 0; i < b; ++i) {
            SparseQ w = push_forward(f, k, reps_[k][i]);
            std::vector<std::pair<std::size_t, Rational>> used;
            reduce(tables_[k], w, &used);
            if (!w.empty()) throw std::logic_error("induced map: image of a cycle is not a cycle");
            for (const auto& [slot, alpha] : used)
                if (tables_[k].tag[slot] >= 0) m[tables_[k].tag[slot]][i] += alpha;
        }
        out.push_back(std::move(m));
    }
    return out;
}

Integer RationalHomology::lefschetz(const std::vector<VertexId>& f) const {
    Rational total = 0;
    const auto maps = induced(f);
    for (std::size_t k = 0; k < maps.size(); ++k) {
        Rational tr = 0;
        for (std::size_t i = 0; i < maps[k].size(); ++i) tr += maps[k][i][i];
        total += (k % 2 == 0) ? tr : Rational(-tr);
    }
    total.canonicalize();
    if (total.get_den() != 1) throw std::logic_error("Lefschetz number is not an integer");
    return total.get_num();
}

std::vector<RationalMatrix> induced_homology_map(const SimplicialComplex& c, const std::vector<VertexId>& f) {
    return RationalHomology(c).induced(f);
}

Integer lefschetz_number(const SimplicialComplex& c, const std::vector<VertexId>& f) {
    return RationalHomology(c).lefschetz(f);
}

Integer chain_lefschetz_number(const SimplicialComplex& c, const std::vector<VertexId>& f) {
    check_simplicial_map(c, f);
    Integer total = 0;
    for (int k = 0; k <= c.dimension(); ++k) {
        Integer tr = 0;
        for (const auto& s : c.simplices(k)) {
            std::vector<VertexId> img;
            for (VertexId v : s) img.push_back(f[v]);
            const int sign = sort_sign(img);
            if (img == s) tr += sign;
        }
        total += (k % 2 == 0) ? tr : Integer(-tr);
    }
    return total;
}

}  // namespace acyc
