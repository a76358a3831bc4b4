#pragma once

// Independent brute-force oracles.  Nothing here calls the library routine
// it is used to check; inputs and outputs are converted through plain data.

#include "acyc/group.hpp"
#include "acyc/group_ring.hpp"
#include "acyc/integer_matrix.hpp"
#include "acyc/orbit.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace acyc::oracle {

using Dense = std::vector<std::vector<Integer>>;

inline Dense to_dense(const IntegerMatrix& m) {
    Dense d(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) d[r][c] = m.at(r, c);
    return d;
}

inline Dense multiply(const Dense& a, const Dense& b, std::size_t inner, std::size_t cols) {
    Dense out(a.size(), std::vector<Integer>(cols));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k)
            if (a[i][k] != 0)
                for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

/// Bareiss elimination with row swaps.
inline Integer determinant(Dense m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

/// Invariant factors d_k / d_{k-1}, where d_k is the gcd of all k x k
/// minors.  Stops as soon as every k-minor vanishes.
inline std::vector<Integer> determinantal_invariant_factors(const Dense& a, std::size_t cols) {
    const std::size_t rows = a.size();
    std::vector<Integer> divisors{1};
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
        Integer g = 0;
        std::vector<std::size_t> rsel(k), csel(k);
        std::function<bool(std::size_t, std::size_t)> pick_cols;
        std::function<bool(std::size_t, std::size_t)> pick_rows = [&](std::size_t depth, std::size_t from) {
            if (depth == k) return pick_cols(0, 0);
            for (std::size_t r = from; r < rows; ++r) {
                rsel[depth] = r;
                if (pick_rows(depth + 1, r + 1)) return true;
            }
            return false;
        };
        pick_cols = [&](std::size_t depth, std::size_t from) {
            if (depth == k) {
                Dense minor(k, std::vector<Integer>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) minor[i][j] = a[rsel[i]][csel[j]];
                Integer d = abs(determinant(std::move(minor)));
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
                return g == 1;  // gcd cannot shrink further
            }
            for (std::size_t c = from; c < cols; ++c) {
                csel[depth] = c;
                if (pick_cols(depth + 1, c + 1)) return true;
            }
            return false;
        };
        pick_rows(0, 0);
        if (g == 0) break;
        divisors.push_back(g);
    }
    std::vector<Integer> factors;
    for (std::size_t k = 1; k < divisors.size(); ++k) factors.push_back(divisors[k] / divisors[k - 1]);
    return factors;
}

inline IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim, long bound) {
    std::uniform_int_distribution<std::size_t> dim(1, max_dim);
    std::uniform_int_distribution<long> entry(-bound, bound);
    std::bernoulli_distribution sparse(0.3);
    const std::size_t r = dim(rng), c = dim(rng);
    std::vector<std::vector<long>> rows(r, std::vector<long>(c));
    for (auto& row : rows)
        for (auto& x : row) x = sparse(rng) ? 0 : entry(rng);
    return IntegerMatrix::from_rows(rows);
}

// --- groups and G-sets -------------------------------------------------------

using ElementSet = std::vector<std::size_t>;

/// Every subgroup as the closure of at most three elements; enough for all
/// groups of order <= 15.
inline std::vector<ElementSet> all_subgroups(const FiniteGroup& g) {
    const std::size_t n = g.order();
    auto close = [&](std::vector<std::size_t> gens) {
        std::set<std::size_t> s{0};
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<std::size_t> cur(s.begin(), s.end());
            for (auto a : cur)
                for (auto b : gens)
                    if (s.insert(g.multiply(a, b)).second) grew = true;
        }
        return ElementSet(s.begin(), s.end());
    };
    std::set<ElementSet> found;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b)
            for (std::size_t c = b; c < n; ++c) found.insert(close({a, b, c}));
    return {found.begin(), found.end()};
}

inline ElementSet conjugate_set(const FiniteGroup& g, const ElementSet& h, std::size_t x) {
    ElementSet out;
    for (auto e : h) out.push_back(g.multiply(g.multiply(x, e), g.inverse_of(x)));
    std::sort(out.begin(), out.end());
    return out;
}

/// One subgroup per conjugacy class (the lexicographically least).
inline std::vector<ElementSet> subgroup_class_reps(const FiniteGroup& g) {
    std::set<ElementSet> reps;
    for (const auto& h : all_subgroups(g)) {
        ElementSet best = h;
        for (std::size_t x = 0; x < g.order(); ++x) best = std::min(best, conjugate_set(g, h, x));
        reps.insert(best);
    }
    return {reps.begin(), reps.end()};
}

/// Left cosets xH listed as sorted element sets, in order of first element.
inline std::vector<ElementSet> left_cosets(const FiniteGroup& g, const ElementSet& h) {
    std::set<ElementSet> cs;
    for (std::size_t x = 0; x < g.order(); ++x) {
        ElementSet c;
        for (auto e : h) c.push_back(g.multiply(x, e));
        std::sort(c.begin(), c.end());
        cs.insert(c);
    }
    return {cs.begin(), cs.end()};
}

/// The literal G-set G/H: g . xH = gxH.
inline GSet coset_gset(const FiniteGroup& g, const ElementSet& h) {
    const auto cs = left_cosets(g, h);
    std::map<std::size_t, std::uint32_t> where;
    for (std::uint32_t i = 0; i < cs.size(); ++i)
        for (auto e : cs[i]) where[e] = i;
    GSet s;
    s.size = cs.size();
    s.action.assign(g.order(), std::vector<std::uint32_t>(s.size));
    for (std::size_t x = 0; x < g.order(); ++x)
        for (std::uint32_t i = 0; i < cs.size(); ++i) s.action[x][i] = where[g.multiply(x, cs[i].front())];
    return s;
}

/// Number of G-equivariant functions S -> T, by trying every function.
inline std::size_t count_equivariant_maps(const GSet& s, const GSet& t) {
    std::vector<std::uint32_t> f(s.size, 0);
    std::size_t count = 0;
    while (true) {
        bool ok = true;
        for (std::size_t g = 0; g < s.action.size() && ok; ++g)
            for (std::size_t x = 0; x < s.size && ok; ++x)
                if (f[s.action[g][x]] != t.action[g][f[x]]) ok = false;
        if (ok) ++count;
        std::size_t i = 0;
        while (i < s.size && ++f[i] == t.size) f[i++] = 0;
        if (i == s.size) break;
    }
    return count;
}

/// Fixed-point counts of every subgroup; equal marks mean isomorphic G-sets.
inline std::vector<std::size_t> marks(const GSet& s, const std::vector<ElementSet>& subgroups) {
    std::vector<std::size_t> out;
    for (const auto& h : subgroups) {
        std::size_t fixed = 0;
        for (std::size_t x = 0; x < s.size; ++x)
            fixed += std::all_of(h.begin(), h.end(), [&](std::size_t e) { return s.action[e][x] == x; });
        out.push_back(fixed);
    }
    return out;
}

/// Relabels the points of `s` through a random bijection.
inline GSet shuffle(const GSet& s, std::mt19937_64& rng) {
    std::vector<std::uint32_t> p(s.size);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    GSet out;
    out.size = s.size;
    out.action.assign(s.action.size(), std::vector<std::uint32_t>(s.size));
    for (std::size_t g = 0; g < s.action.size(); ++g)
        for (std::size_t x = 0; x < s.size; ++x) out.action[g][p[x]] = p[s.action[g][x]];
    return out;
}

/// Every G-set with at most `max_size` points up to isomorphism, as
/// multisets of transitive orbits (the empty G-set included).
inline std::vector<GSet> all_gsets(const FiniteGroup& g, std::size_t max_size) {
    std::vector<GSet> orbits;
    for (const auto& h : subgroup_class_reps(g)) {
        GSet o = coset_gset(g, h);
        if (o.size <= max_size) orbits.push_back(std::move(o));
    }
    std::vector<GSet> out;
    GSet empty;
    empty.action.assign(g.order(), {});
    std::function<void(std::size_t, const GSet&)> grow = [&](std::size_t from, const GSet& cur) {
        out.push_back(cur);
        for (std::size_t i = from; i < orbits.size(); ++i) {
            if (cur.size + orbits[i].size > max_size) continue;
            GSet next = cur;
            next.size += orbits[i].size;
            for (std::size_t x = 0; x < g.order(); ++x)
                for (auto y : orbits[i].action[x]) next.action[x].push_back(static_cast<std::uint32_t>(y + cur.size));
            grow(i, next);
        }
    };
    grow(0, empty);
    return out;
}

// --- Q[Z x Z/n] by dense coefficient rows -------------------------------------

/// For each power of t, the n coefficients of 1, s, ..., s^{n-1}.
struct Laurent {
    int n = 1;
    std::map<long, std::vector<Rational>> rows;

    static Laurent from(const GroupRingElement& e) {
        Laurent l{e.n(), {}};
        for (const auto& [key, q] : e.terms()) {
            auto& row = l.rows[key.first];
            row.resize(e.n());
            row[((key.second % e.n()) + e.n()) % e.n()] += q;
        }
        l.trim();
        return l;
    }

    void trim() {
        for (auto it = rows.begin(); it != rows.end();)
            it = std::all_of(it->second.begin(), it->second.end(), [](const Rational& q) { return q == 0; })
                     ? rows.erase(it)
                     : std::next(it);
    }

    Rational augment() const {
        Rational sum = 0;
        for (const auto& [i, row] : rows)
            for (const auto& q : row) sum += q;
        return sum;
    }

    friend Laurent operator+(Laurent a, const Laurent& b) {
        for (const auto& [i, row] : b.rows) {
            auto& dst = a.rows[i];
            dst.resize(a.n);
            for (int j = 0; j < a.n; ++j) dst[j] += row[j];
        }
        a.trim();
        return a;
    }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent out{a.n, {}};
        for (const auto& [i, ra] : a.rows)
            for (const auto& [k, rb] : b.rows) {
                auto& dst = out.rows[i + k];
                dst.resize(a.n);
                for (int x = 0; x < a.n; ++x)
                    for (int y = 0; y < a.n; ++y) dst[(x + y) % a.n] += ra[x] * rb[y];
            }
        out.trim();
        return out;
    }

    friend bool operator==(const Laurent& a, const Laurent& b) { return a.n == b.n && a.rows == b.rows; }
};

inline GroupRingElement random_element(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> count(0, 4), power(-3, 3), spow(0, n - 1), num(-6, 6), den(1, 4);
    std::map<GroupRingElement::Key, Rational> terms;
    for (int k = count(rng); k > 0; --k) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        terms[{power(rng), spow(rng)}] += q;
    }
    return GroupRingElement(n, terms);
}

inline std::size_t rank2(const std::vector<std::vector<Rational>>& m) {
    // Rank of a matrix with at most two rows or two columns.
    std::size_t nonzero_rows = 0;
    for (const auto& row : m)
        if (std::any_of(row.begin(), row.end(), [](const Rational& q) { return q != 0; })) ++nonzero_rows;
    if (nonzero_rows <= 1) return nonzero_rows;
    if (m.size() == 2 && m[0].size() == 1) return 1;
    if (m.size() == 2 && m[0].size() == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0] != 0 ? 2 : 1;
    return 1;
}

/// Checks of a candidate pair d1 : F^2 -> F, d2 : F -> F^2 by dense
/// arithmetic: (augmentation kills d1, d1 d2 = 0, Q-tensored Betti (1,1,0)).
struct ResolutionVerdict {
    bool augmentation = false;
    bool composite = false;
    bool tensor = false;
    bool passes() const { return augmentation && composite && tensor; }
};

inline ResolutionVerdict check_candidate(const FreeModuleMap& d1, const FreeModuleMap& d2) {
    const Laurent a = Laurent::from(d1.entries[0][0]), b = Laurent::from(d1.entries[0][1]);
    const Laurent c = Laurent::from(d2.entries[0][0]), d = Laurent::from(d2.entries[1][0]);
    ResolutionVerdict v;
    v.augmentation = a.augment() == 0 && b.augment() == 0;
    v.composite = (a * c + b * d).rows.empty();
    const std::vector<std::vector<Rational>> e1{{a.augment(), b.augment()}};
    const std::vector<std::vector<Rational>> e2{{c.augment()}, {d.augment()}};
    const Rational product = a.augment() * c.augment() + b.augment() * d.augment();
    if (product == 0) {
        const std::size_t r1 = rank2(e1), r2 = rank2(e2);
        v.tensor = (1 - r1 == 1) && (2 - r1 - r2 == 1) && (1 - r2 == 0);
    }
    return v;
}

}  // namespace acyc::oracle
