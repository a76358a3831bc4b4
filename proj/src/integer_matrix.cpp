#include "acyc/integer_matrix.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <utility>

namespace acyc {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<long>> v;
    for (const auto& r : rows) v.emplace_back(r);
    return from_rows(v);
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    const std::size_t nc = rows.empty() ? 0 : rows.front().size();
    IntegerMatrix m(rows.size(), nc);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != nc) throw std::invalid_argument("from_rows: ragged rows");
        for (std::size_t c = 0; c < nc; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

Integer IntegerMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_) throw std::out_of_range("IntegerMatrix row out of range");
    const auto& col = cols_.at(c);
    auto it = col.find(r);
    return it == col.end() ? Integer(0) : it->second;
}

void IntegerMatrix::set(std::size_t r, std::size_t c, const Integer& value) {
    if (r >= rows_) throw std::out_of_range("IntegerMatrix row out of range");
    auto& col = cols_.at(c);
    if (value == 0)
        col.erase(r);
    else
        col[r] = value;
}

void IntegerMatrix::add(std::size_t r, std::size_t c, const Integer& value) {
    if (r >= rows_) throw std::out_of_range("IntegerMatrix row out of range");
    auto& col = cols_.at(c);
    auto [it, fresh] = col.emplace(r, value);
    if (!fresh) it->second += value;
    if (it->second == 0) col.erase(it);
}

std::size_t IntegerMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : cols_) n += c.size();
    return n;
}

IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix t(cols(), rows_);
    for (std::size_t c = 0; c < cols(); ++c)
        for (const auto& [r, v] : cols_[c]) t.cols_[r].emplace(c, v);
    return t;
}

std::vector<std::vector<Integer>> IntegerMatrix::dense() const {
    std::vector<std::vector<Integer>> out(rows_, std::vector<Integer>(cols(), 0));
    for (std::size_t c = 0; c < cols(); ++c)
        for (const auto& [r, v] : cols_[c]) out[r][c] = v;
    return out;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
    IntegerMatrix out(a.rows(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j)
        for (const auto& [k, bv] : b.cols_[j])
            for (const auto& [i, av] : a.cols_[k]) out.add(i, j, av * bv);
    return out;
}

std::vector<Integer> SmithNormalForm::invariant_factors() const {
    std::vector<Integer> out;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) {
        Integer x = d.at(i, i);
        if (x != 0) out.push_back(x);
    }
    return out;
}

namespace {

using Dense = std::vector<std::vector<Integer>>;

IntegerMatrix to_sparse(const Dense& m, std::size_t cols) {
    IntegerMatrix out(m.size(), cols);
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (m[r][c] != 0) out.set(r, c, m[r][c]);
    return out;
}

bool abs_less(const Integer& a, const Integer& b) { return cmp(abs(a), abs(b)) < 0; }

}  // namespace

SmithNormalForm smith_normal_form(const IntegerMatrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    Dense d = a.dense();
    Dense u = IntegerMatrix::identity(m).dense();
    Dense v = IntegerMatrix::identity(n).dense();

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        std::swap(d[i], d[j]);
        std::swap(u[i], u[j]);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (auto& row : d) std::swap(row[i], row[j]);
        for (auto& row : v) std::swap(row[i], row[j]);
    };
    // row_i += q * row_j
    auto row_axpy = [&](std::size_t i, std::size_t j, const Integer& q) {
        for (std::size_t c = 0; c < n; ++c) d[i][c] += q * d[j][c];
        for (std::size_t c = 0; c < m; ++c) u[i][c] += q * u[j][c];
    };
    auto col_axpy = [&](std::size_t i, std::size_t j, const Integer& q) {
        for (std::size_t r = 0; r < m; ++r) d[r][i] += q * d[r][j];
        for (std::size_t r = 0; r < n; ++r) v[r][i] += q * v[r][j];
    };

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        // Smallest nonzero magnitude in the trailing block.
        std::size_t pr = m, pc = n;
        for (std::size_t r = t; r < m; ++r)
            for (std::size_t c = t; c < n; ++c)
                if (d[r][c] != 0 && (pr == m || abs_less(d[r][c], d[pr][pc]))) {
                    pr = r;
                    pc = c;
                }
        if (pr == m) break;
        swap_rows(t, pr);
        swap_cols(t, pc);

        for (;;) {
            bool dirty = false;
            for (std::size_t r = t + 1; r < m; ++r) {
                if (d[r][t] == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), d[r][t].get_mpz_t(), d[t][t].get_mpz_t());
                if (q != 0) row_axpy(r, t, -q);
                if (d[r][t] != 0) dirty = true;
            }
            for (std::size_t c = t + 1; c < n; ++c) {
                if (d[t][c] == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), d[t][c].get_mpz_t(), d[t][t].get_mpz_t());
                if (q != 0) col_axpy(c, t, -q);
                if (d[t][c] != 0) dirty = true;
            }
            if (dirty) {
                // A remainder smaller than the pivot exists; move it in.
                std::size_t br = t, bc = t;
                for (std::size_t r = t + 1; r < m; ++r)
                    if (d[r][t] != 0 && abs_less(d[r][t], d[br][bc])) br = r, bc = t;
                for (std::size_t c = t + 1; c < n; ++c)
                    if (d[t][c] != 0 && abs_less(d[t][c], d[br][bc])) br = t, bc = c;
                swap_rows(t, br);
                swap_cols(t, bc);
                continue;
            }
            // Row and column are clear; enforce divisibility of the block.
            std::size_t bad = m;
            for (std::size_t r = t + 1; r < m && bad == m; ++r)
                for (std::size_t c = t + 1; c < n; ++c)
                    if (!mpz_divisible_p(d[r][c].get_mpz_t(), d[t][t].get_mpz_t())) {
                        bad = r;
                        break;
                    }
            if (bad == m) break;
            row_axpy(t, bad, 1);
        }
        if (d[t][t] < 0) {
            for (auto& x : d[t]) x = -x;
            for (auto& x : u[t]) x = -x;
        }
    }
    return SmithNormalForm{to_sparse(d, n), to_sparse(u, m), to_sparse(v, n)};
}

std::vector<Integer> normalize_diagonal(std::vector<Integer> e) {
    for (auto& x : e) x = abs(x);
    e.erase(std::remove(e.begin(), e.end(), Integer(0)), e.end());
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j) {
            Integer g = gcd(e[i], e[j]);
            Integer l = (e[i] / g) * e[j];
            e[i] = g;
            e[j] = l;
        }
    return e;
}

std::vector<Integer> invariant_factors(const IntegerMatrix& a) {
    using Row = std::map<std::size_t, Integer>;
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    std::vector<Row> rows(m);
    std::vector<std::set<std::size_t>> col_rows(n);
    for (std::size_t c = 0; c < n; ++c)
        for (const auto& [r, v] : a.column(c)) {
            rows[r].emplace(c, v);
            col_rows[c].insert(r);
        }

    auto set_entry = [&](std::size_t r, std::size_t c, const Integer& value) {
        if (value == 0) {
            rows[r].erase(c);
            col_rows[c].erase(r);
        } else {
            rows[r][c] = value;
            col_rows[c].insert(r);
        }
    };
    // row_i -= q * row_j
    auto row_sub = [&](std::size_t i, std::size_t j, const Integer& q) {
        for (const auto& [c, v] : rows[j]) {
            auto it = rows[i].find(c);
            Integer next = (it == rows[i].end() ? Integer(0) : it->second) - q * v;
            set_entry(i, c, next);
        }
    };

    std::vector<Integer> diag;
    std::set<std::size_t> live_rows;
    for (std::size_t r = 0; r < m; ++r)
        if (!rows[r].empty()) live_rows.insert(r);

    while (!live_rows.empty()) {
        // Smallest magnitude, then smallest Markowitz fill-in estimate.
        std::size_t pr = m, pc = n;
        std::size_t best_cost = std::numeric_limits<std::size_t>::max();
        for (std::size_t r : live_rows) {
            for (const auto& [c, v] : rows[r]) {
                const std::size_t cost = (rows[r].size() - 1) * (col_rows[c].size() - 1);
                if (pr == m) {
                    pr = r, pc = c, best_cost = cost;
                    continue;
                }
                const int order = cmp(abs(v), abs(rows[pr][pc]));
                if (order < 0 || (order == 0 && cost < best_cost)) pr = r, pc = c, best_cost = cost;
            }
            if (best_cost == 0 && abs(rows[pr][pc]) == 1) break;
        }

        for (;;) {
            const Integer p = rows[pr][pc];
            bool moved = false;
            const std::vector<std::size_t> others(col_rows[pc].begin(), col_rows[pc].end());
            for (std::size_t r : others) {
                if (r == pr) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), rows[r][pc].get_mpz_t(), p.get_mpz_t());
                if (q != 0) row_sub(r, pr, q);
                if (rows[r].empty()) live_rows.erase(r);
            }
            for (std::size_t r : col_rows[pc])
                if (r != pr && abs_less(rows[r][pc], rows[pr][pc])) {
                    pr = r;
                    moved = true;
                }
            if (moved) continue;

            // Column pc is now zero outside row pr, so column operations
            // clearing row pr touch no other row.
            std::vector<std::pair<std::size_t, Integer>> rest;
            for (const auto& [c, v] : rows[pr])
                if (c != pc) {
                    Integer rem;
                    mpz_tdiv_r(rem.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
                    rest.emplace_back(c, rem);
                }
            for (const auto& [c, rem] : rest) set_entry(pr, c, rem);
            std::size_t next = pc;
            for (const auto& [c, v] : rows[pr])
                if (c != pc && abs_less(v, rows[pr][next])) next = c;
            if (next == pc) break;
            pc = next;
        }
        diag.push_back(abs(rows[pr][pc]));
        set_entry(pr, pc, 0);
        live_rows.erase(pr);
    }
    return normalize_diagonal(std::move(diag));
}

Integer determinant(const IntegerMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix is not square");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    Dense m = a.dense();
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && m[s][k] == 0) ++s;
            if (s == n) return 0;
            std::swap(m[k], m[s]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

std::size_t rational_rank(RationalMatrix m) {
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m.front().size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            Rational f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

}  // namespace acyc
