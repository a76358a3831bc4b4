#include "acyc/catalog.hpp"

#include <array>
#include <cctype>

namespace acyc {

namespace {

Permutation cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cs) {
    Permutation p = identity_permutation(degree);
    for (const auto& c : cs)
        for (std::size_t i = 0; i < c.size(); ++i) p[c[i]] = c[(i + 1) % c.size()];
    return p;
}

Permutation rotation(std::size_t n, std::size_t degree = 0) {
    std::vector<std::uint32_t> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<std::uint32_t>(i);
    return cycles(std::max(n, degree), {c});
}

// Left regular representation of the quaternion group; index = 4*sign + unit
// with units 1, i, j, k.
FiniteGroup quaternion_group() {
    // unit products: table[a][b] = (sign, unit) of a*b.
    static const std::array<std::array<std::pair<int, int>, 4>, 4> table{{
        {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
        {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
        {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
        {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
    }};
    auto left = [&](int unit) {
        Permutation p(8);
        for (int sign = 0; sign < 2; ++sign)
            for (int b = 0; b < 4; ++b) {
                const auto [s, u] = table[unit][b];
                p[4 * sign + b] = static_cast<std::uint32_t>(4 * ((s + sign) % 2) + u);
            }
        return p;
    };
    return group_closure({left(1), left(2)});
}

bool parse_order(const std::string& s, std::size_t& n) {
    if (s.empty() || s.size() > 4) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    n = std::stoul(s);
    return n >= 1;
}

}  // namespace

FiniteGroup catalog_group(const std::string& name) {
    std::size_t n = 0;
    if (name.empty()) throw GroupError("empty catalog group name");
    if (name == "trivial" || name == "1") return FiniteGroup();
    if ((name[0] == 'Z' || name[0] == 'C') && parse_order(name.substr(1), n))
        return n == 1 ? FiniteGroup() : group_closure({rotation(n)});
    if (name[0] == 'D' && parse_order(name.substr(1), n) && n >= 3) {
        Permutation reflect(n);
        for (std::size_t i = 0; i < n; ++i) reflect[i] = static_cast<std::uint32_t>((n - i) % n);
        return group_closure({rotation(n), reflect});
    }
    if (name == "V4" || name == "Z2xZ2") return group_closure({cycles(4, {{0, 1}}), cycles(4, {{2, 3}})});
    if (name == "Z4xZ2") return group_closure({cycles(6, {{0, 1, 2, 3}}), cycles(6, {{4, 5}})});
    if (name == "Z2^3") return group_closure({cycles(6, {{0, 1}}), cycles(6, {{2, 3}}), cycles(6, {{4, 5}})});
    if (name == "Z3xZ3") return group_closure({cycles(6, {{0, 1, 2}}), cycles(6, {{3, 4, 5}})});
    if (name == "Z6xZ2") return group_closure({cycles(8, {{0, 1, 2, 3, 4, 5}}), cycles(8, {{6, 7}})});
    if (name == "S3") return group_closure({cycles(3, {{0, 1, 2}}), cycles(3, {{0, 1}})});
    if (name == "S4") return group_closure({cycles(4, {{0, 1, 2, 3}}), cycles(4, {{0, 1}})});
    if (name == "A4") return group_closure({cycles(4, {{0, 1, 2}}), cycles(4, {{0, 1}, {2, 3}})});
    if (name == "Q8") return quaternion_group();
    if (name == "Dic3") return group_closure({cycles(7, {{0, 1, 2}}), cycles(7, {{1, 2}, {3, 4, 5, 6}})});
    throw GroupError("unknown catalog group '" + name + "'");
}

std::vector<std::pair<std::string, FiniteGroup>> small_groups(std::size_t max_order) {
    static const std::vector<std::pair<std::string, std::size_t>> names{
        {"trivial", 1}, {"Z2", 2},   {"Z3", 3},    {"Z4", 4},  {"V4", 4},    {"Z5", 5},    {"Z6", 6},     {"S3", 6},
        {"Z7", 7},      {"Z8", 8},   {"Z4xZ2", 8}, {"Z2^3", 8}, {"D4", 8},   {"Q8", 8},    {"Z9", 9},     {"Z3xZ3", 9},
        {"Z10", 10},    {"D5", 10},  {"Z11", 11},  {"Z12", 12}, {"Z6xZ2", 12}, {"D6", 12}, {"A4", 12},    {"Dic3", 12},
    };
    if (max_order > 12) throw GroupError("the small-group list stops at order 12");
    std::vector<std::pair<std::string, FiniteGroup>> out;
    for (const auto& [name, order] : names)
        if (order <= max_order) out.emplace_back(name, catalog_group(name));
    return out;
}

}  // namespace acyc
