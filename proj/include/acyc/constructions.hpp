#pragma once

// Mirrors and the right-angled basic construction with its finite (Z/2)^V
// quotient, Salvetti complex homology, the Bestvina-Brady report, and
// equivariant joins.

#include "acyc/group_action.hpp"
#include "acyc/homology.hpp"
#include "acyc/simplicial.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace acyc {

class ConstructionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kDefaultMaxCells = 10'000'000;

/// D_v for each vertex v of a flag complex L: the closed star of b{v} in the
/// barycentric subdivision of L.  Keyed by the label of v.
std::map<std::string, SimplicialComplex> mirrors(const SimplicialComplex& l);

/// A space N with a flag boundary subcomplex L.  The space is subdivided
/// once, so sd(L) and every mirror sit in `subdivided` as full subcomplexes.
struct MirroredComplex {
    SimplicialComplex space;
    SimplicialComplex boundary;
    SimplicialComplex subdivided;
    std::map<std::string, SimplicialComplex> mirror_map;
};

/// Throws ConstructionError unless `boundary` is a nonempty flag subcomplex
/// of `space`.
MirroredComplex make_mirrored(SimplicialComplex space, SimplicialComplex boundary);

struct BasicConstructionResult {
    SimplicialComplex complex;
    std::uint64_t copy_count = 0;
    /// (dimension, |S(sigma)|) -> number of simplices of the subdivided space.
    std::map<std::pair<int, std::size_t>, std::size_t> support_census;
    long long chi_by_formula = 0;
    long long chi_direct = 0;
    /// Boundary vertex labels; bit i of a copy mask is mirror_labels[i].
    std::vector<std::string> mirror_labels;
    /// For each glued vertex: its vertex in the subdivided space and the
    /// canonical copy mask of its class.
    std::vector<std::pair<VertexId, std::uint64_t>> origin;
    /// Mirror support bitmask of each vertex of the subdivided space.
    std::vector<std::uint64_t> vertex_support;
};

/// Glues 2^|V| copies of the subdivided space, copy g to copy g + e_v along
/// D_v.  Throws ConstructionError when 2^|V| times the simplex count of the
/// subdivided space exceeds `max_cells`.
BasicConstructionResult basic_construction(const MirroredComplex& n, std::size_t max_cells = kDefaultMaxCells,
                                           int jobs = 1);

/// (Z/2)^V acting on the glued complex by relabelling copies.
GroupAction copy_action(const BasicConstructionResult& r);

struct QuotientChoice {
    std::string description;
    std::uint64_t index = 0;
};

QuotientChoice quotient_group_choice(const SimplicialComplex& l);

/// Homology of the cube complex with one torus T^sigma per simplex of the
/// flag complex L (and a point for the empty simplex).
HomologyProfile salvetti_homology(const SimplicialComplex& l);

struct ClassificationLine {
    std::string key;
    std::string text;
};

struct BBReport {
    bool flag = false;
    HomologyProfile homology_z;  // reduced
    HomologyProfile homology_q;  // reduced
    bool z_acyclic = false;
    bool q_acyclic = false;
    bool user_asserted_simply_connected = false;
    std::vector<ClassificationLine> lines;
    std::vector<std::string> warnings;
};

BBReport bb_report(const SimplicialComplex& l, bool asserts_simply_connected, int jobs = 1);

/// Diagonal action on the join.  Generators are paired by position; a side
/// acted on by the trivial group contributes identities.  Throws
/// ConstructionError unless the paired generators define the same group.
GroupAction equivariant_join(const GroupAction& a, const GroupAction& b);

}  // namespace acyc
