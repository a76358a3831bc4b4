#pragma once

// Finite groups acting simplicially on complexes, and their fixed sets.

#include "acyc/group.hpp"
#include "acyc/simplicial.hpp"

#include <string>
#include <vector>

namespace acyc {

/// One generator of an action file: an optional permutation of auxiliary
/// letters (lets a generator act with a kernel) and its vertex permutation.
struct GeneratorSpec {
    std::string name;
    Permutation abstract;
    Permutation vertices;
};

class ActionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Every invariant (bijective vertex maps, simplices to simplices, trivial
/// identity, homomorphism) is checked on construction.
class GroupAction {
public:
    GroupAction(FiniteGroup group, SimplicialComplex complex, std::vector<Permutation> vertex_action,
                std::vector<std::string> generator_names = {});

    /// Group generated by the pairs (abstract, vertices) acting through the
    /// vertex component.
    static GroupAction from_generators(SimplicialComplex complex, const std::vector<GeneratorSpec>& generators,
                                       std::size_t max_order = kDefaultMaxGroupOrder);

    /// The action of `group` with every element acting as the identity.
    static GroupAction trivial(FiniteGroup group, SimplicialComplex complex);

    const FiniteGroup& group() const noexcept { return group_; }
    const SimplicialComplex& complex() const noexcept { return complex_; }
    const Permutation& vertex_map(std::size_t g) const { return vertex_action_.at(g); }
    const std::vector<std::string>& generator_names() const noexcept { return generator_names_; }

    Simplex act(std::size_t g, const Simplex& s) const { return image(s, vertex_action_.at(g)); }

private:
    FiniteGroup group_;
    SimplicialComplex complex_;
    std::vector<Permutation> vertex_action_;
    std::vector<std::string> generator_names_;
};

/// Induced action on the barycentric subdivision.
GroupAction subdivide(const GroupAction& a);

/// Exhaustive check: whenever g maps a simplex onto itself it fixes each of
/// its vertices.  Under this property the fixed set of any subgroup is the
/// full subcomplex on its fixed vertices.
bool is_regular(const GroupAction& a);

/// Action on the twice-subdivided complex.  Group and element indices are
/// unchanged.
GroupAction regularize(const GroupAction& a);

/// `a` itself when it certifies as regular, otherwise regularize(a).
GroupAction ensure_regular(const GroupAction& a);

std::vector<VertexId> fixed_vertices(const GroupAction& a, const Subgroup& h);

/// Full subcomplex on the vertices fixed by every element of `h`, without
/// any regularization.
SimplicialComplex fixed_vertex_subcomplex(const GroupAction& a, const Subgroup& h);

/// Geometric fixed set X^H.  A non-regular action is regularized first, in
/// which case the result lives in the twice-subdivided complex.
SimplicialComplex fixed_subcomplex(const GroupAction& a, const Subgroup& h);

struct FixedSetRow {
    Subgroup subgroup;
    std::size_t class_index = 0;  // into FixedSetTable::classes
    std::size_t component = 0;
    SimplicialComplex complex;
    long long chi = 0;
};

struct FixedSetTable {
    /// Subgroup conjugacy-class representatives of the acting group.
    std::vector<Subgroup> classes;
    std::vector<FixedSetRow> rows;
};

/// Components of X^H and their Euler characteristics for each nontrivial
/// class representative H (and the trivial subgroup when requested).  The
/// action is regularized first if it does not certify.
FixedSetTable fixed_components_euler(const GroupAction& a, bool include_trivial = false, int jobs = 1);

}  // namespace acyc
