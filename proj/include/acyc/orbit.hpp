#pragma once

// Orbit categories, diagrams of sets over them, balanced products, and the
// component-indexed finiteness obstruction together with the FH(Q) verdict.

#include "acyc/group.hpp"
#include "acyc/group_action.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace acyc {

class DiagramError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Objects are G/H for conjugacy-class representatives H.  A morphism
/// G/H -> G/K is a coset gK with g^{-1} H g inside K, sending xH to xgK; it
/// is stored as the smallest element index of gK.
class OrbitCategory {
public:
    explicit OrbitCategory(FiniteGroup group);

    const FiniteGroup& group() const noexcept { return group_; }
    std::size_t object_count() const noexcept { return objects_.size(); }
    const Subgroup& object(std::size_t i) const { return objects_.at(i); }
    const std::vector<Subgroup>& objects() const noexcept { return objects_; }

    const std::vector<std::size_t>& hom(std::size_t from, std::size_t to) const {
        return hom_.at(from * objects_.size() + to);
    }
    /// First f : i -> j, then f2 : j -> k.
    std::size_t compose(std::size_t i, std::size_t j, std::size_t k, std::size_t f, std::size_t f2) const;
    std::size_t identity(std::size_t i) const { return coset_rep(group_.identity(), i); }

    /// Smallest element of g * object(i).
    std::size_t coset_rep(std::size_t g, std::size_t i) const { return coset_rep_.at(i).at(g); }
    /// Sorted canonical representatives of G/object(i).
    const std::vector<std::size_t>& cosets(std::size_t i) const { return cosets_.at(i); }

    /// Identity laws, closure and associativity of composition, checked
    /// exhaustively.
    bool verify() const;

private:
    FiniteGroup group_;
    std::vector<Subgroup> objects_;
    std::vector<std::vector<std::size_t>> coset_rep_;
    std::vector<std::vector<std::size_t>> cosets_;
    std::vector<std::vector<std::size_t>> hom_;
};

/// A finite left G-set; action[g][x] is g applied to x.
struct GSet {
    std::size_t size = 0;
    std::vector<std::vector<std::uint32_t>> action;

    static GSet cosets(const FiniteGroup& g, const Subgroup& h);
    static GSet disjoint_union(const GSet& a, const GSet& b);
    /// Throws DiagramError unless the table is a group action of `g`.
    void validate(const FiniteGroup& g) const;
    std::vector<std::uint32_t> fixed_points(const Subgroup& h) const;
    std::vector<std::size_t> orbit_sizes() const;
};

/// Burnside marks: isomorphic iff |S^H| = |T^H| for every subgroup H.
bool isomorphic(const FiniteGroup& g, const GSet& s, const GSet& t);

using MorphismKey = std::tuple<std::size_t, std::size_t, std::size_t>;  // (from, to, coset rep)

/// Contravariant: a morphism f : G/H_i -> G/H_j induces X(j) -> X(i).
struct OrbitDiagramOfSets {
    std::vector<std::size_t> sizes;
    std::map<MorphismKey, std::vector<std::uint32_t>> maps;
};

/// Covariant diagram of G-sets: f : i -> j induces an equivariant Y(i) -> Y(j).
struct CovariantOrbitDiagram {
    std::vector<GSet> values;
    std::map<MorphismKey, std::vector<std::uint32_t>> maps;
};

/// G/H |-> S^H, with restriction along gK given by s |-> g s.  `points`
/// receives the S-element behind each entry when non-null.
OrbitDiagramOfSets fixed_point_diagram(const OrbitCategory& oc, const GSet& s,
                                       std::vector<std::vector<std::uint32_t>>* points = nullptr);

/// G/H |-> G/H with its left G-action; gK acts by xH |-> xgK.
CovariantOrbitDiagram nabla(const OrbitCategory& oc);

void check_functorial(const OrbitCategory& oc, const OrbitDiagramOfSets& x);
void check_functorial(const OrbitCategory& oc, const CovariantOrbitDiagram& y);

/// Coend of X and Y: the disjoint union of X(i) x Y(i) modulo
/// (X(f) x, y) ~ (x, Y(f) y), with G acting through Y.
GSet balanced_product_sets(const OrbitCategory& oc, const OrbitDiagramOfSets& x, const CovariantOrbitDiagram& y);

// --- finiteness obstruction -------------------------------------------------

struct ComponentObject {
    std::size_t class_index = 0;
    Subgroup subgroup;
    std::size_t component = 0;
};

/// Integer coefficient per object (class [H], component of X^H).
struct WallVector {
    std::vector<ComponentObject> objects;
    std::vector<long long> coefficients;

    bool vanishes_off_trivial() const;
    bool is_zero() const;
};

/// Includes the trivial-subgroup objects.  The action is regularized first
/// if it does not certify.
WallVector wall_vector(const GroupAction& a, int jobs = 1);

/// Degree-0 module ranks per subgroup class; the class of B Or(G) has rank 1
/// everywhere.
struct OrbitModuleClass {
    std::vector<Subgroup> objects;
    std::vector<int> degree;
    std::vector<long long> rank;
};

OrbitModuleClass classifying_space_class(const FiniteGroup& g);

/// Balanced tensor product with the B Or(G) class.  Throws DiagramError when
/// `b` is not of that form or misses a subgroup class of `y`.
WallVector wall_product(const WallVector& y, const OrbitModuleClass& b);

enum class VerdictKind { Obstructed, SufficientHolds, Indeterminate };
std::string to_string(VerdictKind k);

struct FhVerdict {
    VerdictKind kind = VerdictKind::SufficientHolds;
    /// Obstructed: generator of the cyclic witness <g> and chi of its fixed set.
    std::optional<std::size_t> element;
    /// Indeterminate: subgroup and component with nonzero chi.
    std::optional<Subgroup> subgroup;
    std::optional<std::size_t> component;
    long long chi = 0;
    FixedSetTable table;
};

/// Necessary condition first (cyclic total chi), then the component
/// condition; anything between is Indeterminate.
FhVerdict fh_verdict(const GroupAction& a, int jobs = 1);

bool is_cyclic(const FiniteGroup& g, const Subgroup& h, std::size_t* generator = nullptr);

}  // namespace acyc
