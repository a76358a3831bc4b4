#pragma once

// Finite permutation groups and their subgroup lattices.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace acyc {

/// One-line notation: p[i] is the image of i.  Composition (p * q)[i] = p[q[i]],
/// i.e. q acts first.
using Permutation = std::vector<std::uint32_t>;

Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
Permutation identity_permutation(std::size_t n);
bool is_bijection(const Permutation& p);

class GroupError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kDefaultMaxGroupOrder = 10'000;

/// A finite group realized faithfully by permutations of `degree()` letters.
/// Element 0 is the identity.
class FiniteGroup {
public:
    FiniteGroup() : FiniteGroup(std::vector<Permutation>{Permutation{}}) {}

    /// Validates closure, identity at index 0 and inverses; builds the table.
    explicit FiniteGroup(std::vector<Permutation> elements, std::vector<std::size_t> generators = {});

    std::size_t order() const noexcept { return elements_.size(); }
    std::size_t degree() const noexcept { return elements_.front().size(); }
    const Permutation& element(std::size_t i) const { return elements_.at(i); }
    const std::vector<Permutation>& elements() const noexcept { return elements_; }
    /// Indices of the generators the group was closed from.
    const std::vector<std::size_t>& generators() const noexcept { return generators_; }

    std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a * order() + b]; }
    std::size_t inverse_of(std::size_t a) const { return inverses_.at(a); }
    std::size_t identity() const noexcept { return 0; }
    std::size_t element_order(std::size_t a) const;
    /// Index of a permutation, or throws GroupError if it is not an element.
    std::size_t index_of(const Permutation& p) const;
    bool contains(const Permutation& p) const { return lookup_.count(p) != 0; }

private:
    std::vector<Permutation> elements_;
    std::vector<std::size_t> generators_;
    std::map<Permutation, std::size_t> lookup_;
    std::vector<std::size_t> table_;
    std::vector<std::size_t> inverses_;
};

/// Breadth-first closure from the identity; element order is deterministic
/// in the generator order.  All generators must share one degree.
FiniteGroup group_closure(const std::vector<Permutation>& generators,
                          std::size_t max_order = kDefaultMaxGroupOrder);

struct Subgroup {
    /// Sorted element indices into the parent group.
    std::vector<std::size_t> elements;
    std::vector<std::size_t> generators;

    std::size_t order() const noexcept { return elements.size(); }
    bool trivial() const noexcept { return elements.size() == 1; }
    bool contains(std::size_t g) const;
    bool is_subset_of(const Subgroup& other) const;

    friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements == b.elements; }
};

/// Canonical order: by order, then lexicographically by element indices.
bool subgroup_less(const Subgroup& a, const Subgroup& b);

Subgroup generated_subgroup(const FiniteGroup& g, std::vector<std::size_t> generators);
Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);
Subgroup cyclic_subgroup(const FiniteGroup& g, std::size_t element);
/// x H x^{-1}
Subgroup conjugate(const FiniteGroup& g, const Subgroup& h, std::size_t x);
bool are_conjugate(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);

/// Seeded by the cyclic subgroups, joined pairwise until stable.  With
/// `up_to_conjugacy`, keeps the canonically least member of each class.
std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g, bool up_to_conjugacy);

/// Index of the conjugacy-class representative (from `reps`) of `h`.
std::size_t class_of(const FiniteGroup& g, const std::vector<Subgroup>& reps, const Subgroup& h);

}  // namespace acyc
