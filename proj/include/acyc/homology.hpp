#pragma once

// Simplicial chain complexes, integral and rational homology, and
// Lefschetz numbers of simplicial self-maps.

#include "acyc/integer_matrix.hpp"
#include "acyc/simplicial.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace acyc {

enum class Ring { Z, Q };

struct DegreeHomology {
    int degree = 0;
    std::size_t betti = 0;
    /// Invariant factors > 1, each dividing the next.
    std::vector<Integer> torsion;

    friend bool operator==(const DegreeHomology&, const DegreeHomology&) = default;
};

struct HomologyProfile {
    bool reduced = false;
    std::vector<DegreeHomology> degrees;

    std::size_t betti(int k) const;
    const std::vector<Integer>& torsion(int k) const;
    std::vector<std::size_t> betti_numbers() const;
    /// All (reduced) Betti numbers zero, and for Z also no torsion.
    bool vanishes(Ring ring) const;

    friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

/// Boundary of the ordered simplex [v0..vk] is sum_i (-1)^i [.. v_i hat ..].
struct ChainComplexZ {
    /// basis[k] lists the k-simplices; references the source complex order.
    std::vector<std::vector<Simplex>> basis;
    /// boundary[k] : C_k -> C_{k-1}; boundary[0] is the zero map to C_{-1} = 0.
    std::vector<IntegerMatrix> boundary;

    int top_degree() const { return static_cast<int>(basis.size()) - 1; }
};

ChainComplexZ chain_complex(const SimplicialComplex& c);

/// Homology of a free chain complex given ranks of C_0..C_top and
/// differentials boundary[k] : C_k -> C_{k-1} (boundary[0] ignored).  With
/// `reduced`, C_0 is augmented onto Z.  `jobs` > 1 runs the per-degree
/// eliminations concurrently.
HomologyProfile homology_of_chains(const std::vector<std::size_t>& ranks,
                                   const std::vector<IntegerMatrix>& boundary, bool reduced, int jobs = 1);

HomologyProfile homology(const SimplicialComplex& c, bool reduced = false, int jobs = 1);

/// Throws std::invalid_argument on the empty complex.
bool is_acyclic(const SimplicialComplex& c, Ring ring);

class SimplicialMapError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Throws SimplicialMapError unless `f` sends every simplex of `c` onto a
/// simplex of `c`.
void check_simplicial_map(const SimplicialComplex& c, const std::vector<VertexId>& f);

/// Matrix of f_# : C_k -> C_k; simplices whose image drops dimension map to 0.
IntegerMatrix chain_map(const SimplicialComplex& c, const std::vector<VertexId>& f, int k);

/// Cycle representatives of H_*(c; Q), built once and reused for any number
/// of self-maps.
class RationalHomology {
public:
    explicit RationalHomology(const SimplicialComplex& c);

    int top_degree() const { return static_cast<int>(reps_.size()) - 1; }
    std::size_t betti(int k) const { return reps_.at(k).size(); }

    /// Per-degree matrices; column i is the image of the i-th basis class.
    std::vector<RationalMatrix> induced(const std::vector<VertexId>& f) const;
    Integer lefschetz(const std::vector<VertexId>& f) const;

private:
    using SparseQ = std::map<std::size_t, Rational>;
    struct Echelon {
        std::map<std::size_t, std::size_t> by_pivot;
        std::vector<SparseQ> vecs;
        std::vector<long> tag;  // -1 boundary, otherwise homology rep index
    };

    static void insert(Echelon& e, SparseQ v, long tag);
    static void reduce(const Echelon& e, SparseQ& v, std::vector<std::pair<std::size_t, Rational>>* used);
    SparseQ push_forward(const std::vector<VertexId>& f, int k, const SparseQ& chain) const;

    const SimplicialComplex* complex_;
    std::vector<Echelon> tables_;
    std::vector<std::vector<SparseQ>> reps_;
};

std::vector<RationalMatrix> induced_homology_map(const SimplicialComplex& c, const std::vector<VertexId>& f);

/// sum_k (-1)^k trace(f_* on H_k(c; Q)).
Integer lefschetz_number(const SimplicialComplex& c, const std::vector<VertexId>& f);

/// sum_k (-1)^k trace(f_# on C_k): the Hopf trace route.
Integer chain_lefschetz_number(const SimplicialComplex& c, const std::vector<VertexId>& f);

}  // namespace acyc
