#pragma once

// Finite abstract simplicial complexes over opaque string labels.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace acyc {

using VertexId = std::uint32_t;

/// A simplex is a strictly increasing, nonempty list of vertex ids.  Ids index
/// into the owning complex's vertex list, which is kept in lexicographic label
/// order, so id order and label order agree.
using Simplex = std::vector<VertexId>;

class ComplexError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Graph {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;

    /// Throws ComplexError on loops, repeated edges or unlisted endpoints.
    void validate() const;
};

class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Closes `generators` under nonempty faces.  Labels need not be sorted
    /// but must be unique; generator ids refer to positions in `labels`.
    SimplicialComplex(std::vector<std::string> labels, const std::vector<Simplex>& generators);

    /// Label-based constructor used by file loading.  Every listed vertex
    /// becomes a 0-simplex.
    static SimplicialComplex from_facets(std::vector<std::string> vertices,
                                         const std::vector<std::vector<std::string>>& facets);

    const std::vector<std::string>& vertices() const noexcept { return labels_; }
    std::size_t vertex_count() const noexcept { return labels_.size(); }
    const std::string& label(VertexId v) const { return labels_.at(v); }
    std::optional<VertexId> find_vertex(std::string_view label) const;

    /// -1 for the empty complex.
    int dimension() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }
    bool empty() const noexcept { return labels_.empty(); }

    /// Simplices of dimension `dim`, sorted lexicographically.  Out-of-range
    /// dimensions yield an empty list.
    const std::vector<Simplex>& simplices(int dim) const;
    std::size_t count(int dim) const { return simplices(dim).size(); }
    std::size_t size() const;

    bool contains(const Simplex& s) const;
    std::optional<std::size_t> index_of(const Simplex& s) const;

    /// Maximal simplices, in (dimension, lexicographic) order.
    std::vector<Simplex> facets() const;

    /// Canonical text form, e.g. "{a,b}".
    std::string simplex_label(const Simplex& s) const;
    std::vector<std::string> simplex_labels(const Simplex& s) const;

    /// Vertex ids of `labels`; throws ComplexError naming an unknown label.
    Simplex simplex_of(const std::vector<std::string>& labels) const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<Simplex>> by_dim_;
};

// --- construction -----------------------------------------------------------

SimplicialComplex flag_complex(const Graph& g);
Graph one_skeleton(const SimplicialComplex& c);
bool is_flag(const SimplicialComplex& c);

/// Vertices of the result are the simplices of `c`, labelled "b{...}";
/// simplices are chains under strict inclusion.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& c);
std::string barycenter_label(const SimplicialComplex& c, const Simplex& s);

SimplicialComplex link(const SimplicialComplex& c, std::string_view vertex);
/// Closed star.
SimplicialComplex star(const SimplicialComplex& c, std::string_view vertex);

/// Labels are kept when the two vertex sets are disjoint; otherwise the
/// sides are prefixed with "a:" and "b:".
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
bool join_needs_relabel(const SimplicialComplex& a, const SimplicialComplex& b);

/// Full subcomplex spanned by `keep` (ids of `c`).
SimplicialComplex full_subcomplex(const SimplicialComplex& c, const std::vector<VertexId>& keep);

/// Subcomplex generated by the given simplices of `c`.
SimplicialComplex subcomplex(const SimplicialComplex& c, const std::vector<Simplex>& generators);

/// True if every simplex of `sub` (matched by label) is a simplex of `c`.
bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& c);

/// Ordered by smallest vertex label.
std::vector<SimplicialComplex> connected_components(const SimplicialComplex& c);

long long euler_characteristic(const SimplicialComplex& c);

/// Pure of dimension d, every (d-1)-simplex in exactly two d-simplices,
/// d-simplices strongly connected.
bool is_pseudomanifold(const SimplicialComplex& c, int d);

/// Image of `s` under a vertex map; sorted and deduplicated.
Simplex image(const Simplex& s, const std::vector<VertexId>& vertex_map);

}  // namespace acyc
