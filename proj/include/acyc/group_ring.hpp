#pragma once

// Exact arithmetic in Q[Z x Z/n] and verification of a length-two free
// resolution of Q over it.

#include "acyc/integer_matrix.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace acyc {

class RingError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when no candidate differential passes; carries the ledger text.
class ResolutionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Finite sums of q * t^i s^j with i in Z and j in Z/n.
class GroupRingElement {
public:
    using Key = std::pair<long, int>;  // (power of t, power of s mod n)

    explicit GroupRingElement(int n = 1);
    GroupRingElement(int n, const std::map<Key, Rational>& terms);

    static GroupRingElement one(int n) { return scalar(n, 1); }
    static GroupRingElement scalar(int n, const Rational& q);
    static GroupRingElement t(int n, long power = 1);
    static GroupRingElement s(int n, long power = 1);

    int n() const noexcept { return n_; }
    const std::map<Key, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(long i, long j) const;

    /// Sum of coefficients.
    Rational augment() const;
    std::string to_string() const;

    GroupRingElement operator-() const;
    friend GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b);
    friend GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b);
    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
    friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

private:
    void add_term(long i, long j, const Rational& q);

    int n_;
    std::map<Key, Rational> terms_;
};

/// (1/n)(1 + s + ... + s^{n-1}) z.
GroupRingElement proj1(const GroupRingElement& z);
/// z - proj1(z).
GroupRingElement proj0(const GroupRingElement& z);

/// Map of free modules F^source -> F^target, acting on column vectors by
/// left multiplication with a target x source matrix.
struct FreeModuleMap {
    std::size_t source = 0;
    std::size_t target = 0;
    std::vector<std::vector<GroupRingElement>> entries;

    FreeModuleMap() = default;
    FreeModuleMap(int n, std::size_t source, std::size_t target);

    std::vector<GroupRingElement> apply(const std::vector<GroupRingElement>& x) const;
    bool is_zero() const;
    /// Entrywise augmentation: the induced map on Q tensored over the ring.
    RationalMatrix augmented() const;

    friend bool operator==(const FreeModuleMap&, const FreeModuleMap&) = default;
};

/// first then second, i.e. second * first.
FreeModuleMap compose(const FreeModuleMap& first, const FreeModuleMap& second);

struct CandidateDifferentials {
    std::string name;
    bool printed = false;
    FreeModuleMap d1;  // F^2 -> F
    FreeModuleMap d2;  // F -> F^2
};

/// Printed pair first, then every choice of projection in the d1 slot, the
/// first d2 slot, the order of projections in the second d2 slot, and the
/// sign of its (1 - t) term: 16 candidates.
std::vector<CandidateDifferentials> candidate_differentials(int n);

struct CandidateCheck {
    CandidateDifferentials candidate;
    bool augmentation_kills_d1 = false;
    bool d1_d2_zero = false;
    /// Betti numbers of Q tensored with the complex, degrees 0..2; empty
    /// when the tensored maps do not compose to zero.
    std::vector<std::size_t> tensor_betti;
    bool tensor_homology_ok = false;
    /// Index of an earlier candidate with identical maps (n = 1 collapses).
    std::optional<std::size_t> duplicate_of;

    bool passes() const { return augmentation_kills_d1 && d1_d2_zero && tensor_homology_ok; }
};

struct ResolutionReport {
    int n = 0;
    std::vector<CandidateCheck> candidates;
    std::size_t selected = 0;
    bool printed_passes = false;
    /// u * d2_1 + v * d2_2 = 1 with u, v in {a p1 + b p0 : a, b in {-1, 0, 1}},
    /// making d2 injective.
    bool left_inverse_found = false;
    GroupRingElement left_inverse_u;
    GroupRingElement left_inverse_v;

    std::string ledger() const;
};

inline constexpr int kMaxResolutionOrder = 12;

/// Throws RingError for n outside 1..12 and ResolutionError when no
/// distinct candidate, or more than one, passes, or the selected d2 has no
/// left inverse.
ResolutionReport verify_resolution(int n, int jobs = 1);

}  // namespace acyc
