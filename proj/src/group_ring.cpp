#include "acyc/group_ring.hpp"

#include "acyc/parallel.hpp"

#include <cstdio>
#include <sstream>

namespace acyc {

namespace {

long mod(long a, long n) { return ((a % n) + n) % n; }

void require_same(const GroupRingElement& a, const GroupRingElement& b) {
    if (a.n() != b.n())
        throw RingError("group ring elements over Z/" + std::to_string(a.n()) + " and Z/" + std::to_string(b.n()));
}

}  // namespace

GroupRingElement::GroupRingElement(int n) : n_(n) {
    if (n < 1) throw RingError("torsion order must be positive");
}

GroupRingElement::GroupRingElement(int n, const std::map<Key, Rational>& terms) : GroupRingElement(n) {
    for (const auto& [k, q] : terms) add_term(k.first, k.second, q);
}

void GroupRingElement::add_term(long i, long j, const Rational& q) {
    const Key key{i, static_cast<int>(mod(j, n_))};
    Rational& c = terms_[key];
    c += q;
    if (c == 0) terms_.erase(key);
}

GroupRingElement GroupRingElement::scalar(int n, const Rational& q) {
    GroupRingElement e(n);
    e.add_term(0, 0, q);
    return e;
}

GroupRingElement GroupRingElement::t(int n, long power) {
    GroupRingElement e(n);
    e.add_term(power, 0, 1);
    return e;
}

GroupRingElement GroupRingElement::s(int n, long power) {
    GroupRingElement e(n);
    e.add_term(0, power, 1);
    return e;
}

Rational GroupRingElement::coefficient(long i, long j) const {
    auto it = terms_.find({i, static_cast<int>(mod(j, n_))});
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational GroupRingElement::augment() const {
    Rational sum = 0;
    for (const auto& [k, q] : terms_) sum += q;
    return sum;
}

std::string GroupRingElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, q] : terms_) {
        Rational c = q;
        if (!first) {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        const bool unit = k.first == 0 && k.second == 0;
        if (unit || c != 1) out << c.get_str();
        if (!unit && c != 1) out << "*";
        if (k.first != 0) out << "t" << (k.first == 1 ? "" : "^" + std::to_string(k.first));
        if (k.first != 0 && k.second != 0) out << "*";
        if (k.second != 0) out << "s" << (k.second == 1 ? "" : "^" + std::to_string(k.second));
    }
    return out.str();
}

GroupRingElement GroupRingElement::operator-() const {
    GroupRingElement e(n_);
    for (const auto& [k, q] : terms_) e.terms_.emplace(k, -q);
    return e;
}

GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b) {
    require_same(a, b);
    GroupRingElement e = a;
    for (const auto& [k, q] : b.terms_) e.add_term(k.first, k.second, q);
    return e;
}

GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b) { return a + (-b); }

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    require_same(a, b);
    GroupRingElement e(a.n_);
    for (const auto& [ka, qa] : a.terms_)
        for (const auto& [kb, qb] : b.terms_) e.add_term(ka.first + kb.first, ka.second + kb.second, qa * qb);
    return e;
}

GroupRingElement proj1(const GroupRingElement& z) {
    const int n = z.n();
    GroupRingElement norm(n);
    for (int j = 0; j < n; ++j) norm = norm + GroupRingElement::scalar(n, Rational(1, n)) * GroupRingElement::s(n, j);
    return norm * z;
}

GroupRingElement proj0(const GroupRingElement& z) { return z - proj1(z); }

FreeModuleMap::FreeModuleMap(int n, std::size_t source_rank, std::size_t target_rank)
    : source(source_rank),
      target(target_rank),
      entries(target_rank, std::vector<GroupRingElement>(source_rank, GroupRingElement(n))) {}

std::vector<GroupRingElement> FreeModuleMap::apply(const std::vector<GroupRingElement>& x) const {
    if (x.size() != source) throw RingError("vector length does not match the source rank");
    std::vector<GroupRingElement> y;
    for (const auto& row : entries) {
        GroupRingElement sum(x.empty() ? row.front().n() : x.front().n());
        for (std::size_t j = 0; j < source; ++j) sum = sum + row[j] * x[j];
        y.push_back(std::move(sum));
    }
    return y;
}

bool FreeModuleMap::is_zero() const {
    for (const auto& row : entries)
        for (const auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

RationalMatrix FreeModuleMap::augmented() const {
    RationalMatrix m(target, std::vector<Rational>(source));
    for (std::size_t i = 0; i < target; ++i)
        for (std::size_t j = 0; j < source; ++j) m[i][j] = entries[i][j].augment();
    return m;
}

FreeModuleMap compose(const FreeModuleMap& first, const FreeModuleMap& second) {
    if (first.target != second.source) throw RingError("composing free module maps of mismatched ranks");
    const int n = first.entries.empty() ? second.entries.front().front().n() : first.entries.front().front().n();
    FreeModuleMap out(n, first.source, second.target);
    for (std::size_t i = 0; i < second.target; ++i)
        for (std::size_t j = 0; j < first.source; ++j)
            for (std::size_t k = 0; k < first.target; ++k)
                out.entries[i][j] = out.entries[i][j] + second.entries[i][k] * first.entries[k][j];
    return out;
}

std::vector<CandidateDifferentials> candidate_differentials(int n) {
    const auto one = GroupRingElement::one(n);
    const auto p1 = proj1(one);
    const auto p0 = proj0(one);
    const auto unit = one - GroupRingElement::t(n);  // 1 - t
    const std::pair<const GroupRingElement*, std::string> proj[] = {{&p0, "p0"}, {&p1, "p1"}};

    std::vector<CandidateDifferentials> out;
    // Indices into proj; the printed pair is (p1 | p0 | p1,p0 | -).
    struct Choice {
        int a, b, c;
        bool minus;
    };
    std::vector<Choice> order{{1, 0, 1, true}};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int sign = 0; sign < 2; ++sign) {
                    const Choice ch{a, b, c, sign == 0};
                    if (ch.a == 1 && ch.b == 0 && ch.c == 1 && ch.minus) continue;
                    order.push_back(ch);
                }
    for (const auto& ch : order) {
        const auto& pa = *proj[ch.a].first;
        const auto& pb = *proj[ch.b].first;
        const auto& pc = *proj[ch.c].first;
        const auto& pd = *proj[1 - ch.c].first;
        CandidateDifferentials cd;
        cd.printed = out.empty();
        cd.name = "d1(x,y) = (1-t)x + " + proj[ch.a].second + " y; d2(z) = (" + proj[ch.b].second + " z, " +
                  (ch.minus ? "-" : "+") + "(1-t)" + proj[ch.c].second + " z + " + proj[1 - ch.c].second + " z)";
        cd.d1 = FreeModuleMap(n, 2, 1);
        cd.d1.entries[0][0] = unit;
        cd.d1.entries[0][1] = pa;
        cd.d2 = FreeModuleMap(n, 1, 2);
        cd.d2.entries[0][0] = pb;
        cd.d2.entries[1][0] = (ch.minus ? -unit : unit) * pc + pd;
        out.push_back(std::move(cd));
    }
    return out;
}

std::string ResolutionReport::ledger() const {
    std::ostringstream out;
    out << "n = " << n << "\n";
    out << "  #  eps.d1  d1.d2  Q(x)F      status     candidate\n";
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const auto& c = candidates[i];
        std::string betti = c.tensor_betti.empty() ? "n/a" : "(";
        for (std::size_t k = 0; k < c.tensor_betti.size(); ++k)
            betti += (k ? "," : "") + std::to_string(c.tensor_betti[k]);
        if (!c.tensor_betti.empty()) betti += ")";
        std::string status = c.duplicate_of ? "dup of " + std::to_string(*c.duplicate_of)
                             : c.passes()   ? (i == selected ? "SELECTED" : "pass")
                                            : "fail";
        char line[96];
        std::snprintf(line, sizeof line, "%3zu  %-6s  %-5s  %-9s  %-9s  ", i, c.augmentation_kills_d1 ? "ok" : "FAIL",
                      c.d1_d2_zero ? "ok" : "FAIL", betti.c_str(), status.c_str());
        out << line << c.candidate.name << (c.candidate.printed ? "   [printed]" : "") << "\n";
    }
    out << "printed formulas " << (printed_passes ? "pass" : "fail") << "\n";
    return out.str();
}

ResolutionReport verify_resolution(int n, int jobs) {
    if (n < 1 || n > kMaxResolutionOrder)
        throw RingError("torsion order must lie in 1.." + std::to_string(kMaxResolutionOrder));
    ResolutionReport report;
    report.n = n;
    auto candidates = candidate_differentials(n);
    report.candidates.resize(candidates.size());
    parallel_for(candidates.size(), jobs, [&](std::size_t i) {
        CandidateCheck& c = report.candidates[i];
        c.candidate = candidates[i];
        const auto& d1 = c.candidate.d1;
        const auto& d2 = c.candidate.d2;
        const RationalMatrix e1 = d1.augmented();
        const RationalMatrix e2 = d2.augmented();
        c.augmentation_kills_d1 = e1[0][0] == 0 && e1[0][1] == 0;
        c.d1_d2_zero = compose(d2, d1).is_zero();
        // Q <- Q <- Q^2 <- Q, with the augmentation onto the left Q dropped.
        // Homology is only defined when the augmented maps still compose to 0.
        if (e1[0][0] * e2[0][0] + e1[0][1] * e2[1][0] == 0) {
            const std::size_t r1 = rational_rank(e1);
            const std::size_t r2 = rational_rank(e2);
            c.tensor_betti = {1 - r1, 2 - r1 - r2, 1 - r2};
        }
        c.tensor_homology_ok = c.tensor_betti == std::vector<std::size_t>{1, 1, 0};
    });
    for (std::size_t i = 0; i < report.candidates.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (!report.candidates[j].duplicate_of && report.candidates[j].candidate.d1 == report.candidates[i].candidate.d1 &&
                report.candidates[j].candidate.d2 == report.candidates[i].candidate.d2) {
                report.candidates[i].duplicate_of = j;
                break;
            }

    report.printed_passes = report.candidates.front().passes();
    std::vector<std::size_t> passing;
    for (std::size_t i = 0; i < report.candidates.size(); ++i)
        if (!report.candidates[i].duplicate_of && report.candidates[i].passes()) passing.push_back(i);
    if (passing.size() != 1) {
        report.selected = report.candidates.size();
        throw ResolutionError((passing.empty() ? "no candidate differential passes\n"
                                               : "more than one distinct candidate passes\n") +
                              report.ledger());
    }
    report.selected = passing.front();

    const auto& d2 = report.candidates[report.selected].candidate.d2;
    const auto one = GroupRingElement::one(n);
    std::vector<GroupRingElement> trial;
    for (int a = -1; a <= 1; ++a)
        for (int b = -1; b <= 1; ++b)
            trial.push_back(GroupRingElement::scalar(n, a) * proj1(one) + GroupRingElement::scalar(n, b) * proj0(one));
    for (const auto& u : trial) {
        for (const auto& v : trial)
            if (u * d2.entries[0][0] + v * d2.entries[1][0] == one) {
                report.left_inverse_found = true;
                report.left_inverse_u = u;
                report.left_inverse_v = v;
                break;
            }
        if (report.left_inverse_found) break;
    }
    if (!report.left_inverse_found)
        throw ResolutionError("selected d2 has no left inverse among the projection combinations\n" + report.ledger());
    return report;
}

}  // namespace acyc
