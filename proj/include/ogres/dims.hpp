#pragma once
// Dimension of a restriction variety and tangent-space excess along loci.

#include <optional>
#include <vector>

#include "locus.hpp"
#include "seqmodel.hpp"

namespace ogres {

struct DimReport {
    int total = 0;
    std::vector<int> linear_terms;   // n_j - j
    std::vector<int> quadric_terms;  // d_i + x_i - 2(k-i+1), listed for i = 1..k-s
};

namespace detail {
inline void require_sound(const Sequence& seq) {
    bool seen_quadric = false;
    int prev_lin = 0, prev_quad = 0;
    for (const auto& st : seq.steps) {
        if (st.is_linear()) {
            if (seen_quadric || st.dim <= prev_lin) throw NotValidated("linear steps out of order");
            prev_lin = st.dim;
        } else {
            if (st.dim <= prev_quad || st.corank < 0 || st.corank > st.dim)
                throw NotValidated("quadric steps out of order or corank out of range");
            seen_quadric = true;
            prev_quad = st.dim;
        }
    }
    if (seq.steps.empty()) throw NotValidated("empty sequence");
}
}  // namespace detail

inline DimReport dim_restriction(const Sequence& seq) {
    detail::require_sound(seq);
    DimReport rep;
    const int k = seq.k();
    for (int j = 1; j <= seq.s(); ++j) rep.linear_terms.push_back(seq.lin(j) - j);
    for (int i = 1; i <= seq.quadric_count(); ++i)
        rep.quadric_terms.push_back(seq.quad(i).dim + seq.x(i) - 2 * (k - i + 1));
    for (int v : rep.linear_terms) rep.total += v;
    for (int v : rep.quadric_terms) rep.total += v;
    return rep;
}

// Same quantity computed group by group. Agrees with dim_restriction when x_i
// is constant along each quadric group, which admissibility guarantees.
inline int dim_by_partitions(const Sequence& seq) {
    detail::require_sound(seq);
    const int k = seq.k();
    int total = 0;
    for (const auto& g : linear_groups(seq)) total += g.alpha * (g.top - g.end);
    for (const auto& q : quadric_groups(seq)) {
        int base = q.top + seq.x(q.b) - 2 * (k - q.b + 1);
        total += q.beta * base + q.beta * (q.beta - 1) / 2;
    }
    return total;
}

inline int ns_defect(const Sequence& seq) {
    const int s = seq.s(), m = seq.quadric_count();
    return seq.quad(m).dim + seq.x(m) - s - seq.lin(s);
}

inline std::optional<int> tangent_excess(const Sequence& seq, const SigmaLocus& locus) {
    const int s = seq.s();
    if (locus.origin == Origin::R) {
        auto groups = quadric_groups(seq);
        if (locus.index < 1 || locus.index > static_cast<int>(groups.size()))
            throw OriginMismatch("locus group index does not exist in this sequence");
        const auto& g = groups[locus.index - 1];
        if (s == 0 || g.corank >= seq.lin(s)) return g.beta;
        return std::nullopt;
    }
    if (locus.origin == Origin::Ns) {
        if (s == 0 || seq.quadric_count() == 0) throw OriginMismatch("Ns locus needs linear and quadric steps");
        return ns_defect(seq) - 2;
    }
    return std::nullopt;
}

}  // namespace ogres
