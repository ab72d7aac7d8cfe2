#pragma once
// Schubert varieties in the ordinary Grassmannian G(k,n).

#include <vector>

#include "seqmodel.hpp"

namespace ogres::typea {

struct IndexSequence {
    int n = 0;
    std::vector<int> indices;  // strictly increasing, each in [1, n]
};

struct Partition {
    std::vector<Group> groups;  // (n_{a_l}, α_l), inner to outer
    friend bool operator==(const Partition&, const Partition&) = default;
    int k() const {
        int c = 0;
        for (const auto& g : groups) c += g.count;
        return c;
    }
};

struct Component {
    Partition partition;
    int codim = 0;
    int fiber_dim = 0;
    int preimage_codim = 0;
};

inline IndexSequence make_indices(std::vector<int> idx, int n) {
    if (idx.empty()) throw ParseError("empty index sequence");
    for (size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] < 1 || idx[i] > n) throw AmbientError("index outside [1, n]");
        if (i > 0 && idx[i] <= idx[i - 1]) throw OrderError("indices must strictly increase");
    }
    return {n, std::move(idx)};
}

inline Partition schubert_partition(const IndexSequence& idx) {
    return {detail::runs(idx.indices)};
}

inline std::vector<int> expand(const Partition& p) {
    std::vector<int> out;
    for (const auto& g : p.groups)
        for (int d = g.top - g.count + 1; d <= g.top; ++d) out.push_back(d);
    return out;
}

inline int schubert_dim(const Partition& p) {
    int total = 0, a = 0;
    for (const auto& g : p.groups) {
        a += g.count;
        total += g.count * (g.top - a);
    }
    return total;
}

// One component per pair of adjacent groups: group l grows downward by one and
// group l+1 gives up its smallest member.
inline std::vector<Component> schubert_singular_locus(const Partition& p) {
    std::vector<Component> out;
    std::vector<int> a(p.groups.size());
    int acc = 0;
    for (size_t l = 0; l < p.groups.size(); ++l) a[l] = (acc += p.groups[l].count);
    for (size_t l = 0; l + 1 < p.groups.size(); ++l) {
        std::vector<int> idx = expand(p);
        int first_next = a[l];  // 0-based position of group l+1's smallest member
        for (int pos = a[l] - p.groups[l].count; pos < a[l]; ++pos) idx[pos] -= 1;
        idx[first_next] = p.groups[l].top;
        Component c;
        c.partition = {detail::runs(idx)};
        const auto& g = p.groups[l];
        const auto& h = p.groups[l + 1];
        c.codim = h.top - g.top - (a[l + 1] - a[l]) + g.count + 1;
        c.fiber_dim = g.count;
        c.preimage_codim = c.codim - c.fiber_dim;
        out.push_back(c);
    }
    return out;
}

}  // namespace ogres::typea
