#pragma once
// The singular locus as a union of degeneration loci.

#include <vector>

#include "admissible.hpp"
#include "degen.hpp"
#include "locus.hpp"
#include "seqmodel.hpp"

namespace ogres {

struct LengthMismatch : Error { using Error::Error; };

struct SingularLocusReport {
    Sequence input;
    std::vector<SigmaLocus> components;      // all Singular, canonical order
    std::vector<SigmaLocus> smooth_excluded;  // Ns loci in the smooth locus
    std::vector<SigmaLocus> parity_excluded;  // dropped by the family parity check
};

// Stepwise necessary condition for one restriction variety to lie in another.
inline bool step_contains(const Step& a, const Step& b) {
    if (a.is_linear() && b.is_linear()) return a.dim < b.dim || (a.dim == b.dim && a.primed == b.primed);
    if (a.is_linear()) return a.dim <= b.corank + (b.dim - b.corank) / 2;
    if (b.is_linear()) return false;
    return a.dim <= b.dim && a.corank >= b.corank && a.dim + a.corank <= b.dim + b.corank;
}

inline bool sequence_contains(const Sequence& a, const Sequence& b) {
    if (a.k() != b.k() || a.n != b.n) throw LengthMismatch("sequences differ in length or ambient dimension");
    for (int p = 0; p < a.k(); ++p)
        if (!step_contains(a.steps[p], b.steps[p])) return false;
    return true;
}

// When the innermost quadric group of v is special and its maximal isotropic
// spaces pass through L_{n_s}, a point of v meets L_{n_s} modulo the singular
// space in a fixed parity. A candidate whose generic point is maximal in the
// same quadric but meets L_{n_s} in the other parity lies in the other family.
inline bool parity_consistent(const Sequence& v, const Sequence& cand) {
    if (!parity_trigger(v)) return true;
    const auto b1 = quadric_groups(v).front();
    const int ns = v.lin(v.s());
    const int half = (b1.top - b1.corank) / 2;
    const int vpar = v.s() - v.x(b1.b);
    for (int i = 1; i <= cand.quadric_count(); ++i) {
        const Step& q = cand.quad(i);
        if (q.corank != b1.corank || q.dim != b1.top) continue;
        const int x = cand.x(i);
        if (cand.k() - i + 1 - x != half) return true;
        int below = 0;
        for (int j = 1; j <= cand.s(); ++j)
            if (cand.lin(j) <= ns) ++below;
        return (below - x - vpar) % 2 == 0;
    }
    return true;
}

inline Classification classify_locus(const Sequence& v, const SigmaLocus& l) {
    if (l.origin == Origin::Ns) {
        if (v.s() < 1 || v.quadric_count() < 1) throw OriginMismatch("Ns locus needs linear and quadric steps");
        return ns_defect(v) == 2 ? Classification::Smooth : Classification::Singular;
    }
    return Classification::Singular;
}

namespace detail {
inline std::vector<SigmaLocus> all_loci(const Sequence& v, const DegenOptions& opt) {
    std::vector<SigmaLocus> out;
    const int t = static_cast<int>(linear_groups(v).size());
    const int u = static_cast<int>(quadric_groups(v).size());
    for (int g = 1; g <= t - 1; ++g)
        if (auto l = sigma_n_inner(v, g, opt)) out.push_back(*l);
    if (auto l = sigma_ns(v, opt)) out.push_back(*l);
    for (int h = 1; h <= u; ++h)
        if (auto l = sigma_r(v, h, opt)) out.push_back(*l);
    for (int h = 1; h <= u - 1; ++h)
        if (auto l = sigma_d(v, h, opt)) out.push_back(*l);
    return out;
}

inline bool parity_ok(const Sequence& v, const SigmaLocus& l) {
    for (const auto& m : l.members)
        if (!parity_consistent(v, m)) return false;
    return true;
}
}  // namespace detail

inline std::vector<SigmaLocus> exceptional_image(const Sequence& v, const DegenOptions& opt = {}) {
    std::vector<SigmaLocus> out;
    for (auto& l : detail::all_loci(v, opt))
        if (opt.strict_gates || detail::parity_ok(v, l)) out.push_back(std::move(l));
    return out;
}

inline SingularLocusReport singular_locus(const Sequence& v, const DegenOptions& opt = {}) {
    SingularLocusReport rep;
    rep.input = v;
    for (auto& l : detail::all_loci(v, opt)) {
        if (!opt.strict_gates && !detail::parity_ok(v, l)) {
            rep.parity_excluded.push_back(std::move(l));
            continue;
        }
        l.classification = classify_locus(v, l);
        if (l.classification == Classification::Smooth) rep.smooth_excluded.push_back(std::move(l));
        else rep.components.push_back(std::move(l));
    }
    auto inside = [](const SigmaLocus& a, const SigmaLocus& b) {
        for (const auto& ma : a.members) {
            bool found = false;
            for (const auto& mb : b.members)
                if (sequence_contains(ma, mb)) found = true;
            if (!found) return false;
        }
        return true;
    };
    auto& c = rep.components;
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < c.size(); ++j) {
            if (i == j || !inside(c[i], c[j])) continue;
            if (!inside(c[j], c[i]) || j < i) c[i].redundant = true;
        }
    return rep;
}

}  // namespace ogres
