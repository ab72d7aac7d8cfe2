#pragma once
// Loci over which the resolution has positive dimensional fibers, built by
// rewriting the defining sequence, followed by the repair rules and the
// normalization of degenerate quadrics.

#include <algorithm>
#include <optional>
#include <vector>

#include "admissible.hpp"
#include "dims.hpp"
#include "locus.hpp"
#include "seqmodel.hpp"
#include "tower.hpp"

namespace ogres {

struct RuleNotApplicable : Error { using Error::Error; };
struct DegenerateCollision : Error { using Error::Error; };

struct DegenOptions {
    bool strict_gates = false;  // literal gate text of the algorithm
};

// ---- repair rules -------------------------------------------------------------

namespace detail {

inline void sort_steps(Sequence& seq) {
    std::stable_sort(seq.steps.begin(), seq.steps.end(), [](const Step& a, const Step& b) {
        if (a.kind != b.kind) return a.is_linear();
        return a.dim < b.dim;
    });
}

struct Hit {
    int j = 0;  // linear position, 1-based
    int i = 0;  // quadric index
};

inline std::optional<Hit> find_c9(const Sequence& seq) {
    for (int j = 1; j <= seq.s(); ++j)
        for (int i = seq.quadric_count(); i >= 1; --i)
            if (seq.lin(j) - seq.quad(i).corank == 1) return Hit{j, i};
    return std::nullopt;
}

}  // namespace detail

// Rule 1: a linear step of original dim nj was shrunk; the quadric with the
// largest corank below nj absorbs it.
inline Sequence apply_rule1(Sequence seq, int nj) {
    int best = 0;
    for (int i = seq.quadric_count(); i >= 1; --i) {
        int r = seq.quad(i).corank;
        if (r < nj && (best == 0 || r > seq.quad(best).corank)) best = i;
    }
    if (best == 0) throw RuleNotApplicable("no quadric with corank below " + std::to_string(nj));
    Step& q = seq.quad(best);
    q = Step::quadric(nj, q.dim - (nj - q.corank));
    return seq;
}

// Rule 2: a quadric whose corank is one below a linear dim is cut down to the
// end of the linear group containing that dim.
inline Sequence apply_rule2(Sequence seq) {
    detail::sort_steps(seq);
    auto hit = detail::find_c9(seq);
    if (!hit) throw RuleNotApplicable("no linear step exceeds a corank by one");
    const int nj = seq.lin(hit->j);
    int target = 0;
    for (const auto& g : linear_groups(seq))
        if (g.top >= nj) {
            target = g.top;
            break;
        }
    Step& q = seq.quad(hit->i);
    q = Step::quadric(target, q.dim - (target - q.corank));
    return seq;
}

// Rule 3: the offending linear step drops to the largest group corank not
// exceeding the quadric's corank. When that would be the zero space the
// quadric is cut down instead, as in Rule 2.
inline Sequence apply_rule3(Sequence seq) {
    detail::sort_steps(seq);
    auto hit = detail::find_c9(seq);
    if (!hit) throw RuleNotApplicable("no linear step exceeds a corank by one");
    const int ri = seq.quad(hit->i).corank;
    int target = -1;
    for (const auto& g : quadric_groups(seq))
        if (g.corank <= ri) target = std::max(target, g.corank);
    if (target < 1) return apply_rule2(std::move(seq));
    seq.steps[hit->j - 1] = Step::linear(target);
    return seq;
}

inline Sequence apply_rule(const Sequence& seq, int rule, int nj = 0) {
    switch (rule) {
        case 1: return apply_rule1(seq, nj);
        case 2: return apply_rule2(seq);
        case 3: return apply_rule3(seq);
    }
    throw RuleNotApplicable("unknown rule " + std::to_string(rule));
}

// ---- normalization ---------------------------------------------------------

namespace detail {
inline bool settle_linear(Sequence& seq) {
    sort_steps(seq);
    const int s = seq.s();
    bool changed = false;
    for (int j = s - 1; j >= 1; --j) {
        Step& inner = seq.steps[j - 1];
        const Step& outer = seq.steps[j];
        if (inner.dim >= outer.dim) {
            inner = Step::linear(outer.dim - 1);
            changed = true;
            if (inner.dim < 1) throw DegenerateCollision("linear steps collapse below dimension one");
        }
    }
    for (int i = 1; i < seq.quadric_count(); ++i)
        if (seq.quad(i).dim == seq.quad(i + 1).dim)
            throw DegenerateCollision("two quadric steps of equal dimension");
    return changed;
}
}  // namespace detail

inline std::vector<Sequence> normalize(const Sequence& input) {
    std::vector<Sequence> done, work{input};
    for (auto& w : work) w.marking.reset();
    int guard = 0;
    while (!work.empty()) {
        if (++guard > 256) throw DegenerateCollision("normalization does not terminate");
        Sequence seq = std::move(work.back());
        work.pop_back();
        bool split = false;
        for (auto& st : seq.steps) {
            if (!st.is_quadric()) continue;
            if (st.corank >= st.dim - 1) {
                st = Step::linear(st.corank == st.dim ? st.dim : st.dim - 1);
            } else if (st.corank == st.dim - 2) {
                Step plain = Step::linear(st.dim - 1), primed = Step::linear(st.dim - 1, true);
                Sequence other = seq;
                st = plain;
                for (auto& o : other.steps)
                    if (o.is_quadric() && o.corank == o.dim - 2 && o.dim - 1 == plain.dim) {
                        o = primed;
                        break;
                    }
                detail::settle_linear(seq);
                detail::settle_linear(other);
                work.push_back(std::move(other));
                work.push_back(std::move(seq));
                split = true;
                break;
            }
        }
        if (split) continue;
        detail::settle_linear(seq);
        done.push_back(std::move(seq));
    }
    // unprimed member first
    std::stable_sort(done.begin(), done.end(), [](const Sequence& a, const Sequence& b) {
        auto primes = [](const Sequence& q) {
            int c = 0;
            for (const auto& st : q.steps) c += st.primed;
            return c;
        };
        return primes(a) < primes(b);
    });
    return done;
}

namespace detail {

// Repair scans and normalization until no condition-(9) clash remains.
// scan_rule 0 only normalizes.
inline std::vector<Sequence> finish(Sequence seq, int scan_rule) {
    if (scan_rule == 0) return normalize(seq);
    std::vector<Sequence> out;
    std::vector<Sequence> work{std::move(seq)};
    int guard = 0;
    while (!work.empty()) {
        Sequence cur = std::move(work.back());
        work.pop_back();
        for (int it = 0; find_c9(cur); ++it) {
            if (it > 32 || ++guard > 512) throw DegenerateCollision("repair rules do not terminate");
            cur = scan_rule == 3 ? apply_rule3(cur) : apply_rule2(cur);
        }
        for (auto& n : normalize(cur)) {
            if (find_c9(n)) work.push_back(std::move(n));
            else out.push_back(std::move(n));
        }
    }
    return out;
}

// Group g (1-based) moves down by one and takes over the smallest member of
// group g+1.
inline void hook_move(Sequence& seq, int g) {
    const auto lg = linear_groups(seq);
    const auto& grp = lg[g - 1];
    for (int j = grp.end - grp.alpha + 1; j <= grp.end; ++j) seq.steps[j - 1] = Step::linear(seq.lin(j) - 1);
    seq.steps[grp.end] = Step::linear(grp.top);
}

inline void shift_last_group(Sequence& seq, const LinearGroup& grp, int by) {
    for (int j = grp.end - grp.alpha + 1; j <= grp.end; ++j) seq.steps[j - 1] = Step::linear(seq.steps[j - 1].dim - by);
}

inline bool any_nonpositive(const Sequence& seq) {
    for (const auto& st : seq.steps)
        if (st.dim < 1) return true;
    return false;
}

inline std::optional<SigmaLocus> make_locus(const Sequence& v, Origin origin, int index, RCase rcase,
                                            std::vector<Sequence> members, int rule1_corank = -1) {
    if (members.empty()) return std::nullopt;
    SigmaLocus l;
    l.origin = origin;
    l.index = index;
    l.rcase = rcase;
    l.rule1_corank = rule1_corank;
    const int dv = dim_restriction(v).total;
    l.codim = dv - dim_restriction(members.front()).total;
    for (const auto& m : members)
        if (dv - dim_restriction(m).total != l.codim)
            throw DegenerateCollision("split members of " + origin_name(l) + " differ in dimension");
    l.members = std::move(members);
    l.fiber_dim = generic_fiber_dim(v, origin, index, rcase);
    l.preimage_codim = l.codim - l.fiber_dim;
    l.classification = Classification::Singular;
    if (origin == Origin::Ns && ns_defect(v) <= 2) l.classification = Classification::Smooth;
    return l;
}

inline Sequence unmarked(const Sequence& v) {
    Sequence w = v;
    w.marking.reset();
    return w;
}

}  // namespace detail

// ---- the loci --------------------------------------------------------------

inline std::optional<SigmaLocus> sigma_r(const Sequence& v, int h, const DegenOptions& = {}) {
    const auto qg = quadric_groups(v);
    const auto lg = linear_groups(v);
    if (h < 1 || h > static_cast<int>(qg.size())) throw IndexError("no quadric group " + std::to_string(h));
    const auto& grp = qg[h - 1];
    const int r = grp.corank;
    if (r <= v.x(grp.b)) return std::nullopt;
    const int s = v.s();
    const int ns = s ? v.lin(s) : 0;
    Sequence w = detail::unmarked(v);

    if (s == 0 || r > ns) {
        if (h != 1) return std::nullopt;
        w.steps[s] = Step::linear(r);
        return detail::make_locus(v, Origin::R, h, RCase::IA, detail::finish(w, 2));
    }
    if (r == ns) {
        if (h != 1) return std::nullopt;
        w.steps[s] = Step::linear(ns);
        detail::shift_last_group(w, lg.back(), 1);
        if (detail::any_nonpositive(w)) return std::nullopt;
        return detail::make_locus(v, Origin::R, h, RCase::ID, detail::finish(w, 2));
    }
    for (int g = 1; g <= static_cast<int>(lg.size()); ++g) {
        if (lg[g - 1].top != r) continue;
        const int nj = v.lin(lg[g - 1].end + 1);
        detail::hook_move(w, g);
        if (detail::any_nonpositive(w)) return std::nullopt;
        Sequence after = apply_rule1(w, nj);
        int ri0 = 0;
        for (int i = 1; i <= w.quadric_count(); ++i)
            if (!(w.quad(i) == after.quad(i))) ri0 = w.quad(i).corank;
        return detail::make_locus(v, Origin::R, h, RCase::IC, detail::finish(after, 3), ri0);
    }
    int jsharp = 0;
    for (int j = 1; j <= s && !jsharp; ++j)
        if (v.lin(j) > r) jsharp = j;
    const int nsharp = v.lin(jsharp);
    if (h >= 2 && !(nsharp < qg[h - 2].corank)) return std::nullopt;
    int rflat = 0;
    for (const auto& q : qg)
        if (q.corank < nsharp) rflat = std::max(rflat, q.corank);
    w.steps[jsharp - 1] = Step::linear(rflat);
    Sequence after = apply_rule1(w, nsharp);
    int ri0 = 0;
    for (int i = 1; i <= w.quadric_count(); ++i)
        if (!(w.quad(i) == after.quad(i))) ri0 = w.quad(i).corank;
    return detail::make_locus(v, Origin::R, h, RCase::IB, detail::finish(after, 3), ri0);
}

inline std::optional<SigmaLocus> sigma_n_inner(const Sequence& v, int g, const DegenOptions& opt = {}) {
    const auto lg = linear_groups(v);
    if (g < 1 || g >= static_cast<int>(lg.size())) throw IndexError("no inner linear group " + std::to_string(g));
    const auto& grp = lg[g - 1];
    if (grp.top == grp.end) return std::nullopt;
    const int m = v.quadric_count();
    for (int i = 1; i <= m; ++i)
        if (v.quad(i).corank == grp.top) return std::nullopt;
    const auto qg = quadric_groups(v);
    if (opt.strict_gates && !qg.empty() && !(qg.front().corank < grp.top)) return std::nullopt;
    Sequence w = detail::unmarked(v);
    detail::hook_move(w, g);
    if (m >= 1) {
        const int delta = grp.top - v.quad(m).corank;
        if (delta > 0)
            for (int i = qg.front().b; i <= m; ++i) {
                Step& q = w.quad(i);
                q = Step::quadric(q.corank + delta, q.dim - delta);
            }
    }
    return detail::make_locus(v, Origin::N, g, RCase::None, detail::finish(w, 0));
}

inline bool parity_trigger(const Sequence& v) {
    const int s = v.s();
    if (s < 1 || v.quadric_count() < 1) return false;
    const auto b1 = quadric_groups(v).front();
    return is_special(v, b1.b) && 2 * v.lin(s) == b1.top + b1.corank;
}

inline std::optional<SigmaLocus> sigma_ns(const Sequence& v, const DegenOptions& opt = {}) {
    const int s = v.s(), m = v.quadric_count(), k = v.k();
    if (s < 1 || m < 1) return std::nullopt;
    const auto lg = linear_groups(v);
    const auto qg = quadric_groups(v);
    const int ns = v.lin(s);
    const auto& b1 = qg.front();
    if (b1.corank >= ns || ns == s) return std::nullopt;
    if (opt.strict_gates && !(b1.top + v.x(b1.b) - s - ns > 2)) return std::nullopt;
    Sequence w = detail::unmarked(v);
    if (!parity_trigger(v)) {
        w.steps[s] = Step::linear(ns);
        detail::shift_last_group(w, lg.back(), 1);
        if (detail::any_nonpositive(w)) return std::nullopt;
        return detail::make_locus(v, Origin::Ns, 0, RCase::None, detail::finish(w, 2));
    }
    if (k < s + 2) return std::nullopt;
    w.steps[s] = Step::linear(ns - 1);
    w.steps[s + 1] = Step::linear(ns);
    detail::shift_last_group(w, lg.back(), 2);
    if (detail::any_nonpositive(w)) return std::nullopt;
    return detail::make_locus(v, Origin::NsParity, 0, RCase::None, detail::finish(w, 2));
}

inline std::optional<SigmaLocus> sigma_d(const Sequence& v, int h, const DegenOptions& = {}) {
    const auto qg = quadric_groups(v);
    if (h < 1 || h >= static_cast<int>(qg.size())) throw IndexError("no inner quadric group " + std::to_string(h));
    const auto& grp = qg[h - 1];
    if (grp.top - grp.corank - 2 * grp.beta < 3) return std::nullopt;
    Sequence w = detail::unmarked(v);
    w.quad(grp.b - 1) = Step::quadric(grp.corank, grp.top);
    for (int i = grp.b; i < grp.b + grp.beta; ++i) {
        Step& q = w.quad(i);
        q = Step::quadric(q.corank + 1, q.dim - 1);
    }
    return detail::make_locus(v, Origin::D, h, RCase::None, detail::finish(w, 3));
}

}  // namespace ogres
