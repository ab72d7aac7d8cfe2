#pragma once
// Admissibility conditions (1)-(9), special indices and markings.

#include <string>
#include <vector>

#include "seqmodel.hpp"

namespace ogres {

struct Violation {
    std::string id;  // "C1".."C9", "COrder", "CAmbient", "CMark"
    std::string detail;
    friend bool operator==(const Violation&, const Violation&) = default;
};

namespace detail {
inline std::string qname(const Sequence& seq, int i) {
    return "Q_" + std::to_string(i) + "=" + format_step(seq.quad(i));
}

// Structural problems reported as violations instead of exceptions, so that
// programmatically built sequences can be inspected.
inline void structural_violations(const Sequence& seq, std::vector<Violation>& out) {
    bool seen_quadric = false;
    int prev_lin = 0, prev_quad = 0;
    for (const auto& st : seq.steps) {
        if (st.is_linear()) {
            if (seen_quadric) out.push_back({"COrder", "linear step " + format_step(st) + " after a quadric"});
            if (st.dim <= prev_lin)
                out.push_back({"COrder", "linear dims not strictly increasing at " + format_step(st)});
            prev_lin = st.dim;
        } else {
            seen_quadric = true;
            if (st.dim <= prev_quad)
                out.push_back({"COrder", "quadric dims not strictly increasing at " + format_step(st)});
            if (st.corank < 0 || st.corank > st.dim)
                out.push_back({"COrder", "corank outside [0, dim] at " + format_step(st)});
            prev_quad = st.dim;
        }
    }
    if (2 * seq.k() > seq.n) out.push_back({"CAmbient", "2k = " + std::to_string(2 * seq.k()) + " > n"});
    for (const auto& st : seq.steps) {
        if (st.dim > seq.n) out.push_back({"CAmbient", format_step(st) + " exceeds the ambient dimension"});
        if (st.is_linear() && st.primed && 2 * st.dim != seq.n)
            out.push_back({"CAmbient", format_step(st) + " is primed but not maximal"});
    }
}
}  // namespace detail

inline std::vector<Violation> validate(const Sequence& seq) {
    std::vector<Violation> out;
    detail::structural_violations(seq, out);
    const int k = seq.k(), s = seq.s(), m = seq.quadric_count();
    auto r = [&](int i) { return seq.quad(i).corank; };
    auto d = [&](int i) { return seq.quad(i).dim; };

    if (s >= 1 && m >= 1 && 2 * seq.lin(s) > d(m) + r(m))
        out.push_back({"C1", "2n_s = " + std::to_string(2 * seq.lin(s)) + " exceeds d+r of " + detail::qname(seq, m)});

    for (int i = 1; i <= m; ++i)
        if (2 * (k - i + 1) > r(i) + d(i))
            out.push_back({"C2", "2(k-i+1) > r+d at " + detail::qname(seq, i)});

    for (int i = 1; i <= m; ++i) {
        if (r(i) + d(i) > seq.n) out.push_back({"C3", "r+d > n at " + detail::qname(seq, i)});
        if (i < m && r(i + 1) + d(i + 1) > r(i) + d(i))
            out.push_back({"C3", "r+d increases from " + detail::qname(seq, i) + " to " + detail::qname(seq, i + 1)});
    }

    for (int i = 2; i <= m; ++i)
        if (r(i - 1) > r(i))
            out.push_back({"C4", "singular loci not nested between " + detail::qname(seq, i - 1) + " and " +
                                     detail::qname(seq, i)});

    if (m >= 1) {
        const int x1 = seq.x(1);
        for (int i = 1; i <= m; ++i) {
            if (r(i) == r(1) && r(1) == x1) continue;
            for (int l = i + 1; l <= m; ++l)
                if (r(l) - r(i) < l - i - 1)
                    out.push_back({"C6", "r_" + std::to_string(l) + " - r_" + std::to_string(i) + " < " +
                                             std::to_string(l - i - 1)});
        }
        for (int l = 2; l <= m; ++l) {
            if (!(r(l) == r(l - 1) && r(l) > x1)) continue;
            for (int i = l; i <= m - 1; ++i)
                if (d(i) - d(i + 1) != r(i + 1) - r(i))
                    out.push_back({"C6", "equal coranks at index " + std::to_string(l) + " but d_" +
                                             std::to_string(i) + " - d_" + std::to_string(i + 1) +
                                             " != r_" + std::to_string(i + 1) + " - r_" + std::to_string(i)});
            if (d(l - 1) - d(l) != 1)
                out.push_back({"C6", "equal coranks at index " + std::to_string(l) + " but d_" +
                                         std::to_string(l - 1) + " - d_" + std::to_string(l) + " != 1"});
        }
    }

    if (m >= 1 && r(m) > d(m) - 3)
        out.push_back({"C7", "innermost quadric " + detail::qname(seq, m) + " has corank above d-3"});

    for (int i = 1; i <= m; ++i)
        if (2 * seq.x(i) < 2 * (k - i + 1) - (d(i) - r(i)))
            out.push_back({"C8", "x_" + std::to_string(i) + " below the linear-space bound at " + detail::qname(seq, i)});

    for (int j = 1; j <= s; ++j)
        for (int i = 1; i <= m; ++i)
            if (seq.lin(j) - r(i) == 1)
                out.push_back({"C9", "n_" + std::to_string(j) + " - r_" + std::to_string(i) + " = 1"});
    return out;
}

inline bool is_special(const Sequence& seq, int i) {
    const Step& q = seq.quad(i);
    return 2 * seq.x(i) == 2 * (seq.k() - i + 1) - (q.dim - q.corank);
}

inline std::vector<int> special_indices(const Sequence& seq) {
    std::vector<int> out;
    for (int i = 1; i <= seq.quadric_count(); ++i)
        if (is_special(seq, i)) out.push_back(i);
    return out;
}

// A marking records, for each special index, the parity attached to the
// family of maximal isotropic spaces that contains the standard unprimed one.
inline std::vector<Violation> validate_marking(const Sequence& seq, const Marking& mark) {
    std::vector<Violation> out;
    auto parity_name = [](Parity p) { return p == Parity::Even ? std::string("even") : std::string("odd"); };
    for (const auto& [i, p] : mark.parity) {
        if (i < 1 || i > seq.quadric_count() || !is_special(seq, i))
            out.push_back({"CMark", "marking given at non-special index " + std::to_string(i)});
    }
    for (const auto& [i1, p1] : mark.parity) {
        for (const auto& [i2, p2] : mark.parity) {
            if (i1 >= i2 || i2 > seq.quadric_count() || i1 < 1) continue;
            const Step &a = seq.quad(i1), &b = seq.quad(i2);
            if (a.dim + a.corank == b.dim + b.corank && p1 != p2)
                out.push_back({"CMark", "indices " + std::to_string(i1) + " and " + std::to_string(i2) +
                                            " share d+r but carry different parities"});
        }
    }
    const int s = seq.s();
    for (const auto& [i, p] : mark.parity) {
        if (s < 1 || i < 1 || i > seq.quadric_count()) continue;
        const Step& q = seq.quad(i);
        if (2 * seq.lin(s) != q.dim + q.corank) continue;
        bool primed = seq.steps[s - 1].primed;
        Parity want = ((s % 2 == 0) != primed) ? Parity::Even : Parity::Odd;
        if (p != want)
            out.push_back({"CMark", "L_{n_s} lies in the family of parity " + parity_name(want) + " at index " +
                                        std::to_string(i) + " but the marking says " + parity_name(p)});
    }
    if (seq.n == 2 * seq.k() && mark.component) {
        for (const auto& [i, p] : mark.parity) {
            if (i < 1 || i > seq.quadric_count()) continue;
            const Step& q = seq.quad(i);
            if (q.dim + q.corank == seq.n && p != *mark.component)
                out.push_back({"CMark", "index " + std::to_string(i) + " disagrees with the chosen component of OG(k,2k)"});
        }
    }
    return out;
}

}  // namespace ogres
