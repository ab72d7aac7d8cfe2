#pragma once
// Restriction sequences: a chain of isotropic linear spaces followed by
// sub-quadrics, stored inner to outer.

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ogres {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : Error { using Error::Error; };
struct OrderError : Error { using Error::Error; };
struct AmbientError : Error { using Error::Error; };
struct IndexError : Error { using Error::Error; };
struct InconsistentPartition : Error { using Error::Error; };
struct NotValidated : Error { using Error::Error; };

enum class StepKind { Linear, Quadric };

struct Step {
    StepKind kind = StepKind::Linear;
    int dim = 0;
    bool primed = false;  // linear only
    int corank = 0;       // quadric only

    static Step linear(int d, bool p = false) { return {StepKind::Linear, d, p, 0}; }
    static Step quadric(int r, int d) { return {StepKind::Quadric, d, false, r}; }
    bool is_linear() const { return kind == StepKind::Linear; }
    bool is_quadric() const { return kind == StepKind::Quadric; }
    friend bool operator==(const Step&, const Step&) = default;
};

enum class Parity { Even, Odd };

struct Marking {
    std::map<int, Parity> parity;  // quadric index -> parity of the reference family
    std::optional<Parity> component;  // only meaningful when n = 2k
    friend bool operator==(const Marking&, const Marking&) = default;
};

struct Sequence {
    int n = 0;
    std::vector<Step> steps;
    std::optional<Marking> marking;

    int k() const { return static_cast<int>(steps.size()); }
    int s() const {
        int c = 0;
        for (const auto& st : steps)
            if (st.is_linear()) ++c;
        return c;
    }
    int quadric_count() const { return k() - s(); }

    // n_j for 1 <= j <= s
    int lin(int j) const {
        if (j < 1 || j > s()) throw IndexError("linear index " + std::to_string(j) + " out of range");
        return steps[j - 1].dim;
    }
    // Q_i for 1 <= i <= k-s; i = 1 is the outermost (last) step.
    const Step& quad(int i) const {
        if (i < 1 || i > quadric_count())
            throw IndexError("quadric index " + std::to_string(i) + " out of range");
        return steps[k() - i];
    }
    Step& quad(int i) {
        if (i < 1 || i > quadric_count())
            throw IndexError("quadric index " + std::to_string(i) + " out of range");
        return steps[k() - i];
    }
    // x_i = number of linear steps inside the singular locus of Q_i
    int x(int i) const {
        int r = quad(i).corank;
        int c = 0;
        for (int j = 1; j <= s(); ++j)
            if (lin(j) <= r) ++c;
        return c;
    }
    friend bool operator==(const Sequence& a, const Sequence& b) {
        return a.n == b.n && a.steps == b.steps;
    }
};

inline int x_of(const Sequence& seq, int i) { return seq.x(i); }

// ---- partitions -------------------------------------------------------------

struct Group {
    int top = 0;    // largest dim in the run
    int count = 0;  // run length
    friend bool operator==(const Group&, const Group&) = default;
};

struct PartitionTriple {
    std::vector<Group> linear;
    std::vector<Group> quadric;
    std::vector<int> coranks;  // r_1, ..., r_{k-s}
    friend bool operator==(const PartitionTriple&, const PartitionTriple&) = default;
};

namespace detail {
inline std::vector<Group> runs(const std::vector<int>& dims) {
    std::vector<Group> out;
    for (int d : dims) {
        if (!out.empty() && out.back().top + 1 == d) {
            out.back().top = d;
            ++out.back().count;
        } else {
            out.push_back({d, 1});
        }
    }
    return out;
}
}  // namespace detail

inline PartitionTriple to_partitions(const Sequence& seq) {
    std::vector<int> ld, qd;
    for (const auto& st : seq.steps) (st.is_linear() ? ld : qd).push_back(st.dim);
    PartitionTriple p;
    p.linear = detail::runs(ld);
    p.quadric = detail::runs(qd);
    for (int i = 1; i <= seq.quadric_count(); ++i) p.coranks.push_back(seq.quad(i).corank);
    return p;
}

inline Sequence from_partitions(const PartitionTriple& p, int n) {
    Sequence seq;
    seq.n = n;
    int prev = 0;
    for (const auto& g : p.linear) {
        if (g.count < 1 || g.top - g.count < prev)
            throw InconsistentPartition("linear groups overlap or are empty");
        for (int d = g.top - g.count + 1; d <= g.top; ++d) seq.steps.push_back(Step::linear(d));
        prev = g.top + 1;
    }
    int qcount = 0;
    for (const auto& g : p.quadric) qcount += g.count;
    if (qcount != static_cast<int>(p.coranks.size()))
        throw InconsistentPartition("quadric group sizes sum to " + std::to_string(qcount) + " but " +
                                    std::to_string(p.coranks.size()) + " coranks were given");
    prev = 0;
    int pos = 0;
    for (const auto& g : p.quadric) {
        if (g.count < 1 || g.top - g.count < prev)
            throw InconsistentPartition("quadric groups overlap or are empty");
        for (int d = g.top - g.count + 1; d <= g.top; ++d, ++pos) {
            // coranks are listed r_1..r_{k-s}; sequence position pos holds index k-s-pos
            int r = p.coranks[p.coranks.size() - 1 - pos];
            seq.steps.push_back(Step::quadric(r, d));
        }
        prev = g.top + 1;
    }
    return seq;
}

// ---- text format -------------------------------------------------------------

inline std::string format_step(const Step& st) {
    if (st.is_linear()) return "L" + std::to_string(st.dim) + (st.primed ? "'" : "");
    return "Q" + std::to_string(st.corank) + "_" + std::to_string(st.dim);
}

inline std::string format_sequence(const Sequence& seq) {
    std::string out;
    for (const auto& st : seq.steps) {
        if (!out.empty()) out += ' ';
        out += format_step(st);
    }
    return out;
}

namespace detail {
inline int parse_int(const std::string& tok, size_t& pos) {
    size_t start = pos;
    while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) ++pos;
    if (pos == start || pos - start > 6) throw ParseError("malformed token '" + tok + "'");
    return std::stoi(tok.substr(start, pos - start));
}

// Structural checks shared by the parser.
inline void check_structure(const Sequence& seq) {
    bool seen_quadric = false;
    int prev_lin = 0, prev_quad = 0;
    for (const auto& st : seq.steps) {
        if (st.is_linear()) {
            if (seen_quadric) throw OrderError("linear step after a quadric step");
            if (st.dim < 1) throw ParseError("linear dimension must be positive");
            if (st.dim <= prev_lin) throw OrderError("linear dimensions must strictly increase");
            prev_lin = st.dim;
        } else {
            seen_quadric = true;
            if (st.dim < 1 || st.corank > st.dim) throw ParseError("quadric needs 0 <= corank <= dim");
            if (st.dim <= prev_quad) throw OrderError("quadric dimensions must strictly increase");
            prev_quad = st.dim;
        }
    }
    if (2 * seq.k() > seq.n) throw AmbientError("2k exceeds the ambient dimension");
    for (const auto& st : seq.steps) {
        if (st.dim > seq.n) throw AmbientError("step dimension exceeds the ambient dimension");
        if (st.is_linear() && st.primed && 2 * st.dim != seq.n)
            throw AmbientError("primed linear steps must be maximal isotropic");
    }
}
}  // namespace detail

inline Sequence parse_sequence(const std::string& text, int n) {
    if (n < 1) throw AmbientError("ambient dimension must be positive");
    Sequence seq;
    seq.n = n;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        size_t pos = 1;
        if (tok[0] == 'L') {
            int d = detail::parse_int(tok, pos);
            bool primed = false;
            if (pos < tok.size() && tok[pos] == '\'') {
                primed = true;
                ++pos;
            }
            if (pos != tok.size()) throw ParseError("malformed token '" + tok + "'");
            seq.steps.push_back(Step::linear(d, primed));
        } else if (tok[0] == 'Q') {
            int r = detail::parse_int(tok, pos);
            if (pos >= tok.size() || tok[pos] != '_') throw ParseError("malformed token '" + tok + "'");
            ++pos;
            int d = detail::parse_int(tok, pos);
            if (pos != tok.size()) throw ParseError("malformed token '" + tok + "'");
            seq.steps.push_back(Step::quadric(r, d));
        } else {
            throw ParseError("unknown token '" + tok + "'");
        }
    }
    if (seq.steps.empty()) throw ParseError("empty sequence");
    detail::check_structure(seq);
    return seq;
}

// ---- group bookkeeping used by the degeneration code -------------------------

struct LinearGroup {
    int end = 0;    // a_g, 1-based position of the group's last step
    int alpha = 0;  // α_g
    int top = 0;    // n_{a_g}
};

struct QuadricGroup {
    int b = 0;     // quadric index of the member with the largest dim
    int beta = 0;  // β_h
    int top = 0;   // d_{b_h}
    int corank = 0;  // r_{b_h}
};

// Groups are listed inner to outer (g = 1 and h = 1 first).
inline std::vector<LinearGroup> linear_groups(const Sequence& seq) {
    std::vector<LinearGroup> out;
    for (int j = 1; j <= seq.s(); ++j) {
        if (!out.empty() && out.back().top + 1 == seq.lin(j)) {
            out.back().end = j;
            ++out.back().alpha;
            out.back().top = seq.lin(j);
        } else {
            out.push_back({j, 1, seq.lin(j)});
        }
    }
    return out;
}

inline std::vector<QuadricGroup> quadric_groups(const Sequence& seq) {
    std::vector<QuadricGroup> out;
    for (int i = seq.quadric_count(); i >= 1; --i) {
        const Step& q = seq.quad(i);
        if (!out.empty() && out.back().top + 1 == q.dim) {
            out.back().b = i;
            ++out.back().beta;
            out.back().top = q.dim;
            out.back().corank = q.corank;
        } else {
            out.push_back({i, 1, q.dim, q.corank});
        }
    }
    return out;
}

}  // namespace ogres
