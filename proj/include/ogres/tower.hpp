#pragma once
// The resolution as a diagram of T/O/Z coordinates and its bundle factors.
//
// Rows are built top to bottom: one per linear group, then one per quadric
// group. Columns are T followed by one column per quadric group, outermost
// group first. Each coordinate is chosen inside the next coordinate of its row
// (or the row's fixed space) and contains the coordinate above it in its
// column (or that column's singular space). Forgetting coordinates bottom row
// first, left to right, exhibits the tower as iterated Grassmannian bundles.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "locus.hpp"
#include "seqmodel.hpp"

namespace ogres {

enum class CoordKind { T, O, Z };
enum class FactorKind { G, OG };

struct TowerCoordinate {
    CoordKind kind = CoordKind::T;
    std::string name;  // e.g. "T^2", "O^{1,n7}", "O^{2,r5}", "Z^1"
    int column = 0;    // 0 = T column, h >= 1 = quadric group column
    int dim = 0;
    int above_dim = 0;
    int right_dim = 0;
};

struct BundleFactor {
    FactorKind kind = FactorKind::G;
    int sub = 0;
    int ambient = 0;
    int dim = 0;
    bool two_component = false;
    std::string coordinate;
};

struct TowerRow {
    std::string label;  // fixed space at the end of the row
    int fixed_dim = 0;
    std::vector<TowerCoordinate> coords;  // left to right
    std::vector<BundleFactor> factors;    // one per coordinate, same order
};

struct TowerDiagram {
    std::vector<TowerRow> rows;  // bottom row first
    std::string ascii;
};

inline int grassmannian_dim(int a, int b) { return a * (b - a); }
inline int og_dim(int a, int b) { return a * (b - 2 * a) + a * (a - 1) / 2; }

inline TowerDiagram build_tower(const Sequence& seq) {
    const int k = seq.k();
    const auto lg = linear_groups(seq);
    const auto qg = quadric_groups(seq);
    const int u = static_cast<int>(qg.size());

    std::vector<TowerRow> top_down;
    // last dim seen in each column; column 0 is T, column h is quadric group h
    std::vector<std::optional<int>> last(u + 1);
    auto above_of = [&](int col) -> int {
        if (last[col]) return *last[col];
        return col == 0 ? 0 : qg[col - 1].corank;
    };

    auto finish_row = [&](TowerRow& row) {
        for (size_t c = 0; c < row.coords.size(); ++c) {
            auto& co = row.coords[c];
            co.above_dim = above_of(co.column);
            co.right_dim = c + 1 < row.coords.size() ? row.coords[c + 1].dim : row.fixed_dim;
        }
        for (auto& co : row.coords) {
            BundleFactor f;
            f.coordinate = co.name;
            if (co.kind == CoordKind::Z) {
                const auto& g = qg[co.column - 1];
                int p = co.above_dim - g.corank;
                f.kind = FactorKind::OG;
                f.sub = co.dim - co.above_dim;
                f.ambient = g.top - g.corank - 2 * p;
                f.dim = og_dim(f.sub, f.ambient);
                f.two_component = f.sub > 0 && f.ambient == 2 * f.sub;
            } else {
                f.kind = FactorKind::G;
                f.sub = co.dim - co.above_dim;
                f.ambient = co.right_dim - co.above_dim;
                f.dim = grassmannian_dim(f.sub, f.ambient);
            }
            row.factors.push_back(f);
        }
        for (const auto& co : row.coords) last[co.column] = co.dim;
    };

    for (const auto& g : lg) {
        TowerRow row;
        row.label = "L" + std::to_string(g.top);
        row.fixed_dim = g.top;
        row.coords.push_back({CoordKind::T, "T^" + std::to_string(static_cast<int>(top_down.size()) + 1), 0, g.end});
        for (int h = u; h >= 1; --h) {
            const auto& q = qg[h - 1];
            if (q.corank < g.top)
                row.coords.push_back({CoordKind::O, "O^{" + std::to_string(h) + ",n" + std::to_string(g.top) + "}", h,
                                      q.corank + g.end - seq.x(q.b)});
        }
        finish_row(row);
        top_down.push_back(std::move(row));
    }
    for (int th = 1; th <= u; ++th) {
        const auto& q = qg[th - 1];
        const int inter = k - q.b + 1;
        TowerRow row;
        row.label = format_step(seq.quad(q.b));
        row.fixed_dim = q.top;
        row.coords.push_back({CoordKind::T, "T^" + std::to_string(static_cast<int>(top_down.size()) + 1), 0, inter});
        for (int h = u; h > th; --h) {
            const auto& o = qg[h - 1];
            row.coords.push_back({CoordKind::O, "O^{" + std::to_string(h) + ",r" + std::to_string(q.corank) + "}", h,
                                  o.corank + inter - seq.x(o.b)});
        }
        row.coords.push_back({CoordKind::Z, "Z^" + std::to_string(th), th, q.corank + inter - seq.x(q.b)});
        finish_row(row);
        top_down.push_back(std::move(row));
    }

    TowerDiagram out;
    out.rows.assign(top_down.rbegin(), top_down.rend());

    std::ostringstream os;
    for (const auto& row : top_down) {
        std::vector<std::string> cells(u + 1, ".");
        for (const auto& co : row.coords)
            cells[co.column == 0 ? 0 : u - co.column + 1] = co.name + "(" + std::to_string(co.dim) + ")";
        for (const auto& c : cells) {
            os << c;
            for (size_t pad = c.size(); pad < 16; ++pad) os << ' ';
        }
        os << "| " << row.label << "\n";
    }
    out.ascii = os.str();
    return out;
}

inline int tower_dim(const TowerDiagram& t) {
    int total = 0;
    for (const auto& row : t.rows)
        for (const auto& f : row.factors) total += f.dim;
    return total;
}

// Generic fiber dimension of the resolution over a locus, from the case tables.
inline int generic_fiber_dim(const Sequence& seq, Origin origin, int index, RCase rcase) {
    const int k = seq.k(), s = seq.s();
    const auto lg = linear_groups(seq);
    const auto qg = quadric_groups(seq);
    auto qgroup = [&](int h) -> const QuadricGroup& {
        if (h < 1 || h > static_cast<int>(qg.size())) throw OriginMismatch("no quadric group " + std::to_string(h));
        return qg[h - 1];
    };
    auto group_of_position = [&](int j) -> const LinearGroup& {
        for (const auto& g : lg)
            if (j <= g.end) return g;
        throw OriginMismatch("no linear step at position " + std::to_string(j));
    };
    switch (origin) {
        case Origin::R: {
            const auto& q = qgroup(index);
            const int x = seq.x(q.b);
            switch (rcase) {
                case RCase::IA: return q.top - q.corank - 2 * (k - q.b - x) - 2;
                case RCase::ID:
                    if (lg.empty()) throw OriginMismatch("case I.D needs linear steps");
                    return q.top - q.corank - 2 * (k - q.b - x) - 2 + lg.back().alpha;
                case RCase::IB: {
                    int jsharp = 0;
                    for (int j = 1; j <= s && !jsharp; ++j)
                        if (seq.lin(j) > q.corank) jsharp = j;
                    if (!jsharp) throw OriginMismatch("case I.B needs a linear step above the corank");
                    const auto& g = group_of_position(jsharp);
                    return g.top - (q.corank + g.end - x);
                }
                case RCase::IC: {
                    for (size_t g = 0; g + 1 < lg.size(); ++g)
                        if (lg[g].top == q.corank)
                            return lg[g + 1].top - lg[g].top - lg[g + 1].alpha + lg[g].alpha;
                    throw OriginMismatch("case I.C needs a linear group ending at the corank");
                }
                default: throw OriginMismatch("R locus without a case tag");
            }
        }
        case Origin::N:
            if (index < 1 || index >= static_cast<int>(lg.size())) throw OriginMismatch("no inner linear group");
            return lg[index - 1].alpha;
        case Origin::Ns:
        case Origin::NsParity:
            if (lg.empty()) throw OriginMismatch("Ns locus needs linear steps");
            return lg.back().alpha;
        case Origin::D: return qgroup(index).beta;
    }
    throw OriginMismatch("unknown origin");
}

inline int generic_fiber_dim(const Sequence& seq, const SigmaLocus& locus) {
    return generic_fiber_dim(seq, locus.origin, locus.index, locus.rcase);
}

}  // namespace ogres
