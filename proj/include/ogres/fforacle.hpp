#pragma once
// Brute-force checks over small prime fields.
//
// Every step of a sequence is realized inside one split form on F_q^n: linear
// steps are spans of hyperbolic basis vectors, and the quadric Q^r_d is the
// orthogonal complement of L_r plus the first n-r-d vectors of a fixed
// orthogonal family of anisotropic vectors. Two sequences realized with the
// same n and q therefore share one coordinate system, which is what the
// containment check relies on.

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "locus.hpp"
#include "seqmodel.hpp"

namespace ogres::ff {

struct RealizationFailed : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };
struct EmptyCell : Error { using Error::Error; };
struct RealizationMismatch : Error { using Error::Error; };

constexpr int kMaxN = 24;
constexpr long long kDefaultBudget = 100000000LL;

using Vec = std::array<std::uint8_t, kMaxN>;

struct Subspace {
    std::vector<Vec> rows;  // reduced row echelon form
    std::vector<int> pivots;
    int dim() const { return static_cast<int>(rows.size()); }
};

inline long long budget_from_env() {
    if (const char* s = std::getenv("OGRES_BUDGET")) {
        char* end = nullptr;
        long long v = std::strtoll(s, &end, 10);
        if (end != s && v > 0) return v;
    }
    return kDefaultBudget;
}

class Arith {
public:
    Arith(int q, int n) : q_(q), n_(n) {
        if (q != 3 && q != 5 && q != 7) throw Error("field size must be 3, 5 or 7");
        if (n < 1 || n > kMaxN) throw BudgetExceeded("ambient dimension " + std::to_string(n) + " is too large to enumerate");
        for (int a = 1; a < q; ++a)
            for (int b = 1; b < q; ++b)
                if (a * b % q == 1) inv_[a] = b;
    }
    int q() const { return q_; }
    int n() const { return n_; }
    int add(int a, int b) const { return (a + b) % q_; }
    int mul(int a, int b) const { return a * b % q_; }
    int neg(int a) const { return a ? q_ - a : 0; }
    int inv(int a) const { return inv_[a]; }

    void axpy(Vec& y, int a, const Vec& x) const {
        if (!a) return;
        for (int i = 0; i < n_; ++i) y[i] = static_cast<std::uint8_t>((y[i] + a * x[i]) % q_);
    }
    bool is_zero(const Vec& v) const {
        for (int i = 0; i < n_; ++i)
            if (v[i]) return false;
        return true;
    }
    bool reduce(const Subspace& s, Vec& v) const {
        for (size_t t = 0; t < s.rows.size(); ++t) axpy(v, neg(v[s.pivots[t]]), s.rows[t]);
        return is_zero(v);
    }
    bool insert(Subspace& s, Vec v) const {
        if (reduce(s, v)) return false;
        int p = 0;
        while (!v[p]) ++p;
        const int c = inv(v[p]);
        for (int i = 0; i < n_; ++i) v[i] = static_cast<std::uint8_t>(mul(v[i], c));
        for (auto& row : s.rows) axpy(row, neg(row[p]), v);
        size_t at = 0;
        while (at < s.pivots.size() && s.pivots[at] < p) ++at;
        s.rows.insert(s.rows.begin() + static_cast<long>(at), v);
        s.pivots.insert(s.pivots.begin() + static_cast<long>(at), p);
        return true;
    }
    Subspace span(const std::vector<Vec>& vs) const {
        Subspace s;
        for (const auto& v : vs) insert(s, v);
        return s;
    }
    int dim_sum(const Subspace& a, const Subspace& b) const {
        Subspace s = a;
        for (const auto& v : b.rows) insert(s, v);
        return s.dim();
    }
    int dim_meet(const Subspace& a, const Subspace& b) const { return a.dim() + b.dim() - dim_sum(a, b); }
    bool contains(const Subspace& big, const Subspace& small) const {
        for (auto v : small.rows)
            if (!reduce(big, v)) return false;
        return true;
    }
    bool same(const Subspace& a, const Subspace& b) const { return a.dim() == b.dim() && contains(a, b); }

    // {y : v . y = 0 for every v in vs}, standard dot product
    Subspace nullspace(const std::vector<Vec>& vs) const {
        Subspace m = span(vs);
        std::vector<bool> pivot(n_, false);
        for (int p : m.pivots) pivot[p] = true;
        std::vector<Vec> out;
        for (int f = 0; f < n_; ++f) {
            if (pivot[f]) continue;
            Vec y{};
            y[f] = 1;
            for (size_t t = 0; t < m.rows.size(); ++t) y[m.pivots[t]] = static_cast<std::uint8_t>(neg(m.rows[t][f]));
            out.push_back(y);
        }
        return span(out);
    }
    Subspace meet(const Subspace& a, const Subspace& b) const {
        auto ann = nullspace(a.rows).rows;
        for (const auto& v : nullspace(b.rows).rows) ann.push_back(v);
        return nullspace(ann);
    }

    Vec apply(const std::vector<Vec>& gram, const Vec& x) const {
        Vec out{};
        for (int i = 0; i < n_; ++i) {
            int acc = 0;
            for (int j = 0; j < n_; ++j) acc += gram[i][j] * x[j];
            out[i] = static_cast<std::uint8_t>(acc % q_);
        }
        return out;
    }
    int bil(const std::vector<Vec>& gram, const Vec& x, const Vec& y) const {
        const Vec gy = apply(gram, y);
        int acc = 0;
        for (int i = 0; i < n_; ++i) acc += x[i] * gy[i];
        return acc % q_;
    }
    Subspace perp(const std::vector<Vec>& gram, const std::vector<Vec>& vs) const {
        std::vector<Vec> f;
        for (const auto& v : vs) f.push_back(apply(gram, v));
        return nullspace(f);
    }

private:
    int q_, n_;
    std::array<int, 8> inv_{};
};

struct FlagRealization {
    int q = 3;
    int n = 0;
    Sequence seq;
    std::vector<Vec> gram;
    std::vector<Subspace> steps;     // inner to outer, one per sequence step
    std::vector<Subspace> radicals;  // radical of each quadric step; empty for linear steps
    std::vector<int> x_required;     // x_i at quadric positions, -1 at linear positions
};

namespace detail {
struct SplitBasis {
    int m, n;
    int e(int i) const { return i - 1; }
    int f(int i) const { return m + i - 1; }
    int g() const { return 2 * m; }
};

inline Vec unit(int i) {
    Vec v{};
    v[i] = 1;
    return v;
}

inline Subspace radical_of(const Arith& ar, const std::vector<Vec>& gram, const Subspace& w) {
    return ar.meet(w, ar.perp(gram, w.rows));
}

inline void verify(const Arith& ar, const FlagRealization& r) {
    const auto& seq = r.seq;
    auto fail = [&](const std::string& what) {
        throw RealizationFailed(what + " in the realization of " + format_sequence(seq));
    };
    for (int p = 0; p < seq.k(); ++p) {
        const Step& st = seq.steps[p];
        const Subspace& a = r.steps[p];
        if (a.dim() != st.dim) fail("wrong dimension at " + format_step(st));
        if (st.is_linear()) {
            for (const auto& u : a.rows)
                for (const auto& v : a.rows)
                    if (ar.bil(r.gram, u, v)) fail(format_step(st) + " is not isotropic");
        } else {
            Subspace rad = radical_of(ar, r.gram, a);
            if (rad.dim() != st.corank) fail("corank mismatch at " + format_step(st));
            if (!ar.same(rad, r.radicals[p])) fail("unexpected radical at " + format_step(st));
        }
        if (p > 0 && !ar.contains(a, r.steps[p - 1])) fail("nesting broken below " + format_step(st));
        if (p > 0 && st.is_quadric() && seq.steps[p - 1].is_quadric() &&
            !ar.contains(r.radicals[p - 1], r.radicals[p]))
            fail("singular loci not nested at " + format_step(st));
    }
    for (int j = 1; j <= seq.s(); ++j)
        for (int p = seq.s(); p < seq.k(); ++p) {
            const int want = std::min(seq.lin(j), seq.steps[p].corank);
            if (ar.dim_meet(r.steps[j - 1], r.radicals[p]) != want)
                fail("L" + std::to_string(seq.lin(j)) + " meets a singular locus in the wrong dimension");
        }
}
}  // namespace detail

inline FlagRealization realize_flag(const Sequence& seq, int q) {
    Arith ar(q, seq.n);
    const int n = seq.n;
    detail::SplitBasis b{n / 2, n};
    FlagRealization r;
    r.q = q;
    r.n = n;
    r.seq = seq;
    r.gram.assign(n, Vec{});
    for (int i = 1; i <= b.m; ++i) {
        r.gram[b.e(i)][b.f(i)] = 1;
        r.gram[b.f(i)][b.e(i)] = 1;
    }
    if (n % 2) r.gram[b.g()][b.g()] = 1;

    auto isotropic_span = [&](int p, bool primed) {
        std::vector<Vec> vs;
        for (int i = 1; i <= p; ++i) vs.push_back(detail::unit(primed && i == p ? b.f(i) : b.e(i)));
        return ar.span(vs);
    };
    // orthogonal anisotropic vectors, consumed from the top of the basis down
    std::vector<Vec> anis;
    if (n % 2) anis.push_back(detail::unit(b.g()));
    for (int i = b.m; i >= 1; --i) {
        Vec plus{}, minus{};
        plus[b.e(i)] = 1;
        plus[b.f(i)] = 1;
        minus[b.e(i)] = 1;
        minus[b.f(i)] = static_cast<std::uint8_t>(q - 1);
        anis.push_back(plus);
        anis.push_back(minus);
    }

    for (const auto& st : seq.steps) {
        if (st.is_linear()) {
            if (st.dim > b.m) throw RealizationFailed(format_step(st) + " exceeds the Witt index");
            r.steps.push_back(isotropic_span(st.dim, st.primed));
            r.radicals.emplace_back();
            r.x_required.push_back(-1);
            continue;
        }
        const int c = n - st.corank - st.dim;
        if (c < 0 || st.corank > b.m) throw RealizationFailed("no room for " + format_step(st));
        Subspace rad = isotropic_span(st.corank, false);
        std::vector<Vec> cut = rad.rows;
        cut.insert(cut.end(), anis.begin(), anis.begin() + c);
        r.steps.push_back(ar.perp(r.gram, cut));
        r.radicals.push_back(rad);
        r.x_required.push_back(0);
    }
    for (int i = 1; i <= seq.quadric_count(); ++i) r.x_required[seq.k() - i] = seq.x(i);
    detail::verify(ar, r);
    return r;
}

// Apply a random isometry of the form (a product of reflections) to every step.
inline FlagRealization transform(const FlagRealization& r, std::mt19937& rng, int reflections = 6) {
    Arith ar(r.q, r.n);
    std::uniform_int_distribution<int> coef(0, r.q - 1);
    std::vector<Vec> mirrors;
    while (static_cast<int>(mirrors.size()) < reflections) {
        Vec v{};
        for (int i = 0; i < r.n; ++i) v[i] = static_cast<std::uint8_t>(coef(rng));
        if (ar.bil(r.gram, v, v)) mirrors.push_back(v);
    }
    auto map = [&](Vec x) {
        for (const auto& v : mirrors) {
            // x - 2 B(x,v)/B(v,v) v
            const int t = ar.mul(ar.mul(2, ar.bil(r.gram, x, v)), ar.inv(ar.bil(r.gram, v, v)));
            ar.axpy(x, ar.neg(t), v);
        }
        return x;
    };
    auto move = [&](const Subspace& s) {
        std::vector<Vec> vs;
        for (const auto& v : s.rows) vs.push_back(map(v));
        return ar.span(vs);
    };
    FlagRealization out = r;
    for (auto& s : out.steps) s = move(s);
    for (auto& s : out.radicals) s = move(s);
    return out;
}

enum class Mode { Open, Closure };

namespace detail {
class Walker {
public:
    using Visit = std::function<void(const Subspace&)>;

    Walker(const FlagRealization& r, Mode mode, long long budget)
        : r_(r), ar_(r.q, r.n), mode_(mode), budget_(budget) {}

    // A null visitor only counts; the last level is then never materialized.
    long long run(const Visit* visit) {
        visit_ = visit;
        found_ = 0;
        Subspace lambda;
        descend(0, lambda);
        return found_;
    }

private:
    struct Guard {
        int want = 0;
        int base = 0;  // dim of lambda meet radical before the new vector
        std::vector<Vec> ured;  // basis of the complement reduced modulo lambda + radical
        Vec acc{};
    };

    void spend(long long c) {
        used_ += c;
        if (used_ > budget_)
            throw BudgetExceeded("enumeration budget of " + std::to_string(budget_) + " candidates exhausted");
    }

    void descend(int p, const Subspace& lambda) {
        const int k = static_cast<int>(r_.steps.size());
        const bool last = p == k - 1;
        const Subspace& a = r_.steps[p];
        Subspace room = lambda.rows.empty() ? a : ar_.meet(a, ar_.perp(r_.gram, lambda.rows));
        std::vector<Vec> u;
        Subspace acc = lambda;
        for (const auto& v : room.rows)
            if (ar_.insert(acc, v)) u.push_back(v);
        const int m = static_cast<int>(u.size());
        if (m == 0) return;
        const int q = ar_.q();

        std::vector<std::vector<int>> gu(m, std::vector<int>(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) gu[i][j] = ar_.bil(r_.gram, u[i], u[j]);

        // Open mode: the new vector must avoid the previous step.
        std::vector<Guard> guards;
        const bool avoid = mode_ == Mode::Open && p > 0;
        Guard prev;
        if (avoid)
            for (const auto& v : u) {
                prev.ured.push_back(v);
                ar_.reduce(r_.steps[p - 1], prev.ured.back());
            }
        for (size_t s = 0; s < r_.steps.size(); ++s) {
            if (r_.x_required[s] < 0) continue;
            Guard g;
            g.want = r_.x_required[s];
            Subspace both = r_.radicals[s];
            for (const auto& v : lambda.rows) ar_.insert(both, v);
            g.base = lambda.dim() + r_.radicals[s].dim() - both.dim();
            for (const auto& v : u) {
                g.ured.push_back(v);
                ar_.reduce(both, g.ured.back());
            }
            guards.push_back(std::move(g));
        }

        long long total = 0;
        for (int lead = 0; lead < m; ++lead) {
            long long cnt = 1;
            for (int i = lead + 1; i < m; ++i) cnt *= q;
            total += cnt;
        }
        spend(total);

        std::vector<int> c(m, 0);
        std::vector<int> w(m, 0);  // gu * c
        int qc = 0;
        auto bump = [&](int t) {
            qc = (qc + 2 * w[t] + gu[t][t]) % q;
            for (int i = 0; i < m; ++i) w[i] = (w[i] + gu[i][t]) % q;
            c[t] = (c[t] + 1) % q;
            if (avoid) ar_.axpy(prev.acc, 1, prev.ured[t]);
            for (auto& g : guards) ar_.axpy(g.acc, 1, g.ured[t]);
        };
        auto admissible = [&]() {
            if (qc != 0) return false;
            if (avoid && ar_.is_zero(prev.acc)) return false;
            for (const auto& g : guards) {
                const int got = g.base + (ar_.is_zero(g.acc) ? 1 : 0);
                if (mode_ == Mode::Open && got > g.want) return false;
                if (last && got < g.want) return false;
            }
            return true;
        };
        for (int lead = 0; lead < m; ++lead) {
            std::fill(c.begin(), c.end(), 0);
            std::fill(w.begin(), w.end(), 0);
            prev.acc = Vec{};
            for (auto& g : guards) g.acc = Vec{};
            qc = 0;
            bump(lead);
            while (true) {
                if (admissible()) {
                    if (last && !visit_) {
                        ++found_;
                    } else {
                        Vec v{};
                        for (int i = 0; i < m; ++i) ar_.axpy(v, c[i], u[i]);
                        Subspace next = lambda;
                        ar_.insert(next, v);
                        if (last) {
                            ++found_;
                            (*visit_)(next);
                        } else {
                            descend(p + 1, next);
                        }
                    }
                }
                int t = m - 1;
                while (t > lead) {
                    bump(t);
                    if (c[t] != 0) break;
                    --t;
                }
                if (t == lead) break;
            }
        }
    }

    const FlagRealization& r_;
    Arith ar_;
    Mode mode_;
    long long budget_;
    long long used_ = 0;
    long long found_ = 0;
    const Visit* visit_ = nullptr;
};

inline std::string key_of(const Subspace& s, int n) {
    std::string k;
    for (const auto& row : s.rows) k.append(reinterpret_cast<const char*>(row.data()), static_cast<size_t>(n));
    return k;
}
}  // namespace detail

// Visit every point of the cell (open) or of the rank-condition closure once.
inline void for_each_point(const FlagRealization& r, Mode mode, const std::function<void(const Subspace&)>& visit,
                           std::optional<long long> budget = std::nullopt) {
    detail::Walker w(r, mode, budget.value_or(budget_from_env()));
    if (mode == Mode::Open) {
        w.run(&visit);
        return;
    }
    std::unordered_set<std::string> seen;
    const std::function<void(const Subspace&)> dedupe = [&](const Subspace& s) {
        if (seen.insert(detail::key_of(s, r.n)).second) visit(s);
    };
    w.run(&dedupe);
}

inline long long count_cell_points(const FlagRealization& r, Mode mode, std::optional<long long> budget = std::nullopt) {
    if (mode == Mode::Open) {
        detail::Walker w(r, mode, budget.value_or(budget_from_env()));
        return w.run(nullptr);
    }
    long long n = 0;
    for_each_point(r, mode, [&](const Subspace&) { ++n; }, budget);
    return n;
}

inline long long count_cell_points(const Sequence& seq, const FlagRealization& r, Mode mode,
                                   std::optional<long long> budget = std::nullopt) {
    if (!(seq == r.seq)) throw RealizationMismatch("realization belongs to " + format_sequence(r.seq));
    return count_cell_points(r, mode, budget);
}

// Every totally isotropic k-subspace, once each, as reduced row echelon bases.
inline long long enumerate_isotropic(int k, const FlagRealization& r,
                                     const std::function<void(const Subspace&)>& visit = {},
                                     std::optional<long long> budget = std::nullopt) {
    Arith ar(r.q, r.n);
    const int n = r.n, q = r.q;
    const long long cap = budget.value_or(budget_from_env());
    long long used = 0, found = 0;
    std::vector<int> piv;
    std::vector<Vec> rows;

    std::function<void(int)> fill = [&](int i) {
        if (i == k) {
            ++found;
            if (visit) visit(ar.span(rows));
            return;
        }
        std::vector<bool> is_piv(n, false);
        for (int p : piv) is_piv[p] = true;
        std::vector<int> free_cols;
        for (int c = piv[i] + 1; c < n; ++c)
            if (!is_piv[c]) free_cols.push_back(c);
        const int f = static_cast<int>(free_cols.size());
        std::vector<int> digits(f, 0);
        while (true) {
            if (++used > cap) throw BudgetExceeded("enumeration budget of " + std::to_string(cap) + " candidates exhausted");
            Vec v{};
            v[piv[i]] = 1;
            for (int t = 0; t < f; ++t) v[free_cols[t]] = static_cast<std::uint8_t>(digits[t]);
            bool ok = ar.bil(r.gram, v, v) == 0;
            for (int j = 0; ok && j < i; ++j) ok = ar.bil(r.gram, v, rows[j]) == 0;
            if (ok) {
                rows.push_back(v);
                fill(i + 1);
                rows.pop_back();
            }
            int t = f - 1;
            while (t >= 0 && ++digits[t] == q) digits[t--] = 0;
            if (t < 0) break;
        }
    };
    std::function<void(int)> choose = [&](int from) {
        if (static_cast<int>(piv.size()) == k) {
            fill(0);
            return;
        }
        for (int c = from; c <= n - (k - static_cast<int>(piv.size())); ++c) {
            piv.push_back(c);
            choose(c + 1);
            piv.pop_back();
        }
    };
    if (k < 1 || 2 * k > n) return 0;
    choose(0);
    return found;
}

struct DimEstimate {
    long long count3 = 0;
    long long count5 = 0;
    double slope = 0;  // ln(N5/N3) / ln(5/3)
    double fitted = 0;
    int dim = 0;
};

// Point-count heuristic for the dimension of the open cell. The plain slope
// between the two counts is biased low whenever the count carries factors
// like (q+1); fitting N(q) ~ q^D (1 + 1/q)^m through both counts removes
// most of that bias, and D rounded is reported.
inline DimEstimate estimate_dim_report(const Sequence& seq, std::optional<long long> budget = std::nullopt) {
    DimEstimate e;
    e.count3 = count_cell_points(realize_flag(seq, 3), Mode::Open, budget);
    e.count5 = count_cell_points(realize_flag(seq, 5), Mode::Open, budget);
    if (e.count3 <= 0 || e.count5 <= 0) throw EmptyCell("open cell of " + format_sequence(seq) + " has no points");
    const double l3 = std::log(static_cast<double>(e.count3)), l5 = std::log(static_cast<double>(e.count5));
    e.slope = (l5 - l3) / std::log(5.0 / 3.0);
    const double a3 = std::log(4.0 / 3.0), a5 = std::log(6.0 / 5.0);
    e.fitted = (l3 * a5 - l5 * a3) / (std::log(3.0) * a5 - std::log(5.0) * a3);
    e.dim = static_cast<int>(std::lround(e.fitted));
    return e;
}

inline int estimate_dim(const Sequence& seq, std::optional<long long> budget = std::nullopt) {
    return estimate_dim_report(seq, budget).dim;
}

// Does every open point of every member satisfy the rank conditions of seq?
inline bool check_sigma_containment(const SigmaLocus& sigma, const Sequence& seq, const FlagRealization& r,
                                    std::optional<long long> budget = std::nullopt) {
    if (!(seq == r.seq)) throw RealizationMismatch("realization belongs to " + format_sequence(r.seq));
    Arith ar(r.q, r.n);
    for (const auto& member : sigma.members) {
        if (member.n != r.n || member.k() != seq.k())
            throw RealizationMismatch(format_sequence(member) + " does not live in the same Grassmannian");
        const FlagRealization mr = realize_flag(member, r.q);
        bool ok = true;
        for_each_point(
            mr, Mode::Open,
            [&](const Subspace& lambda) {
                if (!ok) return;
                for (size_t p = 0; p < r.steps.size() && ok; ++p) {
                    if (ar.dim_meet(lambda, r.steps[p]) < static_cast<int>(p) + 1) ok = false;
                    if (r.x_required[p] >= 0 && ar.dim_meet(lambda, r.radicals[p]) < r.x_required[p]) ok = false;
                }
            },
            budget);
        if (!ok) return false;
    }
    return true;
}

}  // namespace ogres::ff
