// Command-line front end: ogres <verb> "<sequence>" --n N [flags]

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>

#include "ogres/admissible.hpp"
#include "ogres/dims.hpp"
#include "ogres/fforacle.hpp"
#include "ogres/json_io.hpp"
#include "ogres/singloc.hpp"
#include "ogres/tower.hpp"
#include "ogres/typea.hpp"

namespace {

using namespace ogres;

constexpr int kOk = 0;
constexpr int kInadmissible = 1;
constexpr int kParse = 2;
constexpr int kOracle = 3;

struct Args {
    std::string text;
    int n = 0;
    int q = 3;
    bool json = false;
    bool ascii = false;
    bool strict = false;
    std::string mode = "open";
};

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

// Validates and prints violations; returns true when the caller may proceed.
bool admissible_or_report(const Sequence& seq, const Args& a) {
    auto v = validate(seq);
    if (seq.marking) {
        auto mv = validate_marking(seq, *seq.marking);
        v.insert(v.end(), mv.begin(), mv.end());
    }
    if (v.empty()) return true;
    if (a.json) {
        json arr = json::array();
        for (const auto& x : v) arr.push_back(to_json(x));
        print({{"input", format_sequence(seq)}, {"admissible", false}, {"violations", arr}});
    } else {
        std::cout << format_sequence(seq) << " is not admissible\n";
        for (const auto& x : v) std::cout << "  " << x.id << ": " << x.detail << "\n";
    }
    return false;
}

std::string locus_note(const SigmaLocus& l) {
    std::ostringstream os;
    os << origin_name(l);
    if (l.rcase != RCase::None) os << " " << rcase_name(l.rcase);
    os << " codim=" << l.codim << " fiber=" << l.fiber_dim << " preimage=" << l.preimage_codim;
    if (l.redundant) os << " redundant";
    return os.str();
}

void print_loci(const std::vector<SigmaLocus>& ls, const std::string& prefix) {
    for (const auto& l : ls)
        for (const auto& m : l.members) std::cout << prefix << format_sequence(m) << "    # " << locus_note(l) << "\n";
}

int cmd_validate(const Args& a) {
    auto seq = parse_sequence(a.text, a.n);
    if (!admissible_or_report(seq, a)) return kInadmissible;
    const auto sp = special_indices(seq);
    if (a.json) {
        print({{"input", format_sequence(seq)}, {"admissible", true}, {"special_indices", sp}});
    } else {
        std::cout << format_sequence(seq) << " is admissible\n";
        if (!sp.empty()) {
            std::cout << "special indices:";
            for (int i : sp) std::cout << " " << i;
            std::cout << "\n";
        }
    }
    return kOk;
}

int cmd_dim(const Args& a) {
    auto seq = parse_sequence(a.text, a.n);
    if (!admissible_or_report(seq, a)) return kInadmissible;
    const auto d = dim_restriction(seq);
    if (a.json) {
        json j = to_json(d);
        j["input"] = format_sequence(seq);
        print(j);
    } else {
        std::cout << d.total << "\n";
    }
    return kOk;
}

int cmd_partitions(const Args& a) {
    auto seq = parse_sequence(a.text, a.n);
    const auto p = to_partitions(seq);
    if (a.json) {
        print(to_json(p));
        return kOk;
    }
    auto groups = [](const std::vector<Group>& gs) {
        std::string s = "(";
        for (size_t i = 0; i < gs.size(); ++i) {
            if (i) s += ", ";
            s += std::to_string(gs[i].top);
            if (gs[i].count > 1) s += "^" + std::to_string(gs[i].count);
        }
        return s + ")";
    };
    std::string r = "(";
    for (size_t i = 0; i < p.coranks.size(); ++i) r += (i ? ", " : "") + std::to_string(p.coranks[i]);
    std::cout << groups(p.linear) << " " << groups(p.quadric) << " " << r << ")\n";
    return kOk;
}

int cmd_schubert(const Args& a) {
    std::istringstream in(a.text);
    std::vector<int> idx;
    std::string tok;
    while (in >> tok) {
        try {
            size_t used = 0;
            idx.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw ParseError("bad index '" + tok + "'");
        } catch (const std::logic_error&) {
            throw ParseError("bad index '" + tok + "'");
        }
    }
    const auto p = typea::schubert_partition(typea::make_indices(idx, a.n));
    const auto comps = typea::schubert_singular_locus(p);
    if (a.json) {
        json arr = json::array();
        for (const auto& c : comps) arr.push_back(to_json(c));
        print({{"k", p.k()}, {"n", a.n}, {"partition", groups_json(p.groups)}, {"dim", typea::schubert_dim(p)},
               {"singular_locus", arr}});
        return kOk;
    }
    std::cout << "dim " << typea::schubert_dim(p) << "\n";
    for (const auto& c : comps) {
        const auto ix = typea::expand(c.partition);
        for (size_t i = 0; i < ix.size(); ++i) std::cout << (i ? " " : "") << ix[i];
        std::cout << "    # codim=" << c.codim << " fiber=" << c.fiber_dim << " preimage=" << c.preimage_codim << "\n";
    }
    return kOk;
}

int cmd_singular(const Args& a) {
    auto seq = parse_sequence(a.text, a.n);
    if (!admissible_or_report(seq, a)) return kInadmissible;
    const auto rep = singular_locus(seq, DegenOptions{a.strict});
    if (a.json) {
        print(to_json(rep));
        return kOk;
    }
    if (rep.components.empty()) std::cout << "# smooth\n";
    print_loci(rep.components, "");
    print_loci(rep.smooth_excluded, "# in the smooth locus: ");
    print_loci(rep.parity_excluded, "# other family, dropped: ");
    return kOk;
}

int cmd_exceptional(const Args& a) {
    auto seq = parse_sequence(a.text, a.n);
    if (!admissible_or_report(seq, a)) return kInadmissible;
    auto loci = exceptional_image(seq, DegenOptions{a.strict});
    for (auto& l : loci) l.classification = classify_locus(seq, l);
    if (a.json) {
        json arr = json::array();
        for (const auto& l : loci) arr.push_back(to_json(l));
        print({{"input", format_sequence(seq)}, {"n", seq.n}, {"loci", arr}});
        return kOk;
    }
    print_loci(loci, "");
    return kOk;
}

int cmd_tower(const Args& a) {
    auto seq = parse_sequence(a.text, a.n);
    if (!admissible_or_report(seq, a)) return kInadmissible;
    const auto t = build_tower(seq);
    if (a.json) {
        print(to_json(t));
        return kOk;
    }
    if (a.ascii) std::cout << t.ascii;
    std::cout << "dim " << tower_dim(t) << "\n";
    for (const auto& row : t.rows)
        for (const auto& f : row.factors)
            std::cout << "  " << f.coordinate << ": " << (f.kind == FactorKind::G ? "G(" : "OG(") << f.sub << ","
                      << f.ambient << ") dim " << f.dim << (f.two_component ? " (two components)" : "") << "\n";
    return kOk;
}

int cmd_oracle(const std::string& action, const Args& a) {
    auto seq = parse_sequence(a.text, a.n);
    if (!admissible_or_report(seq, a)) return kInadmissible;
    if (action == "count") {
        const auto mode = a.mode == "closure" ? ff::Mode::Closure : ff::Mode::Open;
        const long long c = ff::count_cell_points(ff::realize_flag(seq, a.q), mode);
        if (a.json)
            print({{"input", format_sequence(seq)}, {"n", seq.n}, {"q", a.q}, {"mode", a.mode}, {"count", c}});
        else
            std::cout << c << "\n";
        return kOk;
    }
    const auto e = ff::estimate_dim_report(seq);
    const int d = dim_restriction(seq).total;
    if (a.json) {
        print({{"input", format_sequence(seq)}, {"count_q3", e.count3}, {"count_q5", e.count5}, {"slope", e.slope},
               {"fitted", e.fitted}, {"estimate", e.dim}, {"dim", d}});
    } else {
        std::cout << "N(3)=" << e.count3 << " N(5)=" << e.count5 << " estimate " << e.dim << " (formula " << d << ")\n";
    }
    return kOk;
}

void add_common(CLI::App* sub, Args& a, bool needs_n = true) {
    sub->add_option("sequence", a.text, "sequence text, inner to outer")->required();
    auto* n = sub->add_option("--n", a.n, "ambient dimension");
    if (needs_n) n->required();
    sub->add_flag("--json", a.json, "JSON output");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ogres: restriction varieties in orthogonal Grassmannians"};
    app.require_subcommand(1);
    Args a;
    std::string oracle_action;

    auto* validate_cmd = app.add_subcommand("validate", "check admissibility");
    add_common(validate_cmd, a);
    auto* dim_cmd = app.add_subcommand("dim", "dimension of the restriction variety");
    add_common(dim_cmd, a);
    auto* part_cmd = app.add_subcommand("partitions", "partition form of a sequence");
    add_common(part_cmd, a);
    auto* schubert_cmd = app.add_subcommand("schubert", "Schubert variety in G(k,n) from its index sequence");
    add_common(schubert_cmd, a);
    auto* sing_cmd = app.add_subcommand("singular-locus", "components of the singular locus");
    add_common(sing_cmd, a);
    sing_cmd->add_flag("--strict-gates", a.strict, "use the literal gate conditions");
    auto* exc_cmd = app.add_subcommand("exceptional", "image of the exceptional locus of the resolution");
    add_common(exc_cmd, a);
    exc_cmd->add_flag("--strict-gates", a.strict, "use the literal gate conditions");
    auto* tower_cmd = app.add_subcommand("tower", "resolution tower and its bundle factors");
    add_common(tower_cmd, a);
    tower_cmd->add_flag("--ascii", a.ascii, "print the coordinate diagram");
    auto* oracle_cmd = app.add_subcommand("oracle", "finite-field enumeration");
    oracle_cmd->add_option("action", oracle_action, "count | estimate")
        ->required()
        ->check(CLI::IsMember({"count", "estimate"}));
    add_common(oracle_cmd, a);
    oracle_cmd->add_option("--q", a.q, "field size")->check(CLI::IsMember({3, 5, 7}));
    oracle_cmd->add_option("--mode", a.mode, "open | closure")->check(CLI::IsMember({"open", "closure"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }

    try {
        if (*validate_cmd) return cmd_validate(a);
        if (*dim_cmd) return cmd_dim(a);
        if (*part_cmd) return cmd_partitions(a);
        if (*schubert_cmd) return cmd_schubert(a);
        if (*sing_cmd) return cmd_singular(a);
        if (*exc_cmd) return cmd_exceptional(a);
        if (*tower_cmd) return cmd_tower(a);
        if (*oracle_cmd) return cmd_oracle(oracle_action, a);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const OrderError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const AmbientError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const ff::BudgetExceeded& e) {
        std::cerr << "oracle: " << e.what() << "\n";
        return kOracle;
    } catch (const ff::RealizationFailed& e) {
        std::cerr << "oracle: " << e.what() << "\n";
        return kOracle;
    } catch (const ff::EmptyCell& e) {
        std::cerr << "oracle: " << e.what() << "\n";
        return kOracle;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInadmissible;
    }
    return kOk;
}
