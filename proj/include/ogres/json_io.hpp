#pragma once
// JSON mirrors of the core types. Requires nlohmann/json.

#include <nlohmann/json.hpp>

#include "admissible.hpp"
#include "dims.hpp"
#include "locus.hpp"
#include "seqmodel.hpp"
#include "singloc.hpp"
#include "tower.hpp"
#include "typea.hpp"

namespace ogres {

using json = nlohmann::ordered_json;

inline std::string parity_text(Parity p) { return p == Parity::Even ? "even" : "odd"; }

inline Parity parity_from_text(const std::string& s) {
    if (s == "even") return Parity::Even;
    if (s == "odd") return Parity::Odd;
    throw ParseError("parity must be \"even\" or \"odd\"");
}

inline json to_json(const Sequence& seq) {
    json steps = json::array();
    for (const auto& st : seq.steps) {
        if (st.is_linear())
            steps.push_back({{"t", "L"}, {"dim", st.dim}, {"primed", st.primed}});
        else
            steps.push_back({{"t", "Q"}, {"corank", st.corank}, {"dim", st.dim}});
    }
    json out = {{"n", seq.n}, {"steps", steps}};
    if (seq.marking) {
        json par = json::object();
        for (const auto& [i, p] : seq.marking->parity) par[std::to_string(i)] = parity_text(p);
        json m = {{"parity", par}};
        if (seq.marking->component) m["component"] = parity_text(*seq.marking->component);
        out["marking"] = m;
    }
    return out;
}

inline Sequence sequence_from_json(const json& j) {
    try {
        Sequence seq;
        seq.n = j.at("n").get<int>();
        for (const auto& st : j.at("steps")) {
            const auto t = st.at("t").get<std::string>();
            if (t == "L")
                seq.steps.push_back(Step::linear(st.at("dim").get<int>(), st.value("primed", false)));
            else if (t == "Q")
                seq.steps.push_back(Step::quadric(st.at("corank").get<int>(), st.at("dim").get<int>()));
            else
                throw ParseError("step type must be \"L\" or \"Q\"");
        }
        if (j.contains("marking") && !j["marking"].is_null()) {
            Marking m;
            for (const auto& [key, val] : j["marking"].at("parity").items())
                m.parity[std::stoi(key)] = parity_from_text(val.get<std::string>());
            if (j["marking"].contains("component"))
                m.component = parity_from_text(j["marking"]["component"].get<std::string>());
            seq.marking = m;
        }
        if (seq.steps.empty()) throw ParseError("empty sequence");
        detail::check_structure(seq);
        return seq;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad sequence JSON: ") + e.what());
    }
}

inline json to_json(const Violation& v) { return {{"id", v.id}, {"detail", v.detail}}; }

inline json to_json(const DimReport& d) {
    return {{"dim", d.total}, {"linear_terms", d.linear_terms}, {"quadric_terms", d.quadric_terms}};
}

inline json groups_json(const std::vector<Group>& gs) {
    json a = json::array();
    for (const auto& g : gs) a.push_back({{"top", g.top}, {"count", g.count}});
    return a;
}

inline json to_json(const PartitionTriple& p) {
    return {{"linear", groups_json(p.linear)}, {"quadric", groups_json(p.quadric)}, {"coranks", p.coranks}};
}

inline json to_json(const SigmaLocus& l) {
    json members = json::array();
    for (const auto& m : l.members) members.push_back(format_sequence(m));
    json out = {{"origin", origin_name(l)}};
    if (l.rcase != RCase::None) out["case"] = rcase_name(l.rcase);
    out["members"] = members;
    out["codim"] = l.codim;
    out["fiber_dim"] = l.fiber_dim;
    out["preimage_codim"] = l.preimage_codim;
    out["classification"] = classification_name(l.classification);
    out["redundant"] = l.redundant;
    return out;
}

inline json to_json(const SingularLocusReport& r) {
    auto list = [](const std::vector<SigmaLocus>& ls) {
        json a = json::array();
        for (const auto& l : ls) a.push_back(to_json(l));
        return a;
    };
    return {{"input", format_sequence(r.input)},
            {"n", r.input.n},
            {"components", list(r.components)},
            {"smooth_excluded", list(r.smooth_excluded)},
            {"parity_excluded", list(r.parity_excluded)}};
}

inline json to_json(const TowerDiagram& t) {
    json rows = json::array();
    for (const auto& row : t.rows) {
        json coords = json::array();
        for (size_t c = 0; c < row.coords.size(); ++c) {
            const auto& co = row.coords[c];
            const auto& f = row.factors[c];
            coords.push_back({{"name", co.name},
                              {"dim", co.dim},
                              {"factor", f.kind == FactorKind::G ? "G" : "OG"},
                              {"sub", f.sub},
                              {"ambient", f.ambient},
                              {"factor_dim", f.dim},
                              {"two_component", f.two_component}});
        }
        rows.push_back({{"fixed", row.label}, {"coords", coords}});
    }
    return {{"dim", tower_dim(t)}, {"rows", rows}};
}

inline json to_json(const typea::Component& c) {
    return {{"partition", groups_json(c.partition.groups)},
            {"indices", typea::expand(c.partition)},
            {"codim", c.codim},
            {"fiber_dim", c.fiber_dim},
            {"preimage_codim", c.preimage_codim}};
}

}  // namespace ogres
