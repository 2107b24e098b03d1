#include <algorithm>

#include "lcgeo/construct.hpp"
#include "lcgeo/error.hpp"

namespace lcgeo {

namespace {

constexpr std::string_view kTangentialCircles = R"json({
  "elements": [
    {"id": "C", "kind": "FreePoint", "literal": [0, 0, 1]},
    {"id": "D", "kind": "FreePoint", "literal": [2, 0, 1]},
    {"id": "c1", "kind": "Circle", "args": ["C"], "radius": 1},
    {"id": "c2", "kind": "Circle", "args": ["D"], "radius": 1},
    {"id": "p1", "kind": "CircleCircleIntersect", "args": ["c1", "c2"], "branch": 1},
    {"id": "p2", "kind": "CircleCircleIntersect", "args": ["c1", "c2"], "branch": 2},
    {"id": "join", "kind": "LineJoin", "args": ["p1", "p2"]}
  ],
  "paths": []
}
)json";

constexpr std::string_view kVonStaudtMerge = R"json({
  "elements": [
    {"id": "O", "kind": "FixedPoint", "literal": [0, 0, 1]},
    {"id": "inf", "kind": "FixedPoint", "literal": [1, 0, 0]},
    {"id": "x", "kind": "FixedPoint", "literal": [2, 0, 1]},
    {"id": "y", "kind": "FixedPoint", "literal": [4, 0, 1]},
    {"id": "E", "kind": "FreePoint", "literal": [4, 2, 1]},
    {"id": "inf_E", "kind": "LineJoin", "args": ["inf", "E"]},
    {"id": "F", "kind": "SemiFreePointOnLine", "args": ["inf_E"], "literal": [4, 2, 1]},
    {"id": "l", "kind": "LineJoin", "args": ["O", "inf"]},
    {"id": "O_E", "kind": "LineJoin", "args": ["O", "E"]},
    {"id": "y_F", "kind": "LineJoin", "args": ["y", "F"]},
    {"id": "G", "kind": "PointMeet", "args": ["O_E", "y_F"]},
    {"id": "inf_G", "kind": "LineJoin", "args": ["inf", "G"]},
    {"id": "x_E", "kind": "LineJoin", "args": ["x", "E"]},
    {"id": "H", "kind": "PointMeet", "args": ["inf_G", "x_E"]},
    {"id": "m", "kind": "LineJoin", "args": ["F", "H"]},
    {"id": "sum", "kind": "PointMeet", "args": ["l", "m"]}
  ],
  "paths": []
}
)json";

constexpr std::string_view kVonStaudtOnline = R"json({
  "elements": [
    {"id": "O", "kind": "FixedPoint", "literal": [0, 0, 1]},
    {"id": "inf", "kind": "FixedPoint", "literal": [1, 0, 0]},
    {"id": "x", "kind": "FixedPoint", "literal": [2, 0, 1]},
    {"id": "y", "kind": "FixedPoint", "literal": [4, 0, 1]},
    {"id": "E", "kind": "FreePoint", "literal": [2, 0, 1]},
    {"id": "inf_E", "kind": "LineJoin", "args": ["inf", "E"]},
    {"id": "F", "kind": "SemiFreePointOnLine", "args": ["inf_E"], "literal": [4, 0, 1]},
    {"id": "l", "kind": "LineJoin", "args": ["O", "inf"]},
    {"id": "O_E", "kind": "LineJoin", "args": ["O", "E"]},
    {"id": "y_F", "kind": "LineJoin", "args": ["y", "F"]},
    {"id": "G", "kind": "PointMeet", "args": ["O_E", "y_F"]},
    {"id": "inf_G", "kind": "LineJoin", "args": ["inf", "G"]},
    {"id": "x_E", "kind": "LineJoin", "args": ["x", "E"]},
    {"id": "H", "kind": "PointMeet", "args": ["inf_G", "x_E"]},
    {"id": "m", "kind": "LineJoin", "args": ["F", "H"]},
    {"id": "sum", "kind": "PointMeet", "args": ["l", "m"]}
  ],
  "paths": []
}
)json";

std::string short_lcf(const LcfNumber& x, std::size_t max_terms = 3) {
    if (x.is_zero()) return "0";
    const auto& terms = x.terms();
    if (terms.size() <= max_terms) return to_string(x, {4, true});
    std::vector<Term> head(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(max_terms));
    return to_string(LcfNumber::from_terms(std::move(head), x.window()), {4, true}) + " + ...";
}

ScenarioTable circle_tangent() {
    Construction c = load_construction(kTangentialCircles);
    EvalResult standard = evaluate(c, default_assignment(c));
    const Element& ce = c.elements[c.index_of("c1")];
    const Element& de = c.elements[c.index_of("c2")];
    auto center = [&](const Element& e) {
        return HomVec3::from_standard(*c.elements[e.args[0]].literal, VecKind::Point);
    };
    CircleSpec c1{center(ce), LcfNumber(ce.radius)};
    CircleSpec c2{center(de), LcfNumber(de.radius)};

    // The radical line pushed off the tangency by -(3/2) d in every
    // coordinate, then cut with the second circle.
    HomVec3 l = appreciable_rep(radical_line(c1, c2));
    LcfNumber shift = LcfNumber(1.5) * LcfNumber::d_pow(Exponent(1));
    HomVec3 moved = HomVec3::line(l[0] - shift, l[1] - shift, l[2] - shift);
    IntersectionPair pair = intersect_conic_line(circle_conic(c2), moved);
    HomVec3 join = join_star(pair.p1, pair.p2);

    ScenarioTable t;
    t.scenario = "circle-tangent";
    auto column = [&](const std::string& id, const HomVec3& v) {
        t.columns.push_back({id, standard.at(id).standard, v, v.is_degenerate() ? std::nullopt : std::optional(psh(v))});
    };
    column("p1", pair.p1);
    column("p2", pair.p2);
    column("join", join);
    return t;
}

ScenarioTable von_staudt(std::string_view name, std::string_view doc, const std::vector<std::string>& ids) {
    Construction c = load_construction(doc);
    Assignment a = default_assignment(c);
    a["E"] = perturbed_point(*c.elements[c.index_of("E")].literal, 1.0, 1.0);
    EvalResult r = evaluate(c, a);
    ScenarioTable t;
    t.scenario = std::string(name);
    for (const auto& id : ids) {
        const ElementResult& e = r.at(id);
        t.columns.push_back({id, e.standard, e.raw.vec, e.shadow});
    }
    return t;
}

}  // namespace

std::vector<std::string_view> scenario_names() { return {"circle-tangent", "vonstaudt-merge", "vonstaudt-online"}; }

std::string_view scenario_document(std::string_view scenario) {
    if (scenario == "circle-tangent") return kTangentialCircles;
    if (scenario == "vonstaudt-merge") return kVonStaudtMerge;
    if (scenario == "vonstaudt-online") return kVonStaudtOnline;
    throw Error(Errc::UnknownScenario, "no scenario '" + std::string(scenario) + "'");
}

ScenarioTable run_table(std::string_view scenario) {
    if (scenario == "circle-tangent") return circle_tangent();
    if (scenario == "vonstaudt-merge")
        return von_staudt(scenario, kVonStaudtMerge, {"E", "F", "H", "m", "sum"});
    if (scenario == "vonstaudt-online")
        return von_staudt(scenario, kVonStaudtOnline,
                          {"E", "F", "G", "H", "sum", "inf_E", "O_E", "y_F", "inf_G", "x_E", "m"});
    throw Error(Errc::UnknownScenario, "no scenario '" + std::string(scenario) + "'");
}

std::string format_table(const ScenarioTable& table) {
    std::size_t width = 12;
    for (const auto& col : table.columns) width = std::max(width, col.label.size() + 2);
    std::string out = table.scenario + "\n";
    auto row = [&](const std::string& label, const std::string& name, const std::string& value) {
        std::string line = label;
        line.resize(width, ' ');
        std::string tag = name;
        tag.resize(14, ' ');
        out += line + tag + value + "\n";
    };
    for (const auto& col : table.columns) {
        row(col.label, "standard", col.standard ? format_vector(*col.standard) : "-");
        std::string ns = "(";
        for (std::size_t i = 0; i < 3; ++i) {
            if (i) ns += ", ";
            ns += short_lcf(col.nonstandard[i]);
        }
        row("", "non-standard", ns + ")");
        row("", "psh", col.shadow ? format_vector(col.shadow->vec) : "undefined");
        if (col.shadow && col.shadow->scale_exponent.sign() != 0)
            row("", "scale", "d^" + col.shadow->scale_exponent.to_string());
    }
    return out;
}

}  // namespace lcgeo
