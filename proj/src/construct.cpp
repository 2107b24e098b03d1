#include "lcgeo/construct.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "lcgeo/error.hpp"

namespace lcgeo {

namespace {

using nlohmann::json;

struct KindInfo {
    ElementKind kind;
    std::string_view name;
    std::vector<ValueType> args;
};

const std::vector<KindInfo>& kind_table() {
    using V = ValueType;
    static const std::vector<KindInfo> table = {
        {ElementKind::FreePoint, "FreePoint", {}},
        {ElementKind::SemiFreePointOnLine, "SemiFreePointOnLine", {V::Line}},
        {ElementKind::LineJoin, "LineJoin", {V::Point, V::Point}},
        {ElementKind::PointMeet, "PointMeet", {V::Line, V::Line}},
        {ElementKind::Circle, "Circle", {V::Point}},
        {ElementKind::ConicLineIntersect, "ConicLineIntersect", {V::Conic, V::Line}},
        {ElementKind::CircleCircleIntersect, "CircleCircleIntersect", {V::Conic, V::Conic}},
        {ElementKind::MidpointMu, "MidpointMu", {V::Point, V::Point}},
        {ElementKind::MidpointEff, "MidpointEff", {V::Point, V::Point}},
        {ElementKind::VonStaudtSum, "VonStaudtSum", {V::Point, V::Point, V::Point, V::Point, V::Point, V::Point}},
        {ElementKind::ConicCenter, "ConicCenter", {V::Conic}},
        {ElementKind::FixedLine, "FixedLine", {}},
        {ElementKind::FixedPoint, "FixedPoint", {}},
    };
    return table;
}

const KindInfo& info(ElementKind k) {
    for (const auto& i : kind_table())
        if (i.kind == k) return i;
    throw std::logic_error("unknown element kind");
}

bool needs_literal(ElementKind k) {
    return k == ElementKind::FreePoint || k == ElementKind::SemiFreePointOnLine || k == ElementKind::FixedLine ||
           k == ElementKind::FixedPoint;
}

[[noreturn]] void fail(Errc code, const std::string& id, const std::string& what) {
    throw Error(code, "element '" + id + "': " + what);
}

Complex parse_scalar(const json& j, const std::string& id) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_object() && j.contains("re") && j["re"].is_number()) {
        double im = 0.0;
        if (j.contains("im")) {
            if (!j["im"].is_number()) fail(Errc::ParseError, id, "imaginary part is not a number");
            im = j["im"].get<double>();
        }
        return {j["re"].get<double>(), im};
    }
    fail(Errc::ParseError, id, "coordinate is neither a number nor {re, im}");
}

StdVec3 parse_vec3(const json& j, const std::string& id) {
    if (!j.is_array() || j.size() != 3) fail(Errc::ParseError, id, "expected a homogeneous 3-vector");
    StdVec3 v{};
    for (std::size_t i = 0; i < 3; ++i) v[i] = parse_scalar(j[i], id);
    if (v[0] == 0.0 && v[1] == 0.0 && v[2] == 0.0) fail(Errc::ParseError, id, "zero vector");
    return v;
}

HomVec3 to_hom(const StdVec3& v, VecKind kind) { return HomVec3::from_standard(v, kind); }

// |<p, l>| relative to |p| |l|, on shadows.
bool incident(const HomVec3& p, const HomVec3& l) {
    if (p.is_degenerate() || l.is_degenerate()) return false;
    StdVec a = normalize_max(psh(p).vec), b = normalize_max(psh(l).vec);
    Complex s = a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    return std::abs(s) <= 1e-9;
}

std::vector<LcfNumber> components(const ElementValue& v) {
    if (v.degenerate) return std::vector<LcfNumber>(3);
    return {v.vec[0], v.vec[1], v.vec[2]};
}

const HomVec3& assigned(const Assignment& a, const std::string& id) {
    auto it = a.find(id);
    if (it == a.end()) throw Error(Errc::MissingAssignment, "no coordinates assigned to '" + id + "'");
    return it->second;
}

HomVec3 motion_at(const MotionPath& p, const LcfNumber& t) {
    LcfNumber s = LcfNumber(1.0) - t;
    return HomVec3::point(s * LcfNumber(p.from[0]) + t * LcfNumber(p.to[0]), s * LcfNumber(p.from[1]) + t * LcfNumber(p.to[1]),
                          s * LcfNumber(p.from[2]) + t * LcfNumber(p.to[2]));
}

ElementValue evaluate_element(const Construction& c, const std::vector<ElementValue>& vals, std::size_t i,
                              const Assignment& a) {
    const Element& e = c.elements[i];
    ElementValue out;
    VecKind kind = value_type(e.kind) == ValueType::Line ? VecKind::Line : VecKind::Point;
    out.vec = HomVec3::degenerate(kind);
    for (std::size_t arg : e.args) {
        if (vals[arg].degenerate) {
            out.degenerate = true;
            out.fault = "degenerate input '" + c.elements[arg].id + "'";
            return out;
        }
    }
    auto arg = [&](std::size_t k) -> const ElementValue& { return vals[e.args[k]]; };
    try {
        switch (e.kind) {
            case ElementKind::FreePoint: out.vec = assigned(a, e.id); break;
            case ElementKind::FixedPoint:
            case ElementKind::FixedLine: out.vec = to_hom(*e.literal, kind); break;
            case ElementKind::SemiFreePointOnLine: out.vec = foot_on_line(assigned(a, e.id), arg(0).vec); break;
            case ElementKind::LineJoin: out.vec = join_star(arg(0).vec, arg(1).vec); break;
            case ElementKind::PointMeet: out.vec = meet_star(arg(0).vec, arg(1).vec); break;
            case ElementKind::Circle: {
                CircleSpec spec{arg(0).vec, LcfNumber(e.radius)};
                out.conic = circle_conic(spec);
                out.circle = spec;
                return out;
            }
            case ElementKind::ConicLineIntersect: {
                auto pair = intersect_conic_line(*arg(0).conic, arg(1).vec);
                out.vec = e.branch == 1 ? pair.p1 : pair.p2;
                break;
            }
            case ElementKind::CircleCircleIntersect: {
                auto pair = intersect_circles(*arg(0).circle, *arg(1).circle);
                out.vec = e.branch == 1 ? pair.p1 : pair.p2;
                break;
            }
            case ElementKind::MidpointMu: out.vec = midpoint_mu(arg(0).vec, arg(1).vec); break;
            case ElementKind::MidpointEff: out.vec = midpoint_eff(arg(0).vec, arg(1).vec); break;
            case ElementKind::VonStaudtSum:
                out.vec = von_staudt_sum(arg(0).vec, arg(1).vec, arg(2).vec, arg(3).vec, arg(4).vec, arg(5).vec).sum;
                break;
            case ElementKind::ConicCenter: out.vec = conic_center(*arg(0).conic); break;
        }
    } catch (const Error& err) {
        if (err.code() == Errc::MissingAssignment) throw;
        out.degenerate = true;
        out.vec = HomVec3::degenerate(kind);
        out.fault = std::string(errc_name(err.code()));
        return out;
    }
    out.vec.kind = kind;
    if (out.vec.is_degenerate()) {
        out.degenerate = true;
        out.fault = "zero vector";
    }
    return out;
}

void check_target(const Construction& c, std::size_t target) {
    if (value_type(c.elements[target].kind) == ValueType::Conic)
        throw Error(Errc::EvaluationError, "element '" + c.elements[target].id + "' is a circle");
}

std::string format_number(Complex z) {
    char buf[64];
    if (z.imag() == 0.0) {
        std::snprintf(buf, sizeof buf, "%.12g", z.real());
    } else {
        std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
    }
    return buf;
}

}  // namespace

std::string_view to_string(ElementKind k) { return info(k).name; }

std::optional<ElementKind> parse_kind(std::string_view name) {
    for (const auto& i : kind_table())
        if (i.name == name) return i.kind;
    return std::nullopt;
}

ValueType value_type(ElementKind k) {
    switch (k) {
        case ElementKind::LineJoin:
        case ElementKind::FixedLine: return ValueType::Line;
        case ElementKind::Circle: return ValueType::Conic;
        default: return ValueType::Point;
    }
}

std::optional<std::size_t> Construction::find(std::string_view id) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (elements[i].id == id) return i;
    return std::nullopt;
}

std::size_t Construction::index_of(std::string_view id) const {
    auto i = find(id);
    if (!i) throw Error(Errc::UnknownElement, "no element '" + std::string(id) + "'");
    return *i;
}

bool Construction::is_movable(std::size_t i) const {
    auto k = elements[i].kind;
    return k == ElementKind::FreePoint || k == ElementKind::SemiFreePointOnLine;
}

std::vector<std::size_t> Construction::movable() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (is_movable(i)) out.push_back(i);
    return out;
}

Construction load_construction(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(Errc::ParseError, std::string("document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("elements") || !doc["elements"].is_array())
        throw Error(Errc::ParseError, "document needs an 'elements' array");
    if (doc["elements"].empty()) throw Error(Errc::ParseError, "document has no elements");

    Construction c;
    std::set<std::string> all_ids;
    for (const auto& je : doc["elements"]) {
        if (je.is_object() && je.contains("id") && je["id"].is_string()) all_ids.insert(je["id"].get<std::string>());
    }

    for (const auto& je : doc["elements"]) {
        if (!je.is_object() || !je.contains("id") || !je["id"].is_string())
            throw Error(Errc::ParseError, "element without a string id");
        Element e;
        e.id = je["id"].get<std::string>();
        if (c.find(e.id)) fail(Errc::ParseError, e.id, "duplicate id");
        if (!je.contains("kind") || !je["kind"].is_string()) fail(Errc::ParseError, e.id, "missing kind");
        auto kind = parse_kind(je["kind"].get<std::string>());
        if (!kind) fail(Errc::UnknownKind, e.id, "unknown kind '" + je["kind"].get<std::string>() + "'");
        e.kind = *kind;
        const KindInfo& ki = info(e.kind);

        json args = je.value("args", json::array());
        if (!args.is_array()) fail(Errc::ParseError, e.id, "args must be an array");
        if (args.size() != ki.args.size())
            fail(Errc::ParseError, e.id, "expected " + std::to_string(ki.args.size()) + " args");
        for (std::size_t k = 0; k < args.size(); ++k) {
            if (!args[k].is_string()) fail(Errc::ParseError, e.id, "args must be element ids");
            std::string ref = args[k].get<std::string>();
            auto idx = c.find(ref);
            if (!idx) {
                if (ref == e.id || all_ids.count(ref)) fail(Errc::CycleError, e.id, "refers to '" + ref + "' defined later");
                fail(Errc::DanglingReference, e.id, "refers to unknown '" + ref + "'");
            }
            if (value_type(c.elements[*idx].kind) != ki.args[k])
                fail(Errc::ParseError, e.id, "argument '" + ref + "' has the wrong type");
            e.args.push_back(*idx);
        }

        if (je.contains("literal")) e.literal = parse_vec3(je["literal"], e.id);
        if (needs_literal(e.kind) && !e.literal) fail(Errc::ParseError, e.id, "missing literal");

        if (je.contains("branch")) {
            if (!je["branch"].is_number_integer()) fail(Errc::ParseError, e.id, "branch must be 1 or 2");
            e.branch = je["branch"].get<int>();
            if (e.branch != 1 && e.branch != 2) fail(Errc::ParseError, e.id, "branch must be 1 or 2");
        }
        if (e.kind == ElementKind::Circle) {
            if (!je.contains("radius") || !je["radius"].is_number()) fail(Errc::ParseError, e.id, "missing radius");
            e.radius = je["radius"].get<double>();
            if (!(e.radius >= 0.0)) fail(Errc::ParseError, e.id, "negative radius");
        }
        c.elements.push_back(std::move(e));
    }

    json paths = doc.value("paths", json::array());
    if (!paths.is_array()) throw Error(Errc::ParseError, "'paths' must be an array");
    std::set<std::size_t> moved;
    for (const auto& jp : paths) {
        if (!jp.is_object() || !jp.contains("element") || !jp["element"].is_string())
            throw Error(Errc::ParseError, "path without an element id");
        std::string id = jp["element"].get<std::string>();
        auto idx = c.find(id);
        if (!idx) throw Error(Errc::DanglingReference, "path refers to unknown '" + id + "'");
        if (!c.is_movable(*idx)) fail(Errc::ConstraintViolation, id, "only free and semi-free points can move");
        if (!moved.insert(*idx).second) fail(Errc::ParseError, id, "more than one path");
        if (!jp.contains("from") || !jp.contains("to")) fail(Errc::ParseError, id, "path needs 'from' and 'to'");
        c.paths.push_back({*idx, parse_vec3(jp["from"], id), parse_vec3(jp["to"], id)});
    }

    // Semi-free literals and path endpoints must lie on their constraint line.
    auto base = default_assignment(c);
    auto vals = evaluate_raw(c, base);
    for (std::size_t i = 0; i < c.elements.size(); ++i) {
        const Element& e = c.elements[i];
        if (e.kind != ElementKind::SemiFreePointOnLine) continue;
        const ElementValue& line = vals[e.args[0]];
        if (line.degenerate) continue;
        if (!incident(to_hom(*e.literal, VecKind::Point), line.vec))
            fail(Errc::ConstraintViolation, e.id, "literal is not on its constraint line");
        for (const auto& p : c.paths) {
            if (p.element != i) continue;
            if (!incident(to_hom(p.from, VecKind::Point), line.vec) || !incident(to_hom(p.to, VecKind::Point), line.vec))
                fail(Errc::ConstraintViolation, e.id, "path leaves the constraint line");
        }
    }
    return c;
}

Construction load_construction_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot read " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return load_construction(ss.str());
}

Assignment default_assignment(const Construction& c) {
    Assignment a;
    for (std::size_t i : c.movable()) a[c.elements[i].id] = to_hom(*c.elements[i].literal, VecKind::Point);
    return a;
}

Assignment standard_assignment(const Assignment& a) {
    Assignment out;
    for (const auto& [id, v] : a) {
        if (v.is_degenerate()) {
            out[id] = v;
            continue;
        }
        StdVec s = psh(v).vec;
        out[id] = HomVec3::from_standard({s[0], s[1], s[2]}, v.kind);
    }
    return out;
}

std::vector<ElementValue> evaluate_raw(const Construction& c, const Assignment& a, std::optional<std::size_t> upto) {
    std::size_t last = upto ? std::min(*upto, c.elements.size() - 1) : c.elements.size() - 1;
    std::vector<ElementValue> vals(c.elements.size());
    for (std::size_t i = 0; i <= last; ++i) vals[i] = evaluate_element(c, vals, i, a);
    return vals;
}

const ElementResult& EvalResult::at(std::string_view id) const {
    for (const auto& e : elements)
        if (e.id == id) return e;
    throw Error(Errc::UnknownElement, "no element '" + std::string(id) + "'");
}

EvalResult evaluate(const Construction& c, const Assignment& a) {
    auto raw = evaluate_raw(c, a);
    auto standard = evaluate_raw(c, standard_assignment(a));
    EvalResult out;
    for (std::size_t i = 0; i < c.elements.size(); ++i) {
        ElementResult r;
        r.id = c.elements[i].id;
        r.kind = c.elements[i].kind;
        r.raw = raw[i];
        if (value_type(r.kind) != ValueType::Conic) {
            r.standard = standard[i].degenerate ? StdVec(3, Complex(0.0)) : normalize_max(psh(standard[i].vec).vec);
            if (!raw[i].degenerate) r.shadow = psh(raw[i].vec);
        }
        out.elements.push_back(std::move(r));
    }
    return out;
}

HomVec3 perturbed_point(const StdVec3& p, double dx, double dy) {
    StdVec n = normalize_max(StdVec(p.begin(), p.end()));
    LcfNumber d = LcfNumber::d_pow(Exponent(1));
    return HomVec3::point(LcfNumber(n[0]) + LcfNumber(dx) * d, LcfNumber(n[1]) + LcfNumber(dy) * d, LcfNumber(n[2]));
}

EvaluablePath induced_path(const Construction& c, std::size_t target, const Assignment& base) {
    check_target(c, target);
    if (c.paths.empty()) throw Error(Errc::EvaluationError, "construction has no motion path");
    EvaluablePath p;
    p.dimension = 3;
    p.domain = {0.0, 1.0};
    p.evaluate = [&c, target, base](const LcfNumber& t) {
        Assignment a = base;
        for (const auto& m : c.paths) a[c.elements[m.element].id] = motion_at(m, t);
        return components(evaluate_raw(c, a, target)[target]);
    };
    return p;
}

ResolveOutcome resolve_target(const Construction& c, std::string_view target, double t0, const Assignment& base) {
    return resolve_at(induced_path(c, c.index_of(target), base), t0);
}

ResolveOutcome check_extended(const Construction& c, const Assignment& base, std::string_view target,
                              const ExtendedOptions& opts) {
    std::size_t ti = c.index_of(target);
    check_target(c, ti);
    auto movers = c.movable();
    if (movers.empty()) throw Error(Errc::EmptyPerturbationSpace, "construction has no free elements");

    std::vector<LcfNumber> v0;
    for (std::size_t i : movers) {
        const HomVec3& p = assigned(base, c.elements[i].id);
        v0.insert(v0.end(), p.c.begin(), p.c.end());
    }

    // Standard direction of each semi-free constraint line at the base configuration.
    auto vals = evaluate_raw(c, base);
    std::vector<std::optional<std::array<Complex, 2>>> normals(movers.size());
    for (std::size_t k = 0; k < movers.size(); ++k) {
        const Element& e = c.elements[movers[k]];
        if (e.kind != ElementKind::SemiFreePointOnLine || vals[e.args[0]].degenerate) continue;
        StdVec l = normalize_max(psh(vals[e.args[0]].vec).vec);
        normals[k] = std::array<Complex, 2>{l[0], l[1]};
    }

    PerturbationSpec spec;
    spec.count = opts.n;
    spec.seed = opts.seed;
    spec.mask.assign(v0.size(), false);
    for (std::size_t k = 0; k < movers.size(); ++k) spec.mask[3 * k] = spec.mask[3 * k + 1] = true;
    bool any_semi = std::any_of(normals.begin(), normals.end(), [](const auto& n) { return n.has_value(); });
    if (any_semi) {
        spec.projector = [normals](const std::vector<LcfNumber>& v) {
            std::vector<LcfNumber> out = v;
            for (std::size_t k = 0; k < normals.size(); ++k) {
                if (!normals[k]) continue;
                Complex a = (*normals[k])[0], b = (*normals[k])[1];
                Complex nn = a * a + b * b;
                if (std::abs(nn) < 1e-12) {
                    out[3 * k] = out[3 * k + 1] = LcfNumber();
                    continue;
                }
                LcfNumber s = (LcfNumber(a) * v[3 * k] + LcfNumber(b) * v[3 * k + 1]) * LcfNumber(1.0 / nn);
                out[3 * k] = v[3 * k] - s * LcfNumber(a);
                out[3 * k + 1] = v[3 * k + 1] - s * LcfNumber(b);
            }
            return out;
        };
    }

    SpatialMap map = [&c, &movers, &base, ti](const std::vector<LcfNumber>& v) {
        Assignment a = base;
        for (std::size_t k = 0; k < movers.size(); ++k)
            a[c.elements[movers[k]].id] = HomVec3::point(v[3 * k], v[3 * k + 1], v[3 * k + 2]);
        return components(evaluate_raw(c, a, ti)[ti]);
    };
    return resolve_extended(map, v0, spec);
}

std::vector<TraceRow> trace(const Construction& c, std::string_view target, std::size_t samples) {
    if (samples < 2) throw std::invalid_argument("trace needs at least two samples");
    auto path = induced_path(c, c.index_of(target), default_assignment(c));
    std::vector<TraceRow> rows;
    for (std::size_t i = 0; i < samples; ++i) {
        double t = static_cast<double>(i) / static_cast<double>(samples - 1);
        if (i == samples - 1) t = 1.0;
        auto r = resolve_at(path, t);
        TraceRow row;
        row.t = t;
        row.status = r.status;
        row.order = r.order;
        if (r.value) row.value = normalize_max(r.value->vec);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string_view trace_status(ResolveStatus s) {
    switch (s) {
        case ResolveStatus::Regular: return "regular";
        case ResolveStatus::Removable: return "removable";
        case ResolveStatus::IdenticallyZero: return "degenerate";
        case ResolveStatus::NotRemovable: return "not-removable";
    }
    return "?";
}

std::string trace_csv(const std::vector<TraceRow>& rows) {
    std::string out = "t,status,x,y,z\n";
    for (const auto& r : rows) {
        out += format_number(r.t);
        out += ',';
        out += trace_status(r.status);
        for (std::size_t i = 0; i < 3; ++i) {
            out += ',';
            if (r.value) out += format_number((*r.value)[i]);
        }
        out += '\n';
    }
    return out;
}

std::string format_vector(const StdVec& v, int digits) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += format_coefficient(v[i], {digits, true});
    }
    return out + ")";
}

}  // namespace lcgeo
