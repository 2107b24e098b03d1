#include "lcgeo/bridge.hpp"

#include "lcgeo/error.hpp"

namespace lcgeo {

namespace {

using nlohmann::json;

struct WireError {
    std::string code;
    std::string detail;
};

[[noreturn]] void bad_request(const std::string& detail) { throw WireError{"bad-request", detail}; }

std::uint64_t count_field(const json& req, const char* name, std::uint64_t min) {
    const json& f = req[name];
    if (!f.is_number_integer() || f.get<std::int64_t>() < static_cast<std::int64_t>(min))
        bad_request(std::string("field '") + name + "' must be an integer >= " + std::to_string(min));
    return f.get<std::uint64_t>();
}

const json& field(const json& req, const char* name) {
    if (!req.contains(name)) bad_request(std::string("missing field '") + name + "'");
    return req[name];
}

std::string string_field(const json& req, const char* name) {
    const json& f = field(req, name);
    if (!f.is_string()) bad_request(std::string("field '") + name + "' must be a string");
    return f.get<std::string>();
}

json coord(Complex z) {
    if (z.imag() == 0.0) return z.real();
    return json{{"re", z.real()}, {"im", z.imag()}};
}

json coords(const StdVec& v) {
    json out = json::array();
    for (auto z : v) out.push_back(coord(z));
    return out;
}

Complex parse_coord(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_object() && j.contains("re") && j["re"].is_number()) {
        double im = j.contains("im") && j["im"].is_number() ? j["im"].get<double>() : 0.0;
        return {j["re"].get<double>(), im};
    }
    bad_request("coordinates must be numbers or {re, im}");
}

std::string_view policy_name(Policy p) { return p == Policy::Auto ? "auto" : "manual"; }

void require_construction(const SessionState& s) {
    if (!s.construction) throw WireError{"no-construction", "load a construction first"};
}

std::size_t element_index(const SessionState& s, const std::string& id) {
    auto i = s.construction->find(id);
    if (!i) throw WireError{"unknown-element", "no element '" + id + "'"};
    return *i;
}

json outcome_entry(json entry, const ResolveOutcome& r) {
    switch (r.status) {
        case ResolveStatus::Regular:
            entry["status"] = "regular";
            entry["coords"] = coords(r.value->vec);
            break;
        case ResolveStatus::Removable:
            entry["status"] = "removable";
            entry["coords"] = coords(r.value->vec);
            entry["order"] = r.order.to_string();
            break;
        case ResolveStatus::NotRemovable:
            entry["status"] = "not-removable";
            entry["coords"] = nullptr;
            break;
        case ResolveStatus::IdenticallyZero:
            entry["status"] = "degenerate";
            entry["coords"] = nullptr;
            break;
    }
    if (r.seed) {
        entry["seed"] = *r.seed;
        entry["n"] = r.probes;
    }
    return entry;
}

json scene(SessionState& s) {
    const Construction& c = *s.construction;
    auto vals = evaluate_raw(c, s.assignment);
    json elements = json::array();
    for (std::size_t i = 0; i < c.elements.size(); ++i) {
        const Element& e = c.elements[i];
        json entry{{"id", e.id}, {"kind", std::string(to_string(e.kind))}};
        const ElementValue& v = vals[i];
        if (value_type(e.kind) == ValueType::Conic) {
            entry["radius"] = e.radius;
            if (v.degenerate || !v.circle) {
                entry["status"] = "degenerate";
                entry["coords"] = nullptr;
            } else {
                entry["status"] = "regular";
                entry["coords"] = coords(psh(v.circle->center).vec);
            }
            elements.push_back(std::move(entry));
            continue;
        }
        if (auto it = s.forced.find(e.id); it != s.forced.end()) {
            elements.push_back(outcome_entry(std::move(entry), it->second));
            continue;
        }
        if (!v.degenerate) {
            entry["status"] = "regular";
            entry["coords"] = coords(psh(v.vec).vec);
        } else if (s.policy == Policy::Auto) {
            try {
                entry = outcome_entry(std::move(entry), check_extended(c, s.assignment, e.id, {s.n, s.seed}));
            } catch (const Error& err) {
                entry["status"] = "degenerate";
                entry["coords"] = nullptr;
                entry["detail"] = err.what();
            }
        } else {
            entry["status"] = "degenerate";
            entry["coords"] = nullptr;
        }
        elements.push_back(std::move(entry));
    }
    return json{{"v", kWireVersion},
                {"type", "scene"},
                {"policy", std::string(policy_name(s.policy))},
                {"elements", std::move(elements)}};
}

void load(const json& req, SessionState& s) {
    const json& doc = field(req, "document");
    std::string text;
    if (doc.is_string()) {
        text = doc.get<std::string>();
    } else if (doc.is_object()) {
        text = doc.dump();
    } else {
        bad_request("document must be an object or a string");
    }
    try {
        s.construction = std::make_shared<const Construction>(load_construction(text));
    } catch (const Error& e) {
        bad_request(e.what());
    }
    s.assignment = default_assignment(*s.construction);
    s.forced.clear();
    if (req.contains("seed")) {
        s.seed = count_field(req, "seed", 0);
    }
}

void drag(const json& req, SessionState& s) {
    require_construction(s);
    std::string id = string_field(req, "id");
    std::size_t i = element_index(s, id);
    if (!s.construction->is_movable(i)) bad_request("element '" + id + "' is not draggable");
    const json& c = field(req, "coords");
    if (!c.is_array() || (c.size() != 2 && c.size() != 3)) bad_request("coords must hold 2 or 3 entries");
    std::array<Complex, 3> v{parse_coord(c[0]), parse_coord(c[1]), c.size() == 3 ? parse_coord(c[2]) : Complex(1.0)};
    if (v[0] == 0.0 && v[1] == 0.0 && v[2] == 0.0) bad_request("coords are the zero vector");
    s.assignment[id] = HomVec3::from_standard(v, VecKind::Point);
    s.forced.clear();
}

void probe(const json& req, SessionState& s, bool extended) {
    require_construction(s);
    std::string id = string_field(req, "id");
    std::size_t i = element_index(s, id);
    const Construction& c = *s.construction;
    if (value_type(c.elements[i].kind) == ValueType::Conic) bad_request("circles have no resolution");
    ExtendedOptions opts{s.n, s.seed};
    if (extended) {
        if (req.contains("n")) opts.n = count_field(req, "n", 2);
        if (req.contains("seed")) opts.seed = count_field(req, "seed", 0);
    }
    auto vals = evaluate_raw(c, s.assignment, i);
    if (!vals[i].degenerate && !extended) {
        s.forced.erase(id);
        return;
    }
    try {
        s.forced[id] = check_extended(c, s.assignment, id, opts);
    } catch (const Error& e) {
        throw WireError{"bad-request", e.what()};
    }
}

}  // namespace

Frame error_frame(std::string_view code, std::string_view detail) {
    return json{{"v", kWireVersion}, {"type", "error"}, {"code", code}, {"detail", detail}};
}

std::pair<SessionState, Frame> handle(const Frame& request, SessionState state) {
    SessionState next = state;
    try {
        if (!request.is_object()) bad_request("frame must be an object");
        if (!request.contains("v") || request["v"] != kWireVersion) bad_request("unsupported or missing version");
        std::string type = string_field(request, "type");
        if (type == "load") {
            load(request, next);
        } else if (type == "drag") {
            drag(request, next);
        } else if (type == "probe") {
            probe(request, next, false);
        } else if (type == "check-extended") {
            probe(request, next, true);
        } else if (type == "set-policy") {
            std::string p = string_field(request, "policy");
            if (p == "auto") {
                next.policy = Policy::Auto;
            } else if (p == "manual") {
                next.policy = Policy::Manual;
            } else {
                bad_request("policy must be 'auto' or 'manual'");
            }
            require_construction(next);
        } else {
            bad_request("unknown message type '" + type + "'");
        }
        Frame response = scene(next);
        return {std::move(next), std::move(response)};
    } catch (const WireError& e) {
        return {std::move(state), error_frame(e.code, e.detail)};
    }
}

std::string handle_line(std::string_view line, SessionState& state) {
    Frame request;
    try {
        request = Frame::parse(line);
    } catch (const nlohmann::json::exception& e) {
        return error_frame("bad-request", e.what()).dump();
    }
    auto [next, response] = handle(request, std::move(state));
    state = std::move(next);
    return response.dump();
}

}  // namespace lcgeo
