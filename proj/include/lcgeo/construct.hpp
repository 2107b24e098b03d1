#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcgeo/desing.hpp"
#include "lcgeo/geomops.hpp"

namespace lcgeo {

enum class ElementKind {
    FreePoint,
    SemiFreePointOnLine,
    LineJoin,
    PointMeet,
    Circle,
    ConicLineIntersect,
    CircleCircleIntersect,
    MidpointMu,
    MidpointEff,
    VonStaudtSum,
    ConicCenter,
    FixedLine,
    FixedPoint,
};

std::string_view to_string(ElementKind k);
std::optional<ElementKind> parse_kind(std::string_view name);

enum class ValueType { Point, Line, Conic };
ValueType value_type(ElementKind k);

using StdVec3 = std::array<Complex, 3>;

struct Element {
    std::string id;
    ElementKind kind = ElementKind::FixedPoint;
    std::vector<std::size_t> args;
    std::optional<StdVec3> literal;
    int branch = 1;
    double radius = 0.0;
};

// Linear motion (1 - t) from + t to.
struct MotionPath {
    std::size_t element = 0;
    StdVec3 from{};
    StdVec3 to{};
};

struct Construction {
    std::vector<Element> elements;
    std::vector<MotionPath> paths;

    std::optional<std::size_t> find(std::string_view id) const;
    // Throws UnknownElement.
    std::size_t index_of(std::string_view id) const;
    bool is_movable(std::size_t i) const;
    std::vector<std::size_t> movable() const;
};

Construction load_construction(std::string_view text);
Construction load_construction_file(const std::filesystem::path& path);

using Assignment = std::map<std::string, HomVec3>;

Assignment default_assignment(const Construction& c);
Assignment standard_assignment(const Assignment& a);

struct ElementValue {
    bool degenerate = false;
    HomVec3 vec;
    std::optional<CircleSpec> circle;
    std::optional<ConicMat> conic;
    std::string fault;
};

// Evaluates elements [0, upto]; the rest stay empty.
std::vector<ElementValue> evaluate_raw(const Construction& c, const Assignment& a,
                                       std::optional<std::size_t> upto = std::nullopt);

struct ElementResult {
    std::string id;
    ElementKind kind = ElementKind::FixedPoint;
    ElementValue raw;
    // Max-normalized value from the shadowed assignment; the zero vector when
    // that evaluation degenerates. Empty for circles.
    std::optional<StdVec> standard;
    std::optional<PshResult> shadow;
    std::optional<ResolveOutcome> resolution;
};

struct EvalResult {
    std::vector<ElementResult> elements;
    const ElementResult& at(std::string_view id) const;
};

EvalResult evaluate(const Construction& c, const Assignment& a);

// Max-normalized standard point plus (dx, dy, 0) d.
HomVec3 perturbed_point(const StdVec3& p, double dx, double dy);

// Single-parameter path of `target` induced by the motion paths.
EvaluablePath induced_path(const Construction& c, std::size_t target, const Assignment& base);
ResolveOutcome resolve_target(const Construction& c, std::string_view target, double t0, const Assignment& base);

struct ExtendedOptions {
    std::size_t n = 5;
    std::uint64_t seed = 0;
};

// Perturbs the x and y coordinates of every free and semi-free element; semi-free
// perturbations are projected onto their constraint line.
ResolveOutcome check_extended(const Construction& c, const Assignment& base, std::string_view target,
                              const ExtendedOptions& opts);

struct TraceRow {
    double t = 0.0;
    ResolveStatus status = ResolveStatus::Regular;
    std::optional<StdVec> value;
    Exponent order;
};

std::vector<TraceRow> trace(const Construction& c, std::string_view target, std::size_t samples);
std::string_view trace_status(ResolveStatus s);
std::string trace_csv(const std::vector<TraceRow>& rows);

struct TableColumn {
    std::string label;
    std::optional<StdVec> standard;
    HomVec3 nonstandard;
    std::optional<PshResult> shadow;
};

struct ScenarioTable {
    std::string scenario;
    std::vector<TableColumn> columns;
};

std::vector<std::string_view> scenario_names();
std::string_view scenario_document(std::string_view scenario);
ScenarioTable run_table(std::string_view scenario);
std::string format_table(const ScenarioTable& table);

std::string format_vector(const StdVec& v, int digits = 4);

}  // namespace lcgeo
