#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "lcgeo/projgeo.hpp"

namespace lcgeo {

struct Interval {
    double lo = 0.0;
    double hi = 1.0;
};

using PathEvaluator = std::function<std::vector<LcfNumber>(const LcfNumber&)>;
// Coefficients in ascending powers of t.
using Polynomial = std::vector<Rational>;

struct EvaluablePath {
    std::size_t dimension = 3;
    PathEvaluator evaluate;
    std::optional<std::vector<Polynomial>> polynomial;
    Interval domain;
};

// The polynomial form matches the evaluator at five random parameters.
bool polynomial_form_consistent(const EvaluablePath& path, std::uint64_t seed = 0, double tol = 1e-9);

enum class ResolveStatus { Regular, Removable, IdenticallyZero, NotRemovable };
std::string_view to_string(ResolveStatus s);

struct ResolveOutcome {
    ResolveStatus status = ResolveStatus::Regular;
    std::optional<PshResult> value;
    std::vector<PshResult> evidence;
    Exponent order;
    bool one_sided = false;
    std::size_t probes = 0;
    std::optional<std::uint64_t> seed;
};

struct ResolveOptions {
    bool swap_probes = false;
    double tol = kTolProj;
};

ResolveOutcome resolve_at(const EvaluablePath& path, double t0, const ResolveOptions& opts = {});

using SpatialMap = std::function<std::vector<LcfNumber>(const std::vector<LcfNumber>&)>;
using Projector = std::function<std::vector<LcfNumber>(const std::vector<LcfNumber>&)>;

struct PerturbationSpec {
    std::size_t count = 5;
    std::uint64_t seed = 0;
    // Coordinates that receive c*d; empty means all of them.
    std::vector<bool> mask;
    // Maps a raw perturbation into the allowed subspace; empty means identity.
    Projector projector;
    double tol = kTolProj;
};

std::vector<std::vector<LcfNumber>> draw_perturbations(std::size_t dim, const PerturbationSpec& spec);
ResolveOutcome resolve_extended(const SpatialMap& map, const std::vector<LcfNumber>& v0, const PerturbationSpec& spec);

ResolveOutcome direct_derivation(const EvaluablePath& path, double t0, unsigned k_max = 8);

struct SingularSample {
    double t;
    ResolveOutcome outcome;
};

std::vector<SingularSample> classify_singularities(const EvaluablePath& path, Interval domain, std::size_t samples);

}  // namespace lcgeo
