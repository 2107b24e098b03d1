#include "lcgeo/desing.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "lcgeo/error.hpp"

namespace lcgeo {

namespace {

std::string describe_t(const LcfNumber& t) { return to_string(t, {17, false}); }

std::vector<LcfNumber> evaluate_at(const EvaluablePath& path, const LcfNumber& t) {
    std::vector<LcfNumber> v;
    try {
        v = path.evaluate(t);
    } catch (const std::exception& e) {
        throw Error(Errc::EvaluationError, "t = " + describe_t(t) + ": " + e.what());
    }
    if (v.size() != path.dimension)
        throw Error(Errc::EvaluationError, "t = " + describe_t(t) + ": evaluator returned " + std::to_string(v.size()) +
                                               " components, expected " + std::to_string(path.dimension));
    return v;
}

bool collapsed(const std::vector<LcfNumber>& v) {
    if (all_zero(v)) return true;
    for (const auto& x : v) {
        if (x.is_zero()) continue;
        if (x.leading().exponent.sign() != 0 || std::abs(x.leading().coefficient) >= LcfNumber::kPrune) return false;
    }
    return true;
}

bool pairwise_close(const std::vector<PshResult>& shadows, double tol) {
    for (std::size_t i = 0; i < shadows.size(); ++i) {
        for (std::size_t j = i + 1; j < shadows.size(); ++j) {
            if (!proj_close(shadows[i].vec, shadows[j].vec, tol)) return false;
        }
    }
    return true;
}

Complex eval_poly(const Polynomial& p, Complex t) {
    Complex acc = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + it->to_double();
    return acc;
}

}  // namespace

std::string_view to_string(ResolveStatus s) {
    switch (s) {
        case ResolveStatus::Regular: return "Regular";
        case ResolveStatus::Removable: return "Removable";
        case ResolveStatus::IdenticallyZero: return "IdenticallyZero";
        case ResolveStatus::NotRemovable: return "NotRemovable";
    }
    return "?";
}

bool polynomial_form_consistent(const EvaluablePath& path, std::uint64_t seed, double tol) {
    if (!path.polynomial) return false;
    if (path.polynomial->size() != path.dimension) return false;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> pick(path.domain.lo, path.domain.hi);
    for (int k = 0; k < 5; ++k) {
        double t = pick(rng);
        auto v = evaluate_at(path, LcfNumber(t));
        for (std::size_t i = 0; i < path.dimension; ++i) {
            Complex expected = eval_poly((*path.polynomial)[i], t);
            Complex got = shadow(v[i]);
            if (std::abs(expected - got) > tol * std::max(1.0, std::abs(expected))) return false;
        }
    }
    return true;
}

ResolveOutcome resolve_at(const EvaluablePath& path, double t0, const ResolveOptions& opts) {
    ResolveOutcome out;
    auto base = evaluate_at(path, LcfNumber(t0));
    if (!collapsed(base)) {
        out.status = ResolveStatus::Regular;
        out.value = psh(base);
        out.order = Exponent(0);
        return out;
    }

    const LcfNumber d = LcfNumber::d_pow(Exponent(1));
    std::vector<LcfNumber> steps;
    bool at_lo = t0 <= path.domain.lo;
    bool at_hi = t0 >= path.domain.hi;
    if (!at_hi) steps.push_back(d);
    if (!at_lo) steps.push_back(-d);
    if (opts.swap_probes) std::reverse(steps.begin(), steps.end());
    out.one_sided = steps.size() == 1;
    out.probes = steps.size();

    for (const auto& step : steps) {
        auto v = evaluate_at(path, LcfNumber(t0) + step);
        if (all_zero(v)) {
            out.status = ResolveStatus::IdenticallyZero;
            out.evidence.clear();
            return out;
        }
        out.evidence.push_back(psh(v));
    }
    if (pairwise_close(out.evidence, opts.tol)) {
        out.status = ResolveStatus::Removable;
        out.value = out.evidence.front();
        out.order = out.value->scale_exponent;
    } else {
        out.status = ResolveStatus::NotRemovable;
    }
    return out;
}

std::vector<std::vector<LcfNumber>> draw_perturbations(std::size_t dim, const PerturbationSpec& spec) {
    if (!spec.mask.empty() && spec.mask.size() != dim)
        throw std::invalid_argument("perturbation mask does not match the configuration size");
    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    auto draw = [&] {
        double c = 0.0;
        while (std::abs(c) < 0.1) c = coef(rng);
        return c;
    };
    const LcfNumber d = LcfNumber::d_pow(Exponent(1));
    constexpr int kAttempts = 32;

    std::vector<std::vector<LcfNumber>> out;
    for (std::size_t i = 0; i < spec.count; ++i) {
        bool found = false;
        for (int attempt = 0; attempt < kAttempts && !found; ++attempt) {
            std::vector<LcfNumber> raw(dim);
            for (std::size_t j = 0; j < dim; ++j) {
                if (spec.mask.empty() || spec.mask[j]) raw[j] = LcfNumber(draw()) * d;
            }
            auto projected = spec.projector ? spec.projector(raw) : raw;
            if (projected.size() != dim) throw Error(Errc::InvalidProjector, "projector changed the dimension");
            if (all_zero(projected)) continue;
            if (spec.projector) {
                auto again = spec.projector(projected);
                for (std::size_t j = 0; j < dim; ++j) {
                    if (!(again[j] - projected[j]).is_zero())
                        throw Error(Errc::InvalidProjector, "projection is not idempotent");
                }
            }
            out.push_back(std::move(projected));
            found = true;
        }
        if (!found) throw Error(Errc::EmptyPerturbationSpace, "no nonzero perturbation satisfies the constraints");
    }
    return out;
}

ResolveOutcome resolve_extended(const SpatialMap& map, const std::vector<LcfNumber>& v0, const PerturbationSpec& spec) {
    if (spec.count < 2) throw std::invalid_argument("extended resolution needs at least two perturbations");
    ResolveOutcome out;
    out.probes = spec.count;
    out.seed = spec.seed;
    for (const auto& delta : draw_perturbations(v0.size(), spec)) {
        std::vector<LcfNumber> v(v0.size());
        for (std::size_t j = 0; j < v0.size(); ++j) v[j] = v0[j] + delta[j];
        std::vector<LcfNumber> value;
        try {
            value = map(v);
        } catch (const std::exception& e) {
            throw Error(Errc::EvaluationError, std::string("perturbed configuration: ") + e.what());
        }
        if (all_zero(value)) {
            out.status = ResolveStatus::IdenticallyZero;
            out.evidence.clear();
            return out;
        }
        out.evidence.push_back(psh(value));
    }
    if (pairwise_close(out.evidence, spec.tol)) {
        out.status = ResolveStatus::Removable;
        out.value = out.evidence.front();
        out.order = out.value->scale_exponent;
    } else {
        out.status = ResolveStatus::NotRemovable;
    }
    return out;
}

ResolveOutcome direct_derivation(const EvaluablePath& path, double t0, unsigned k_max) {
    if (!path.polynomial) throw Error(Errc::NotPolynomial, "path has no polynomial form");
    const auto& poly = *path.polynomial;
    const Rational t = Rational::from_double(t0);
    ResolveOutcome out;
    out.probes = 0;
    for (unsigned k = 0; k <= k_max; ++k) {
        std::vector<Rational> deriv(poly.size());
        bool nonzero = false;
        for (std::size_t i = 0; i < poly.size(); ++i) {
            // sum_{n >= k} c_n n!/(n-k)! t^(n-k), by Horner on the shifted coefficients.
            Rational acc;
            for (std::size_t n = poly[i].size(); n-- > k;) {
                Rational falling(1);
                for (unsigned j = 0; j < k; ++j) falling *= Rational(static_cast<std::int64_t>(n - j));
                acc = acc * t + poly[i][n] * falling;
            }
            deriv[i] = acc;
            nonzero = nonzero || !acc.is_zero();
        }
        if (!nonzero) continue;
        StdVec v(deriv.size());
        for (std::size_t i = 0; i < deriv.size(); ++i) v[i] = deriv[i].to_double();
        out.status = k == 0 ? ResolveStatus::Regular : ResolveStatus::Removable;
        out.value = PshResult{normalize_max(v), Exponent(static_cast<std::int64_t>(k))};
        out.order = Exponent(static_cast<std::int64_t>(k));
        return out;
    }
    out.status = ResolveStatus::IdenticallyZero;
    out.order = Exponent(static_cast<std::int64_t>(k_max) + 1);
    return out;
}

std::vector<SingularSample> classify_singularities(const EvaluablePath& path, Interval domain, std::size_t samples) {
    if (samples < 2) throw std::invalid_argument("at least two samples are required");
    EvaluablePath local = path;
    local.domain = domain;
    std::vector<SingularSample> out;
    for (std::size_t i = 0; i < samples; ++i) {
        double t = domain.lo + (domain.hi - domain.lo) * static_cast<double>(i) / static_cast<double>(samples - 1);
        if (i == samples - 1) t = domain.hi;
        if (!collapsed(evaluate_at(local, LcfNumber(t)))) continue;
        out.push_back({t, resolve_at(local, t)});
    }
    return out;
}

}  // namespace lcgeo
