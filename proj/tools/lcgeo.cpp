#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "lcgeo/bridge.hpp"
#include "lcgeo/construct.hpp"
#include "lcgeo/error.hpp"

using namespace lcgeo;

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kNotRemovable = 2;

std::string lcf_vector(const HomVec3& v) {
    return "(" + to_string(v[0], {4, true}) + ", " + to_string(v[1], {4, true}) + ", " + to_string(v[2], {4, true}) + ")";
}

// id=dx,dy
Assignment apply_perturbations(const Construction& c, const std::vector<std::string>& specs) {
    Assignment a = default_assignment(c);
    for (const auto& s : specs) {
        auto eq = s.find('=');
        auto comma = s.find(',', eq == std::string::npos ? 0 : eq);
        if (eq == std::string::npos || comma == std::string::npos)
            throw Error(Errc::ParseError, "perturbation '" + s + "' is not id=dx,dy");
        std::string id = s.substr(0, eq);
        std::size_t i = c.index_of(id);
        if (!c.is_movable(i)) throw Error(Errc::ConstraintViolation, "'" + id + "' is not free");
        double dx = std::stod(s.substr(eq + 1, comma - eq - 1));
        double dy = std::stod(s.substr(comma + 1));
        a[id] = perturbed_point(*c.elements[i].literal, dx, dy);
    }
    return a;
}

void print_outcome(const ResolveOutcome& r) {
    std::cout << "status: " << to_string(r.status) << "\n";
    if (r.value) std::cout << "value: " << format_vector(normalize_max(r.value->vec), 6) << "\n";
    if (r.status == ResolveStatus::Removable) std::cout << "order: " << r.order.to_string() << "\n";
    if (r.one_sided) std::cout << "one-sided probe\n";
    if (r.seed) std::cout << "probes: " << r.probes << " seed: " << *r.seed << "\n";
    for (std::size_t i = 0; i < r.evidence.size() && r.status == ResolveStatus::NotRemovable; ++i)
        std::cout << "evidence " << i + 1 << ": " << format_vector(normalize_max(r.evidence[i].vec), 6) << "\n";
}

int exit_code(ResolveStatus s) { return s == ResolveStatus::NotRemovable ? kNotRemovable : kOk; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lcgeo: projective constructions over the Levi-Civita field"};
    app.require_subcommand(1);

    std::string file, target, csv_out, scenario;
    std::vector<std::string> perturb;
    std::size_t samples = 101, n = 5;
    std::uint64_t seed = 0;
    double t0 = 0.0;
    unsigned short port = 7345, ws_port = 0;

    auto* eval = app.add_subcommand("eval", "evaluate a construction");
    eval->add_option("file", file)->required();
    eval->add_option("--perturb", perturb, "id=dx,dy");

    auto* tr = app.add_subcommand("trace", "sample a target along the motion paths");
    tr->add_option("file", file)->required();
    tr->add_option("--target", target)->required();
    tr->add_option("--samples", samples)->check(CLI::Range(2, 1000000));
    tr->add_option("--csv", csv_out, "write CSV here instead of stdout");

    auto* res = app.add_subcommand("resolve", "resolve a target at one path parameter");
    res->add_option("file", file)->required();
    res->add_option("--target", target)->required();
    res->add_option("--t0", t0)->required();

    auto* ext = app.add_subcommand("check-extended", "randomized perturbation test at the literal configuration");
    ext->add_option("file", file)->required();
    ext->add_option("--target", target)->required();
    ext->add_option("--n", n)->check(CLI::Range(2, 1000));
    ext->add_option("--seed", seed);
    ext->add_option("--perturb", perturb, "id=dx,dy");

    auto* table = app.add_subcommand("table", "print a built-in comparison table");
    table->add_option("scenario", scenario)->required();

    auto* serve = app.add_subcommand("serve", "run the session protocol server");
    serve->add_option("--port", port, "line-delimited TCP port");
    serve->add_option("--ws-port", ws_port, "WebSocket port, 0 to disable");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*eval) {
            Construction c = load_construction_file(file);
            EvalResult r = evaluate(c, apply_perturbations(c, perturb));
            for (const auto& e : r.elements) {
                std::cout << e.id << " [" << to_string(e.kind) << "]";
                if (e.raw.degenerate) std::cout << " degenerate (" << e.raw.fault << ")";
                std::cout << "\n";
                if (!e.standard) continue;
                std::cout << "  standard      " << format_vector(*e.standard) << "\n";
                if (!e.raw.degenerate) {
                    std::cout << "  non-standard  " << lcf_vector(e.raw.vec) << "\n";
                    std::cout << "  psh           " << format_vector(e.shadow->vec) << "\n";
                }
            }
            return kOk;
        }
        if (*tr) {
            Construction c = load_construction_file(file);
            auto rows = trace(c, target, samples);
            std::string text = trace_csv(rows);
            if (csv_out.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(csv_out);
                if (!out) throw Error(Errc::ParseError, "cannot write " + csv_out);
                out << text;
            }
            for (const auto& row : rows)
                if (row.status == ResolveStatus::NotRemovable) return kNotRemovable;
            return kOk;
        }
        if (*res) {
            Construction c = load_construction_file(file);
            auto r = resolve_target(c, target, t0, default_assignment(c));
            print_outcome(r);
            return exit_code(r.status);
        }
        if (*ext) {
            Construction c = load_construction_file(file);
            auto r = check_extended(c, apply_perturbations(c, perturb), target, {n, seed});
            print_outcome(r);
            return exit_code(r.status);
        }
        if (*table) {
            std::cout << format_table(run_table(scenario));
            return kOk;
        }
        if (*serve) {
            BridgeServer server(port, ws_port ? std::optional<unsigned short>(ws_port) : std::nullopt);
            std::cerr << "listening on tcp " << server.tcp_port();
            if (server.ws_port()) std::cerr << ", websocket " << server.ws_port();
            std::cerr << "\n";
            server.run();
            return kOk;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kOk;
}
