// Batch verification tool: builds the symplectic subspace geometries, runs
// the diagnostic suites, computes fundamental groups, verifies the double
// cover and certifies amalgam completions. Reports are deterministic JSON
// (fixed config + seed => byte-identical output); graphs are DOT.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "symgeo/report.hpp"

using namespace symgeo;

namespace {

void write_text(const std::filesystem::path& path, const std::string& body) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path.string());
    os << body;
}

void print_checks(const Json& suite_report) {
    for (const auto& c : suite_report.at("checks")) {
        std::cout << "  [" << c.at("status").get<std::string>() << "] "
                  << c.at("id").get<std::string>() << ": " << c.at("claim").get<std::string>()
                  << "\n";
    }
}

int run_suite(const RunConfig& cfg) {
    cfg.validate();
    Json report;
    if (cfg.command == "gamma") report = suite_gamma(cfg);
    else if (cfg.command == "pi") report = suite_pi(cfg);
    else if (cfg.command == "cover") report = suite_cover(cfg);
    else if (cfg.command == "pi1") report = suite_pi1(cfg);
    else if (cfg.command == "groups") report = suite_groups(cfg);
    else if (cfg.command == "amalgam") report = suite_amalgam(cfg);
    else if (cfg.command == "all") report = suite_all(cfg);
    else throw std::invalid_argument("unknown command " + cfg.command);

    std::filesystem::create_directories(cfg.out_dir);
    std::string stem = cfg.command + "_n" + std::to_string(cfg.n) + "_p" + std::to_string(cfg.p);
    std::filesystem::path json_path = std::filesystem::path(cfg.out_dir) / (stem + ".json");
    write_text(json_path, report.dump(2) + "\n");

    if (cfg.dot) {
        SymplecticSpace sp = SymplecticSpace::standard(cfg.n, static_cast<std::uint8_t>(cfg.p));
        if (cfg.command == "gamma" || cfg.command == "all") {
            write_text(std::filesystem::path(cfg.out_dir) / (stem + "_gamma.dot"),
                       to_dot(build_gamma(sp), "gamma"));
        }
        if ((cfg.command == "pi" || cfg.command == "all") && cfg.n >= 4) {
            auto [pt, hyp] = standard_pi_pair(sp);
            write_text(std::filesystem::path(cfg.out_dir) / (stem + "_pi.dot"),
                       to_dot(build_pi(sp, pt, hyp), "pi"));
        }
        if (cfg.command == "cover") {
            auto [pt, hyp] = standard_pi_pair(sp);
            write_text(std::filesystem::path(cfg.out_dir) / (stem + "_cover.dot"),
                       cover_to_dot(build_cover(sp, build_pi(sp, pt, hyp)), "cover"));
        }
    }

    if (cfg.command == "pi1") {
        // presentation dump in the shared text format
        SymplecticSpace sp = SymplecticSpace::standard(cfg.n, static_cast<std::uint8_t>(cfg.p));
        Geometry g = build_gamma(sp);
        Pi1Presentation pres = pi1_presentation_point_line(g, g.by_type[0][0]);
        write_text(std::filesystem::path(cfg.out_dir) / (stem + "_presentation.txt"),
                   presentation_to_text(pres.pr));
    }

    if (cfg.command == "all") {
        for (const auto& [name, part] : report.at("parts").items()) {
            std::cout << name << ":\n";
            print_checks(part);
        }
    } else {
        print_checks(report);
    }
    const auto& s = report.at("summary");
    std::cout << "summary: pass=" << s.at("pass") << " fail=" << s.at("fail")
              << " unknown=" << s.at("unknown") << "\n";
    std::cout << "report: " << json_path.string() << "\n";
    return report_exit_code(report);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification toolkit for symplectic subspace geometries and their amalgams"};
    app.require_subcommand(1);

    RunConfig cfg;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "ambient dimension (2..6)");
        sub->add_option("--p", cfg.p, "field modulus (2, 3, 5, 7)");
        sub->add_option("--seed", cfg.seed, "seed for sampled checks");
        sub->add_option("--max-cosets", cfg.max_cosets, "coset cap for fundamental-group runs")
            ->check(CLI::PositiveNumber);
        sub->add_option("--max-amalgam-cosets", cfg.amalgam_cosets, "coset cap for completion certificates")
            ->check(CLI::PositiveNumber);
        sub->add_option("--max-group", cfg.max_group, "group enumeration cap")
            ->check(CLI::PositiveNumber);
        sub->add_option("--max-triangles", cfg.triangle_cap, "relator budget for full presentations")
            ->check(CLI::PositiveNumber);
        sub->add_option("--out", cfg.out_dir, "report directory");
        sub->add_flag("--dot", cfg.dot, "emit DOT incidence graphs");
    };

    for (const char* name : {"gamma", "pi", "cover", "pi1", "groups", "amalgam", "all"}) {
        add_common(app.add_subcommand(name));
    }

    CLI11_PARSE(app, argc, argv);
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        return run_suite(cfg);
    } catch (const CapExceeded& e) {
        std::cout << "inconclusive: " << e.what() << "\n";
        return 0;  // a declared resource limit is not a failure
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
