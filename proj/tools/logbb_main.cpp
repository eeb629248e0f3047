#include <CLI11.hpp>

#include "logbb/errors.hpp"
#include "logbb/report.hpp"
#include "logbb/scene.hpp"
#include "logbb/surfaces.hpp"

#include <iostream>

namespace {

using namespace logbb;

// exit codes: 0 verified, 1 mismatch/failed certificate, 2 input error,
// 3 unsupported construction
int classify(const Error& e) {
    const auto& c = e.code();
    if (c == "ParseError" || c == "ValidationError" || c == "UnknownVariable" ||
        c == "AmbientMismatch" || c == "IndexOutOfRange" ||
        c == "DegreeMismatch" || c == "InconsistentPresentation" ||
        c == "SizeMismatch")
        return 2;
    return 3;
}

std::optional<std::string> opt(const std::string& s) {
    if (s.empty()) return std::nullopt;
    return s;
}

struct PointArg {
    int chart = 0;
    std::vector<Rat> coords;
};

PointArg parse_point_arg(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw ValidationError("--point expects CHART:c1,c2,...");
    PointArg p;
    p.chart = std::stoi(text.substr(0, colon));
    std::string rest = text.substr(colon + 1);
    std::size_t start = 0;
    while (start <= rest.size()) {
        auto comma = rest.find(',', start);
        auto piece = rest.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!piece.empty()) p.coords.push_back(rat_parse(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return p;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Baum-Bott and logarithmic residues for foliations by "
                 "curves along free divisors"};
    app.require_subcommand(1);

    std::string scene_path, phi, format = "md", point_text;
    int jobs = 1;

    auto add_common = [&](CLI::App* cmd, bool with_jobs) {
        cmd->add_option("scene", scene_path, "scene TOML file")->required();
        cmd->add_option("--phi", phi, "symmetric polynomial in c1..cn");
        cmd->add_option("--format", format, "output format: json or md")
            ->check(CLI::IsMember({"json", "md"}));
        if (with_jobs)
            cmd->add_option("--jobs", jobs, "worker threads for the per-point "
                                            "pipeline");
    };

    auto* verify = app.add_subcommand(
        "verify", "run every local residue and compare with the Chern side");
    add_common(verify, true);

    auto* residue =
        app.add_subcommand("residue", "residues at one singular point");
    add_common(residue, false);
    residue->add_option("--point", point_text, "CHART:c1,c2,...")->required();

    auto* chern =
        app.add_subcommand("chern", "characteristic-number side only");
    add_common(chern, false);

    auto* ledger = app.add_subcommand(
        "surface-ledger", "GSV/CS/BB/Res^log ledger on a P^2 scene");
    add_common(ledger, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            auto scene = load_scene(scene_path);
            RunOptions opts;
            opts.jobs = jobs;
            opts.phi_override = opt(phi);
            auto rep = run_global(scene, opts);
            std::cout << (format == "json" ? to_json(rep) : to_markdown(rep))
                      << "\n";
            return rep.equal ? 0 : 1;
        }
        if (residue->parsed()) {
            auto scene = load_scene(scene_path);
            auto pt = parse_point_arg(point_text);
            auto rep = run_point(scene, pt.chart, pt.coords, opt(phi));
            std::cout << point_json(rep) << "\n";
            return 0;
        }
        if (chern->parsed()) {
            auto scene = load_scene(scene_path);
            std::cout << rat_str(chern_side(scene, opt(phi))) << "\n";
            return 0;
        }
        if (ledger->parsed()) {
            auto scene = load_scene(scene_path);
            auto rep = surface_ledger(scene, jobs);
            std::cout << (format == "json" ? to_json(rep) : to_markdown(rep))
                      << "\n";
            return (rep.brunella_ok && rep.camacho_sad_ok && rep.difference_ok)
                       ? 0
                       : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        return classify(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
