#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "logbb/errors.hpp"
#include "logbb/parser.hpp"
#include "logbb/scene.hpp"
#include "logbb/toml.hpp"

#include <fstream>
#include <sstream>

using namespace logbb;

namespace {

std::string scenes_dir() { return LOGBB_SCENES_DIR; }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const PointReport* find_point(const GlobalReport& rep, int chart,
                              std::initializer_list<long> coords) {
    for (const auto& p : rep.points) {
        if (p.chart != chart) continue;
        bool match = p.coords.size() == coords.size();
        auto it = coords.begin();
        for (std::size_t i = 0; match && i < p.coords.size(); ++i, ++it)
            match = p.coords[i] == Rat(*it);
        if (match) return &p;
    }
    return nullptr;
}

} // namespace

TEST_CASE("toml subset parser") {
    auto t = toml::parse(R"TOML(
# comment
[space]
kind = "projective"   # trailing comment
dim = 3
flag = true

[foliation]
degree = 2
homogeneous = [
  "0",
  "z1*(z1-z0)",
]

[[singularities]]
chart = 0
point = ["0", "0", "0"]

[[singularities]]
chart = 1
point = ["0", "0", "1"]
)TOML");
    const auto& space = toml::require_table(t, "space");
    CHECK(toml::require_string(space, "kind", "space") == "projective");
    CHECK(toml::require_int(space, "dim", "space") == 3);
    CHECK(toml::find(space, "flag")->boolean());
    const auto& fol = toml::require_table(t, "foliation");
    CHECK(toml::require_string_array(fol, "homogeneous", "f").size() == 2);
    CHECK(toml::find(t, "singularities")->array().size() == 2);

    CHECK_THROWS_AS(toml::parse("key = "), ParseError);
    CHECK_THROWS_AS(toml::parse("[unclosed"), ParseError);
    CHECK_THROWS_AS(toml::parse("a = 1\na = 2"), ParseError);
}

TEST_CASE("arrangement scene loads and restricts to product chart fields") {
    auto scene = load_scene(scenes_dir() + "/p3_nc_arrangement.toml");
    CHECK(scene.kind == Scene::Kind::Projective);
    CHECK(scene.dim == 3);
    CHECK(scene.degree == 2);

    for (int chart = 0; chart <= 3; ++chart) {
        auto cd = chart_restrict(scene, chart);
        // in every chart the field is x_i (x_i - 1) d/dx_i
        for (int i = 0; i < 3; ++i) {
            auto xi = MPoly::variable(cd.amb, i);
            CHECK(cd.field.comps[i] == xi * xi - xi);
        }
        // the chart divisor is the remaining three coordinate planes
        CHECK(cd.divisor.components.size() == 3);
    }
}

TEST_CASE("dedup counts the arrangement points once") {
    auto scene = load_scene(scenes_dir() + "/p3_nc_arrangement.toml");
    auto pts = dedup_points(scene);
    CHECK(pts.size() == 15);
    int in_all_charts = 0;
    for (const auto& p : pts)
        if (p.charts.size() == 4) ++in_all_charts;
    CHECK(in_all_charts == 1); // only [1:1:1:1]

    auto cert = certify_completeness(scene);
    CHECK(cert.applicable);
    CHECK(cert.mu_total == 15);
    CHECK(cert.expected == 15);
    CHECK(cert.ok);
}

TEST_CASE("run_global verifies the P3 arrangement scene") {
    auto scene = load_scene(scenes_dir() + "/p3_nc_arrangement.toml");
    auto rep = run_global(scene);
    CHECK(rep.equal);
    CHECK(rep.local_total == 1);
    CHECK(rep.chern_side == Rat(1));
    CHECK(rep.difference == 0);
    CHECK(rep.certificate.ok);
    REQUIRE(rep.poincare.has_value());
    CHECK(rep.poincare->hypothesis_met);
    CHECK(rep.poincare->bound_holds);

    // frozen expected residues at named points
    auto* p2 = find_point(rep, 0, {0, 0, 1});
    REQUIRE(p2);
    CHECK(p2->on_divisor);
    CHECK(p2->res_log == Rat(1));
    CHECK(p2->ind_log == 0);
    auto* p5 = find_point(rep, 0, {1, 1, 0});
    REQUIRE(p5);
    CHECK(p5->res_log == Rat(-8));
    auto* p8 = find_point(rep, 0, {1, 1, 1});
    REQUIRE(p8);
    CHECK(!p8->on_divisor);
    CHECK(p8->bb == 27);
    auto* p15 = find_point(rep, 3, {0, 0, 0});
    REQUIRE(p15);
    CHECK(p15->res_log == Rat(0));
}

TEST_CASE("parallel runner agrees with the serial reference") {
    auto scene = load_scene(scenes_dir() + "/p3_nc_arrangement.toml");
    RunOptions serial;
    RunOptions parallel;
    parallel.jobs = 4;
    auto a = run_global(scene, serial);
    auto b = run_global(scene, parallel);
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        CHECK(a.points[i].chart == b.points[i].chart);
        CHECK(a.points[i].coords == b.points[i].coords);
        CHECK(a.points[i].bb == b.points[i].bb);
        CHECK(a.points[i].res_log == b.points[i].res_log);
        CHECK(a.points[i].milnor == b.points[i].milnor);
    }
    CHECK(a.local_total == b.local_total);
    CHECK(a.equal == b.equal);
}

TEST_CASE("classical scene with empty divisor") {
    auto scene = load_scene(scenes_dir() + "/p2_classical_deg3.toml");
    auto rep = run_global(scene);
    CHECK(rep.equal);
    CHECK(rep.local_total == 25); // (d+2)^2
    CHECK(rep.certificate.mu_total == 13);

    RunOptions c2;
    c2.phi_override = "c2";
    auto rep2 = run_global(scene, c2);
    CHECK(rep2.equal);
    CHECK(rep2.local_total == 13); // 1 + d + d^2
}

TEST_CASE("presented hirzebruch scene verifies end to end") {
    auto scene = load_scene(scenes_dir() + "/hirzebruch_k2.toml");
    CHECK(chern_side(scene) == 2);
    auto rep = run_global(scene);
    CHECK(rep.equal);
    CHECK(rep.local_total == 2);
    int on_d = 0;
    for (const auto& p : rep.points)
        if (p.on_divisor) {
            ++on_d;
            CHECK(p.res_log == Rat(0));
        }
    CHECK(on_d == 2);
}

TEST_CASE("run_point matches the global report") {
    auto scene = load_scene(scenes_dir() + "/p3_nc_arrangement.toml");
    std::vector<Rat> q{Rat(1), Rat(1), Rat(0)};
    auto rep = run_point(scene, 0, q);
    CHECK(rep.on_divisor);
    CHECK(rep.res_log == Rat(-8));
    CHECK(rep.milnor == 1);

    std::vector<Rat> bad{Rat(2), Rat(0), Rat(0)};
    CHECK_THROWS_AS(run_point(scene, 0, bad), ValidationError);
}

TEST_CASE("validation rejects malformed scenes") {
    std::string base = slurp(scenes_dir() + "/p3_nc_arrangement.toml");

    // non-homogeneous component
    auto bad1 = base;
    bad1.replace(bad1.find("z1*(z1-z0)"), std::string("z1*(z1-z0)").size(),
                 "z1*z1 - z0");
    CHECK_THROWS_AS(scene_from_toml(bad1), ValidationError);

    // a point that does not zero the field
    auto bad2 = base;
    bad2.replace(bad2.find("point = [\"1\", \"1\", \"1\"]"),
                 std::string("point = [\"1\", \"1\", \"1\"]").size(),
                 "point = [\"1\", \"1\", \"2\"]");
    CHECK_THROWS_AS(scene_from_toml(bad2), ValidationError);

    // radial-type field restricts to zero in every chart
    CHECK_THROWS_AS(scene_from_toml(R"TOML(
[space]
kind = "projective"
dim = 2
[foliation]
degree = 1
homogeneous = ["z0", "z1", "z2"]
[phi]
expr = "c1^2"
)TOML"),
                    ValidationError);
}

TEST_CASE("affine scenes support per-point residues only") {
    std::string toml = R"TOML(
[space]
kind = "affine"
dim = 2
[divisor]
components = ["x1"]
[foliation]
degree = 2
[[foliation.charts]]
chart = 0
components = ["x1*(x1-1)", "x2"]
[phi]
expr = "c1^2"
[[singularities]]
chart = 0
point = ["0", "0"]
[[singularities]]
chart = 0
point = ["1", "0"]
)TOML";
    auto scene = scene_from_toml(toml);
    CHECK_THROWS_AS(run_global(scene), ValidationError);
    std::vector<Rat> origin{Rat(0), Rat(0)};
    auto rep = run_point(scene, 0, origin);
    CHECK(rep.on_divisor);
    CHECK(rep.milnor == 1);
    // diagonal linearization (-1, 1): res_log = mu/lambda = 1/(-1)
    CHECK(rep.res_log == Rat(-1));
}

TEST_CASE("corrupted inputs flip the verdict") {
    std::string base = slurp(scenes_dir() + "/p3_nc_arrangement.toml");

    // wrong degree: certificate and chern side both shift
    auto wrong_degree = base;
    wrong_degree.replace(wrong_degree.find("degree = 2"),
                         std::string("degree = 2").size(), "degree = 3");
    auto rep = run_global(scene_from_toml(wrong_degree));
    CHECK(!rep.equal);
    CHECK(rep.difference != 0);
    CHECK(!rep.certificate.ok);

    // missing point: the 27 at [1:1:1:1] disappears from the local side
    auto missing = base;
    auto pos = missing.find("[[singularities]]\nchart = 0\npoint = [\"1\", \"1\", \"1\"]");
    REQUIRE(pos != std::string::npos);
    missing.erase(pos, std::string("[[singularities]]\nchart = 0\npoint = [\"1\", \"1\", \"1\"]").size());
    auto rep2 = run_global(scene_from_toml(missing));
    CHECK(!rep2.equal);
    CHECK(rep2.difference == -27);
    CHECK(!rep2.certificate.ok);
}
