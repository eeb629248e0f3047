#pragma once

#include "logbb/report.hpp"
#include "logbb/residues.hpp"

namespace logbb {

/// Affine restriction of the scene to one chart.
struct ChartData {
    AmbientPtr amb;
    VectorField field;
    Divisor divisor;
};

/// Scene model: the space, the divisor, the foliation, the supplied singular
/// points, and the phi expression. Projective scenes use homogeneous data
/// over z0..zn; affine and presented scenes give per-chart fields over
/// x1..xn directly.
struct Scene {
    enum class Kind { Projective, Presented, Affine };

    Kind kind = Kind::Projective;
    int dim = 0;
    int degree = 0;
    std::string phi_text;

    std::vector<std::string> divisor_text;
    std::vector<std::string> homogeneous_text;
    struct ChartField {
        int chart = 0;
        std::vector<std::string> components;
        std::optional<std::vector<std::string>> divisor; // overrides [divisor]
    };
    std::vector<ChartField> chart_fields_text;

    struct Singularity {
        int chart = 0;
        std::vector<Rat> coords;
    };
    std::vector<Singularity> singularities;

    std::optional<std::vector<std::string>> chern_supplied_text;
    std::optional<std::string> foliation_c1_text; // presented scenes
    std::optional<PresentedRingSpec> presented;

    // derived data, filled by validation
    AmbientPtr hom_amb;
    std::vector<MPoly> homF;
    std::vector<MPoly> divisor_hom;

    int chart_count() const {
        return kind == Kind::Projective ? dim + 1
                                        : static_cast<int>(chart_fields_text.size());
    }
};

/// Parses and validates; throws ParseError / ValidationError.
Scene load_scene(const std::string& path);
Scene scene_from_toml(std::string_view text);

/// Dehomogenized field and divisor in chart j: component i of the field is
/// F_i(..,1,..) - x_i F_j(..,1,..); divisor factors equal to z_j drop out.
ChartData chart_restrict(const Scene& scene, int chart);

/// A supplied singular point after projective deduplication.
struct ScenePoint {
    int chart = 0;              // canonical chart (first containing it)
    std::vector<Rat> coords;    // coordinates in that chart
    std::vector<Rat> hom;       // normalized homogeneous coordinates
    std::vector<int> charts;    // all charts containing the point
};

std::vector<ScenePoint> dedup_points(const Scene& scene);

Certificate certify_completeness(const Scene& scene);

struct RunOptions {
    int jobs = 1;
    std::optional<std::string> phi_override;
};

GlobalReport run_global(const Scene& scene, const RunOptions& opts = {});

/// Residue report for one supplied point (the `residue` subcommand).
PointReport run_point(const Scene& scene, int chart, std::span<const Rat> coords,
                      const std::optional<std::string>& phi_override = {});

/// Chern side only (the `chern` subcommand): integral of
/// phi(T(-log D) - T_F) from the product formula, the presented ring, or the
/// supplied class.
Rat chern_side(const Scene& scene,
               const std::optional<std::string>& phi_override = {});

} // namespace logbb
