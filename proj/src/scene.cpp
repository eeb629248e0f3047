#include "logbb/scene.hpp"

#include "logbb/errors.hpp"
#include "logbb/parser.hpp"
#include "logbb/toml.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#ifdef LOGBB_HAVE_OPENMP
#include <omp.h>
#endif

namespace logbb {

namespace {

std::string point_str(std::span<const Rat> p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += rat_str(p[i]);
    }
    return s + ")";
}

std::vector<Rat> parse_point(const std::vector<std::string>& texts) {
    std::vector<Rat> p;
    p.reserve(texts.size());
    for (const auto& t : texts) p.push_back(rat_parse(t));
    return p;
}

} // namespace

// ---------------------------------------------------------------------------
// loading

namespace {

Scene parse_scene_toml(std::string_view text) {
    auto root = toml::parse(text);
    Scene sc;

    const auto& space = toml::require_table(root, "space");
    auto kind = toml::require_string(space, "kind", "space");
    if (kind == "projective")
        sc.kind = Scene::Kind::Projective;
    else if (kind == "presented")
        sc.kind = Scene::Kind::Presented;
    else if (kind == "affine")
        sc.kind = Scene::Kind::Affine;
    else
        throw ValidationError("space.kind: unknown kind '" + kind + "'");
    sc.dim = static_cast<int>(toml::require_int(space, "dim", "space"));

    if (const auto* div = toml::find(root, "divisor")) {
        sc.divisor_text =
            toml::require_string_array(div->table(), "components", "divisor");
    }

    const auto& fol = toml::require_table(root, "foliation");
    if (toml::find(fol, "degree"))
        sc.degree = static_cast<int>(toml::require_int(fol, "degree", "foliation"));
    if (const auto* hom = toml::find(fol, "homogeneous")) {
        (void)hom;
        sc.homogeneous_text =
            toml::require_string_array(fol, "homogeneous", "foliation");
    }
    if (const auto* charts = toml::find(fol, "charts")) {
        for (const auto& entry : charts->array()) {
            const auto& t = entry.table();
            Scene::ChartField cf;
            cf.chart =
                static_cast<int>(toml::require_int(t, "chart", "foliation.charts"));
            cf.components =
                toml::require_string_array(t, "components", "foliation.charts");
            if (toml::find(t, "divisor"))
                cf.divisor =
                    toml::require_string_array(t, "divisor", "foliation.charts");
            sc.chart_fields_text.push_back(std::move(cf));
        }
    }

    if (const auto* sing = toml::find(root, "singularities")) {
        for (const auto& entry : sing->array()) {
            const auto& t = entry.table();
            Scene::Singularity s;
            s.chart =
                static_cast<int>(toml::require_int(t, "chart", "singularities"));
            s.coords = parse_point(
                toml::require_string_array(t, "point", "singularities"));
            sc.singularities.push_back(std::move(s));
        }
    }

    if (const auto* phi = toml::find(root, "phi"))
        sc.phi_text = toml::require_string(phi->table(), "expr", "phi");

    if (const auto* chern = toml::find(root, "chern")) {
        const auto& t = chern->table();
        if (toml::find(t, "total_log_tangent"))
            sc.chern_supplied_text =
                toml::require_string_array(t, "total_log_tangent", "chern");
        if (toml::find(t, "foliation_c1"))
            sc.foliation_c1_text = toml::require_string(t, "foliation_c1", "chern");
    }

    if (const auto* pres = toml::find(root, "presented")) {
        const auto& t = pres->table();
        PresentedRingSpec spec;
        spec.generators = toml::require_string_array(t, "generators", "presented");
        for (long d : toml::require_int_array(t, "degrees", "presented"))
            spec.degrees.push_back(static_cast<int>(d));
        spec.relations = toml::require_string_array(t, "relations", "presented");
        spec.integral_monomial =
            toml::require_string(t, "integral_monomial", "presented");
        spec.integral_value =
            rat_parse(toml::require_string(t, "integral_value", "presented"));
        sc.presented = std::move(spec);
    }

    return sc;
}

} // namespace

// ---------------------------------------------------------------------------
// chart restriction

ChartData chart_restrict(const Scene& scene, int chart) {
    if (scene.kind == Scene::Kind::Projective) {
        int n = scene.dim;
        if (chart < 0 || chart > n)
            throw ValidationError("chart " + std::to_string(chart) +
                                  " out of range");
        auto amb = make_ambient_xn(n);
        // z_i -> x_pos for i != chart, z_chart -> 1
        std::vector<MPoly> images;
        images.reserve(n + 1);
        int pos = 0;
        for (int i = 0; i <= n; ++i) {
            if (i == chart)
                images.push_back(MPoly::constant(amb, Rat(1)));
            else
                images.push_back(MPoly::variable(amb, pos++));
        }
        auto dehom = [&](const MPoly& p) {
            return p.compose(amb, images);
        };

        MPoly Fj = dehom(scene.homF[chart]);
        VectorField v{amb, {}};
        pos = 0;
        for (int i = 0; i <= n; ++i) {
            if (i == chart) continue;
            v.comps.push_back(dehom(scene.homF[i]) -
                              MPoly::variable(amb, pos) * Fj);
            ++pos;
        }
        bool all_zero = true;
        for (const auto& c : v.comps)
            if (!c.is_zero()) all_zero = false;
        if (all_zero)
            throw ValidationError("DegenerateChart: the foliation restricts to "
                                  "the zero field in chart " +
                                  std::to_string(chart));

        std::vector<MPoly> comps;
        for (const auto& g : scene.divisor_hom) {
            auto gd = dehom(g);
            if (gd.is_constant()) continue; // factors equal to z_chart drop out
            comps.push_back(std::move(gd));
        }
        return ChartData{amb, std::move(v), Divisor::make(amb, std::move(comps))};
    }

    // affine / presented: explicit per-chart fields
    for (const auto& cf : scene.chart_fields_text) {
        if (cf.chart != chart) continue;
        auto amb = make_ambient_xn(scene.dim);
        VectorField v{amb, {}};
        for (const auto& c : cf.components) v.comps.push_back(parse_poly(c, amb));
        if (static_cast<int>(v.comps.size()) != scene.dim)
            throw ValidationError("chart " + std::to_string(chart) + " has " +
                                  std::to_string(v.comps.size()) +
                                  " components, expected " +
                                  std::to_string(scene.dim));
        std::vector<MPoly> comps;
        const auto& div_text = cf.divisor ? *cf.divisor : scene.divisor_text;
        for (const auto& g : div_text) comps.push_back(parse_poly(g, amb));
        return ChartData{amb, std::move(v), Divisor::make(amb, std::move(comps))};
    }
    throw ValidationError("no field supplied for chart " + std::to_string(chart));
}

// ---------------------------------------------------------------------------
// validation

namespace {

void validate_projective(Scene& sc) {
    int n = sc.dim;
    std::vector<std::string> names;
    for (int i = 0; i <= n; ++i) names.push_back("z" + std::to_string(i));
    sc.hom_amb = make_ambient(names);

    if (static_cast<int>(sc.homogeneous_text.size()) != n + 1)
        throw ValidationError("foliation.homogeneous: expected " +
                              std::to_string(n + 1) + " components");
    int deg = -1;
    for (const auto& t : sc.homogeneous_text) {
        auto p = parse_poly(t, sc.hom_amb);
        int d = 0;
        if (!p.is_homogeneous(&d))
            throw ValidationError("foliation component is not homogeneous: " + t);
        if (!p.is_zero()) {
            if (deg >= 0 && d != deg)
                throw ValidationError(
                    "foliation components have different degrees");
            deg = d;
        }
        sc.homF.push_back(std::move(p));
    }
    if (deg < 0) throw ValidationError("foliation is identically zero");

    for (const auto& t : sc.divisor_text) {
        auto g = parse_poly(t, sc.hom_amb);
        if (!g.is_homogeneous())
            throw ValidationError("divisor component is not homogeneous: " + t);
        sc.divisor_hom.push_back(std::move(g));
    }
    // reducedness contract at the homogeneous level
    Divisor::make(sc.hom_amb, sc.divisor_hom);
}

// exact pushforward of the chart-beta field to chart-alpha coordinates at a
// rational sample point; returns false on a genuine mismatch
bool overlap_consistent(const Scene& sc, const ChartData& ca, const ChartData& cb,
                        int alpha, int beta, std::span<const Rat> q) {
    int n = sc.dim;
    // positions of original indices in each chart's coordinate list
    auto pos_in = [&](int chart, int orig) {
        int pos = 0;
        for (int i = 0; i <= n; ++i) {
            if (i == chart) continue;
            if (i == orig) return pos;
            ++pos;
        }
        return -1;
    };
    Rat u_beta = q[pos_in(alpha, beta)];
    if (u_beta == 0) return true; // not in the overlap

    // chart-beta coordinates of the same projective point
    std::vector<Rat> y(n);
    for (int k = 0; k <= n; ++k) {
        if (k == beta) continue;
        Rat zk = (k == alpha) ? Rat(1) : q[pos_in(alpha, k)];
        y[pos_in(beta, k)] = zk / u_beta;
    }
    Rat y_alpha = y[pos_in(beta, alpha)]; // = 1/u_beta, nonzero

    std::vector<Rat> va(n), vb(n);
    for (int i = 0; i < n; ++i) {
        va[i] = ca.field.comps[i].eval(q);
        vb[i] = cb.field.comps[i].eval(y);
    }
    // w = (du/dy) * vb with u_i = y_i / y_alpha (i != alpha, beta),
    // u_beta = 1 / y_alpha
    std::vector<Rat> w(n, Rat(0));
    for (int i = 0; i <= n; ++i) {
        if (i == alpha) continue;
        int pi = pos_in(alpha, i);
        for (int k = 0; k <= n; ++k) {
            if (k == beta) continue;
            int pk = pos_in(beta, k);
            Rat d(0);
            if (i == beta) {
                if (k == alpha) d = Rat(-1) / (y_alpha * y_alpha);
            } else {
                if (k == i) d = Rat(1) / y_alpha;
                if (k == alpha) d -= y[pos_in(beta, i)] / (y_alpha * y_alpha);
            }
            if (d != 0) w[pi] += d * vb[pk];
        }
    }
    bool va_zero = std::all_of(va.begin(), va.end(),
                               [](const Rat& x) { return x == 0; });
    bool w_zero =
        std::all_of(w.begin(), w.end(), [](const Rat& x) { return x == 0; });
    if (va_zero != w_zero) return false;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (w[i] * va[j] != w[j] * va[i]) return false;
    return true;
}

void validate(Scene& sc) {
    if (sc.dim < 1) throw ValidationError("space.dim must be at least 1");
    if (sc.degree < 0) throw ValidationError("foliation.degree must be >= 0");
    if (sc.kind == Scene::Kind::Projective) {
        if (!sc.chart_fields_text.empty())
            throw ValidationError(
                "projective scenes take homogeneous components, not charts");
        validate_projective(sc);
    } else {
        if (sc.chart_fields_text.empty())
            throw ValidationError("non-projective scenes need "
                                  "[[foliation.charts]] blocks");
        if (!sc.homogeneous_text.empty())
            throw ValidationError(
                "homogeneous components only make sense on projective scenes");
        if (sc.kind == Scene::Kind::Presented) {
            if (!sc.presented)
                throw ValidationError("presented scenes need a [presented] block");
            CohomologyRing::presented(*sc.presented); // validates
        }
    }
    if (!sc.phi_text.empty()) PhiSpec::parse(sc.phi_text, sc.dim);

    // chart restrictions exist and flag degenerate charts early
    std::vector<ChartData> charts;
    std::vector<int> chart_ids;
    if (sc.kind == Scene::Kind::Projective) {
        for (int j = 0; j <= sc.dim; ++j) {
            charts.push_back(chart_restrict(sc, j));
            chart_ids.push_back(j);
        }
    } else {
        for (const auto& cf : sc.chart_fields_text) {
            charts.push_back(chart_restrict(sc, cf.chart));
            chart_ids.push_back(cf.chart);
        }
    }

    // every supplied point must zero its chart field
    for (const auto& s : sc.singularities) {
        auto it = std::find(chart_ids.begin(), chart_ids.end(), s.chart);
        if (it == chart_ids.end())
            throw ValidationError("singularity names unknown chart " +
                                  std::to_string(s.chart));
        if (static_cast<int>(s.coords.size()) != sc.dim)
            throw ValidationError("singularity " + point_str(s.coords) +
                                  " has wrong coordinate count");
        const auto& cd = charts[it - chart_ids.begin()];
        if (!cd.field.vanishes_at(s.coords))
            throw ValidationError("point " + point_str(s.coords) + " in chart " +
                                  std::to_string(s.chart) +
                                  " does not zero the chart field");
    }

    // spot-check the chart compatibility on random rational overlap samples
    if (sc.kind == Scene::Kind::Projective) {
        for (int a = 0; a <= sc.dim; ++a)
            for (int b = a + 1; b <= sc.dim; ++b) {
                std::mt19937 rng(9173u + 31u * a + static_cast<unsigned>(b));
                std::uniform_int_distribution<int> small(-3, 3);
                for (int trial = 0; trial < 5; ++trial) {
                    std::vector<Rat> q(sc.dim);
                    for (auto& x : q) x = Rat(small(rng));
                    if (!overlap_consistent(sc, charts[a], charts[b], a, b, q))
                        throw ValidationError(
                            "charts " + std::to_string(a) + " and " +
                            std::to_string(b) +
                            " disagree at the sample point " + point_str(q));
                }
            }
    }
}

} // namespace

Scene scene_from_toml(std::string_view text) {
    auto sc = parse_scene_toml(text);
    validate(sc);
    return sc;
}

Scene load_scene(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open scene file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return scene_from_toml(buf.str());
}

// ---------------------------------------------------------------------------
// points

namespace {

std::vector<Rat> homogenize_point(int n, int chart, std::span<const Rat> coords) {
    std::vector<Rat> hom(n + 1);
    int pos = 0;
    for (int i = 0; i <= n; ++i)
        hom[i] = (i == chart) ? Rat(1) : coords[pos++];
    // normalize: first nonzero coordinate becomes 1
    for (int i = 0; i <= n; ++i) {
        if (hom[i] == 0) continue;
        Rat lead = hom[i];
        for (auto& x : hom) x /= lead;
        break;
    }
    return hom;
}

std::vector<Rat> chart_coords(std::span<const Rat> hom, int chart) {
    std::vector<Rat> c;
    c.reserve(hom.size() - 1);
    for (std::size_t i = 0; i < hom.size(); ++i)
        if (static_cast<int>(i) != chart) c.push_back(hom[i] / hom[chart]);
    return c;
}

} // namespace

std::vector<ScenePoint> dedup_points(const Scene& scene) {
    std::vector<ScenePoint> out;
    if (scene.kind == Scene::Kind::Projective) {
        std::map<std::string, ScenePoint> seen;
        for (const auto& s : scene.singularities) {
            auto hom = homogenize_point(scene.dim, s.chart, s.coords);
            std::string key;
            for (const auto& x : hom) key += rat_str(x) + "|";
            if (seen.count(key)) continue;
            ScenePoint p;
            p.hom = hom;
            for (int j = 0; j <= scene.dim; ++j)
                if (hom[j] != 0) p.charts.push_back(j);
            p.chart = p.charts.front();
            p.coords = chart_coords(p.hom, p.chart);
            seen.emplace(std::move(key), std::move(p));
        }
        for (auto& [k, p] : seen) out.push_back(std::move(p));
    } else {
        std::map<std::string, ScenePoint> seen;
        for (const auto& s : scene.singularities) {
            std::string key = std::to_string(s.chart) + "|";
            for (const auto& x : s.coords) key += rat_str(x) + "|";
            if (seen.count(key)) continue;
            ScenePoint p;
            p.chart = s.chart;
            p.coords = s.coords;
            p.charts = {s.chart};
            seen.emplace(std::move(key), std::move(p));
        }
        for (auto& [k, p] : seen) out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(), [](const ScenePoint& a, const ScenePoint& b) {
        if (a.chart != b.chart) return a.chart < b.chart;
        for (std::size_t i = 0; i < a.coords.size(); ++i)
            if (a.coords[i] != b.coords[i]) return a.coords[i] < b.coords[i];
        return false;
    });
    return out;
}

// ---------------------------------------------------------------------------
// the per-point pipeline

namespace {

struct ChartCache {
    std::map<int, ChartData> data;
    std::map<int, LogFrameData> frames; // charts with a nonempty divisor

    const ChartData& chart(int j) const { return data.at(j); }
    const LogFrameData* frame(int j) const {
        auto it = frames.find(j);
        return it == frames.end() ? nullptr : &it->second;
    }
};

ChartCache build_cache(const Scene& scene, const std::vector<ScenePoint>& points,
                       bool need_frames) {
    ChartCache cache;
    for (const auto& p : points)
        for (int j : p.charts)
            if (!cache.data.count(j)) cache.data.emplace(j, chart_restrict(scene, j));
    if (need_frames) {
        for (auto& [j, cd] : cache.data) {
            if (cd.divisor.empty()) continue;
            auto basis = normal_crossing_basis(cd.divisor);
            cache.frames.emplace(j, m_log(cd.field, basis));
        }
    }
    return cache;
}

bool point_on_divisor(const Scene& scene, const ScenePoint& p) {
    if (scene.kind == Scene::Kind::Projective) {
        for (const auto& g : scene.divisor_hom)
            if (g.eval(p.hom) == 0) return true;
        return false;
    }
    auto cd = chart_restrict(scene, p.chart);
    return cd.divisor.vanishes_at(p.coords);
}

PointReport analyze_point(const Scene& scene, const ChartCache& cache,
                          const std::vector<ScenePoint>& all,
                          const ScenePoint& p, const PhiSpec& phi) {
    PointReport rep;
    rep.chart = p.chart;
    rep.coords = p.coords;
    rep.on_divisor = point_on_divisor(scene, p);

    bool first = true;
    for (int j : p.charts) {
        const auto& cd = cache.chart(j);
        std::vector<Rat> q = (scene.kind == Scene::Kind::Projective)
                                 ? chart_coords(p.hom, j)
                                 : p.coords;
        GrothOptions opts;
        for (const auto& other : all) {
            if (&other == &p) continue;
            if (std::find(other.charts.begin(), other.charts.end(), j) ==
                other.charts.end())
                continue;
            opts.other_zeros.push_back(scene.kind == Scene::Kind::Projective
                                           ? chart_coords(other.hom, j)
                                           : other.coords);
        }

        long mu = milnor(cd.field, q);
        Rat bb = bb_residue(phi, cd.field, q, opts);
        std::optional<Rat> rl;
        std::optional<long> il;
        if (rep.on_divisor) {
            const auto* frame = cache.frame(j);
            if (!frame)
                throw ValidationError("point on the divisor in chart " +
                                      std::to_string(j) +
                                      " but the chart divisor is empty");
            rl = res_log(phi, cd.field, *frame, q, opts);
            Ideal theta_ideal{cd.amb, frame->theta};
            il = local_multiplicity(theta_ideal, q);
        }

        if (first) {
            rep.milnor = mu;
            rep.bb = bb;
            rep.res_log = rl;
            rep.ind_log = il;
            first = false;
        } else if (mu != rep.milnor || bb != rep.bb || rl != rep.res_log ||
                   il != rep.ind_log) {
            throw ValidationError("chart consistency failure at " +
                                  point_str(p.coords) + ": chart " +
                                  std::to_string(j) +
                                  " disagrees with chart " +
                                  std::to_string(p.chart));
        }
    }
    return rep;
}

std::vector<PointReport> compute_points_serial(
    const Scene& scene, const ChartCache& cache,
    const std::vector<ScenePoint>& points, const PhiSpec& phi) {
    std::vector<PointReport> reports(points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        reports[i] = analyze_point(scene, cache, points, points[i], phi);
    return reports;
}

std::vector<PointReport> compute_points_parallel(
    const Scene& scene, const ChartCache& cache,
    const std::vector<ScenePoint>& points, const PhiSpec& phi, int jobs) {
#ifndef LOGBB_HAVE_OPENMP
    (void)jobs;
    return compute_points_serial(scene, cache, points, phi);
#else
    std::vector<PointReport> reports(points.size());
    std::vector<std::exception_ptr> errors(points.size());
    int count = static_cast<int>(points.size());
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (int i = 0; i < count; ++i) {
        try {
            reports[i] = analyze_point(scene, cache, points, points[i], phi);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return reports;
#endif
}

PhiSpec effective_phi(const Scene& scene,
                      const std::optional<std::string>& override_text) {
    std::string text = override_text.value_or(
        scene.phi_text.empty() ? "c1^" + std::to_string(scene.dim)
                               : scene.phi_text);
    return PhiSpec::parse(text, scene.dim);
}

} // namespace

Certificate certify_completeness(const Scene& scene) {
    auto points = dedup_points(scene);
    auto cache = build_cache(scene, points, false);
    Certificate cert;
    cert.applicable = scene.kind == Scene::Kind::Projective;
    for (const auto& p : points) {
        const auto& cd = cache.chart(p.charts.front());
        std::vector<Rat> q = (scene.kind == Scene::Kind::Projective)
                                 ? chart_coords(p.hom, p.charts.front())
                                 : p.coords;
        cert.mu_total += milnor(cd.field, q);
    }
    if (cert.applicable) {
        long expected = 0, dpow = 1;
        for (int i = 0; i <= scene.dim; ++i) {
            expected += dpow;
            dpow *= scene.degree;
        }
        cert.expected = expected;
        cert.ok = cert.mu_total == cert.expected;
    } else {
        cert.expected = cert.mu_total;
        cert.ok = true;
    }
    return cert;
}

Rat chern_side(const Scene& scene, const std::optional<std::string>& phi_text) {
    auto phi = effective_phi(scene, phi_text);
    if (scene.kind == Scene::Kind::Affine)
        throw ValidationError(
            "affine scenes have no characteristic-number side");
    if (scene.kind == Scene::Kind::Projective) {
        auto R = CohomologyRing::projective(scene.dim);
        TotalClass E = TotalClass::one(R);
        if (scene.chern_supplied_text) {
            const auto& texts = *scene.chern_supplied_text;
            if (static_cast<int>(texts.size()) != scene.dim + 1)
                throw ValidationError("chern.total_log_tangent needs dim+1 "
                                      "entries");
            for (int i = 0; i <= scene.dim; ++i) E.c[i] = R.parse(texts[i]);
            if (E.c[0] != R.parse("1"))
                throw ValidationError("supplied total class must start with 1");
        } else {
            std::vector<int> degs;
            for (const auto& g : scene.divisor_hom) degs.push_back(g.total_degree());
            E = total_chern_log_pn(R, degs);
        }
        auto F = TotalClass::line(
            R, R.parse(std::to_string(1 - scene.degree) + "*h"));
        return virtual_phi(phi, E, F, R);
    }
    // presented
    auto R = CohomologyRing::presented(*scene.presented);
    if (!scene.chern_supplied_text)
        throw ValidationError(
            "presented scenes need chern.total_log_tangent entries");
    const auto& texts = *scene.chern_supplied_text;
    if (static_cast<int>(texts.size()) != R.top_degree() + 1)
        throw ValidationError("chern.total_log_tangent needs top+1 entries");
    TotalClass E = TotalClass::one(R);
    for (int i = 0; i <= R.top_degree(); ++i) E.c[i] = R.parse(texts[i]);
    if (E.c[0] != R.parse("1"))
        throw ValidationError("supplied total class must start with 1");
    TotalClass F = scene.foliation_c1_text
                       ? TotalClass::line(R, R.parse(*scene.foliation_c1_text))
                       : TotalClass::one(R);
    if (phi.n() != R.top_degree())
        throw DegreeMismatch("phi degree does not match the presented ring");
    return virtual_phi(phi, E, F, R);
}

GlobalReport run_global(const Scene& scene, const RunOptions& opts) {
    if (scene.kind == Scene::Kind::Affine)
        throw ValidationError("verification needs a projective or presented "
                              "scene; affine scenes only support per-point "
                              "residues");
    auto phi = effective_phi(scene, opts.phi_override);

    auto points = dedup_points(scene);
    auto cache = build_cache(scene, points, true);

    GlobalReport rep;
    rep.phi = phi.text();
    rep.points = (opts.jobs > 1)
                     ? compute_points_parallel(scene, cache, points, phi, opts.jobs)
                     : compute_points_serial(scene, cache, points, phi);

    rep.local_total = Rat(0);
    long mu_total = 0;
    for (const auto& p : rep.points) {
        rep.local_total += p.on_divisor ? *p.res_log : p.bb;
        mu_total += p.milnor;
    }

    rep.certificate.applicable = scene.kind == Scene::Kind::Projective;
    rep.certificate.mu_total = mu_total;
    if (rep.certificate.applicable) {
        long expected = 0, dpow = 1;
        for (int i = 0; i <= scene.dim; ++i) {
            expected += dpow;
            dpow *= scene.degree;
        }
        rep.certificate.expected = expected;
        rep.certificate.ok = mu_total == expected;
    } else {
        rep.certificate.expected = mu_total;
        rep.certificate.ok = true;
    }

    rep.chern_side = chern_side(scene, opts.phi_override);
    rep.difference = rep.local_total - *rep.chern_side;
    rep.equal = rep.difference == 0 && rep.certificate.ok;

    if (scene.kind == Scene::Kind::Projective && !scene.divisor_hom.empty()) {
        auto c1n = PhiSpec::parse("c1^" + std::to_string(scene.dim), scene.dim);
        if (phi.expr() == c1n.expr()) {
            long degD = 0;
            for (const auto& g : scene.divisor_hom) degD += g.total_degree();
            rep.poincare = poincare_bound_check(scene.dim, degD, scene.degree,
                                                rep.local_total);
        }
    }
    return rep;
}

PointReport run_point(const Scene& scene, int chart, std::span<const Rat> coords,
                      const std::optional<std::string>& phi_text) {
    auto phi = effective_phi(scene, phi_text);
    auto cd = chart_restrict(scene, chart);
    if (static_cast<int>(coords.size()) != scene.dim)
        throw ValidationError("point has wrong coordinate count");
    if (!cd.field.vanishes_at(coords))
        throw ValidationError("point " +
                              point_str(coords) +
                              " does not zero the chart field");
    PointReport rep;
    rep.chart = chart;
    rep.coords.assign(coords.begin(), coords.end());
    rep.on_divisor = cd.divisor.vanishes_at(coords);

    GrothOptions opts;
    for (const auto& s : scene.singularities) {
        if (s.chart != chart) continue;
        if (std::equal(s.coords.begin(), s.coords.end(), coords.begin(),
                       coords.end()))
            continue;
        opts.other_zeros.push_back(s.coords);
    }
    if (scene.kind == Scene::Kind::Projective) {
        opts.other_zeros.clear();
        for (const auto& p : dedup_points(scene)) {
            if (std::find(p.charts.begin(), p.charts.end(), chart) ==
                p.charts.end())
                continue;
            auto q = chart_coords(p.hom, chart);
            if (std::equal(q.begin(), q.end(), coords.begin(), coords.end()))
                continue;
            opts.other_zeros.push_back(std::move(q));
        }
    }

    rep.milnor = milnor(cd.field, coords);
    rep.bb = bb_residue(phi, cd.field, coords, opts);
    if (rep.on_divisor) {
        auto frame = m_log(cd.field, normal_crossing_basis(cd.divisor));
        rep.res_log = res_log(phi, cd.field, frame, coords, opts);
        Ideal theta_ideal{cd.amb, frame.theta};
        rep.ind_log = local_multiplicity(theta_ideal, coords);
    }
    return rep;
}

} // namespace logbb
