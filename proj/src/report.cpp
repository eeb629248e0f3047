#include "logbb/report.hpp"

#include <json.hpp>

#include <sstream>

namespace logbb {

namespace {

using nlohmann::json;

json rat_json(const Rat& q) { return rat_str(q); }

json point_to_json(const PointReport& p) {
    json j;
    j["chart"] = p.chart;
    json coords = json::array();
    for (const auto& c : p.coords) coords.push_back(rat_str(c));
    j["point"] = coords;
    j["on_divisor"] = p.on_divisor;
    j["milnor"] = p.milnor;
    j["bb"] = rat_json(p.bb);
    j["res_log"] = p.res_log ? rat_json(*p.res_log) : json(nullptr);
    j["ind_log"] = p.ind_log ? json(*p.ind_log) : json(nullptr);
    return j;
}

std::string coords_md(const std::vector<Rat>& coords) {
    std::string s = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ", ";
        s += rat_str(coords[i]);
    }
    return s + ")";
}

} // namespace

std::string point_json(const PointReport& p) {
    return point_to_json(p).dump(2);
}

std::string to_json(const GlobalReport& r) {
    json j;
    j["phi"] = r.phi;
    json pts = json::array();
    for (const auto& p : r.points) pts.push_back(point_to_json(p));
    j["points"] = pts;
    j["local_total"] = rat_json(r.local_total);
    j["chern_side"] = r.chern_side ? rat_json(*r.chern_side) : json(nullptr);
    j["verdict"] = r.equal ? "equal" : "mismatch";
    j["difference"] = rat_json(r.difference);
    j["certificate"] = {{"mu_total", r.certificate.mu_total},
                        {"expected", r.certificate.expected},
                        {"ok", r.certificate.ok},
                        {"applicable", r.certificate.applicable}};
    if (r.poincare) {
        j["poincare"] = {{"total", rat_str(r.poincare->total)},
                         {"deg_divisor", r.poincare->deg_D},
                         {"deg_foliation", r.poincare->deg_F},
                         {"hypothesis_met", r.poincare->hypothesis_met},
                         {"bound_holds", r.poincare->bound_holds},
                         {"verdict", r.poincare->text}};
    }
    return j.dump(2);
}

std::string to_markdown(const GlobalReport& r) {
    std::ostringstream out;
    out << "# Global residue verification (phi = " << r.phi << ")\n\n";
    out << "| chart | point | on D | mu | BB | Res^log | Ind_log |\n";
    out << "|---|---|---|---|---|---|---|\n";
    for (const auto& p : r.points) {
        out << "| " << p.chart << " | " << coords_md(p.coords) << " | "
            << (p.on_divisor ? "yes" : "no") << " | " << p.milnor << " | "
            << rat_str(p.bb) << " | "
            << (p.res_log ? rat_str(*p.res_log) : std::string("-")) << " | "
            << (p.ind_log ? std::to_string(*p.ind_log) : std::string("-"))
            << " |\n";
    }
    out << "\n";
    out << "- local total: " << rat_str(r.local_total) << "\n";
    if (r.chern_side)
        out << "- chern side: " << rat_str(*r.chern_side) << "\n";
    out << "- difference: " << rat_str(r.difference) << "\n";
    out << "- certificate: mu_total " << r.certificate.mu_total << " vs expected "
        << r.certificate.expected << " -> "
        << (r.certificate.ok ? "ok" : "FAILED") << "\n";
    out << "- verdict: " << (r.equal ? "equal" : "MISMATCH") << "\n";
    if (r.poincare) out << "- poincare: " << r.poincare->text << "\n";
    return out.str();
}

std::string to_json(const LedgerReport& r) {
    json j;
    json rows = json::array();
    for (const auto& row : r.rows) {
        json e;
        e["chart"] = row.chart;
        json coords = json::array();
        for (const auto& c : row.coords) coords.push_back(rat_str(c));
        e["point"] = coords;
        e["on_divisor"] = row.on_divisor;
        e["bb"] = rat_str(row.bb);
        e["res_log"] = row.res_log ? rat_json(*row.res_log) : json(nullptr);
        e["gsv"] = row.gsv ? json(*row.gsv) : json(nullptr);
        e["cs"] = row.cs ? rat_json(*row.cs) : json(nullptr);
        rows.push_back(e);
    }
    j["rows"] = rows;
    j["totals"] = {{"bb_on_divisor", rat_str(r.bb_on_divisor)},
                   {"res_log", rat_str(r.res_log_total)},
                   {"gsv", rat_str(r.gsv_total)},
                   {"cs", rat_str(r.cs_total)}};
    j["identities"] = {
        {"brunella",
         {{"lhs", rat_str(r.gsv_total)},
          {"rhs", rat_str(r.nf_minus_d_dot_d)},
          {"ok", r.brunella_ok}}},
        {"camacho_sad",
         {{"lhs", rat_str(r.cs_total)},
          {"rhs", rat_str(r.d_squared)},
          {"ok", r.camacho_sad_ok}}},
        {"bb_minus_res_log",
         {{"lhs", rat_str(r.bb_on_divisor - r.res_log_total)},
          {"rhs", rat_str(Rat(2) * r.gsv_total + r.cs_total)},
          {"ok", r.difference_ok}}}};
    return j.dump(2);
}

std::string to_markdown(const LedgerReport& r) {
    std::ostringstream out;
    out << "# Surface ledger (phi = c1^2)\n\n";
    out << "| chart | point | on D | BB | Res^log | GSV | CS |\n";
    out << "|---|---|---|---|---|---|---|\n";
    for (const auto& row : r.rows) {
        out << "| " << row.chart << " | " << coords_md(row.coords) << " | "
            << (row.on_divisor ? "yes" : "no") << " | " << rat_str(row.bb)
            << " | " << (row.res_log ? rat_str(*row.res_log) : std::string("-"))
            << " | " << (row.gsv ? std::to_string(*row.gsv) : std::string("-"))
            << " | " << (row.cs ? rat_str(*row.cs) : std::string("-"))
            << " |\n";
    }
    out << "\n";
    out << "- sum GSV = " << rat_str(r.gsv_total) << ", (N_F - D).D = "
        << rat_str(r.nf_minus_d_dot_d) << " -> "
        << (r.brunella_ok ? "ok" : "FAILED") << "\n";
    out << "- sum CS = " << rat_str(r.cs_total)
        << ", D^2 = " << rat_str(r.d_squared) << " -> "
        << (r.camacho_sad_ok ? "ok" : "FAILED") << "\n";
    out << "- BB - Res^log = " << rat_str(r.bb_on_divisor - r.res_log_total)
        << ", 2 GSV + CS = " << rat_str(Rat(2) * r.gsv_total + r.cs_total)
        << " -> " << (r.difference_ok ? "ok" : "FAILED") << "\n";
    return out.str();
}

} // namespace logbb
