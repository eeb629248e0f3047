#pragma once

#include "logbb/chern.hpp"

#include <optional>
#include <string>
#include <vector>

namespace logbb {

/// Per-singularity record. bb is always present; res_log and ind_log only
/// for points on the divisor.
struct PointReport {
    int chart = 0;
    std::vector<Rat> coords;
    bool on_divisor = false;
    long milnor = 0;
    Rat bb;
    std::optional<Rat> res_log;
    std::optional<long> ind_log;
};

/// Completeness certificate: sum of Milnor numbers against the expected
/// count sum_{i=0..n} d^i.
struct Certificate {
    long mu_total = 0;
    long expected = 0;
    bool ok = false;
    bool applicable = true;
};

struct GlobalReport {
    std::string phi;
    std::vector<PointReport> points;
    Rat local_total;
    std::optional<Rat> chern_side;
    bool equal = false;
    Rat difference; // local_total - chern_side
    Certificate certificate;
    std::optional<PoincareVerdict> poincare;
};

struct LedgerRow {
    int chart = 0;
    std::vector<Rat> coords;
    bool on_divisor = false;
    Rat bb;
    std::optional<Rat> res_log;
    std::optional<long> gsv;
    std::optional<Rat> cs;
};

/// Surface ledger: Brunella and Camacho-Sad totals plus the
/// BB - Res^log = 2 GSV - CS identity.
struct LedgerReport {
    std::vector<LedgerRow> rows;
    Rat bb_on_divisor;
    Rat res_log_total;
    Rat gsv_total;
    Rat cs_total;
    Rat nf_minus_d_dot_d;
    Rat d_squared;
    bool brunella_ok = false;
    bool camacho_sad_ok = false;
    bool difference_ok = false;
};

std::string to_json(const GlobalReport& r);
std::string to_markdown(const GlobalReport& r);
std::string to_json(const LedgerReport& r);
std::string to_markdown(const LedgerReport& r);
std::string point_json(const PointReport& p);

} // namespace logbb
