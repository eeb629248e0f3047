#pragma once

#include "logbb/foliation.hpp"
#include "logbb/report.hpp"

namespace logbb {

struct Scene;

/// Singularity data in an adapted chart: the invariant branch is {z = 0},
/// the point sits at the origin, and the field decomposes as
/// v = z*A(z,w) d/dz + B(z,w) d/dw.
struct SmoothBranch {
    std::vector<Rat> point; // coordinates in the chart the branch came from
    AmbientPtr adapted;     // (z, w)
    MPoly A, B;
};

/// Builds the adapted chart for an affine-linear branch equation through p
/// and decomposes the field there. Throws UnsupportedBranch for non-linear
/// branch equations and NotLogarithmic when the branch is not invariant.
SmoothBranch adapt_branch(const VectorField& v, const MPoly& branch,
                          std::span<const Rat> p);

/// Vanishing order of the tangential component along the branch.
long gsv_smooth(const SmoothBranch& br);

/// Residue of A(0,w)/B(0,w) at w = 0.
Rat cs_smooth(const SmoothBranch& br);

/// Per-point GSV/CS/BB/Res^log ledger over a P^2 scene with the three global
/// identity checks (Brunella, Camacho-Sad, and the BB - Res^log difference).
LedgerReport surface_ledger(const Scene& scene, int jobs = 1);

} // namespace logbb
