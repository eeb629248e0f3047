#pragma once

#include "logbb/foliation.hpp"

#include <optional>

namespace logbb {

/// Homogeneous symmetric polynomial phi in the Chern symbols c_1..c_n,
/// weighted-homogeneous of degree n with weight(c_i) = i.
class PhiSpec {
public:
    /// Accepts expressions over c1..cn (and the alias "det" for cn).
    /// Throws DegreeMismatch unless every term has weighted degree n.
    static PhiSpec parse(std::string_view expr, int n);

    int n() const { return n_; }
    const MPoly& expr() const { return expr_; }
    const std::string& text() const { return text_; }

private:
    int n_ = 0;
    MPoly expr_;
    std::string text_;
};

/// phi evaluated on a polynomial matrix: c_i(M) is the sum of i x i principal
/// minors of M, substituted into the phi expression.
MPoly phi_of_matrix(const PhiSpec& phi, const PolyMatrix& M);

/// Isolated singular point of the chart field.
struct SingularPoint {
    int chart = 0;
    std::vector<Rat> coords;
    bool on_divisor = false;
    bool nondegenerate = false;
};

struct GrothOptions {
    /// Polynomial vanishing at every other zero of v in the chart and not
    /// at p. Built automatically from `other_zeros` when absent.
    std::optional<MPoly> separator;
    std::vector<std::vector<Rat>> other_zeros;
    /// Testing hooks: force the transformation-law path, optionally with a
    /// fixed (N, t) pair.
    bool force_transform_path = false;
    int force_N = 0;
    int force_t = -1;
    int budget_N = 16;
    int budget_t = 6;
};

/// Normalized Grothendieck residue Res_p[h; v_1..v_n] (no (2 pi i)^n factor).
/// Nondegenerate points take h(p)/det Jv(p); degenerate ones go through the
/// transformation law with membership s^t (z_i - p_i)^N in <v>.
Rat groth_residue(const MPoly& h, const VectorField& v, std::span<const Rat> p,
                  const GrothOptions& opts = {});

/// Milnor number: local quotient dimension by the component ideal.
long milnor(const VectorField& v, std::span<const Rat> p);

/// Baum-Bott residue Res_p[phi(Jv); v].
Rat bb_residue(const PhiSpec& phi, const VectorField& v, std::span<const Rat> p,
               const GrothOptions& opts = {});

/// Log Baum-Bott residue Res_p[phi(M+); v] for the frame data of basis B.
Rat res_log(const PhiSpec& phi, const VectorField& v, const SaitoBasis& B,
            std::span<const Rat> p, const GrothOptions& opts = {});
Rat res_log(const PhiSpec& phi, const VectorField& v, const LogFrameData& frame,
            std::span<const Rat> p, const GrothOptions& opts = {});

/// Aleksandrov logarithmic index: dim O_p / <theta_1..theta_n>; 0 when the
/// theta ideal does not vanish at p.
long ind_log(const VectorField& v, const SaitoBasis& B, std::span<const Rat> p);

} // namespace logbb
