#pragma once

#include "logbb/mpoly.hpp"

namespace logbb {

using PolyMatrix = std::vector<std::vector<MPoly>>;

/// Laplace expansion; entries over a shared ambient, matrix square.
MPoly poly_det(const PolyMatrix& m);
/// Sum of i x i principal minors (the coefficient of t^i in det(Id + t*M)).
MPoly principal_minor_sum(const PolyMatrix& m, std::size_t i);

/// Holomorphic vector field v = sum v_i d/dz_i with polynomial components.
struct VectorField {
    AmbientPtr amb;
    std::vector<MPoly> comps;

    /// Derivation applied to h: sum_i v_i dh/dz_i.
    MPoly apply(const MPoly& h) const;
    /// Jacobian with entry (i,j) = dv_j/dz_i.
    PolyMatrix jacobian() const;
    bool vanishes_at(std::span<const Rat> p) const;
};

VectorField lie_bracket(const VectorField& u, const VectorField& w);

/// Reduced divisor D = {f = 0} presented by its pairwise-coprime components.
/// f is always the product of the components; an empty list is the empty
/// divisor (f = 1).
struct Divisor {
    AmbientPtr amb;
    std::vector<MPoly> components;
    MPoly f;

    /// Validates the input contract: components nonzero nonconstant,
    /// squarefree, and no component divides another.
    static Divisor make(AmbientPtr amb, std::vector<MPoly> components);
    bool empty() const { return components.empty(); }
    bool vanishes_at(std::span<const Rat> p) const;
};

/// f | v(f) exactly.
bool is_logarithmic(const VectorField& v, const Divisor& D);

/// Certified Saito basis: column j of A holds the d/dz_i coefficients of the
/// j-th basis field, det A = certificate * f with a nonzero rational
/// certificate, and every column is logarithmic along the divisor.
struct SaitoBasis {
    AmbientPtr amb;
    Divisor divisor;
    PolyMatrix A;
    Rat certificate;

    std::size_t n() const { return A.size(); }
    VectorField column(std::size_t j) const;
};

/// delta_i = z_i d/dz_i for divisor variables, d/dz_i otherwise. Requires
/// every component to be a single coordinate variable.
SaitoBasis normal_crossing_basis(const Divisor& D);

/// Checks logarithmicity of every column and det A = c*f with constant c.
SaitoBasis verify_saito(const PolyMatrix& A, const Divisor& D);

/// Solves A*theta = v exactly (Cramer adjugate plus division by det A).
/// Throws NotInLogSheaf when some quotient is not polynomial.
std::vector<MPoly> express_in_basis(const VectorField& v, const SaitoBasis& B);

/// Structure constants of the basis: [delta_i, delta_j] = sum_k c_ijk delta_k
/// stored for i < j; antisymmetrized on access.
class StructureConstants {
public:
    StructureConstants(AmbientPtr amb, std::size_t n);
    void set(std::size_t i, std::size_t j, std::vector<MPoly> row); // i < j
    /// c_ijk with c_ii = 0 and c_ji = -c_ij.
    MPoly get(std::size_t i, std::size_t j, std::size_t k) const;
    bool all_zero() const;

private:
    AmbientPtr amb_;
    std::size_t n_;
    std::vector<std::vector<std::vector<MPoly>>> table_; // [i][j-i-1][k]
};

StructureConstants structure_constants(const SaitoBasis& B);

/// Everything the log Baum-Bott matrix needs, assembled in the positive sign
/// convention: Jlog_plus(i,j) = +delta_i(theta_j) and
/// Mplus = Jlog_plus + sum_k theta_k * M_k. Mplus is the negation of the
/// matrix built from the negative-sign logarithmic Jacobian, and it is the
/// matrix every residue here evaluates phi on.
struct LogFrameData {
    AmbientPtr amb;
    std::vector<MPoly> theta;
    StructureConstants structure;
    std::vector<PolyMatrix> Mk;
    PolyMatrix Jlog_plus;
    PolyMatrix Mplus;
};

LogFrameData m_log(const VectorField& v, const SaitoBasis& B);

} // namespace logbb
