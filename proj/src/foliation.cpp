#include "logbb/foliation.hpp"

#include "logbb/errors.hpp"
#include "logbb/ideal.hpp"

namespace logbb {

MPoly poly_det(const PolyMatrix& m) {
    std::size_t n = m.size();
    if (n == 0) throw SizeMismatch("determinant of empty matrix");
    auto amb = m[0][0].ambient();
    if (n == 1) return m[0][0];
    MPoly acc(amb);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        PolyMatrix minor;
        minor.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<MPoly> row;
            row.reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        MPoly term = m[0][j] * poly_det(minor);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

MPoly principal_minor_sum(const PolyMatrix& m, std::size_t k) {
    std::size_t n = m.size();
    auto amb = m[0][0].ambient();
    if (k == 0) return MPoly::constant(amb, Rat(1));
    if (k > n) return MPoly::zero(amb);
    // iterate k-subsets of {0..n-1}
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    MPoly acc(amb);
    for (;;) {
        PolyMatrix sub(k, std::vector<MPoly>(k, MPoly::zero(amb)));
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c) sub[r][c] = m[idx[r]][idx[c]];
        acc += poly_det(sub);
        // next subset
        std::size_t i = k;
        while (i-- > 0) {
            if (idx[i] + (k - i) < n) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return acc;
        }
    }
}

MPoly VectorField::apply(const MPoly& h) const {
    if (!same_ambient(amb, h.ambient()))
        throw AmbientMismatch("vector field applied across ambients");
    MPoly acc(amb);
    for (std::size_t i = 0; i < comps.size(); ++i)
        acc += comps[i] * h.derive(static_cast<int>(i));
    return acc;
}

PolyMatrix VectorField::jacobian() const {
    std::size_t n = comps.size();
    PolyMatrix J(n, std::vector<MPoly>(n, MPoly::zero(amb)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            J[i][j] = comps[j].derive(static_cast<int>(i));
    return J;
}

bool VectorField::vanishes_at(std::span<const Rat> p) const {
    for (const auto& c : comps)
        if (c.eval(p) != 0) return false;
    return true;
}

VectorField lie_bracket(const VectorField& u, const VectorField& w) {
    if (!same_ambient(u.amb, w.amb))
        throw AmbientMismatch("lie_bracket: ambient mismatch");
    std::size_t n = u.comps.size();
    VectorField r{u.amb, std::vector<MPoly>(n, MPoly::zero(u.amb))};
    for (std::size_t j = 0; j < n; ++j)
        r.comps[j] = u.apply(w.comps[j]) - w.apply(u.comps[j]);
    return r;
}

Divisor Divisor::make(AmbientPtr amb, std::vector<MPoly> components) {
    MPoly f = MPoly::constant(amb, Rat(1));
    for (std::size_t i = 0; i < components.size(); ++i) {
        const auto& g = components[i];
        if (g.is_zero() || g.is_constant())
            throw ValidationError("divisor component " + std::to_string(i) +
                                  " is constant");
        if (!is_squarefree(g))
            throw ValidationError("divisor component " + std::to_string(i) +
                                  " is not squarefree: " + g.str());
        f = f * g;
    }
    for (std::size_t i = 0; i < components.size(); ++i)
        for (std::size_t j = 0; j < components.size(); ++j) {
            if (i == j) continue;
            if (try_divide_exact(components[j], components[i]))
                throw ValidationError("divisor components " + std::to_string(i) +
                                      " and " + std::to_string(j) +
                                      " are not coprime");
        }
    return Divisor{std::move(amb), std::move(components), std::move(f)};
}

bool Divisor::vanishes_at(std::span<const Rat> p) const {
    return !empty() && f.eval(p) == 0;
}

bool is_logarithmic(const VectorField& v, const Divisor& D) {
    if (D.empty()) return true;
    return try_divide_exact(v.apply(D.f), D.f).has_value();
}

VectorField SaitoBasis::column(std::size_t j) const {
    VectorField v{amb, {}};
    v.comps.reserve(n());
    for (std::size_t i = 0; i < n(); ++i) v.comps.push_back(A[i][j]);
    return v;
}

SaitoBasis normal_crossing_basis(const Divisor& D) {
    auto amb = D.amb;
    std::size_t n = amb->arity();
    std::vector<bool> in_divisor(n, false);
    for (const auto& g : D.components) {
        // must be a single coordinate variable
        if (g.terms().size() != 1)
            throw NotCoordinateNC("component is not a coordinate variable: " +
                                  g.str());
        const auto& [e, c] = *g.terms().begin();
        int var = -1;
        for (std::size_t i = 0; i < n; ++i) {
            if (e[i] == 0) continue;
            if (e[i] != 1 || var >= 0) var = -2;
            if (var == -1) var = static_cast<int>(i);
        }
        if (var < 0 || c != 1)
            throw NotCoordinateNC("component is not a coordinate variable: " +
                                  g.str());
        in_divisor[var] = true;
    }
    PolyMatrix A(n, std::vector<MPoly>(n, MPoly::zero(amb)));
    for (std::size_t i = 0; i < n; ++i)
        A[i][i] = in_divisor[i] ? MPoly::variable(amb, static_cast<int>(i))
                                : MPoly::constant(amb, Rat(1));
    return SaitoBasis{amb, D, std::move(A), Rat(1)};
}

SaitoBasis verify_saito(const PolyMatrix& A, const Divisor& D) {
    auto amb = D.amb;
    std::size_t n = amb->arity();
    if (A.size() != n)
        throw SizeMismatch("Saito matrix must be square of the ambient arity");
    for (const auto& row : A)
        if (row.size() != n) throw SizeMismatch("Saito matrix is not square");

    SaitoBasis B{amb, D, A, Rat(0)};
    MPoly det = poly_det(A);
    auto q = try_divide_exact(det, D.f);
    if (!q || !q->is_constant() || q->is_zero())
        throw DeterminantNotUnitTimesF(
            "det A is not a nonzero constant multiple of f (quotient " +
            (q ? q->str() : std::string("non-polynomial")) + ")");
    for (std::size_t j = 0; j < n; ++j)
        if (!is_logarithmic(B.column(j), D))
            throw NotLogarithmic("column " + std::to_string(j) +
                                 " is not logarithmic along the divisor");
    B.certificate = q->constant_value();
    return B;
}

std::vector<MPoly> express_in_basis(const VectorField& v, const SaitoBasis& B) {
    if (!same_ambient(v.amb, B.amb))
        throw AmbientMismatch("express_in_basis: ambient mismatch");
    std::size_t n = B.n();
    MPoly det = poly_det(B.A);
    std::vector<MPoly> theta;
    theta.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        // Cramer: replace column j by v
        PolyMatrix M = B.A;
        for (std::size_t i = 0; i < n; ++i) M[i][j] = v.comps[i];
        auto q = try_divide_exact(poly_det(M), det);
        if (!q)
            throw NotInLogSheaf("component " + std::to_string(j) +
                                " is not polynomial in the basis");
        theta.push_back(std::move(*q));
    }
    return theta;
}

StructureConstants::StructureConstants(AmbientPtr amb, std::size_t n)
    : amb_(std::move(amb)), n_(n), table_(n) {
    for (std::size_t i = 0; i < n; ++i)
        table_[i].assign(n > i + 1 ? n - i - 1 : 0,
                         std::vector<MPoly>(n, MPoly::zero(amb_)));
}

void StructureConstants::set(std::size_t i, std::size_t j, std::vector<MPoly> row) {
    table_[i][j - i - 1] = std::move(row);
}

MPoly StructureConstants::get(std::size_t i, std::size_t j, std::size_t k) const {
    if (i == j) return MPoly::zero(amb_);
    if (i < j) return table_[i][j - i - 1][k];
    return -table_[j][i - j - 1][k];
}

bool StructureConstants::all_zero() const {
    for (const auto& block : table_)
        for (const auto& row : block)
            for (const auto& p : row)
                if (!p.is_zero()) return false;
    return true;
}

StructureConstants structure_constants(const SaitoBasis& B) {
    std::size_t n = B.n();
    StructureConstants sc(B.amb, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            auto br = lie_bracket(B.column(i), B.column(j));
            sc.set(i, j, express_in_basis(br, B));
        }
    return sc;
}

LogFrameData m_log(const VectorField& v, const SaitoBasis& B) {
    std::size_t n = B.n();
    auto amb = B.amb;
    LogFrameData out{amb, express_in_basis(v, B), structure_constants(B), {}, {}, {}};

    // M_k entry (i,j) = c_{ik}^j for i != k, zero row when i = k
    out.Mk.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        PolyMatrix M(n, std::vector<MPoly>(n, MPoly::zero(amb)));
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            for (std::size_t j = 0; j < n; ++j) M[i][j] = out.structure.get(i, k, j);
        }
        out.Mk.push_back(std::move(M));
    }

    out.Jlog_plus.assign(n, std::vector<MPoly>(n, MPoly::zero(amb)));
    for (std::size_t i = 0; i < n; ++i) {
        auto delta_i = B.column(i);
        for (std::size_t j = 0; j < n; ++j)
            out.Jlog_plus[i][j] = delta_i.apply(out.theta[j]);
    }

    out.Mplus = out.Jlog_plus;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                out.Mplus[i][j] += out.theta[k] * out.Mk[k][i][j];
    return out;
}

} // namespace logbb
