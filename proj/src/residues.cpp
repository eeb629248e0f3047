#include "logbb/residues.hpp"

#include "logbb/errors.hpp"
#include "logbb/ideal.hpp"
#include "logbb/parser.hpp"
#include "logbb/series.hpp"

namespace logbb {

PhiSpec PhiSpec::parse(std::string_view expr, int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("c" + std::to_string(i));
    auto amb = make_ambient(names);
    std::string text(expr);
    // "det" is shorthand for the top class
    if (text == "det") text = "c" + std::to_string(n);
    PhiSpec phi;
    phi.n_ = n;
    phi.expr_ = parse_poly(text, amb);
    phi.text_ = text;
    if (phi.expr_.is_zero())
        throw DegreeMismatch("phi expression is identically zero");
    for (const auto& [e, c] : phi.expr_.terms()) {
        int wdeg = 0;
        for (int i = 0; i < n; ++i) wdeg += (i + 1) * e[i];
        if (wdeg != n)
            throw DegreeMismatch("phi term of weighted degree " +
                                 std::to_string(wdeg) + ", expected " +
                                 std::to_string(n));
    }
    return phi;
}

MPoly phi_of_matrix(const PhiSpec& phi, const PolyMatrix& M) {
    std::size_t n = static_cast<std::size_t>(phi.n());
    if (M.size() != n)
        throw SizeMismatch("matrix size " + std::to_string(M.size()) +
                           " does not match phi degree " + std::to_string(n));
    auto amb = M[0][0].ambient();
    std::vector<MPoly> chern;
    chern.reserve(n);
    for (std::size_t i = 1; i <= n; ++i)
        chern.push_back(principal_minor_sum(M, i));
    return phi.expr().compose(amb, chern);
}

namespace {

Rat det_at(const PolyMatrix& M, std::span<const Rat> p) {
    std::size_t n = M.size();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = M[i][j].eval(p);
    // fraction-free enough at this size: plain Gaussian elimination over Q
    Rat det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rat factor = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
        }
    }
    return det;
}

/// separator from the other rational zeros: product of coordinate differences
MPoly build_separator(const AmbientPtr& amb, std::span<const Rat> p,
                      const std::vector<std::vector<Rat>>& other_zeros) {
    MPoly s = MPoly::constant(amb, Rat(1));
    for (const auto& q : other_zeros) {
        if (q.size() != p.size())
            throw SeparatorRequired("other zero with wrong coordinate count");
        int k = -1;
        for (std::size_t i = 0; i < q.size(); ++i)
            if (q[i] != p[i]) {
                k = static_cast<int>(i);
                break;
            }
        if (k < 0) continue; // q == p
        s = s * (MPoly::variable(amb, k) - MPoly::constant(amb, q[k]));
    }
    return s;
}

} // namespace

Rat groth_residue(const MPoly& h, const VectorField& v, std::span<const Rat> p,
                  const GrothOptions& opts) {
    auto amb = v.amb;
    std::size_t n = amb->arity();
    if (!same_ambient(amb, h.ambient()))
        throw AmbientMismatch("groth_residue: ambient mismatch");
    if (!v.vanishes_at(p)) return Rat(0);

    Rat jac = det_at(v.jacobian(), p);
    if (jac != 0 && !opts.force_transform_path) return h.eval(p) / jac;

    // transformation-law path, translated so p sits at the origin
    std::vector<MPoly> vt;
    vt.reserve(n);
    for (const auto& c : v.comps) vt.push_back(c.translate(p));
    MPoly ht = h.translate(p);

    MPoly st(amb);
    if (opts.separator) {
        st = opts.separator->translate(p);
        if (st.constant_value() == 0)
            throw SeparatorRequired("separator vanishes at the point itself");
    } else {
        st = build_separator(amb, p, opts.other_zeros).translate(p);
    }

    Ideal I{amb, vt};
    auto G = groebner(I);

    int N_lo = opts.force_N > 0 ? opts.force_N : 1;
    int N_hi = opts.force_N > 0 ? opts.force_N : opts.budget_N;
    for (int N = N_lo; N <= N_hi; ++N) {
        int t_lo = opts.force_t >= 0 ? opts.force_t : 0;
        int t_hi = opts.force_t >= 0 ? opts.force_t : opts.budget_t;
        for (int t = t_lo; t <= t_hi; ++t) {
            MPoly sp = st.pow(static_cast<unsigned>(t));
            PolyMatrix a(n);
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i) {
                MPoly target =
                    sp * MPoly::variable(amb, static_cast<int>(i))
                             .pow(static_cast<unsigned>(N));
                auto red = reduce(target, G);
                if (!red.normal_form.is_zero())
                    ok = false;
                else
                    a[i] = std::move(red.lift);
            }
            if (!ok) continue;

            int T = static_cast<int>(n) * t * std::max(st.total_degree(), 0) +
                    static_cast<int>(n) * (N - 1) + 2;
            auto hs = TruncSeries::from_poly(ht, T);
            auto dets = TruncSeries::from_poly(poly_det(a), T);
            auto prod = hs * dets;
            if (t > 0) {
                auto spow =
                    TruncSeries::from_poly(st, T).inverse();
                for (std::size_t k = 0; k < n * static_cast<std::size_t>(t); ++k)
                    prod = prod * spow;
            }
            Expo target(n, N - 1);
            return prod.coeff(target);
        }
    }
    if (!opts.separator && opts.other_zeros.empty())
        throw SeparatorRequired(
            "degenerate point: no membership certificate without a separator; "
            "supply the other zeros or an explicit separator polynomial");
    throw BudgetExceeded("no (N, t) membership certificate within budget");
}

long milnor(const VectorField& v, std::span<const Rat> p) {
    Ideal I{v.amb, v.comps};
    return local_multiplicity(I, p);
}

Rat bb_residue(const PhiSpec& phi, const VectorField& v, std::span<const Rat> p,
               const GrothOptions& opts) {
    return groth_residue(phi_of_matrix(phi, v.jacobian()), v, p, opts);
}

Rat res_log(const PhiSpec& phi, const VectorField& v, const LogFrameData& frame,
            std::span<const Rat> p, const GrothOptions& opts) {
    return groth_residue(phi_of_matrix(phi, frame.Mplus), v, p, opts);
}

Rat res_log(const PhiSpec& phi, const VectorField& v, const SaitoBasis& B,
            std::span<const Rat> p, const GrothOptions& opts) {
    return res_log(phi, v, m_log(v, B), p, opts);
}

long ind_log(const VectorField& v, const SaitoBasis& B, std::span<const Rat> p) {
    auto theta = express_in_basis(v, B);
    Ideal I{v.amb, std::move(theta)};
    return local_multiplicity(I, p);
}

} // namespace logbb
