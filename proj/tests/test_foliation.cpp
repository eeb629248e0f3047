#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "logbb/errors.hpp"
#include "logbb/foliation.hpp"
#include "logbb/parser.hpp"

#include <random>

using namespace logbb;

namespace {

MPoly P(const AmbientPtr& amb, const std::string& s) { return parse_poly(s, amb); }

VectorField field(const AmbientPtr& amb, const std::vector<std::string>& comps) {
    VectorField v{amb, {}};
    for (const auto& c : comps) v.comps.push_back(P(amb, c));
    return v;
}

// product chart field x_i(x_i - 1) d/dx_i over x1,x2,x3
VectorField chart_field3(const AmbientPtr& amb) {
    return field(amb, {"x1*(x1-1)", "x2*(x2-1)", "x3*(x3-1)"});
}

// pencil fixture: f = z*w*(z+w) with basis columns E = z dz + w dw and
// delta2 = z^2 dz - w^2 dw
struct Pencil {
    AmbientPtr amb = make_ambient({"z", "w"});
    Divisor D = Divisor::make(amb, {P(amb, "z"), P(amb, "w"), P(amb, "z+w")});
    PolyMatrix A{{P(amb, "z"), P(amb, "z^2")}, {P(amb, "w"), P(amb, "-w^2")}};
    SaitoBasis B = verify_saito(A, D);
};

MPoly random_poly(std::mt19937& rng, const AmbientPtr& amb) {
    std::uniform_int_distribution<int> nterms(1, 3);
    std::uniform_int_distribution<int> expo(0, 2);
    std::uniform_int_distribution<int> coeff(-4, 4);
    MPoly p(amb);
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Expo e(amb->arity());
        for (auto& x : e) x = expo(rng);
        int c = coeff(rng);
        if (c == 0) c = 1;
        p += MPoly::monomial(amb, e, Rat(c));
    }
    return p;
}

VectorField random_field(std::mt19937& rng, const AmbientPtr& amb) {
    VectorField v{amb, {}};
    for (std::size_t i = 0; i < amb->arity(); ++i)
        v.comps.push_back(random_poly(rng, amb));
    return v;
}

} // namespace

TEST_CASE("lie bracket basics") {
    auto amb = make_ambient({"x", "y"});
    auto u = field(amb, {"x", "0"});
    auto w = field(amb, {"1", "0"});
    CHECK(lie_bracket(u, w).comps[0] == P(amb, "-1"));
    CHECK(lie_bracket(u, w).comps[1].is_zero());

    auto a = field(amb, {"x", "0"});
    auto b = field(amb, {"0", "y"});
    CHECK(lie_bracket(a, b).comps[0].is_zero());
    CHECK(lie_bracket(a, b).comps[1].is_zero());

    auto xdy = field(amb, {"0", "x"});
    auto ydx = field(amb, {"y", "0"});
    auto br = lie_bracket(xdy, ydx);
    CHECK(br.comps[0] == P(amb, "x"));
    CHECK(br.comps[1] == P(amb, "-y"));

    auto amb3 = make_ambient({"x1", "x2", "x3"});
    CHECK_THROWS_AS(lie_bracket(u, field(amb3, {"0", "0", "0"})), AmbientMismatch);
}

TEST_CASE("bracket antisymmetry and Jacobi on random triples") {
    std::mt19937 rng(314);
    auto amb = make_ambient({"x", "y"});
    auto zero = field(amb, {"0", "0"});
    for (int it = 0; it < 15; ++it) {
        auto a = random_field(rng, amb);
        auto b = random_field(rng, amb);
        auto c = random_field(rng, amb);
        auto ab = lie_bracket(a, b);
        auto ba = lie_bracket(b, a);
        for (int i = 0; i < 2; ++i) CHECK(ab.comps[i] == -ba.comps[i]);
        auto jac1 = lie_bracket(a, lie_bracket(b, c));
        auto jac2 = lie_bracket(b, lie_bracket(c, a));
        auto jac3 = lie_bracket(c, lie_bracket(a, b));
        for (int i = 0; i < 2; ++i)
            CHECK((jac1.comps[i] + jac2.comps[i] + jac3.comps[i]).is_zero());
    }
}

TEST_CASE("is_logarithmic") {
    auto amb = make_ambient({"x1", "x2", "x3"});
    auto D = Divisor::make(amb, {P(amb, "x1"), P(amb, "x2"), P(amb, "x3")});
    CHECK(is_logarithmic(chart_field3(amb), D));

    auto amb1 = make_ambient({"x", "y"});
    auto Dx = Divisor::make(amb1, {P(amb1, "x")});
    CHECK(!is_logarithmic(field(amb1, {"1", "0"}), Dx));

    auto Dxy = Divisor::make(amb1, {P(amb1, "x"), P(amb1, "y"), P(amb1, "x+y")});
    CHECK(is_logarithmic(field(amb1, {"x", "y"}), Dxy)); // Euler, v(f) = 3f
}

TEST_CASE("divisor validation") {
    auto amb = make_ambient({"x", "y"});
    CHECK_THROWS_AS(Divisor::make(amb, {P(amb, "x^2*y")}), ValidationError);
    CHECK_THROWS_AS(Divisor::make(amb, {P(amb, "x"), P(amb, "x*y")}),
                    ValidationError);
    CHECK_THROWS_AS(Divisor::make(amb, {P(amb, "2")}), ValidationError);
    auto D = Divisor::make(amb, {});
    CHECK(D.empty());
    CHECK(D.f == P(amb, "1"));
}

TEST_CASE("normal crossing basis") {
    auto amb = make_ambient({"x1", "x2", "x3"});
    auto D = Divisor::make(amb, {P(amb, "x1"), P(amb, "x2"), P(amb, "x3")});
    auto B = normal_crossing_basis(D);
    CHECK(B.certificate == 1);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            if (i == j)
                CHECK(B.A[i][j] == MPoly::variable(amb, static_cast<int>(i)));
            else
                CHECK(B.A[i][j].is_zero());
        }

    auto amb2 = make_ambient({"x", "y"});
    auto B2 = normal_crossing_basis(Divisor::make(amb2, {P(amb2, "x")}));
    CHECK(B2.A[0][0] == P(amb2, "x"));
    CHECK(B2.A[1][1] == P(amb2, "1"));

    CHECK_THROWS_AS(normal_crossing_basis(
                        Divisor::make(amb2, {P(amb2, "x"), P(amb2, "x+y")})),
                    NotCoordinateNC);
}

TEST_CASE("verify_saito on the pencil fixture") {
    Pencil px;
    CHECK(px.B.certificate == -1);
    // independent oracle: determinant expands to -z*w*(z+w)
    CHECK(poly_det(px.A) == P(px.amb, "-z*w*(z+w)"));
    for (std::size_t j = 0; j < 2; ++j) CHECK(is_logarithmic(px.B.column(j), px.D));

    auto amb = make_ambient({"x", "y"});
    auto Dx = Divisor::make(amb, {P(amb, "x")});
    auto B = verify_saito({{P(amb, "x"), P(amb, "0")}, {P(amb, "0"), P(amb, "1")}},
                          Dx);
    CHECK(B.certificate == 1);

    CHECK_THROWS_AS(verify_saito({{P(amb, "1"), P(amb, "0")},
                                  {P(amb, "0"), P(amb, "1")}},
                                 Dx),
                    DeterminantNotUnitTimesF);
}

TEST_CASE("express_in_basis") {
    auto amb = make_ambient({"x1", "x2", "x3"});
    auto D = Divisor::make(amb, {P(amb, "x1"), P(amb, "x2"), P(amb, "x3")});
    auto B = normal_crossing_basis(D);
    auto v = chart_field3(amb);
    auto theta = express_in_basis(v, B);
    CHECK(theta[0] == P(amb, "x1-1"));
    CHECK(theta[1] == P(amb, "x2-1"));
    CHECK(theta[2] == P(amb, "x3-1"));

    // reconstruction
    for (std::size_t i = 0; i < 3; ++i) {
        MPoly acc(amb);
        for (std::size_t j = 0; j < 3; ++j) acc += B.A[i][j] * theta[j];
        CHECK(acc == v.comps[i]);
    }

    Pencil px;
    auto t2 = express_in_basis(px.B.column(1), px.B);
    CHECK(t2[0].is_zero());
    CHECK(t2[1] == P(px.amb, "1"));

    auto amb2 = make_ambient({"x", "y"});
    auto Bd = normal_crossing_basis(Divisor::make(amb2, {P(amb2, "x")}));
    CHECK_THROWS_AS(express_in_basis(field(amb2, {"1", "0"}), Bd), NotInLogSheaf);
}

TEST_CASE("structure constants") {
    auto amb = make_ambient({"x1", "x2", "x3"});
    auto D = Divisor::make(amb, {P(amb, "x1"), P(amb, "x2")});
    auto sc = structure_constants(normal_crossing_basis(D));
    CHECK(sc.all_zero());

    Pencil px;
    auto psc = structure_constants(px.B);
    CHECK(psc.get(0, 1, 0).is_zero());
    CHECK(psc.get(0, 1, 1) == P(px.amb, "1"));
    CHECK(psc.get(1, 0, 1) == P(px.amb, "-1")); // antisymmetry
    CHECK(psc.get(0, 0, 1).is_zero());
    CHECK(psc.get(1, 1, 0).is_zero());
}

TEST_CASE("m_log assembles Mplus") {
    auto amb = make_ambient({"x1", "x2", "x3"});
    auto D = Divisor::make(amb, {P(amb, "x1"), P(amb, "x2"), P(amb, "x3")});
    auto lf = m_log(chart_field3(amb), normal_crossing_basis(D));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            if (i == j)
                CHECK(lf.Mplus[i][j] == MPoly::variable(amb, static_cast<int>(i)));
            else
                CHECK(lf.Mplus[i][j].is_zero());
        }

    // 2D diagonal field lambda*z dz + mu*w dw with D = {z = 0}
    auto amb2 = make_ambient({"z", "w"});
    auto D2 = Divisor::make(amb2, {P(amb2, "z")});
    auto lf2 = m_log(field(amb2, {"2*z", "3*w"}), normal_crossing_basis(D2));
    CHECK(lf2.Mplus[0][0].is_zero());
    CHECK(lf2.Mplus[0][1].is_zero());
    CHECK(lf2.Mplus[1][0].is_zero());
    CHECK(lf2.Mplus[1][1] == P(amb2, "3"));

    // pencil fixture with v = E: hand-assembled oracle M+ = M_1 = [[0,0],[0,-1]]
    Pencil px;
    auto lfp = m_log(px.B.column(0), px.B);
    CHECK(lfp.theta[0] == P(px.amb, "1"));
    CHECK(lfp.theta[1].is_zero());
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(lfp.Jlog_plus[i][j].is_zero());
    CHECK(lfp.Mplus[0][0].is_zero());
    CHECK(lfp.Mplus[0][1].is_zero());
    CHECK(lfp.Mplus[1][0].is_zero());
    CHECK(lfp.Mplus[1][1] == P(px.amb, "-1"));
}

TEST_CASE("reconstruction holds for every certified basis") {
    std::mt19937 rng(77);
    Pencil px;
    for (int it = 0; it < 10; ++it) {
        // random logarithmic field: polynomial combination of basis columns
        auto a = random_poly(rng, px.amb);
        auto b = random_poly(rng, px.amb);
        VectorField v{px.amb, {}};
        for (std::size_t i = 0; i < 2; ++i)
            v.comps.push_back(px.B.A[i][0] * a + px.B.A[i][1] * b);
        CHECK(is_logarithmic(v, px.D));
        auto theta = express_in_basis(v, px.B);
        CHECK(theta[0] == a);
        CHECK(theta[1] == b);
    }
}

TEST_CASE("determinant helpers") {
    auto amb = make_ambient({"a", "b", "c"});
    PolyMatrix m{{P(amb, "a"), P(amb, "0"), P(amb, "0")},
                 {P(amb, "0"), P(amb, "b"), P(amb, "0")},
                 {P(amb, "0"), P(amb, "0"), P(amb, "c")}};
    CHECK(poly_det(m) == P(amb, "a*b*c"));
    CHECK(principal_minor_sum(m, 1) == P(amb, "a+b+c"));
    CHECK(principal_minor_sum(m, 2) == P(amb, "a*b+a*c+b*c"));
    CHECK(principal_minor_sum(m, 3) == P(amb, "a*b*c"));
    CHECK(principal_minor_sum(m, 0) == P(amb, "1"));
}
