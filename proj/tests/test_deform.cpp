#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "homdef/catalog.hpp"
#include "homdef/cohomology.hpp"

using namespace homdef;

namespace {

Scalar S(const std::string& text, const CtxPtr& ctx) {
    return parse_expression(text, ctx);
}

VecS vec(const CtxPtr& ctx, const std::vector<std::string>& exprs) {
    VecS v;
    for (const auto& e : exprs) v.push_back(S(e, ctx));
    return v;
}

bool vec_eq(const VecS& a, const VecS& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].eq(b[i])) return false;
    return true;
}

/// Sum of all t-coefficients of degree >= 1, i.e. the t-linear rendering
/// obtained by collapsing every positive power of t to t itself.
Scalar collapse_t_powers(const Scalar& s) {
    Scalar acc = s.coeff_of_t(0);
    Scalar flat = Scalar::zero(s.ctx());
    for (std::uint32_t k = 1; k <= s.degree_in_t(); ++k) flat += s.coeff_of_t(k);
    std::size_t t = *s.ctx()->deformation_index();
    return acc + flat * Scalar::variable(s.ctx(), t);
}

} // namespace

TEST_CASE("yau_twist with the identity changes nothing") {
    HomAlgebra a = catalog::build_algebra("mu41");
    HomAlgebra tw = yau_twist(a, LinearMap::identity(4, a.ctx()));
    CHECK(tw.mu().equal(a.mu()));
    CHECK(tw.alpha().is_identity());
}

TEST_CASE("yau_twist refuses non-endomorphisms") {
    HomAlgebra a = catalog::build_algebra("mu41");
    LinearMap bad(4, a.ctx());
    bad.at(0, 1) = Scalar::one(a.ctx());
    bad.at(1, 0) = Scalar::one(a.ctx());
    CHECK_THROWS_AS(yau_twist(a, bad), precondition_error);
}

TEST_CASE("yau_twist of a twisted base requires the override") {
    HomAlgebra e15 = catalog::build_algebra("ex_1_5");
    // zero map is always an endomorphism
    LinearMap z(4, e15.ctx());
    CHECK_THROWS_AS(yau_twist(e15, z), precondition_error);
    HomAlgebra forced = yau_twist(e15, z, true);
    CHECK(forced.alpha().is_zero());
}

TEST_CASE("the Malcev composition twist reproduces the bracket family") {
    HomAlgebra base = catalog::endomorphism_target("alpha_malcev_4dim");
    LinearMap alpha = catalog::build_endomorphism("alpha_malcev_4dim");
    HomAlgebra tw = yau_twist(base, alpha);
    const CtxPtr& c = tw.ctx();
    CHECK(vec_eq(tw.mu().product_of_basis(0, 1),
                 vec(c, {"0", "-1-t", "-t", "-t-t^2"})));
    CHECK(vec_eq(tw.mu().product_of_basis(0, 2), vec(c, {"0", "0", "-1-t", "0"})));
    CHECK(vec_eq(tw.mu().product_of_basis(0, 3),
                 vec(c, {"0", "0", "0", "1+2*t+t^2"})));
    CHECK(vec_eq(tw.mu().product_of_basis(1, 2),
                 vec(c, {"0", "0", "0", "2+4*t+2*t^2"})));
    CHECK(check_identity(tw, IdentityKind::hom_malcev).pass);
}

TEST_CASE("twisting mu41 along its endomorphism family") {
    HomAlgebra base = catalog::endomorphism_target("endo_mu41");
    LinearMap alpha = catalog::build_endomorphism("endo_mu41");
    HomAlgebra tw = yau_twist(base, alpha);
    const CtxPtr& c = tw.ctx();

    Scalar p = S("1 + t*(a6+a7) + t^2*(a6*a7 - a4*a5)", c);
    CHECK(tw.mu().at(2, 3, 1).eq(p));
    CHECK(tw.mu().at(3, 2, 1).eq(-p));
    CHECK(tw.mu().at(0, 1, 1).eq(p));
    CHECK(vec_eq(tw.mu().product_of_basis(0, 0),
                 vec(c, {"1", "t*a1", "t*a2", "t*a3"})));

    // collapsing t-powers yields the t-linear rendering of the same family
    CHECK(collapse_t_powers(tw.mu().at(2, 3, 1))
              .eq(S("1 + t*(-a4*a5 + a6 + a7 + a6*a7)", c)));

    CHECK(check_identity(tw, IdentityKind::left_alt).pass);
    CHECK(check_identity(tw, IdentityKind::multiplicative).pass);
}

TEST_CASE("hom_family_4 is the specialized twist of mu41") {
    HomAlgebra fam = catalog::build_algebra("hom_family_4");
    HomAlgebra base = catalog::endomorphism_target("endo_mu41");
    LinearMap alpha = catalog::build_endomorphism("endo_mu41");
    HomAlgebra tw = yau_twist(base, alpha);
    // specialize: a2 = a3 = 0, then (a4,a5,a6,a7) -> (A2,A3,A4,0)
    std::map<std::string, Rational> kill{{"a2", 0}, {"a3", 0}, {"a7", 0}};
    HomAlgebra spec = tw.substituted(kill);
    // remaining symbols a1,a4,a5,a6,t correspond to a1,a2,a3,a4,t
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k) {
                Scalar lhs = spec.mu().at(i, j, k);
                Scalar rhs = fam.mu().at(i, j, k).substitute({});
                // compare by renaming: evaluate both at matching numeric points
                std::map<std::string, Rational> pl{{"a1", 2}, {"a4", 3}, {"a5", 5},
                                                   {"a6", 7}, {"t", 11}};
                std::map<std::string, Rational> pr{{"a1", 2}, {"a2", 3}, {"a3", 5},
                                                   {"a4", 7}, {"t", 11}};
                CHECK(lhs.substitute(pl).rational_value() ==
                      rhs.substitute(pr).rational_value());
            }
}

TEST_CASE("untwist recovers the base of a twist") {
    HomAlgebra base = catalog::endomorphism_target("endo_mu41");
    LinearMap alpha = catalog::build_endomorphism("endo_mu41");
    HomAlgebra tw = yau_twist(base, alpha);
    UntwistResult u = untwist(tw);
    CHECK(u.algebra.mu().equal(base.mu()));
    CHECK(u.endomorphism_report.pass);
    CHECK(u.algebra.alpha().is_identity());

    HomAlgebra a = catalog::build_algebra("mu41");
    UntwistResult same = untwist(a);
    CHECK(same.algebra.mu().equal(a.mu()));

    CHECK_THROWS_AS(untwist(catalog::build_algebra("ex_1_5")), precondition_error);
}

TEST_CASE("derived algebras") {
    HomAlgebra e15 = catalog::build_algebra("ex_1_5");
    HomAlgebra d0 = derived_algebra(e15, 0, 1);
    CHECK(d0.mu().equal(e15.mu()));

    for (int type : {1, 2}) {
        HomAlgebra d1 = derived_algebra(e15, 1, type);
        CHECK(d1.mu().equal(compose_map_table(e15.alpha(), e15.mu())));
        CHECK(d1.alpha().equal(e15.alpha().compose(e15.alpha())));
        CHECK(check_identity(d1, IdentityKind::left_alt).pass);
    }

    CHECK_THROWS_AS(derived_algebra(catalog::build_algebra("ex_1_4"), 1, 1),
                    precondition_error);
    CHECK_THROWS_AS(derived_algebra(e15, 1, 3), precondition_error);
}

TEST_CASE("second derived family of the twisted Malcev algebra") {
    HomAlgebra base = catalog::endomorphism_target("alpha_malcev_4dim");
    LinearMap alpha = catalog::build_endomorphism("alpha_malcev_4dim");
    HomAlgebra tw = yau_twist(base, alpha);
    HomAlgebra d = derived_algebra(tw, 1, 2);
    const CtxPtr& c = d.ctx();

    CHECK(vec_eq(d.mu().product_of_basis(0, 2),
                 vec(c, {"0", "0", "-1-2*t-t^2", "0"})));
    CHECK(vec_eq(d.mu().product_of_basis(0, 3),
                 vec(c, {"0", "0", "0", "1+4*t+6*t^2+4*t^3+t^4"})));
    CHECK(vec_eq(d.mu().product_of_basis(1, 2),
                 vec(c, {"0", "0", "0", "2+8*t+12*t^2+8*t^3+2*t^4"})));
    CHECK(vec_eq(d.mu().product_of_basis(0, 1),
                 vec(c, {"0", "-1-2*t-t^2", "-2*t-2*t^2", "-2*t-5*t^2-4*t^3-t^4"})));

    // the new twist is alpha^2
    CHECK(vec_eq(d.alpha().column(0),
                 vec(c, {"1", "0", "2*t+t^2", "2*t+2*t^2+t^3"})));
    CHECK(vec_eq(d.alpha().column(1),
                 vec(c, {"0", "1+2*t+t^2", "2*t+2*t^2", "2*t+5*t^2+4*t^3+t^4"})));
    CHECK(vec_eq(d.alpha().column(2), vec(c, {"0", "0", "1+2*t+t^2", "0"})));
    CHECK(vec_eq(d.alpha().column(3), vec(c, {"0", "0", "0", "1+4*t+6*t^2+4*t^3+t^4"})));

    CHECK(check_identity(d, IdentityKind::hom_malcev).pass);
}

TEST_CASE("composition deformation basics") {
    HomAlgebra base = catalog::endomorphism_target("endo_mu41");

    FormalDeformation trivial =
        composition_deformation(base, LinearMap::identity(4, base.ctx()));
    CHECK(trivial.mu_terms().empty());
    CHECK(trivial.alpha_terms().empty());
    CHECK(check_deformation_equation(trivial, 3).pass);

    FormalDeformation d = catalog::build_deformation("def_mu41");
    CHECK(d.flavor() == Flavor::alternative);
    REQUIRE(!d.mu_terms().empty());
    CHECK(d.mu_terms()[0].first == 1);
    // mu_1 = alpha_1 ∘ mu
    LinearMap a1 = map_t_coefficient(catalog::build_endomorphism("endo_mu41"), 1);
    CHECK(d.mu_terms()[0].second.equal(compose_map_table(a1, base.mu())));

    FormalDeformation dm = catalog::build_deformation("def_malcev4");
    CHECK(dm.flavor() == Flavor::malcev);
    HomAlgebra dm_alg = deformation_to_algebra(dm);
    CHECK(vec_eq(dm_alg.mu().product_of_basis(1, 2),
                 vec(dm_alg.ctx(), {"0", "0", "0", "2+4*t+2*t^2"})));
}

TEST_CASE("composition deformation preconditions") {
    HomAlgebra base = catalog::endomorphism_target("endo_mu41");
    LinearMap not_unipotent(4, base.ctx());  // degree-0 part is zero, not id
    CHECK_THROWS_AS(composition_deformation(base, not_unipotent), precondition_error);

    LinearMap non_endo = LinearMap::identity(4, base.ctx());
    std::size_t t = *base.ctx()->deformation_index();
    non_endo.at(0, 1) = Scalar::variable(base.ctx(), t);
    CHECK_THROWS_AS(composition_deformation(base, non_endo), precondition_error);
}

TEST_CASE("deformation equation of composition deformations holds at all degrees") {
    CHECK(check_deformation_equation(catalog::build_deformation("def_mu41"), 6).pass);
    CHECK(check_deformation_equation(catalog::build_deformation("def_mu42"), 6).pass);
    CHECK(check_deformation_equation(catalog::build_deformation("def_malcev4"), 8).pass);
}

TEST_CASE("deformed algebras pass their identities identically in t") {
    HomAlgebra d41 = deformation_to_algebra(catalog::build_deformation("def_mu41"));
    CHECK(check_identity(d41, IdentityKind::left_alt).pass);
    HomAlgebra dm = deformation_to_algebra(catalog::build_deformation("def_malcev4"));
    CHECK(check_identity(dm, IdentityKind::hom_malcev).pass);
}

TEST_CASE("a random mu_1 fails the degree-1 equation exactly when delta2 mu_1 != 0") {
    HomAlgebra base = catalog::endomorphism_target("endo_mu41");
    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> entry(-2, 2);
    for (int iter = 0; iter < 6; ++iter) {
        TwoCochain phi(4, base.ctx(), Flavor::alternative);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                for (std::size_t k = 0; k < 4; ++k)
                    phi.at(i, j, k) = Scalar::from_rational(base.ctx(), entry(rng));
        MultiplicationTable mu1 = phi.table();
        FormalDeformation d(base, {{1, mu1}}, {}, Flavor::alternative, 1);
        DeformationCheckReport rep = check_deformation_equation(d, 1);
        bool cocycle = delta2_alternative(base, phi).is_zero();
        REQUIRE(rep.degrees.size() == 2);
        CHECK(rep.degrees[0].pass);  // base algebra is left alternative
        CHECK(rep.degrees[1].pass == cocycle);
    }
}

TEST_CASE("apply_equivalence with rho = id changes nothing") {
    FormalDeformation d = catalog::build_deformation("def_mu41");
    FormalAutomorphism rho(4, d.ctx(), {});
    FormalDeformation d2 = apply_equivalence(d, rho, 3);
    HomAlgebra a1 = deformation_to_algebra(d);
    HomAlgebra a2 = deformation_to_algebra(d2);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(vec_eq(map_truncate_t(LinearMap::identity(4, d.ctx()), 0).apply(
                             a1.mu().product_of_basis(i, j)),
                         a2.mu().product_of_basis(i, j)));
}

TEST_CASE("first-order equivalence law mu'_1 = mu_1 - delta1 rho_1") {
    HomAlgebra base = catalog::endomorphism_target("endo_mu41");
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int iter = 0; iter < 8; ++iter) {
        MultiplicationTable mu1(4, base.ctx());
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                for (std::size_t k = 0; k < 4; ++k)
                    mu1.at(i, j, k) = Scalar::from_rational(base.ctx(), entry(rng));
        LinearMap rho1(4, base.ctx());
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                rho1.at(i, j) = Scalar::from_rational(base.ctx(), entry(rng));

        FormalDeformation d(base, {{1, mu1}}, {}, Flavor::alternative, 1);
        FormalAutomorphism rho(4, base.ctx(), {{1, rho1}});
        FormalDeformation moved = apply_equivalence(d, rho, 1);

        MultiplicationTable expected = mu1;
        TwoCochain d1 = delta1(base, OneCochain{rho1});
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                for (std::size_t k = 0; k < 4; ++k)
                    expected.at(i, j, k) -= d1.at(i, j, k);

        REQUIRE(moved.mu_terms().size() >= 1);
        CHECK(moved.mu_terms()[0].first == 1);
        CHECK(moved.mu_terms()[0].second.equal(expected));
        // alpha stays undeformed at order 1 when rho commutes at order 0 (id)
        bool alpha_deformed_at_1 = false;
        for (const auto& [deg, f] : moved.alpha_terms())
            if (deg == 1 && !f.is_zero()) alpha_deformed_at_1 = true;
        CHECK_FALSE(alpha_deformed_at_1);
    }
}

TEST_CASE("equivalence is inverted by the truncated inverse automorphism") {
    FormalDeformation d = catalog::build_deformation("def_mu41");
    CtxPtr c = d.ctx();
    LinearMap rho1(4, c);
    rho1.at(0, 1) = Scalar::from_rational(c, Rational(1, 2));
    rho1.at(2, 3) = Scalar::from_rational(c, 2);
    LinearMap rho2(4, c);
    rho2.at(1, 0) = Scalar::from_rational(c, -1);
    FormalAutomorphism rho(4, c, {{1, rho1}, {2, rho2}});

    const std::uint32_t order = 4;
    FormalDeformation moved = apply_equivalence(d, rho, order);
    FormalDeformation back = apply_equivalence(moved, rho.truncated_inverse(order), order);

    HomAlgebra lhs = deformation_to_algebra(back);
    HomAlgebra rhs = deformation_to_algebra(d);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k)
                CHECK(lhs.mu().at(i, j, k).eq(
                    rhs.mu().at(i, j, k).truncate_in_t(order)));
}

TEST_CASE("transported composition deformations still satisfy the equation") {
    FormalDeformation d = catalog::build_deformation("def_malcev4");
    CtxPtr c = d.ctx();
    LinearMap rho1(4, c);
    rho1.at(3, 1) = Scalar::from_rational(c, 1);
    FormalAutomorphism rho(4, c, {{1, rho1}});
    FormalDeformation moved = apply_equivalence(d, rho, 3);
    CHECK(check_deformation_equation(moved, 3).pass);
}

TEST_CASE("deformation_to_algebra of a termless deformation is the base") {
    HomAlgebra base = catalog::endomorphism_target("endo_mu41");
    FormalDeformation d(base, {}, {}, Flavor::alternative, 0);
    CHECK(deformation_to_algebra(d).mu().equal(base.mu()));
}

TEST_CASE("first derived family of an infinitesimal composition deformation") {
    // an exactly unipotent id + t a_1 member of the family
    std::map<std::string, Rational> bind{{"a1", 1}, {"a2", 0}, {"a3", 0}, {"a4", 3},
                                         {"a5", 2}, {"a6", 2}, {"a7", 3}};
    LinearMap alpha_t = catalog::build_endomorphism("endo_mu41", bind);
    CHECK(map_t_degree(alpha_t) == 1);  // the quadratic correction vanishes here
    CtxPtr c = alpha_t.ctx();
    HomAlgebra base(default_labels(4), catalog::detail::mu41_table(c),
                    LinearMap::identity(4, c), FlavorHint::alternative);

    FormalDeformation d = composition_deformation(base, alpha_t);
    HomAlgebra a_t = deformation_to_algebra(d);
    HomAlgebra derived = derived_algebra(a_t, 1, 1);

    LinearMap a1 = map_t_coefficient(alpha_t, 1);
    std::size_t t = *c->deformation_index();
    Scalar tv = Scalar::variable(c, t);
    Scalar two = Scalar::from_rational(c, 2);

    // mu + 2 t a1∘mu + t^2 a1^2∘mu
    MultiplicationTable expect = base.mu();
    MultiplicationTable m1 = compose_map_table(a1, base.mu());
    MultiplicationTable m2 = compose_map_table(a1, m1);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k)
                expect.at(i, j, k) += two * tv * m1.at(i, j, k) +
                                      tv * tv * m2.at(i, j, k);
    CHECK(derived.mu().equal(expect));

    // twist id + 2 t a1 + t^2 a1^2
    LinearMap expect_twist = LinearMap::identity(4, c)
                                 .plus(a1.scaled(two * tv))
                                 .plus(a1.compose(a1).scaled(tv * tv));
    CHECK(derived.alpha().equal(expect_twist));
}
