#pragma once

#include <functional>
#include <string>
#include <vector>

#include "homdef/deform.hpp"
#include "homdef/expr.hpp"

namespace homdef::catalog {

// ---------------------------------------------------------------------------
// entry metadata

struct EntryInfo {
    std::string name;
    std::string kind;   // "algebra" | "endomorphism" | "deformation"
    std::string doc;
    std::string check;  // documented regression check
    std::string target; // for endomorphisms/deformations: the base algebra
};

inline const std::vector<EntryInfo>& entries() {
    static const std::vector<EntryInfo> list = {
        {"ex_1_4", "algebra",
         "3-dimensional Hom-associative family over parameters a, b; the twist "
         "rescales basis lines by a, a, b",
         "hom_assoc", ""},
        {"ex_1_5", "algebra",
         "4-dimensional left Hom-alternative algebra whose twist is right "
         "multiplication by e0; not alternative as a plain algebra",
         "left_alt", ""},
        {"mu41", "algebra",
         "4-dimensional alternative non-associative algebra: e0 a left unit on "
         "{e0,e1} and a right unit on {e2,e3}, e2*e3 = -e3*e2 = e1",
         "alternative", ""},
        {"mu42", "algebra",
         "opposite twin of mu41: e0 a right unit on {e0,e1} and a left unit on "
         "{e2,e3}, e2*e3 = -e3*e2 = e1",
         "alternative", ""},
        {"octonions", "algebra",
         "8-dimensional octonion algebra; e0 unit, e_i^2 = -e0, oriented Fano "
         "lines (1,2,3),(1,4,5),(1,7,6),(2,4,6),(2,5,7),(3,4,7),(3,6,5)",
         "alternative", ""},
        {"malcev_plain_4dim", "algebra",
         "4-dimensional solvable Malcev non-Lie algebra: [e0,e1]=-e1, "
         "[e0,e2]=-e2, [e0,e3]=e3, [e1,e2]=2e3",
         "hom_malcev", ""},
        {"ex_malcev_4dim", "algebra",
         "4-dimensional Hom-Malcev family in b1,b2,a2,a3,c, the twist of "
         "malcev_plain_4dim along its general endomorphism",
         "hom_malcev", ""},
        {"hom_family_4", "algebra",
         "4-dimensional Hom-alternative family in a1..a4,t obtained by "
         "twisting mu41 along endo_mu41 at a2=a3=0, (a4,a5,a6,a7)=(a2,a3,a4,0)",
         "left_alt", ""},
        {"endo_mu41", "endomorphism",
         "unipotent endomorphism family of mu41: id + t*d + t^2*q with d the "
         "generic derivation and q the quadratic correction that makes the "
         "family multiplicative identically in a1..a7,t",
         "endomorphism", "mu41"},
        {"endo_mu42", "endomorphism",
         "unipotent endomorphism family of mu42, mirror image of endo_mu41",
         "endomorphism", "mu42"},
        {"alpha_malcev_4dim", "endomorphism",
         "unipotent endomorphism family of malcev_plain_4dim used for its "
         "composition deformation",
         "endomorphism", "malcev_plain_4dim"},
        {"def_mu41", "deformation",
         "composition deformation of mu41 along endo_mu41",
         "deformation_equation", "mu41"},
        {"def_mu42", "deformation",
         "composition deformation of mu42 along endo_mu42",
         "deformation_equation", "mu42"},
        {"def_malcev4", "deformation",
         "composition deformation of malcev_plain_4dim along alpha_malcev_4dim",
         "deformation_equation", "malcev_plain_4dim"},
    };
    return list;
}

inline const EntryInfo* find(const std::string& name) {
    for (const auto& e : entries())
        if (e.name == name) return &e;
    return nullptr;
}

// ---------------------------------------------------------------------------
// table builders

namespace detail {

class TableBuilder {
public:
    TableBuilder(std::size_t dim, CtxPtr ctx) : t_(dim, std::move(ctx)) {}

    void set(std::size_t i, std::size_t j, std::size_t k, const std::string& expr) {
        t_.at(i, j, k) = parse_expression(expr, t_.ctx());
    }
    void set_skew(std::size_t i, std::size_t j, std::size_t k, const std::string& expr) {
        Scalar v = parse_expression(expr, t_.ctx());
        t_.at(i, j, k) = v;
        t_.at(j, i, k) = -v;
    }
    MultiplicationTable take() { return std::move(t_); }

private:
    MultiplicationTable t_;
};

class MapBuilder {
public:
    MapBuilder(std::size_t dim, CtxPtr ctx) : m_(dim, std::move(ctx)) {}
    /// entry (i, j): coefficient of e_i in the image of e_j
    void set(std::size_t i, std::size_t j, const std::string& expr) {
        m_.at(i, j) = parse_expression(expr, m_.ctx());
    }
    LinearMap take() { return std::move(m_); }

private:
    LinearMap m_;
};

inline MultiplicationTable mu41_table(const CtxPtr& ctx) {
    TableBuilder b(4, ctx);
    b.set(0, 0, 0, "1");  // e0*e0 = e0
    b.set(0, 1, 1, "1");  // e0*e1 = e1
    b.set(2, 0, 2, "1");  // e2*e0 = e2
    b.set(2, 3, 1, "1");  // e2*e3 = e1
    b.set(3, 0, 3, "1");  // e3*e0 = e3
    b.set(3, 2, 1, "-1"); // e3*e2 = -e1
    return b.take();
}

inline MultiplicationTable mu42_table(const CtxPtr& ctx) {
    TableBuilder b(4, ctx);
    b.set(0, 0, 0, "1");
    b.set(0, 2, 2, "1");
    b.set(0, 3, 3, "1");
    b.set(1, 0, 1, "1");
    b.set(2, 3, 1, "1");
    b.set(3, 2, 1, "-1");
    return b.take();
}

inline MultiplicationTable malcev_plain_table(const CtxPtr& ctx) {
    TableBuilder b(4, ctx);
    b.set_skew(0, 1, 1, "-1"); // [e0,e1] = -e1
    b.set_skew(0, 2, 2, "-1"); // [e0,e2] = -e2
    b.set_skew(0, 3, 3, "1");  // [e0,e3] = e3
    b.set_skew(1, 2, 3, "2");  // [e1,e2] = 2e3
    return b.take();
}

/// id + t*derivation + t^2*correction; the unique unipotent multiplicative
/// family over a1..a7. `sign` flips the e1-row corrections between the two
/// mirror algebras.
inline LinearMap endo_mu4x_map(const CtxPtr& ctx, int sign) {
    MapBuilder b(4, ctx);
    std::string s = sign > 0 ? "" : "-";
    b.set(0, 0, "1");
    b.set(1, 0, "t*a1");
    b.set(2, 0, "t*a2");
    b.set(3, 0, "t*a3");
    b.set(1, 1, "1 + t*(a6+a7) + t^2*(a6*a7 - a4*a5)");
    b.set(1, 2, s + "(t*a3 + t^2*(a3*a6 - a2*a5))");
    b.set(2, 2, "1 + t*a6");
    b.set(3, 2, "t*a5");
    b.set(1, 3, s + "(-t*a2 + t^2*(a3*a4 - a2*a7))");
    b.set(2, 3, "t*a4");
    b.set(3, 3, "1 + t*a7");
    return b.take();
}

inline CtxPtr endo_mu4x_ctx() {
    return make_context({"a1", "a2", "a3", "a4", "a5", "a6", "a7", "t"},
                        std::string("t"));
}

} // namespace detail

// ---------------------------------------------------------------------------
// builders

inline HomAlgebra build_algebra(const std::string& name) {
    using detail::MapBuilder;
    using detail::TableBuilder;

    if (name == "ex_1_4") {
        CtxPtr ctx = make_context({"a", "b"});
        TableBuilder t(3, ctx);
        // basis e1, e2, e3
        t.set(0, 0, 0, "a");
        t.set(0, 1, 1, "a");
        t.set(1, 0, 1, "a");
        t.set(0, 2, 2, "b");
        t.set(2, 0, 2, "b");
        t.set(1, 1, 1, "a");
        t.set(1, 2, 2, "b");
        MapBuilder a(3, ctx);
        a.set(0, 0, "a");
        a.set(1, 1, "a");
        a.set(2, 2, "b");
        return HomAlgebra({"e1", "e2", "e3"}, t.take(), a.take());
    }

    if (name == "ex_1_5") {
        CtxPtr ctx = make_context({});
        TableBuilder t(4, ctx);
        t.set(0, 0, 0, "1");
        t.set(0, 0, 2, "1");  // e0*e0 = e0 + e2
        t.set(2, 0, 2, "2");  // e2*e0 = 2e2
        t.set(3, 0, 2, "1");  // e3*e0 = e2
        MapBuilder a(4, ctx);
        a.set(0, 0, "1");
        a.set(2, 0, "1");  // alpha(e0) = e0 + e2
        a.set(2, 2, "2");  // alpha(e2) = 2e2
        a.set(2, 3, "1");  // alpha(e3) = e2
        return HomAlgebra(default_labels(4), t.take(), a.take());
    }

    if (name == "mu41") {
        CtxPtr ctx = make_context({});
        return HomAlgebra(default_labels(4), detail::mu41_table(ctx),
                          LinearMap::identity(4, ctx), FlavorHint::alternative);
    }

    if (name == "mu42") {
        CtxPtr ctx = make_context({});
        return HomAlgebra(default_labels(4), detail::mu42_table(ctx),
                          LinearMap::identity(4, ctx), FlavorHint::alternative);
    }

    if (name == "octonions") {
        CtxPtr ctx = make_context({});
        MultiplicationTable t(8, ctx);
        Scalar one = Scalar::one(ctx);
        for (std::size_t i = 0; i < 8; ++i) {
            t.at(0, i, i) = one;
            t.at(i, 0, i) = one;
        }
        for (std::size_t i = 1; i < 8; ++i) t.at(i, i, 0) = -one;
        const int lines[7][3] = {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6},
                                 {2, 5, 7}, {3, 4, 7}, {3, 6, 5}};
        for (const auto& l : lines) {
            std::size_t a = l[0], b = l[1], c = l[2];
            t.at(a, b, c) = one;
            t.at(b, a, c) = -one;
            t.at(b, c, a) = one;
            t.at(c, b, a) = -one;
            t.at(c, a, b) = one;
            t.at(a, c, b) = -one;
        }
        return HomAlgebra(default_labels(8), std::move(t),
                          LinearMap::identity(8, ctx), FlavorHint::alternative);
    }

    if (name == "malcev_plain_4dim") {
        CtxPtr ctx = make_context({});
        return HomAlgebra(default_labels(4), detail::malcev_plain_table(ctx),
                          LinearMap::identity(4, ctx), FlavorHint::malcev);
    }

    if (name == "ex_malcev_4dim") {
        CtxPtr ctx = make_context({"b1", "b2", "a2", "a3", "c"});
        TableBuilder t(4, ctx);
        t.set_skew(0, 1, 1, "-b1");
        t.set_skew(0, 1, 2, "-b2");
        t.set_skew(0, 1, 3, "-a2*b1");  // [e0,e1] = -(b1 e1 + b2 e2 + a2 b1 e3)
        t.set_skew(0, 2, 2, "-c");
        t.set_skew(0, 3, 3, "b1*c");
        t.set_skew(1, 2, 3, "2*b1*c");
        MapBuilder a(4, ctx);
        a.set(0, 0, "1");
        a.set(2, 0, "a2");
        a.set(3, 0, "a3");
        a.set(1, 1, "b1");
        a.set(2, 1, "b2");
        a.set(3, 1, "a2*b1");
        a.set(2, 2, "c");
        a.set(3, 3, "b1*c");
        return HomAlgebra(default_labels(4), t.take(), a.take(), FlavorHint::malcev);
    }

    if (name == "hom_family_4") {
        CtxPtr ctx = make_context({"a1", "a2", "a3", "a4", "t"}, std::string("t"));
        // 1 + t*a4 - t^2*a2*a3 multiplies every e1-line
        const std::string q = "(1 + t*a4 - t^2*a2*a3)";
        TableBuilder t(4, ctx);
        t.set(0, 0, 0, "1");
        t.set(0, 0, 1, "t*a1");
        t.set(0, 1, 1, q);
        t.set(2, 0, 2, "1 + t*a4");
        t.set(2, 0, 3, "t*a3");
        t.set(2, 3, 1, q);
        t.set(3, 0, 2, "t*a2");
        t.set(3, 0, 3, "1");
        t.set(3, 2, 1, "-" + q);
        MapBuilder a(4, ctx);
        a.set(0, 0, "1");
        a.set(1, 0, "t*a1");
        a.set(1, 1, q);
        a.set(2, 2, "1 + t*a4");
        a.set(3, 2, "t*a3");
        a.set(2, 3, "t*a2");
        a.set(3, 3, "1");
        return HomAlgebra(default_labels(4), t.take(), a.take(),
                          FlavorHint::alternative);
    }

    throw error("unknown catalog algebra '" + name + "'");
}

inline LinearMap build_endomorphism(const std::string& name) {
    using detail::MapBuilder;
    if (name == "endo_mu41") return detail::endo_mu4x_map(detail::endo_mu4x_ctx(), +1);
    if (name == "endo_mu42") return detail::endo_mu4x_map(detail::endo_mu4x_ctx(), -1);
    if (name == "alpha_malcev_4dim") {
        CtxPtr ctx = make_context({"t"}, std::string("t"));
        MapBuilder b(4, ctx);
        b.set(0, 0, "1");
        b.set(2, 0, "t");
        b.set(3, 0, "t");            // alpha(e0) = e0 + t(e2 + e3)
        b.set(1, 1, "1 + t");
        b.set(2, 1, "t");
        b.set(3, 1, "t + t^2");      // alpha(e1) = e1 + t(e1+e2+e3) + t^2 e3
        b.set(2, 2, "1 + t");
        b.set(3, 3, "1 + 2*t + t^2");
        return b.take();
    }
    throw error("unknown catalog endomorphism '" + name + "'");
}

/// Base algebra of an endomorphism family, over the family's context.
inline HomAlgebra endomorphism_target(const std::string& name) {
    if (name == "endo_mu41") {
        CtxPtr ctx = detail::endo_mu4x_ctx();
        return HomAlgebra(default_labels(4), detail::mu41_table(ctx),
                          LinearMap::identity(4, ctx), FlavorHint::alternative);
    }
    if (name == "endo_mu42") {
        CtxPtr ctx = detail::endo_mu4x_ctx();
        return HomAlgebra(default_labels(4), detail::mu42_table(ctx),
                          LinearMap::identity(4, ctx), FlavorHint::alternative);
    }
    if (name == "alpha_malcev_4dim") {
        CtxPtr ctx = make_context({"t"}, std::string("t"));
        return HomAlgebra(default_labels(4), detail::malcev_plain_table(ctx),
                          LinearMap::identity(4, ctx), FlavorHint::malcev);
    }
    throw error("unknown catalog endomorphism '" + name + "'");
}

inline FormalDeformation build_deformation(const std::string& name) {
    if (name == "def_mu41")
        return composition_deformation(endomorphism_target("endo_mu41"),
                                       build_endomorphism("endo_mu41"));
    if (name == "def_mu42")
        return composition_deformation(endomorphism_target("endo_mu42"),
                                       build_endomorphism("endo_mu42"));
    if (name == "def_malcev4")
        return composition_deformation(endomorphism_target("alpha_malcev_4dim"),
                                       build_endomorphism("alpha_malcev_4dim"));
    throw error("unknown catalog deformation '" + name + "'");
}

inline HomAlgebra build_algebra(const std::string& name,
                                const std::map<std::string, Rational>& bindings) {
    HomAlgebra a = build_algebra(name);
    return bindings.empty() ? a : a.substituted(bindings);
}

inline LinearMap build_endomorphism(const std::string& name,
                                    const std::map<std::string, Rational>& bindings) {
    LinearMap f = build_endomorphism(name);
    return bindings.empty() ? f : f.substituted(bindings);
}

} // namespace homdef::catalog
