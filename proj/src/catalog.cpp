#include "chowforge/catalog.hpp"

namespace chowforge {

Params Params::from_ab(long a, long b)
{
    Params p;
    p.a = a;
    p.b = b;
    return p;
}

Params Params::from_gn(long g, long n)
{
    Params p;
    p.g = g;
    p.n = n;
    p.a = n;
    p.b = g + 1 - n;
    return p;
}

void require_pair(const Params& p)
{
    if (p.a < 1)
        throw ParamError("a must be >= 1 (got " + std::to_string(p.a) + ")");
    if (p.b < 1)
        throw ParamError("b must be >= 1 (got " + std::to_string(p.b) + ")");
}

namespace {

void require_gn(const Params& p)
{
    if (!p.g || !p.n)
        throw ParamError("g and n are required");
    if (*p.g < 2)
        throw ParamError("g must be >= 2 (got " + std::to_string(*p.g) + ")");
    if (p.a != *p.n || p.b != *p.g + 1 - *p.n)
        throw ParamError("a, b must equal n, g+1-n");
}

}  // namespace

void require_rh_even(const Params& p)
{
    require_gn(p);
    const long g = *p.g, n = *p.n;
    if (g % 2 != 0)
        throw ParamError("g must be even (got " + std::to_string(g) + ")");
    if (n < 1 || n > g / 2)
        throw ParamError("n must satisfy 1 <= n <= g/2 (got n=" + std::to_string(n) + ")");
}

void require_wrh_odd(const Params& p)
{
    require_gn(p);
    const long g = *p.g, n = *p.n;
    if (g % 2 == 0)
        throw ParamError("g must be odd (got " + std::to_string(g) + ")");
    if (n % 2 == 0)
        throw ParamError("n must be odd (got " + std::to_string(n) + ")");
    if (2 * n == g + 1)
        throw ParamError("n = (g+1)/2 is not supported");
    if (n < 1 || n > (g - 1) / 2)
        throw ParamError("n must satisfy 1 <= n <= (g-1)/2 (got n=" + std::to_string(n) + ")");
}

Ring pair_ring()
{
    static const Ring ring = catalog_ring({"c1", "c2", "xi2a", "xi2b"});
    return ring;
}

Ring rh_ring()
{
    static const Ring ring = catalog_ring({"t", "c1", "c2"});
    return ring;
}

namespace {

struct PairVars {
    Polynomial c1, c2, xa, xb;
    PairVars()
        : c1(Polynomial::variable(pair_ring(), "c1")),
          c2(Polynomial::variable(pair_ring(), "c2")),
          xa(Polynomial::variable(pair_ring(), "xi2a")),
          xb(Polynomial::variable(pair_ring(), "xi2b"))
    {
    }
};

struct RhVars {
    Polynomial t, c1, c2;
    RhVars()
        : t(Polynomial::variable(rh_ring(), "t")),
          c1(Polynomial::variable(rh_ring(), "c1")),
          c2(Polynomial::variable(rh_ring(), "c2"))
    {
    }
};

}  // namespace

SquaringClasses squaring_classes(const Params& p)
{
    require_pair(p);
    const PairVars v;
    const mpz_class a = p.a, b = p.b;
    return SquaringClasses{
        2 * (2 * a - 1) * v.xa - 2 * a * (2 * a - 1) * v.c1,
        v.xa * v.xa - v.c1 * v.xa - 2 * a * (2 * a - 2) * v.c2,
        2 * (2 * b - 1) * v.xb - 2 * b * (2 * b - 1) * v.c1,
        v.xb * v.xb - v.c1 * v.xb - 2 * b * (2 * b - 2) * v.c2,
    };
}

MultiplicationClasses multiplication_classes(const Params& p)
{
    require_pair(p);
    const PairVars v;
    const mpz_class a = p.a, b = p.b;
    Polynomial m2 = (2 * a - 1) * (2 * b - 1) * v.xa * v.xb + b * (2 * b - 1) * v.xa * v.xa +
                    a * (2 * a - 1) * v.xb * v.xb + 4 * a * b * (a + b - 1) * v.c2 -
                    ((4 * a - 1) * b * (2 * b - 1) * v.xa + a * (2 * a - 1) * (4 * b - 1) * v.xb) * v.c1 +
                    2 * a * b * (2 * a - 1) * (2 * b - 1) * v.c1 * v.c1;
    return MultiplicationClasses{
        2 * b * v.xa + 2 * a * v.xb - 4 * a * b * v.c1,
        v.xa * v.xb - 4 * a * b * v.c2,
        std::move(m2),
    };
}

Polynomial m2_reduced_class(const Params& p)
{
    require_pair(p);
    const PairVars v;
    const mpz_class a = p.a, b = p.b;
    return 2 * a * b * (2 * a - 1) * (2 * b - 1) * (4 * v.c2 - v.c1 * v.c1);
}

Presentation envelope_six(const Params& p)
{
    auto fg = squaring_classes(p);
    auto m = multiplication_classes(p);
    return Presentation(pair_ring(), {fg.f_one, fg.f_xi, fg.g_one, fg.g_xi, m.m1_one, m.m1_xi});
}

Presentation envelope_ideal(const Params& p)
{
    auto fg = squaring_classes(p);
    auto m = multiplication_classes(p);
    return Presentation(pair_ring(),
                        {fg.f_one, fg.f_xi, fg.g_one, fg.g_xi, m.m1_one, m.m1_xi, m.m2_one});
}

Presentation excised_pair_presentation(const Params& p)
{
    require_pair(p);
    const PairVars v;
    const mpz_class a = p.a, b = p.b;
    return Presentation(pair_ring(), {
        2 * (2 * a - 1) * v.xa - 2 * a * (2 * a - 1) * v.c1,
        v.xa * v.xa - v.c1 * v.xa - 4 * a * (a - 1) * v.c2,
        2 * (2 * b - 1) * v.xb - 2 * b * (2 * b - 1) * v.c1,
        v.xb * v.xb - v.c1 * v.xb - 4 * b * (b - 1) * v.c2,
        2 * b * v.xa + 2 * a * v.xb - 4 * a * b * v.c1,
        v.xa * v.xb - 4 * a * b * v.c2,
        2 * a * b * (2 * a - 1) * (2 * b - 1) * (4 * v.c2 - v.c1 * v.c1),
    });
}

Presentation rh_even_presentation(const Params& p)
{
    require_rh_even(p);
    const RhVars v;
    const mpz_class g = *p.g, n = *p.n;
    const Polynomial t2 = v.t * v.t, c1t = v.c1 * v.t, c1sq = v.c1 * v.c1;
    return Presentation(rh_ring(), {
        2 * (2 * n - 1) * v.t,
        t2 - (2 * n - 1) * c1t + n * (n - 1) * c1sq - 4 * n * (n - 1) * v.c2,
        4 * g * v.t - 2 * (2 * g + 1 - 2 * n) * v.c1,
        t2 + (2 * g - 1 - 2 * n) * c1t + (g - n) * (g - n - 1) * c1sq -
            4 * (g + 1 - n) * (g - n) * v.c2,
        2 * g * v.t + 2 * n * v.c1,
        t2 - (2 * n - g) * c1t - n * (g - n) * c1sq + 4 * n * (g + 1 - n) * v.c2,
        2 * n * (2 * n - 1) * (g + 1 - n) * (2 * g + 1 - 2 * n) * (4 * v.c2 - c1sq),
    });
}

Presentation wrh_odd_presentation(const Params& p)
{
    require_wrh_odd(p);
    const RhVars v;
    const mpz_class g = *p.g, n = *p.n;
    const Polynomial t2 = v.t * v.t, c1t = v.c1 * v.t, c1sq = v.c1 * v.c1;
    return Presentation(rh_ring(), {
        2 * (2 * n - 1) * v.c1,
        (n - 1) * (n - 2) * c1sq - 4 * n * (n - 1) * v.c2,
        4 * (2 * g + 1 - 2 * n) * v.t + 4 * g * v.c1,
        4 * t2 - 2 * (2 * g - 2) * c1t + (g - n) * (g - n - 1) * c1sq -
            4 * (g + 1 - n) * (g - n) * v.c2,
        4 * n * v.t + 2 * (g + 1) * v.c1,
        -2 * (n - 1) * c1t + (n - 1) * (g - n) * c1sq - 4 * n * (g + 1 - n) * v.c2,
        8 * n * (2 * n - 1) * (g + 1 - n) * (2 * g + 1 - 2 * n) * v.c2,
    });
}

Presentation wrh_even_presentation(const Params& p)
{
    Presentation base = rh_even_presentation(p);
    const RhVars v;
    Polynomial alpha = (*p.n % 2 == 0) ? v.t : v.t + v.c1;
    return root_gerbe_adjoin(base, alpha, "u");
}

Presentation wrh_odd_even_from_external(const Params& p, const Presentation& external)
{
    require_gn(p);
    const long g = *p.g, n = *p.n;
    if (g % 2 == 0)
        throw ParamError("g must be odd (got " + std::to_string(g) + ")");
    if (n % 2 != 0)
        throw ParamError("n must be even (got " + std::to_string(n) + ")");
    if (n < 1 || n > (g - 1) / 2)
        throw ParamError("n must satisfy 1 <= n <= (g-1)/2 (got n=" + std::to_string(n) + ")");
    const auto& ring = external.ring();
    for (const char* x : {"xi2a", "xi2b"}) {
        auto i = ring->index_of(x);
        if (!i || ring->var(*i).weight != 1)
            throw Error(std::string("external ideal ring must declare ") + x + ":1");
    }
    Presentation first =
        root_gerbe_adjoin(external, Polynomial::variable(ring, "xi2a"), "t2a");
    return root_gerbe_adjoin(first, Polynomial::variable(first.ring(), "xi2b"), "t2b");
}

namespace {

std::string params_label(const Params& p)
{
    return "a=" + std::to_string(p.a) + " b=" + std::to_string(p.b);
}

Derivation run_pipeline(const Params& p, const Polynomial& first_class_in_t,
                        const Polynomial& second_class_in_t)
{
    Derivation d;
    d.steps.push_back({"excised pair presentation " + params_label(p),
                       excised_pair_presentation(Params::from_ab(p.a, p.b))});
    d.steps.push_back({"adjoin t (product with BGm)",
                       adjoin_generator(d.result(), "t", 1, {})});
    for (const auto* cls : {&first_class_in_t, &second_class_in_t}) {
        auto out = torsor_quotient_detailed(d.result(), *cls);
        std::string label = "Gm-torsor quotient by " + canonical_string(rebase(*cls, d.result().ring()));
        if (out.eliminated)
            label += " (" + *out.eliminated + " = " + canonical_string(*out.replacement) + ")";
        d.steps.push_back({label, std::move(out.result)});
    }
    d.steps.back().presentation = Presentation(rh_ring(), d.result().relations());
    return d;
}

}  // namespace

Derivation derive_rh_even(const Params& p)
{
    require_rh_even(p);
    const Ring ring = catalog_ring({"t", "c1", "c2", "xi2a", "xi2b"});
    const auto t = Polynomial::variable(ring, "t");
    const auto c1 = Polynomial::variable(ring, "c1");
    const auto xa = Polynomial::variable(ring, "xi2a");
    const auto xb = Polynomial::variable(ring, "xi2b");
    const long g = *p.g, n = *p.n;
    return run_pipeline(p, -xa - t + n * c1, -xb + t + (g - n) * c1);
}

Derivation derive_wrh_odd(const Params& p)
{
    require_wrh_odd(p);
    const Ring ring = catalog_ring({"t", "c1", "c2", "xi2a", "xi2b"});
    const auto t = Polynomial::variable(ring, "t");
    const auto c1 = Polynomial::variable(ring, "c1");
    const auto xa = Polynomial::variable(ring, "xi2a");
    const auto xb = Polynomial::variable(ring, "xi2b");
    const long g = *p.g, n = *p.n;
    return run_pipeline(p, -xa + (n - 1) * c1, -xb - 2 * t + (g - n) * c1);
}

SuperfluityCheck torus_superfluity(long j, std::string_view xi)
{
    if (j < 1)
        throw ParamError("j must be >= 1 (got " + std::to_string(j) + ")");
    Polynomial target = root_product(sym_dual_roots(static_cast<unsigned>(2 * j), 0, 0), xi);
    // The character t does not occur; drop it from the ring.
    Ring ring = catalog_ring({std::string(xi), "t1", "t2"});
    target = rebase(target, ring);
    const auto x = Polynomial::variable(ring, xi);
    const auto e1 = Polynomial::variable(ring, "t1") + Polynomial::variable(ring, "t2");
    const auto e2 = Polynomial::variable(ring, "t1") * Polynomial::variable(ring, "t2");
    const mpz_class a = j;
    Presentation ideal(ring, {
        2 * (2 * a - 1) * x - 2 * a * (2 * a - 1) * e1,
        x * x - e1 * x - 2 * a * (2 * a - 2) * e2,
    });
    Membership cert = contains(ideal, target);
    return SuperfluityCheck{j, std::move(target), std::move(ideal), std::move(cert)};
}

SuperfluityVerdict superfluity_check(const Params& p)
{
    require_pair(p);
    SuperfluityVerdict v{false, torus_superfluity(p.a, "xi2a"), torus_superfluity(p.b, "xi2b")};
    v.holds = v.a_side.certificate.member && v.b_side.certificate.member;
    return v;
}

bool m2_nonredundant(const Params& p)
{
    return !contains(envelope_six(p), multiplication_classes(p).m2_one).member;
}

Membership m2_reduction(const Params& p)
{
    return contains(envelope_six(p), multiplication_classes(p).m2_one - m2_reduced_class(p));
}

}  // namespace chowforge
