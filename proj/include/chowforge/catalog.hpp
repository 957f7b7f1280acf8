#pragma once

// Parameterized classes and presentations for the Chow rings of hyperelliptic
// Prym moduli, and pipelines that rebuild them from the excised product of
// projective spaces.
//
// Rings (catalog order):
//   pair ring   [c1, c2, xi2a, xi2b]  CH_GL2(P(Sym^2a V^∨) x P(Sym^2b V^∨) \ Δ)
//   rh ring     [t, c1, c2]           rigidified stack, g even
//   wrh ring    [t, u, c1, c2]        non-rigidified stack, g even
//   wrh odd     [t, c1, c2]           non-rigidified stack, g and n odd

#include <optional>
#include <string>
#include <vector>

#include "chowforge/chowops.hpp"
#include "chowforge/grideal.hpp"

namespace chowforge {

class ParamError : public Error {
public:
    using Error::Error;
};

/// Genus g and component n; for the pair ring a = n, b = g + 1 - n.
struct Params {
    std::optional<long> g;
    std::optional<long> n;
    long a = 0;
    long b = 0;

    static Params from_ab(long a, long b);
    static Params from_gn(long g, long n);

    bool operator==(const Params&) const = default;
};

/// Guards; each throws ParamError naming the violated condition.
void require_pair(const Params& p);
void require_rh_even(const Params& p);
void require_wrh_odd(const Params& p);

Ring pair_ring();
Ring rh_ring();

struct SquaringClasses {
    Polynomial f_one;  // F_{1*}(1)
    Polynomial f_xi;   // F_{1*}(xi_1)
    Polynomial g_one;  // G_{1*}(1)
    Polynomial g_xi;   // G_{1*}(xi_1)
};

/// Pushforwards along (h, f, g) -> (h^2 f, g) and (f, h^2 g).
SquaringClasses squaring_classes(const Params& p);

struct MultiplicationClasses {
    Polynomial m1_one;  // M_{1*}(1)
    Polynomial m1_xi;   // M_{1*}(xi_1)
    Polynomial m2_one;  // M_{2*}(1)
};

/// Pushforwards along (h, f, g) -> (hf, hg) for deg h = 1, 2.
MultiplicationClasses multiplication_classes(const Params& p);

/// 2ab(2a-1)(2b-1)(4c2 - c1^2): M_{2*}(1) reduced modulo the other generators.
Polynomial m2_reduced_class(const Params& p);

/// The six generators other than M_{2*}(1).
Presentation envelope_six(const Params& p);
/// All seven pushforward generators.
Presentation envelope_ideal(const Params& p);

/// CH_GL2 of the excised product; seven relations.
Presentation excised_pair_presentation(const Params& p);

/// CH of the rigidified component, g even, 1 <= n <= g/2.
Presentation rh_even_presentation(const Params& p);

/// CH of the non-rigidified component, g and n odd, 1 <= n <= (g-1)/2.
Presentation wrh_odd_presentation(const Params& p);

/// CH of the non-rigidified component, g even: rh_even plus a square root u of
/// t (n even) or t + c1 (n odd).
Presentation wrh_even_presentation(const Params& p);

/// Non-rigidified component for g odd, n even, from a user-supplied ideal over
/// a ring containing xi2a, xi2b (degree 1): adjoins square roots t2a of xi2a
/// and t2b of xi2b.
Presentation wrh_odd_even_from_external(const Params& p, const Presentation& external);

struct DerivationStep {
    std::string label;
    Presentation presentation;
};

struct Derivation {
    std::vector<DerivationStep> steps;
    const Presentation& result() const { return steps.back().presentation; }
};

/// Pair ring (a=n, b=g+1-n), times BGm, then two Gm-torsor quotients.
Derivation derive_rh_even(const Params& p);
Derivation derive_wrh_odd(const Params& p);

struct SuperfluityCheck {
    long j = 0;
    Polynomial target;       // product of the 2j+1 torus hyperplane classes
    Presentation ideal;      // the two torus squaring classes
    Membership certificate;
};

/// Torus-equivariant membership of the projective bundle polynomial of
/// P(Sym^2j V^∨) in the ideal of the torus squaring classes, in [xi, t1, t2].
SuperfluityCheck torus_superfluity(long j, std::string_view xi = "xi2a");

struct SuperfluityVerdict {
    bool holds = false;
    SuperfluityCheck a_side;
    SuperfluityCheck b_side;
};

SuperfluityVerdict superfluity_check(const Params& p);

/// True iff M_{2*}(1) is outside envelope_six.
bool m2_nonredundant(const Params& p);

/// M_{2*}(1) - m2_reduced_class in envelope_six, with certificate.
Membership m2_reduction(const Params& p);

}  // namespace chowforge
