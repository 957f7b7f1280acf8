#pragma once

// Equivariant intersection-theory combinators on presentations.
//
// Torus characters of GL2 are `t1`, `t2`; the invariant Chern classes are
// c1 = t1 + t2 and c2 = t1*t2. `t` is the first Chern class of the standard
// Gm character.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chowforge/grideal.hpp"
#include "chowforge/intpoly.hpp"

namespace chowforge {

/// Raised when a torus polynomial is not symmetric in t1, t2.
class SymmetryError : public Error {
public:
    using Error::Error;
};

/// Position of a variable name in the fixed catalog registry order
/// [t, u, c1, c2, c3, xi... (by subscript), t1, t2, tau]. Names outside the
/// registry sort last.
bool catalog_before(std::string_view a, std::string_view b);

/// Default grading: c2 -> 2, c3 -> 3, everything else 1.
int catalog_weight(std::string_view name);

/// Ring on the given names in catalog order with catalog weights.
Ring catalog_ring(std::vector<std::string> names);

/// `ring` plus one variable, inserted at its catalog position (appended if the
/// name is not a catalog name).
Ring adjoined_ring(const Ring& ring, std::string_view name, int weight);

class ChernRootSet {
public:
    ChernRootSet(Ring ring, std::vector<Polynomial> roots);

    const Ring& ring() const { return ring_; }
    const std::vector<Polynomial>& roots() const { return roots_; }
    std::size_t size() const { return roots_.size(); }

    /// k-th elementary symmetric polynomial of the roots, in the root ring.
    Polynomial elementary(std::size_t k) const;

    /// c_k of the bundle, rewritten in c1, c2 (see to_invariants).
    Polynomial chern_class(std::size_t k) const;

private:
    Ring ring_;
    std::vector<Polynomial> roots_;
};

/// The ring obtained from `torus` by replacing t1, t2 with c1, c2.
Ring invariant_ring(const RingSpec& torus);

/// Rewrites a polynomial symmetric in t1, t2 in terms of c1, c2. Throws
/// SymmetryError if a nonzero remainder would be left.
Polynomial to_invariants(const Polynomial& p, const Ring& target);
Polynomial to_invariants(const Polynomial& p);

/// Chern roots of det(V)^det_twist ⊗ chi^char_twist ⊗ Sym^r(V^∨), living in
/// the torus ring [t, t1, t2]:
///   { -i*t1 - (r-i)*t2 + det_twist*(t1+t2) + char_twist*t : 0 <= i <= r }.
ChernRootSet sym_dual_roots(unsigned r, long det_twist, long char_twist);

/// prod_mu (xi + mu) in the root ring extended by xi.
Polynomial root_product(const ChernRootSet& roots, std::string_view xi);

/// Projective bundle relation of P(E): root_product rewritten in c1, c2.
/// Monic in xi of degree |roots|.
Polynomial proj_bundle_relation(const ChernRootSet& roots, std::string_view xi);

/// Adds a generator and relations. `new_relations` may be given in any ring
/// whose variables all appear in the extended ring.
Presentation adjoin_generator(const Presentation& p, std::string_view name, int weight,
                              const std::vector<Polynomial>& new_relations);

struct TorsorOutcome {
    Presentation result;
    /// Variable removed by the quotient, if the class had a unit coefficient.
    std::optional<std::string> eliminated;
    /// The value substituted for the eliminated variable.
    std::optional<Polynomial> replacement;
};

/// Chow ring of the Gm-torsor whose associated line bundle has first Chern
/// class `cls`: quotient by (cls). When cls has a ±1 coefficient the variable
/// is solved for (highest registry index wins) and eliminated.
TorsorOutcome torsor_quotient_detailed(const Presentation& p, const Polynomial& cls);
Presentation torsor_quotient(const Presentation& p, const Polynomial& cls);

/// Square root of a line bundle with first Chern class alpha: new degree-1
/// generator `name` with relation 2*name - alpha.
Presentation root_gerbe_adjoin(const Presentation& p, const Polynomial& alpha,
                               std::string_view name);

/// Pullback along [X/GL2] -> [X/PGL2] for X = P(Sym^2a) x P(Sym^2b) and P^1.
struct PullbackDictionary {
    Ring source;  // [c2, xi2a, xi2b, tau]
    Ring target;  // [c1, c2, xi1, xi2a, xi2b]
    Images images;

    Polynomial apply(const Polynomial& p) const;
};

PullbackDictionary pullback_gl2_from_pgl2(long a, long b);

}  // namespace chowforge
