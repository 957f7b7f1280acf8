#pragma once

// Homogeneous ideals decided degree by degree with integer linear algebra.
//
// For a homogeneous ideal I = (g_1, ..., g_k) the degree-d piece I_d is the
// Z-span of {m * g_i : m a monomial, deg m + deg g_i = d}. Membership of a
// homogeneous f therefore reduces to a row-lattice question in Z^{basis(d)}.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "chowforge/intpoly.hpp"
#include "chowforge/zlinalg.hpp"

namespace chowforge {

/// A graded ring Z[vars]/(relations). Zero relations are dropped at
/// construction; `dropped_zero_relations()` records how many.
class Presentation {
public:
    Presentation(Ring ring, std::vector<Polynomial> relations);

    const Ring& ring() const { return ring_; }
    const std::vector<Polynomial>& relations() const { return relations_; }
    std::size_t dropped_zero_relations() const { return dropped_; }

    /// Ideal-file text (header plus one relation per line).
    std::string to_text() const;

private:
    Ring ring_;
    std::vector<Polynomial> relations_;
    std::size_t dropped_ = 0;
};

/// Exponent vectors of weighted degree d, in monomial order.
std::vector<Exponents> monomial_basis(const RingSpec& ring, long d);

/// Rows are coefficient vectors of m * g_i over monomial_basis(d), grouped by
/// generator, monomials in basis order.
IntMatrix ideal_degree_matrix(const Presentation& p, long d);

/// Coefficient vector of a homogeneous polynomial over monomial_basis(d).
IntVector coefficient_vector(const Polynomial& f, const std::vector<Exponents>& basis);

struct Membership {
    bool member = false;
    /// h_i with sum h_i * g_i == f, aligned with the presentation's relations.
    std::vector<Polynomial> cofactors;
};

/// Decides f ∈ (relations). Certificates are checked by polynomial arithmetic
/// before being returned.
Membership contains(const Presentation& p, const Polynomial& f);

struct EqualityVerdict {
    bool equal = false;
    /// On inequality: the first generator not contained in the other ideal.
    std::optional<Polynomial> witness;
    long witness_degree = 0;
    /// 0 when the witness is a generator of the first presentation, 1 otherwise.
    int witness_side = 0;
};

EqualityVerdict ideal_equal(const Presentation& p, const Presentation& q);

/// Quotient by the relation  -v + h, removing v from the ring.
Presentation eliminate_linear(const Presentation& p, std::string_view var, const Polynomial& h);

/// Invariants of the degree-d piece of the quotient ring.
AbelianInvariants quotient_graded_invariants(const Presentation& p, long d);

}  // namespace chowforge
