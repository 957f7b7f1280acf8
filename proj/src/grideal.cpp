#include "chowforge/grideal.hpp"

#include <algorithm>
#include <map>

#include "chowforge/polyparse.hpp"

namespace chowforge {

Presentation::Presentation(Ring ring, std::vector<Polynomial> relations) : ring_(std::move(ring))
{
    relations_.reserve(relations.size());
    for (auto& r : relations) {
        Polynomial p = rebase(r, ring_);
        if (p.is_zero()) {
            ++dropped_;
            continue;
        }
        auto h = weighted_degree(p);
        if (!h.homogeneous())
            throw Error("inhomogeneous relation " + canonical_string(p));
        relations_.push_back(std::move(p));
    }
}

std::string Presentation::to_text() const
{
    return format_ideal_file(ring_, relations_);
}

namespace {

void enumerate_basis(const RingSpec& ring, std::size_t i, long remaining, Exponents& cur,
                     std::vector<Exponents>& out)
{
    if (i == ring.size()) {
        if (remaining == 0)
            out.push_back(cur);
        return;
    }
    const long w = ring.var(i).weight;
    for (long k = remaining / w; k >= 0; --k) {
        cur[i] = static_cast<std::uint32_t>(k);
        enumerate_basis(ring, i + 1, remaining - k * w, cur, out);
    }
    cur[i] = 0;
}

struct RowSource {
    std::size_t generator;
    Exponents monomial;
};

// The spanning set of one graded piece together with its row provenance.
struct DegreePiece {
    std::vector<Exponents> basis;
    IntMatrix matrix;
    std::vector<RowSource> sources;
};

DegreePiece build_piece(const Presentation& p, long d)
{
    const auto& ring = *p.ring();
    DegreePiece piece;
    piece.basis = monomial_basis(ring, d);
    piece.matrix = IntMatrix(0, piece.basis.size());
    std::map<Exponents, std::size_t> column;
    for (std::size_t j = 0; j < piece.basis.size(); ++j)
        column.emplace(piece.basis[j], j);

    IntVector row(piece.basis.size());
    Exponents e(ring.size());
    for (std::size_t gi = 0; gi < p.relations().size(); ++gi) {
        const auto& g = p.relations()[gi];
        long dg = *weighted_degree(g).degree;
        if (dg > d)
            continue;
        for (const auto& m : monomial_basis(ring, d - dg)) {
            std::fill(row.begin(), row.end(), 0);
            for (const auto& [eg, c] : g.terms()) {
                for (std::size_t k = 0; k < e.size(); ++k)
                    e[k] = eg[k] + m[k];
                row[column.at(e)] = c;
            }
            piece.matrix.append_row(row);
            piece.sources.push_back({gi, m});
        }
    }
    return piece;
}

Membership assemble(const Presentation& p, const DegreePiece& piece, const IntVector& x,
                    const Polynomial& f)
{
    Membership res{true, {}};
    res.cofactors.assign(p.relations().size(), Polynomial(p.ring()));
    for (std::size_t r = 0; r < x.size(); ++r)
        if (x[r] != 0)
            res.cofactors[piece.sources[r].generator].add_term(piece.sources[r].monomial, x[r]);

    Polynomial check(p.ring());
    for (std::size_t i = 0; i < res.cofactors.size(); ++i)
        if (!res.cofactors[i].is_zero())
            check += res.cofactors[i] * p.relations()[i];
    if (!(check == f))
        throw std::logic_error("membership certificate failed verification for " +
                               canonical_string(f));
    return res;
}

// Generators of p grouped by degree, in original order within a degree.
std::map<long, std::vector<std::size_t>> by_degree(const Presentation& p)
{
    std::map<long, std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < p.relations().size(); ++i)
        out[*weighted_degree(p.relations()[i]).degree].push_back(i);
    return out;
}

}  // namespace

std::vector<Exponents> monomial_basis(const RingSpec& ring, long d)
{
    std::vector<Exponents> out;
    if (d < 0)
        return out;
    Exponents cur(ring.size(), 0);
    enumerate_basis(ring, 0, d, cur, out);
    return out;
}

IntMatrix ideal_degree_matrix(const Presentation& p, long d)
{
    return build_piece(p, d).matrix;
}

IntVector coefficient_vector(const Polynomial& f, const std::vector<Exponents>& basis)
{
    IntVector v(basis.size(), mpz_class(0));
    std::size_t found = 0;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        v[j] = f.coefficient(basis[j]);
        if (v[j] != 0)
            ++found;
    }
    if (found != f.term_count())
        throw Error("polynomial has terms outside the given degree: " + canonical_string(f));
    return v;
}

Membership contains(const Presentation& p, const Polynomial& f0)
{
    Polynomial f = rebase(f0, p.ring());
    if (f.is_zero())
        return Membership{true, std::vector<Polynomial>(p.relations().size(), Polynomial(p.ring()))};
    auto h = weighted_degree(f);
    if (!h.homogeneous())
        throw Error("membership query for inhomogeneous polynomial " + canonical_string(f));
    DegreePiece piece = build_piece(p, *h.degree);
    auto x = solve_in_row_lattice(piece.matrix, coefficient_vector(f, piece.basis));
    if (!x)
        return Membership{};
    return assemble(p, piece, *x, f);
}

EqualityVerdict ideal_equal(const Presentation& p, const Presentation& q)
{
    if (!same_ring(p.ring(), q.ring()))
        throw RingMismatch("ideal_equal: ring mismatch [" + p.ring()->header() + "] vs [" +
                           q.ring()->header() + "]");

    auto one_way = [](const Presentation& gens, const Presentation& target,
                      int side) -> std::optional<EqualityVerdict> {
        for (const auto& [d, idx] : by_degree(gens)) {
            DegreePiece piece = build_piece(target, d);
            HnfResult h = hnf(piece.matrix);
            for (std::size_t i : idx) {
                Polynomial g = rebase(gens.relations()[i], target.ring());
                auto x = solve_with_hnf(piece.matrix, h, coefficient_vector(g, piece.basis));
                if (!x)
                    return EqualityVerdict{false, gens.relations()[i], d, side};
                assemble(target, piece, *x, g);
            }
        }
        return std::nullopt;
    };
    if (auto v = one_way(p, q, 0))
        return *v;
    if (auto v = one_way(q, p, 1))
        return *v;
    return EqualityVerdict{true, std::nullopt, 0, 0};
}

Presentation eliminate_linear(const Presentation& p, std::string_view var, const Polynomial& h0)
{
    const auto& ring = *p.ring();
    std::size_t vi = ring.require_index(var);
    Polynomial h = rebase(h0, p.ring());
    if (h.uses_variable(vi))
        throw Error("eliminate_linear: replacement for '" + std::string(var) +
                    "' involves the variable itself");
    if (!is_homogeneous_of(h, ring.var(vi).weight))
        throw Error("eliminate_linear: replacement " + canonical_string(h) +
                    " is not homogeneous of degree " + std::to_string(ring.var(vi).weight));

    std::vector<Variable> vars;
    for (std::size_t i = 0; i < ring.size(); ++i)
        if (i != vi)
            vars.push_back(ring.var(i));
    Ring target = ring_make(std::move(vars));

    Images images;
    for (const auto& v : target->vars())
        images.emplace(v.name, Polynomial::variable(target, v.name));
    images.emplace(std::string(var), rebase(h, target));

    std::vector<Polynomial> rels;
    rels.reserve(p.relations().size());
    for (const auto& r : p.relations())
        rels.push_back(substitute(r, images, target));
    return Presentation(target, std::move(rels));
}

AbelianInvariants quotient_graded_invariants(const Presentation& p, long d)
{
    return snf(ideal_degree_matrix(p, d)).cokernel;
}

}  // namespace chowforge
