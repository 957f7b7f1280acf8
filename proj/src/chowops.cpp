#include "chowforge/chowops.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

namespace chowforge {

namespace {

constexpr int kUnknownRank = 100;

int registry_rank(std::string_view name)
{
    if (name == "t") return 0;
    if (name == "u") return 1;
    if (name == "c1") return 2;
    if (name == "c2") return 3;
    if (name == "c3") return 4;
    if (name.size() > 2 && name.substr(0, 2) == "xi") return 5;
    if (name == "t1") return 6;
    if (name == "t2") return 7;
    if (name == "tau") return 8;
    return kUnknownRank;
}

// xi subscripts compare by leading integer, then by the remainder.
std::tuple<long, std::string> subscript_key(std::string_view name)
{
    std::string_view sub = name.substr(2);
    std::size_t k = 0;
    while (k < sub.size() && std::isdigit(static_cast<unsigned char>(sub[k])))
        ++k;
    long lead = k ? std::stol(std::string(sub.substr(0, k))) : -1;
    return {lead, std::string(sub.substr(k))};
}

}  // namespace

bool catalog_before(std::string_view a, std::string_view b)
{
    int ra = registry_rank(a);
    int rb = registry_rank(b);
    if (ra != rb)
        return ra < rb;
    if (ra == 5)
        return subscript_key(a) < subscript_key(b);
    return false;
}

int catalog_weight(std::string_view name)
{
    if (name == "c2")
        return 2;
    if (name == "c3")
        return 3;
    return 1;
}

Ring catalog_ring(std::vector<std::string> names)
{
    std::stable_sort(names.begin(), names.end(),
                     [](const auto& x, const auto& y) { return catalog_before(x, y); });
    std::vector<Variable> vars;
    vars.reserve(names.size());
    for (auto& n : names) {
        int w = catalog_weight(n);
        vars.push_back({std::move(n), w});
    }
    return ring_make(std::move(vars));
}

Ring adjoined_ring(const Ring& ring, std::string_view name, int weight)
{
    if (ring->contains(name))
        throw Error("generator name '" + std::string(name) + "' already in use");
    std::vector<Variable> vars = ring->vars();
    auto pos = vars.end();
    if (registry_rank(name) != kUnknownRank)
        pos = std::find_if(vars.begin(), vars.end(),
                           [&](const Variable& v) { return catalog_before(name, v.name); });
    vars.insert(pos, Variable{std::string(name), weight});
    return ring_make(std::move(vars));
}

ChernRootSet::ChernRootSet(Ring ring, std::vector<Polynomial> roots) : ring_(std::move(ring))
{
    for (auto& r : roots) {
        Polynomial p = rebase(r, ring_);
        if (!is_homogeneous_of(p, 1))
            throw Error("Chern root " + canonical_string(p) + " is not homogeneous of degree 1");
        roots_.push_back(std::move(p));
    }
}

Polynomial ChernRootSet::elementary(std::size_t k) const
{
    // e[j] after processing roots[0..i) is e_j of those roots.
    std::vector<Polynomial> e(k + 1, Polynomial(ring_));
    e[0] = Polynomial::constant(ring_, 1);
    for (const auto& r : roots_)
        for (std::size_t j = k; j >= 1; --j)
            e[j] += e[j - 1] * r;
    return e[k];
}

Polynomial ChernRootSet::chern_class(std::size_t k) const
{
    return to_invariants(elementary(k));
}

Ring invariant_ring(const RingSpec& torus)
{
    std::vector<std::string> names;
    for (const auto& v : torus.vars())
        if (v.name != "t1" && v.name != "t2")
            names.push_back(v.name);
    for (const char* c : {"c1", "c2"})
        if (std::find(names.begin(), names.end(), c) == names.end())
            names.emplace_back(c);
    return catalog_ring(std::move(names));
}

Polynomial to_invariants(const Polynomial& p, const Ring& target)
{
    std::vector<std::string> names;
    for (const auto& v : p.ring()->vars())
        names.push_back(v.name);
    for (const char* c : {"c1", "c2", "t1", "t2"})
        if (std::find(names.begin(), names.end(), c) == names.end())
            names.emplace_back(c);
    Ring work = catalog_ring(std::move(names));
    const std::size_t i1 = work->require_index("t1");
    const std::size_t i2 = work->require_index("t2");
    const Polynomial t1 = Polynomial::variable(work, "t1");
    const Polynomial t2 = Polynomial::variable(work, "t2");
    const Polynomial e1 = t1 + t2;
    const Polynomial e2 = t1 * t2;
    const Polynomial c1 = Polynomial::variable(work, "c1");
    const Polynomial c2 = Polynomial::variable(work, "c2");

    Polynomial rem = rebase(p, work);
    Polynomial result(work);
    while (!rem.is_zero()) {
        auto lead = std::max_element(rem.terms().begin(), rem.terms().end(),
                                     [&](const auto& x, const auto& y) {
                                         return std::tie(x.first[i1], x.first[i2]) <
                                                std::tie(y.first[i1], y.first[i2]);
                                     });
        const std::uint32_t a = lead->first[i1];
        const std::uint32_t b = lead->first[i2];
        if (a == 0 && b == 0) {
            result += rem;
            break;
        }
        if (a < b)
            throw SymmetryError("polynomial is not symmetric in t1, t2: " + canonical_string(p));
        Exponents rest = lead->first;
        rest[i1] = 0;
        rest[i2] = 0;
        Polynomial coeff = Polynomial::monomial(work, rest, lead->second);
        rem -= coeff * pow(e1, a - b) * pow(e2, b);
        result += coeff * pow(c1, a - b) * pow(c2, b);
    }
    return rebase(result, target);
}

Polynomial to_invariants(const Polynomial& p)
{
    return to_invariants(p, invariant_ring(*p.ring()));
}

ChernRootSet sym_dual_roots(unsigned r, long det_twist, long char_twist)
{
    Ring torus = catalog_ring({"t", "t1", "t2"});
    const Polynomial t = Polynomial::variable(torus, "t");
    const Polynomial t1 = Polynomial::variable(torus, "t1");
    const Polynomial t2 = Polynomial::variable(torus, "t2");
    std::vector<Polynomial> roots;
    for (unsigned i = 0; i <= r; ++i) {
        long wi = static_cast<long>(i);
        long wj = static_cast<long>(r - i);
        roots.push_back((det_twist - wi) * t1 + (det_twist - wj) * t2 + char_twist * t);
    }
    return ChernRootSet(torus, std::move(roots));
}

Polynomial root_product(const ChernRootSet& roots, std::string_view xi)
{
    Ring ring = adjoined_ring(roots.ring(), xi, 1);
    const Polynomial x = Polynomial::variable(ring, xi);
    Polynomial prod = Polynomial::constant(ring, 1);
    for (const auto& mu : roots.roots())
        prod *= x + rebase(mu, ring);
    return prod;
}

Polynomial proj_bundle_relation(const ChernRootSet& roots, std::string_view xi)
{
    return to_invariants(root_product(roots, xi));
}

Presentation adjoin_generator(const Presentation& p, std::string_view name, int weight,
                              const std::vector<Polynomial>& new_relations)
{
    Ring ring = adjoined_ring(p.ring(), name, weight);
    std::vector<Polynomial> rels;
    for (const auto& r : p.relations())
        rels.push_back(rebase(r, ring));
    for (const auto& r : new_relations) {
        Polynomial q = rebase(r, ring);
        if (!is_homogeneous(q))
            throw Error("adjoined relation " + canonical_string(q) + " is not homogeneous");
        rels.push_back(std::move(q));
    }
    return Presentation(ring, std::move(rels));
}

TorsorOutcome torsor_quotient_detailed(const Presentation& p, const Polynomial& cls0)
{
    Polynomial cls = rebase(cls0, p.ring());
    if (!is_homogeneous_of(cls, 1))
        throw Error("torsor class " + canonical_string(cls) + " is not homogeneous of degree 1");
    const auto& ring = *p.ring();

    std::optional<std::size_t> pick;
    mpz_class unit;
    for (const auto& [e, c] : cls.terms()) {
        if (abs(c) != 1)
            continue;
        auto it = std::find(e.begin(), e.end(), 1u);
        std::size_t idx = static_cast<std::size_t>(it - e.begin());
        if (!pick || idx > *pick) {
            pick = idx;
            unit = c;
        }
    }
    if (!pick) {
        std::vector<Polynomial> rels = p.relations();
        rels.push_back(cls);
        return TorsorOutcome{Presentation(p.ring(), std::move(rels)), std::nullopt, std::nullopt};
    }
    // cls = unit*v + rest = 0  =>  v = v - unit*cls
    const std::string name = ring.var(*pick).name;
    Polynomial h = Polynomial::variable(p.ring(), name) - unit * cls;
    return TorsorOutcome{eliminate_linear(p, name, h), name, h};
}

Presentation torsor_quotient(const Presentation& p, const Polynomial& cls)
{
    return torsor_quotient_detailed(p, cls).result;
}

Presentation root_gerbe_adjoin(const Presentation& p, const Polynomial& alpha,
                               std::string_view name)
{
    if (!is_homogeneous_of(alpha, 1))
        throw Error("root gerbe class " + canonical_string(alpha) +
                    " is not homogeneous of degree 1");
    Ring ring = adjoined_ring(p.ring(), name, 1);
    Polynomial rel = 2 * Polynomial::variable(ring, name) - rebase(alpha, ring);
    return adjoin_generator(p, name, 1, {rel});
}

Polynomial PullbackDictionary::apply(const Polynomial& p) const
{
    return substitute(rebase(p, source), images, target);
}

PullbackDictionary pullback_gl2_from_pgl2(long a, long b)
{
    PullbackDictionary d;
    d.source = catalog_ring({"c2", "xi2a", "xi2b", "tau"});
    d.target = catalog_ring({"c1", "c2", "xi1", "xi2a", "xi2b"});
    auto var = [&](const char* n) { return Polynomial::variable(d.target, n); };
    d.images.emplace("xi2a", var("xi2a") - a * var("c1"));
    d.images.emplace("xi2b", var("xi2b") - b * var("c1"));
    d.images.emplace("c2", 4 * var("c2") - var("c1") * var("c1"));
    d.images.emplace("tau", 2 * var("xi1") - var("c1"));
    return d;
}

}  // namespace chowforge
