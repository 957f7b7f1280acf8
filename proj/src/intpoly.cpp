#include "chowforge/intpoly.hpp"

#include <algorithm>
#include <sstream>

namespace chowforge {

namespace {

bool valid_identifier(std::string_view s)
{
    if (s.empty() || s[0] < 'a' || s[0] > 'z')
        return false;
    return std::all_of(s.begin() + 1, s.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    });
}

}  // namespace

RingSpec::RingSpec(std::vector<Variable> vars) : vars_(std::move(vars))
{
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        const auto& v = vars_[i];
        if (!valid_identifier(v.name))
            throw Error("invalid variable name '" + v.name + "'");
        if (v.weight < 1)
            throw Error("non-positive weight " + std::to_string(v.weight) + " for variable '" +
                        v.name + "'");
        if (!index_.emplace(v.name, i).second)
            throw Error("duplicate variable name '" + v.name + "'");
    }
}

std::optional<std::size_t> RingSpec::index_of(std::string_view name) const
{
    auto it = index_.find(std::string(name));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::size_t RingSpec::require_index(std::string_view name) const
{
    auto i = index_of(name);
    if (!i)
        throw Error("unknown variable '" + std::string(name) + "'");
    return *i;
}

long RingSpec::degree_of(const Exponents& e) const
{
    long d = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        d += static_cast<long>(e[i]) * vars_[i].weight;
    return d;
}

std::string RingSpec::header() const
{
    std::string out;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i)
            out += ", ";
        out += vars_[i].name + ":" + std::to_string(vars_[i].weight);
    }
    return out;
}

Ring ring_make(std::vector<Variable> vars)
{
    return std::make_shared<const RingSpec>(std::move(vars));
}

bool same_ring(const Ring& a, const Ring& b)
{
    return a == b || *a == *b;
}

bool MonomialOrder::operator()(const Exponents& a, const Exponents& b) const
{
    long da = ring->degree_of(a);
    long db = ring->degree_of(b);
    if (da != db)
        return da > db;
    return a > b;
}

Polynomial::Polynomial(Ring ring) : ring_(std::move(ring)), terms_(MonomialOrder{ring_.get()}) {}

Polynomial Polynomial::constant(Ring ring, const mpz_class& c)
{
    Polynomial p(ring);
    p.add_term(Exponents(ring->size(), 0), c);
    return p;
}

Polynomial Polynomial::variable(Ring ring, std::string_view name)
{
    Exponents e(ring->size(), 0);
    e[ring->require_index(name)] = 1;
    return monomial(std::move(ring), std::move(e), 1);
}

Polynomial Polynomial::monomial(Ring ring, Exponents exps, const mpz_class& c)
{
    if (exps.size() != ring->size())
        throw Error("exponent vector length does not match ring size");
    Polynomial p(std::move(ring));
    p.add_term(exps, c);
    return p;
}

mpz_class Polynomial::coefficient(const Exponents& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

bool Polynomial::uses_variable(std::size_t index) const
{
    return std::any_of(terms_.begin(), terms_.end(),
                       [index](const auto& t) { return t.first[index] != 0; });
}

void Polynomial::add_term(const Exponents& e, const mpz_class& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void Polynomial::check_ring(const Polynomial& q) const
{
    if (!same_ring(ring_, q.ring_))
        throw RingMismatch("ring mismatch: [" + ring_->header() + "] vs [" + q.ring_->header() +
                           "]");
}

Polynomial& Polynomial::operator+=(const Polynomial& q)
{
    check_ring(q);
    for (const auto& [e, c] : q.terms_)
        add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q)
{
    check_ring(q);
    for (const auto& [e, c] : q.terms_)
        add_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q)
{
    p.check_ring(q);
    Polynomial r(p.ring_);
    Exponents e(p.ring_->size());
    mpz_class c;
    for (const auto& [ep, cp] : p.terms_) {
        for (const auto& [eq, cq] : q.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ep[i] + eq[i];
            c = cp * cq;
            r.add_term(e, c);
        }
    }
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& q)
{
    *this = *this * q;
    return *this;
}

Polynomial& Polynomial::operator*=(const mpz_class& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_)
        coeff *= c;
    return *this;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r = *this;
    for (auto& [e, c] : r.terms_)
        c = -c;
    return r;
}

bool Polynomial::operator==(const Polynomial& q) const
{
    if (!same_ring(ring_, q.ring_))
        return false;
    if (terms_.size() != q.terms_.size())
        return false;
    return std::equal(terms_.begin(), terms_.end(), q.terms_.begin(),
                      [](const auto& x, const auto& y) {
                          return x.first == y.first && x.second == y.second;
                      });
}

Polynomial pow(const Polynomial& p, unsigned k)
{
    Polynomial result = Polynomial::constant(p.ring(), 1);
    Polynomial base = p;
    while (k) {
        if (k & 1u)
            result *= base;
        k >>= 1;
        if (k)
            base *= base;
    }
    return result;
}

Homogeneity weighted_degree(const Polynomial& p)
{
    if (p.is_zero())
        throw Error("weighted degree of the zero polynomial is undefined");
    const auto& ring = *p.ring();
    auto first = p.terms().begin();
    long d = ring.degree_of(first->first);
    for (auto it = std::next(first); it != p.terms().end(); ++it) {
        if (ring.degree_of(it->first) != d)
            return Homogeneity{std::nullopt, std::make_pair(first->first, it->first)};
    }
    return Homogeneity{d, std::nullopt};
}

bool is_homogeneous(const Polynomial& p)
{
    return p.is_zero() || weighted_degree(p).homogeneous();
}

bool is_homogeneous_of(const Polynomial& p, long d)
{
    return p.is_zero() || weighted_degree(p).degree == d;
}

Polynomial substitute(const Polynomial& p, const Images& images, const Ring& target)
{
    const auto& src = *p.ring();
    std::vector<const Polynomial*> image(src.size(), nullptr);
    for (std::size_t i = 0; i < src.size(); ++i) {
        auto it = images.find(src.var(i).name);
        if (it == images.end())
            continue;
        if (!same_ring(it->second.ring(), target))
            throw RingMismatch("image of '" + src.var(i).name + "' is not in the target ring");
        if (!is_homogeneous_of(it->second, src.var(i).weight))
            throw Error("image of '" + src.var(i).name + "' is not homogeneous of degree " +
                        std::to_string(src.var(i).weight));
        image[i] = &it->second;
    }
    for (std::size_t i = 0; i < src.size(); ++i)
        if (!image[i] && p.uses_variable(i))
            throw Error("missing image for variable '" + src.var(i).name + "'");

    // powers[i][k] = image_i^k, built lazily
    std::vector<std::vector<Polynomial>> powers(src.size());
    auto power = [&](std::size_t i, std::uint32_t k) -> const Polynomial& {
        auto& cache = powers[i];
        if (cache.empty())
            cache.push_back(Polynomial::constant(target, 1));
        while (cache.size() <= k)
            cache.push_back(cache.back() * *image[i]);
        return cache[k];
    };

    Polynomial result(target);
    for (const auto& [e, c] : p.terms()) {
        Polynomial term = Polynomial::constant(target, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i])
                term *= power(i, e[i]);
        result += term;
    }
    return result;
}

Polynomial rebase(const Polynomial& p, const Ring& target)
{
    if (same_ring(p.ring(), target) && p.ring() == target)
        return p;
    const auto& src = *p.ring();
    std::vector<std::optional<std::size_t>> map(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
        map[i] = target->index_of(src.var(i).name);
        if (map[i] && target->var(*map[i]).weight != src.var(i).weight)
            throw RingMismatch("variable '" + src.var(i).name + "' changes weight");
    }
    Polynomial result(target);
    Exponents e(target->size());
    for (const auto& [es, c] : p.terms()) {
        std::fill(e.begin(), e.end(), 0);
        for (std::size_t i = 0; i < es.size(); ++i) {
            if (!es[i])
                continue;
            if (!map[i])
                throw RingMismatch("variable '" + src.var(i).name + "' is not in the target ring");
            e[*map[i]] = es[i];
        }
        result.add_term(e, c);
    }
    return result;
}

std::string monomial_string(const RingSpec& ring, const Exponents& e)
{
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (!e[i])
            continue;
        if (!out.empty())
            out += '*';
        out += ring.var(i).name;
        if (e[i] > 1)
            out += '^' + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

std::string canonical_string(const Polynomial& p)
{
    if (p.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        bool negative = c < 0;
        mpz_class mag = abs(c);
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;
        bool constant = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
        if (constant) {
            out << mag.get_str();
        } else {
            if (mag != 1)
                out << mag.get_str() << '*';
            out << monomial_string(*p.ring(), e);
        }
    }
    return out.str();
}

}  // namespace chowforge
