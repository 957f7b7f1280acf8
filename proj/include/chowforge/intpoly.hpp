#pragma once

// Sparse multivariate polynomials over Z with a weighted grading.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace chowforge {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when two operands live in different rings.
class RingMismatch : public Error {
public:
    using Error::Error;
};

struct Variable {
    std::string name;
    int weight = 1;

    bool operator==(const Variable&) const = default;
};

using Exponents = std::vector<std::uint32_t>;

/// Ordered variable registry. The order fixes the monomial order: terms are
/// compared by weighted degree first, then lexicographically by position.
class RingSpec {
public:
    explicit RingSpec(std::vector<Variable> vars);

    std::size_t size() const { return vars_.size(); }
    const std::vector<Variable>& vars() const { return vars_; }
    const Variable& var(std::size_t i) const { return vars_.at(i); }

    std::optional<std::size_t> index_of(std::string_view name) const;
    std::size_t require_index(std::string_view name) const;
    bool contains(std::string_view name) const { return index_of(name).has_value(); }

    long degree_of(const Exponents& e) const;

    /// `name:weight, ...` as used by ideal-file headers.
    std::string header() const;

    bool operator==(const RingSpec& other) const { return vars_ == other.vars_; }

private:
    std::vector<Variable> vars_;
    std::unordered_map<std::string, std::size_t> index_;
};

using Ring = std::shared_ptr<const RingSpec>;

Ring ring_make(std::vector<Variable> vars);

bool same_ring(const Ring& a, const Ring& b);

/// Strict weak order placing "larger" monomials first.
struct MonomialOrder {
    const RingSpec* ring = nullptr;
    bool operator()(const Exponents& a, const Exponents& b) const;
};

class Polynomial {
public:
    using Terms = std::map<Exponents, mpz_class, MonomialOrder>;

    explicit Polynomial(Ring ring);

    static Polynomial constant(Ring ring, const mpz_class& c);
    static Polynomial variable(Ring ring, std::string_view name);
    static Polynomial monomial(Ring ring, Exponents exps, const mpz_class& c);

    const Ring& ring() const { return ring_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    mpz_class coefficient(const Exponents& e) const;
    bool uses_variable(std::size_t index) const;

    /// Accumulates c into the coefficient of e; zero results are erased.
    void add_term(const Exponents& e, const mpz_class& c);

    Polynomial& operator+=(const Polynomial& q);
    Polynomial& operator-=(const Polynomial& q);
    Polynomial& operator*=(const Polynomial& q);
    Polynomial& operator*=(const mpz_class& c);

    Polynomial operator-() const;

    friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
    friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(Polynomial p, const mpz_class& c) { return p *= c; }
    friend Polynomial operator*(const mpz_class& c, Polynomial p) { return p *= c; }
    friend Polynomial operator*(Polynomial p, long c) { return p *= mpz_class(c); }
    friend Polynomial operator*(long c, Polynomial p) { return p *= mpz_class(c); }

    bool operator==(const Polynomial& q) const;

private:
    void check_ring(const Polynomial& q) const;

    Ring ring_;
    Terms terms_;
};

Polynomial pow(const Polynomial& p, unsigned k);

/// Result of a homogeneity query. When the polynomial is not homogeneous,
/// `witnesses` holds two terms of different weighted degree.
struct Homogeneity {
    std::optional<long> degree;
    std::optional<std::pair<Exponents, Exponents>> witnesses;

    bool homogeneous() const { return degree.has_value(); }
};

/// Throws on the zero polynomial, whose degree is undefined.
Homogeneity weighted_degree(const Polynomial& p);

/// Zero counts as homogeneous of every degree.
bool is_homogeneous(const Polynomial& p);
bool is_homogeneous_of(const Polynomial& p, long d);

using Images = std::map<std::string, Polynomial>;

/// Graded ring homomorphism determined by the images of the variables of
/// p's ring. Every variable occurring in p needs an image in `target`, and
/// each image must be homogeneous of its variable's weight.
Polynomial substitute(const Polynomial& p, const Images& images, const Ring& target);

/// Reinterprets p in another ring, matching variables by name.
Polynomial rebase(const Polynomial& p, const Ring& target);

std::string monomial_string(const RingSpec& ring, const Exponents& e);

/// `-2*t*c1 + 4*c2`; terms in monomial order, unit coefficients elided.
std::string canonical_string(const Polynomial& p);

}  // namespace chowforge
