#include "chowforge/zlinalg.hpp"

#include <algorithm>
#include <sstream>

namespace chowforge {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, mpz_class(0))
{
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw Error("ragged matrix literal");
        for (long x : r)
            data_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

void IntMatrix::append_row(std::span<const mpz_class> r)
{
    if (rows_ == 0 && cols_ == 0)
        cols_ = r.size();
    if (r.size() != cols_)
        throw Error("row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        mpz_swap((*this)(a, j).get_mpz_t(), (*this)(b, j).get_mpz_t());
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        mpz_swap((*this)(i, a).get_mpz_t(), (*this)(i, b).get_mpz_t());
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& factor)
{
    if (factor == 0)
        return;
    for (std::size_t j = 0; j < cols_; ++j) {
        const auto& s = (*this)(src, j);
        if (s != 0)
            mpz_addmul((*this)(dst, j).get_mpz_t(), s.get_mpz_t(), factor.get_mpz_t());
    }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const mpz_class& factor)
{
    if (factor == 0)
        return;
    for (std::size_t i = 0; i < rows_; ++i) {
        const auto& s = (*this)(i, src);
        if (s != 0)
            mpz_addmul((*this)(i, dst).get_mpz_t(), s.get_mpz_t(), factor.get_mpz_t());
    }
}

void IntMatrix::negate_row(std::size_t i)
{
    for (std::size_t j = 0; j < cols_; ++j)
        mpz_neg((*this)(i, j).get_mpz_t(), (*this)(i, j).get_mpz_t());
}

bool IntMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const mpz_class& x) { return x == 0; });
}

std::string IntMatrix::to_string() const
{
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        out << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j)
            out << (j ? ", " : "") << (*this)(i, j).get_str();
        out << ']';
    }
    out << ']';
    return out.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows())
        throw Error("matrix dimension mismatch in product");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const auto& x = a(i, k);
            if (x == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                mpz_addmul(c(i, j).get_mpz_t(), x.get_mpz_t(), b(k, j).get_mpz_t());
        }
    return c;
}

IntVector row_times(std::span<const mpz_class> x, const IntMatrix& a)
{
    if (x.size() != a.rows())
        throw Error("vector length does not match matrix rows");
    IntVector out(a.cols(), mpz_class(0));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (x[i] == 0)
            continue;
        for (std::size_t j = 0; j < a.cols(); ++j)
            mpz_addmul(out[j].get_mpz_t(), x[i].get_mpz_t(), a(i, j).get_mpz_t());
    }
    return out;
}

namespace {

int cmpabs(const mpz_class& x, const mpz_class& y)
{
    return mpz_cmpabs(x.get_mpz_t(), y.get_mpz_t());
}

// Nearest-integer quotient, keeping remainders at most |b|/2.
mpz_class round_div(const mpz_class& a, const mpz_class& b)
{
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_class twice = 2 * abs(r);
    if (twice > abs(b))
        q += (sgn(r) == sgn(b)) ? 1 : -1;
    return q;
}

}  // namespace

HnfResult hnf(const IntMatrix& a)
{
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    HnfResult res{a, IntMatrix::identity(m), 0, {}};
    auto& h = res.h;
    auto& u = res.u;
    std::size_t r = 0;

    for (std::size_t j = 0; j < n && r < m; ++j) {
        bool found = false;
        for (;;) {
            std::size_t best = m;
            for (std::size_t i = r; i < m; ++i) {
                if (h(i, j) == 0)
                    continue;
                if (best == m || cmpabs(h(i, j), h(best, j)) < 0)
                    best = i;
            }
            if (best == m)
                break;
            found = true;
            h.swap_rows(r, best);
            u.swap_rows(r, best);
            bool clean = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (h(i, j) == 0)
                    continue;
                mpz_class q = -round_div(h(i, j), h(r, j));
                h.add_row_multiple(i, r, q);
                u.add_row_multiple(i, r, q);
                if (h(i, j) != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (!found)
            continue;
        if (h(r, j) < 0) {
            h.negate_row(r);
            u.negate_row(r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), h(i, j).get_mpz_t(), h(r, j).get_mpz_t());
            if (q != 0) {
                q = -q;
                h.add_row_multiple(i, r, q);
                u.add_row_multiple(i, r, q);
            }
        }
        res.pivot_cols.push_back(j);
        ++r;
    }
    res.rank = r;
    return res;
}

std::string AbelianInvariants::to_string() const
{
    std::vector<std::string> parts;
    if (free_rank == 1)
        parts.push_back("Z");
    else if (free_rank > 1)
        parts.push_back("Z^" + std::to_string(free_rank));
    for (std::size_t i = 0; i < torsion.size();) {
        std::size_t k = i;
        while (k < torsion.size() && torsion[k] == torsion[i])
            ++k;
        std::string base = "Z/" + torsion[i].get_str();
        parts.push_back(k - i == 1 ? base : "(" + base + ")^" + std::to_string(k - i));
        i = k;
    }
    if (parts.empty())
        return "0";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i)
        out += " + " + parts[i];
    return out;
}

SnfResult snf(const IntMatrix& a)
{
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    SnfResult res{a, IntMatrix::identity(m), IntMatrix::identity(n), 0, {}};
    auto& d = res.d;
    auto& u = res.u;
    auto& v = res.v;

    std::size_t k = 0;
    for (; k < std::min(m, n); ++k) {
        // Bring the smallest nonzero entry of the trailing block to (k, k).
        std::size_t bi = m, bj = n;
        for (std::size_t i = k; i < m; ++i)
            for (std::size_t j = k; j < n; ++j)
                if (d(i, j) != 0 && (bi == m || cmpabs(d(i, j), d(bi, bj)) < 0)) {
                    bi = i;
                    bj = j;
                }
        if (bi == m)
            break;

        for (;;) {
            d.swap_rows(k, bi);
            u.swap_rows(k, bi);
            d.swap_cols(k, bj);
            v.swap_cols(k, bj);

            for (std::size_t i = k + 1; i < m; ++i) {
                if (d(i, k) == 0)
                    continue;
                mpz_class q = -round_div(d(i, k), d(k, k));
                d.add_row_multiple(i, k, q);
                u.add_row_multiple(i, k, q);
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                if (d(k, j) == 0)
                    continue;
                mpz_class q = -round_div(d(k, j), d(k, k));
                d.add_col_multiple(j, k, q);
                v.add_col_multiple(j, k, q);
            }

            // A smaller remainder left in row/column k becomes the new pivot.
            bi = k;
            bj = k;
            for (std::size_t i = k + 1; i < m; ++i)
                if (d(i, k) != 0 && cmpabs(d(i, k), d(bi, bj)) < 0) {
                    bi = i;
                    bj = k;
                }
            for (std::size_t j = k + 1; j < n; ++j)
                if (d(k, j) != 0 && cmpabs(d(k, j), d(bi, bj)) < 0) {
                    bi = k;
                    bj = j;
                }
            if (bi != k || bj != k)
                continue;

            bool row_col_clear = true;
            for (std::size_t i = k + 1; i < m && row_col_clear; ++i)
                row_col_clear = d(i, k) == 0;
            for (std::size_t j = k + 1; j < n && row_col_clear; ++j)
                row_col_clear = d(k, j) == 0;
            if (!row_col_clear)
                continue;

            // Enforce divisibility by folding an offending row into row k.
            std::size_t bad = m;
            for (std::size_t i = k + 1; i < m && bad == m; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(k, k).get_mpz_t())) {
                        bad = i;
                        break;
                    }
            if (bad == m)
                break;
            d.add_row_multiple(k, bad, 1);
            u.add_row_multiple(k, bad, 1);
        }
        if (d(k, k) < 0) {
            d.negate_row(k);
            u.negate_row(k);
        }
    }
    res.rank = k;
    res.cokernel.free_rank = n - k;
    for (std::size_t i = 0; i < k; ++i)
        if (d(i, i) != 1)
            res.cokernel.torsion.push_back(d(i, i));
    return res;
}

std::optional<IntVector> solve_with_hnf(const IntMatrix& a, const HnfResult& h,
                                        std::span<const mpz_class> v)
{
    if (v.size() != a.cols())
        throw Error("vector length " + std::to_string(v.size()) + " does not match " +
                    std::to_string(a.cols()) + " columns");
    IntVector rest(v.begin(), v.end());
    IntVector y(h.rank);
    for (std::size_t k = 0; k < h.rank; ++k) {
        std::size_t j = h.pivot_cols[k];
        for (std::size_t c = (k ? h.pivot_cols[k - 1] + 1 : 0); c < j; ++c)
            if (rest[c] != 0)
                return std::nullopt;
        if (!mpz_divisible_p(rest[j].get_mpz_t(), h.h(k, j).get_mpz_t()))
            return std::nullopt;
        mpz_divexact(y[k].get_mpz_t(), rest[j].get_mpz_t(), h.h(k, j).get_mpz_t());
        if (y[k] == 0)
            continue;
        for (std::size_t c = j; c < a.cols(); ++c)
            mpz_submul(rest[c].get_mpz_t(), y[k].get_mpz_t(), h.h(k, c).get_mpz_t());
    }
    if (std::any_of(rest.begin(), rest.end(), [](const mpz_class& x) { return x != 0; }))
        return std::nullopt;

    IntVector x(a.rows(), mpz_class(0));
    for (std::size_t k = 0; k < h.rank; ++k) {
        if (y[k] == 0)
            continue;
        for (std::size_t i = 0; i < a.rows(); ++i)
            mpz_addmul(x[i].get_mpz_t(), y[k].get_mpz_t(), h.u(k, i).get_mpz_t());
    }
    if (row_times(x, a) != IntVector(v.begin(), v.end()))
        throw std::logic_error("lattice certificate failed verification");
    return x;
}

std::optional<IntVector> solve_in_row_lattice(const IntMatrix& a, std::span<const mpz_class> v)
{
    if (v.size() != a.cols())
        throw Error("vector length " + std::to_string(v.size()) + " does not match " +
                    std::to_string(a.cols()) + " columns");
    return solve_with_hnf(a, hnf(a), v);
}

}  // namespace chowforge
