#include "chowforge/polyparse.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace chowforge {

ParseError::ParseError(const std::string& what, std::size_t offset, std::size_t line)
    : Error((line ? "line " + std::to_string(line) + ", " : std::string()) + "offset " +
            std::to_string(offset) + ": " + what),
      message_(what),
      offset_(offset),
      line_(line)
{
}

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::size_t pos;
    std::string_view text;
};

const char* describe(Tok t)
{
    switch (t) {
    case Tok::Int: return "integer";
    case Tok::Ident: return "identifier";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Caret: return "'^'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of input";
    }
    return "?";
}

std::vector<Token> lex(std::string_view s)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                ++i;
            out.push_back({Tok::Int, start, s.substr(start, i - start)});
            continue;
        }
        if (c >= 'a' && c <= 'z') {
            while (i < s.size() && ((s[i] >= 'a' && s[i] <= 'z') ||
                                    std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            out.push_back({Tok::Ident, start, s.substr(start, i - start)});
            continue;
        }
        Tok k;
        switch (c) {
        case '+': k = Tok::Plus; break;
        case '-': k = Tok::Minus; break;
        case '*': k = Tok::Star; break;
        case '^': k = Tok::Caret; break;
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        default:
            throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back({k, start, s.substr(start, 1)});
        ++i;
    }
    out.push_back({Tok::End, s.size(), {}});
    return out;
}

class Parser {
public:
    Parser(std::string_view src, const Ring& ring) : toks_(lex(src)), ring_(ring) {}

    Polynomial parse()
    {
        Polynomial p = expr();
        if (peek().kind != Tok::End)
            unexpected();
        return p;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }

    [[noreturn]] void unexpected() const
    {
        const auto& t = peek();
        std::string msg = "unexpected " + std::string(describe(t.kind));
        if (t.kind != Tok::End)
            msg += " '" + std::string(t.text) + "'";
        if (pos_ > 0 && (t.kind == Tok::Ident || t.kind == Tok::Int || t.kind == Tok::LParen)) {
            auto prev = toks_[pos_ - 1].kind;
            if (prev == Tok::Int || prev == Tok::Ident || prev == Tok::RParen)
                msg += " (implicit multiplication is not allowed; use '*')";
        }
        throw ParseError(msg, t.pos);
    }

    Polynomial expr()
    {
        Polynomial acc = term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            bool minus = next().kind == Tok::Minus;
            Polynomial rhs = term();
            if (minus)
                acc -= rhs;
            else
                acc += rhs;
        }
        return acc;
    }

    Polynomial term()
    {
        Polynomial acc = unary();
        while (peek().kind == Tok::Star) {
            next();
            acc *= unary();
        }
        return acc;
    }

    Polynomial unary()
    {
        if (peek().kind == Tok::Minus) {
            next();
            return -unary();
        }
        return power();
    }

    Polynomial power()
    {
        Polynomial base = primary();
        if (peek().kind != Tok::Caret)
            return base;
        next();
        const auto& t = peek();
        if (t.kind != Tok::Int)
            throw ParseError("exponent must be a non-negative integer literal", t.pos);
        next();
        if (t.text.size() > 9)
            throw ParseError("exponent too large", t.pos);
        return pow(base, static_cast<unsigned>(std::stoul(std::string(t.text))));
    }

    Polynomial primary()
    {
        const auto& t = peek();
        switch (t.kind) {
        case Tok::Int:
            next();
            return Polynomial::constant(ring_, mpz_class(std::string(t.text), 10));
        case Tok::Ident: {
            next();
            if (!ring_->contains(t.text))
                throw ParseError("undeclared identifier '" + std::string(t.text) + "'", t.pos);
            return Polynomial::variable(ring_, t.text);
        }
        case Tok::LParen: {
            next();
            Polynomial inner = expr();
            if (peek().kind != Tok::RParen)
                unexpected();
            next();
            return inner;
        }
        default:
            unexpected();
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    const Ring& ring_;
};

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

Ring parse_header(std::string_view body, std::size_t body_offset, std::size_t line)
{
    std::vector<Variable> vars;
    std::size_t i = 0;
    while (i <= body.size()) {
        std::size_t comma = body.find(',', i);
        if (comma == std::string_view::npos)
            comma = body.size();
        std::string_view item = body.substr(i, comma - i);
        std::size_t lead = 0;
        while (lead < item.size() && std::isspace(static_cast<unsigned char>(item[lead])))
            ++lead;
        std::size_t at = body_offset + i + lead;
        item = trim(item);
        auto colon = item.find(':');
        if (item.empty() || colon == std::string_view::npos)
            throw ParseError("expected 'name:weight' in ring header", at, line);
        auto name = trim(item.substr(0, colon));
        auto weight = trim(item.substr(colon + 1));
        if (weight.empty() || weight.size() > 9 ||
            !std::all_of(weight.begin(), weight.end(),
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw ParseError("weight must be a positive integer", at + colon + 1, line);
        vars.push_back({std::string(name), std::stoi(std::string(weight))});
        i = comma + 1;
    }
    try {
        return ring_make(std::move(vars));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what(), body_offset, line);
    }
}

}  // namespace

Polynomial parse_poly(std::string_view src, const Ring& ring)
{
    return Parser(src, ring).parse();
}

IdealFile parse_ideal_file(std::string_view src)
{
    std::optional<IdealFile> file;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= src.size()) {
        std::size_t end = src.find('\n', start);
        if (end == std::string_view::npos)
            end = src.size();
        std::string_view line = src.substr(start, end - start);
        ++line_no;
        start = end + 1;

        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        if (trim(line).empty()) {
            if (end == src.size())
                break;
            continue;
        }
        if (!file) {
            std::size_t lead = line.find_first_not_of(" \t");
            auto body = line.substr(lead);
            if (body.substr(0, 5) != "ring:")
                throw ParseError("missing 'ring:' header", lead, line_no);
            file = IdealFile{parse_header(body.substr(5), lead + 5, line_no), {}};
        } else {
            Polynomial p = [&] {
                try {
                    return parse_poly(line, file->ring);
                } catch (const ParseError& e) {
                    throw ParseError(e.message(), e.offset(), line_no);
                }
            }();
            if (!p.is_zero()) {
                auto h = weighted_degree(p);
                if (!h.homogeneous()) {
                    const auto& ring = *file->ring;
                    const auto& [wa, wb] = *h.witnesses;
                    throw ParseError("inhomogeneous relation: term " + monomial_string(ring, wa) +
                                         " has degree " + std::to_string(ring.degree_of(wa)) +
                                         ", term " + monomial_string(ring, wb) + " has degree " +
                                         std::to_string(ring.degree_of(wb)),
                                     0, line_no);
                }
            }
            file->relations.push_back(std::move(p));
        }
        if (end == src.size())
            break;
    }
    if (!file)
        throw ParseError("missing 'ring:' header", 0, line_no ? line_no : 1);
    return std::move(*file);
}

std::string format_ideal_file(const Ring& ring, const std::vector<Polynomial>& relations)
{
    std::string out = "ring: " + ring->header() + "\n";
    for (const auto& r : relations)
        out += canonical_string(rebase(r, ring)) + "\n";
    return out;
}

}  // namespace chowforge
