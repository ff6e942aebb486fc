#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "diophkit/numeric.hpp"

namespace diophkit {

// Thrown by the text parsers; `position` is a 0-based byte offset into the
// input (line-oriented parsers report the offending line instead).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string &msg, std::size_t position)
        : std::runtime_error(msg + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Product of variable powers: maps 1-based variable index to a positive
// exponent. The empty map is the constant monomial.
using Monomial = std::map<int, int>;

// Graded lexicographic order, used everywhere a canonical term order is
// needed (rendering, memoization, term iteration). Higher total degree
// first; ties broken by exponent vectors read from x1 upward.
struct MonomialOrder {
    bool operator()(const Monomial &a, const Monomial &b) const;
};

int monomial_total_degree(const Monomial &m);

// Multivariate integer polynomial in collapsed form: no zero coefficients,
// no duplicate monomials. `var_count` is an upper bound on the variable
// indices in use; indices above the highest occurring one are legal and
// represent variables the polynomial simply does not constrain.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Int, MonomialOrder>;

    Polynomial() : var_count_(1) {}
    explicit Polynomial(Int constant);
    Polynomial(TermMap terms, int var_count);

    static Polynomial variable(int index);

    const TermMap &terms() const { return terms_; }
    int var_count() const { return var_count_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;

    // Extends the declared variable count; never shrinks below the highest
    // index actually used.
    void set_var_count(int n);

    Polynomial operator+(const Polynomial &o) const;
    Polynomial operator-(const Polynomial &o) const;
    Polynomial operator*(const Polynomial &o) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial &o) const;

    // Exact value at `point`; point.size() must be >= var_count().
    Int eval(const Tuple &point) const;

    // Max exponent of x_i across terms, 0 if absent. 1 <= i <= var_count().
    int degree_in(int i) const;

    std::string to_string() const;

private:
    void add_term(const Monomial &m, const Int &coeff);
    void recompute_used_vars();

    TermMap terms_;
    int var_count_;
};

// Parses the polynomial expression grammar: terms joined by +/-, a term is
// a '*'-joined product of factors, a factor is `xK`, `xK^E`, or a
// non-negative integer literal. Whitespace is insignificant.
Polynomial parse_poly(const std::string &text);

// File form: an optional first line `vars N` (fixing var_count) followed by
// one polynomial expression; without the header the variable count is the
// highest index used.
Polynomial parse_poly_file(const std::string &text);
std::string render_poly_file(const Polynomial &p);

// Splits D into (P, Q) with P carrying the positive-coefficient terms and Q
// the negated negative ones, so D = P - Q and both sides have positive
// coefficients only.
std::pair<Polynomial, Polynomial> split_nonneg(const Polynomial &d);

}  // namespace diophkit
