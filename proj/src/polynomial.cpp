#include "diophkit/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace diophkit {

int monomial_total_degree(const Monomial &m) {
    int d = 0;
    for (const auto &[var, exp] : m) d += exp;
    return d;
}

bool MonomialOrder::operator()(const Monomial &a, const Monomial &b) const {
    // "a < b" means a renders before b: higher degree first, then higher
    // power of the lowest-indexed variable.
    int da = monomial_total_degree(a), db = monomial_total_degree(b);
    if (da != db) return da > db;
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (ia->second != ib->second) return ia->second > ib->second;
        ++ia;
        ++ib;
    }
    return ib != b.end();
}

Polynomial::Polynomial(Int constant) : var_count_(1) {
    if (constant != 0) terms_.emplace(Monomial{}, std::move(constant));
}

Polynomial::Polynomial(TermMap terms, int var_count) : terms_(std::move(terms)), var_count_(1) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
    recompute_used_vars();
    set_var_count(var_count);
}

Polynomial Polynomial::variable(int index) {
    if (index < 1) throw std::invalid_argument("variable index must be >= 1");
    TermMap t;
    t.emplace(Monomial{{index, 1}}, 1);
    return Polynomial(std::move(t), index);
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

void Polynomial::set_var_count(int n) {
    int used = 1;
    for (const auto &[m, c] : terms_)
        for (const auto &[var, exp] : m) used = std::max(used, var);
    if (n < used) n = used;
    var_count_ = std::max(1, n);
}

void Polynomial::recompute_used_vars() {
    int used = 1;
    for (const auto &[m, c] : terms_)
        for (const auto &[var, exp] : m) used = std::max(used, var);
    var_count_ = used;
}

void Polynomial::add_term(const Monomial &m, const Int &coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial &o) const {
    Polynomial r = *this;
    for (const auto &[m, c] : o.terms_) r.add_term(m, c);
    r.set_var_count(std::max(var_count_, o.var_count_));
    return r;
}

Polynomial Polynomial::operator-(const Polynomial &o) const {
    Polynomial r = *this;
    for (const auto &[m, c] : o.terms_) r.add_term(m, -c);
    r.set_var_count(std::max(var_count_, o.var_count_));
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (const auto &[m, c] : terms_) r.terms_.emplace(m, -c);
    r.var_count_ = var_count_;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial &o) const {
    Polynomial r;
    for (const auto &[ma, ca] : terms_) {
        for (const auto &[mb, cb] : o.terms_) {
            Monomial m = ma;
            for (const auto &[var, exp] : mb) m[var] += exp;
            r.add_term(m, ca * cb);
        }
    }
    r.set_var_count(std::max(var_count_, o.var_count_));
    return r;
}

bool Polynomial::operator==(const Polynomial &o) const {
    return var_count_ == o.var_count_ && terms_ == o.terms_;
}

Int Polynomial::eval(const Tuple &point) const {
    if (static_cast<int>(point.size()) < var_count_)
        throw std::invalid_argument("evaluation point has fewer coordinates than var_count");
    Int sum = 0;
    for (const auto &[m, c] : terms_) {
        Int term = c;
        for (const auto &[var, exp] : m) {
            Int p;
            mpz_pow_ui(p.get_mpz_t(), point[var - 1].get_mpz_t(), exp);
            term *= p;
        }
        sum += term;
    }
    return sum;
}

int Polynomial::degree_in(int i) const {
    if (i < 1 || i > var_count_)
        throw std::out_of_range("degree_in: variable index out of range");
    int d = 0;
    for (const auto &[m, c] : terms_) {
        auto it = m.find(i);
        if (it != m.end()) d = std::max(d, it->second);
    }
    return d;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto &[m, c] : terms_) {
        Int a = abs(c);
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        bool coeff_shown = (a != 1) || m.empty();
        if (coeff_shown) out += a.get_str();
        bool need_star = coeff_shown;
        for (const auto &[var, exp] : m) {
            if (need_star) out += "*";
            out += "x" + std::to_string(var);
            if (exp != 1) out += "^" + std::to_string(exp);
            need_star = true;
        }
    }
    return out;
}

namespace {

struct PolyLexer {
    const std::string &s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char take() {
        skip_ws();
        return s[pos++];
    }

    Int read_integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected integer", start);
        return Int(s.substr(start, pos - start));
    }

    // Bounded read for indices and exponents; these must fit a machine word.
    int read_small_int(const char *what) {
        std::size_t start = pos;
        Int v = read_integer();
        if (v > std::numeric_limits<int>::max())
            throw ParseError(std::string(what) + " overflows the platform word", start);
        return static_cast<int>(v.get_si());
    }
};

}  // namespace

Polynomial parse_poly(const std::string &text) {
    PolyLexer lx{text};
    Polynomial::TermMap terms;

    auto add = [&](const Monomial &m, const Int &c) {
        if (c == 0) return;
        auto it = terms.find(m);
        if (it == terms.end())
            terms.emplace(m, c);
        else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    };

    bool first_term = true;
    while (true) {
        if (lx.eof()) {
            if (first_term) throw ParseError("empty polynomial", lx.pos);
            break;
        }
        int sign = 1;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            lx.take();
            sign = (c == '-') ? -1 : 1;
        } else if (!first_term) {
            throw ParseError("expected '+' or '-' between terms", lx.pos);
        }
        first_term = false;

        // term: factors joined by '*'
        Int coeff = sign;
        Monomial mono;
        bool expect_factor = true;
        while (expect_factor) {
            char f = lx.peek();
            if (f == 'x' || f == 'X') {
                lx.take();
                std::size_t at = lx.pos;
                int idx = lx.read_small_int("variable index");
                if (idx < 1) throw ParseError("variable index must be >= 1", at);
                int exp = 1;
                if (lx.peek() == '^') {
                    lx.take();
                    std::size_t eat = lx.pos;
                    exp = lx.read_small_int("exponent");
                    if (exp < 1) throw ParseError("exponent must be >= 1", eat);
                }
                auto it = mono.find(idx);
                if (it == mono.end())
                    mono.emplace(idx, exp);
                else {
                    if (it->second > std::numeric_limits<int>::max() - exp)
                        throw ParseError("exponent overflows the platform word", lx.pos);
                    it->second += exp;
                }
            } else if (std::isdigit(static_cast<unsigned char>(f))) {
                coeff *= lx.read_integer();
            } else {
                throw ParseError("expected factor (variable or integer)", lx.pos);
            }
            if (lx.peek() == '*') {
                lx.take();
            } else {
                expect_factor = false;
            }
        }
        add(mono, coeff);
    }
    return Polynomial(std::move(terms), 1);
}

Polynomial parse_poly_file(const std::string &text) {
    std::istringstream in(text);
    std::string first;
    if (std::getline(in, first)) {
        std::istringstream fl(first);
        std::string kw;
        int n = 0;
        if (fl >> kw && kw == "vars") {
            if (!(fl >> n) || n < 1) throw ParseError("bad vars header", 0);
            std::string rest((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
            Polynomial p = parse_poly(rest);
            if (p.var_count() > n)
                throw ParseError("polynomial uses a variable beyond the declared count", 0);
            p.set_var_count(n);
            return p;
        }
    }
    return parse_poly(text);
}

std::string render_poly_file(const Polynomial &p) {
    return "vars " + std::to_string(p.var_count()) + "\n" + p.to_string() + "\n";
}

std::pair<Polynomial, Polynomial> split_nonneg(const Polynomial &d) {
    Polynomial::TermMap pos, neg;
    for (const auto &[m, c] : d.terms()) {
        if (c > 0)
            pos.emplace(m, c);
        else
            neg.emplace(m, -c);
    }
    Polynomial p(std::move(pos), d.var_count());
    Polynomial q(std::move(neg), d.var_count());
    return {std::move(p), std::move(q)};
}

}  // namespace diophkit
