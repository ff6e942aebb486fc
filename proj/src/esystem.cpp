#include "diophkit/esystem.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "diophkit/polynomial.hpp"

namespace diophkit {

static void check_index(int v, const char *what) {
    if (v < 1) throw std::invalid_argument(std::string(what) + " must be >= 1");
}

EEquation EEquation::unit(int k) {
    check_index(k, "unit index");
    return {Kind::Unit, 0, 0, k};
}

EEquation EEquation::add(int i, int j, int k) {
    check_index(i, "index");
    check_index(j, "index");
    check_index(k, "index");
    if (i > j) std::swap(i, j);
    return {Kind::Add, i, j, k};
}

EEquation EEquation::mul(int i, int j, int k) {
    check_index(i, "index");
    check_index(j, "index");
    check_index(k, "index");
    if (i > j) std::swap(i, j);
    return {Kind::Mul, i, j, k};
}

int EEquation::max_index() const {
    return std::max(std::max(i, j), k);
}

bool EEquation::eval(const Tuple &t) const {
    if (static_cast<int>(t.size()) < max_index())
        throw std::invalid_argument("tuple too short for equation");
    switch (kind) {
        case Kind::Unit: return t[k - 1] == 1;
        case Kind::Add: return t[i - 1] + t[j - 1] == t[k - 1];
        case Kind::Mul: return t[i - 1] * t[j - 1] == t[k - 1];
    }
    return false;
}

std::string EEquation::to_string() const {
    switch (kind) {
        case Kind::Unit: return "x" + std::to_string(k) + " = 1";
        case Kind::Add:
            return "x" + std::to_string(i) + " + x" + std::to_string(j) + " = x" +
                   std::to_string(k);
        case Kind::Mul:
            return "x" + std::to_string(i) + " * x" + std::to_string(j) + " = x" +
                   std::to_string(k);
    }
    return {};
}

ESystem::ESystem(int n_, std::set<EEquation> eqs) : n(n_), equations(std::move(eqs)) {
    if (n < 1) throw std::invalid_argument("variable count must be >= 1");
    for (const auto &e : equations)
        if (e.max_index() > n)
            throw std::invalid_argument("equation index exceeds variable count");
}

void ESystem::insert(const EEquation &e) {
    if (e.max_index() > n) throw std::invalid_argument("equation index exceeds variable count");
    equations.insert(e);
}

bool ESystem::satisfied_by(const Tuple &t) const {
    for (const auto &e : equations)
        if (!e.eval(t)) return false;
    return true;
}

std::string ESystem::to_string() const { return render_system(*this); }

std::vector<EEquation> enumerate_en(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_en: n must be >= 1");
    std::vector<EEquation> out;
    out.reserve(static_cast<std::size_t>(n) + static_cast<std::size_t>(n) * n * (n + 1));
    for (int k = 1; k <= n; ++k) out.push_back(EEquation::unit(k));
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            for (int k = 1; k <= n; ++k) out.push_back(EEquation::add(i, j, k));
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            for (int k = 1; k <= n; ++k) out.push_back(EEquation::mul(i, j, k));
    return out;
}

namespace {

// Reads `xK` at position p of line; advances p.
int read_var(const std::string &line, std::size_t &p, int lineno) {
    while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p]))) ++p;
    if (p >= line.size() || (line[p] != 'x' && line[p] != 'X'))
        throw ParseError("line " + std::to_string(lineno) + ": expected variable", p);
    ++p;
    std::size_t start = p;
    while (p < line.size() && std::isdigit(static_cast<unsigned char>(line[p]))) ++p;
    if (p == start)
        throw ParseError("line " + std::to_string(lineno) + ": expected variable index", p);
    long v = std::stol(line.substr(start, p - start));
    if (v < 1) throw ParseError("line " + std::to_string(lineno) + ": variable index must be >= 1", start);
    return static_cast<int>(v);
}

char read_op(const std::string &line, std::size_t &p, int lineno) {
    while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p]))) ++p;
    if (p >= line.size())
        throw ParseError("line " + std::to_string(lineno) + ": unexpected end of line", p);
    return line[p++];
}

void expect_end(const std::string &line, std::size_t p, int lineno) {
    while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p]))) ++p;
    if (p < line.size())
        throw ParseError("line " + std::to_string(lineno) + ": trailing input", p);
}

}  // namespace

EEquation parse_equation_line(const std::string &line, int lineno) {
    std::size_t p = 0;
    int a = read_var(line, p, lineno);
    char op = read_op(line, p, lineno);
    if (op == '=') {
        // xK = 1
        while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p]))) ++p;
        if (p >= line.size() || line[p] != '1')
            throw ParseError("line " + std::to_string(lineno) + ": expected '1'", p);
        ++p;
        expect_end(line, p, lineno);
        return EEquation::unit(a);
    }
    if (op != '+' && op != '*')
        throw ParseError("line " + std::to_string(lineno) + ": expected '+', '*' or '='", p - 1);
    int b = read_var(line, p, lineno);
    char eq = read_op(line, p, lineno);
    if (eq != '=')
        throw ParseError("line " + std::to_string(lineno) + ": expected '='", p - 1);
    int c = read_var(line, p, lineno);
    expect_end(line, p, lineno);
    return op == '+' ? EEquation::add(a, b, c) : EEquation::mul(a, b, c);
}

ESystem parse_system(const std::string &text, std::vector<std::string> *warnings) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    std::set<EEquation> eqs;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t p = 0;
        while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p]))) ++p;
        if (p == line.size()) continue;
        if (n < 0) {
            std::istringstream fl(line);
            std::string kw;
            if (!(fl >> kw) || kw != "vars" || !(fl >> n) || n < 1)
                throw ParseError("line " + std::to_string(lineno) + ": expected `vars N` header", 0);
            continue;
        }
        EEquation e = parse_equation_line(line, lineno);
        if (e.max_index() > n)
            throw ParseError("line " + std::to_string(lineno) +
                                 ": index exceeds declared variable count " + std::to_string(n),
                             0);
        if (!eqs.insert(e).second && warnings)
            warnings->push_back("line " + std::to_string(lineno) + ": duplicate equation `" +
                                e.to_string() + "` ignored");
    }
    if (n < 0) throw ParseError("missing `vars N` header", 0);
    return ESystem(n, std::move(eqs));
}

std::string render_system(const ESystem &s) {
    std::string out = "vars " + std::to_string(s.n) + "\n";
    for (const auto &e : s.equations) out += e.to_string() + "\n";
    return out;
}

}  // namespace diophkit
