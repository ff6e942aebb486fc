#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "diophkit/numeric.hpp"

namespace diophkit {

// One atomic equation over variables x_1..x_n:
//   Unit:  x_k = 1
//   Add:   x_i + x_j = x_k
//   Mul:   x_i * x_j = x_k
// Add/Mul are stored with i <= j; the swapped spelling denotes the same
// equation and is canonicalized on construction.
struct EEquation {
    enum class Kind { Unit, Add, Mul };

    Kind kind;
    int i, j, k;  // Unit uses k only and stores i = j = 0

    static EEquation unit(int k);
    static EEquation add(int i, int j, int k);
    static EEquation mul(int i, int j, int k);

    int max_index() const;
    bool eval(const Tuple &t) const;
    std::string to_string() const;

    auto operator<=>(const EEquation &) const = default;
};

// A finite set of atomic equations over n variables. Set semantics: no
// duplicates, iteration in canonical order (Unit, then Add, then Mul, each
// lexicographic by indices).
struct ESystem {
    int n = 1;
    std::set<EEquation> equations;

    ESystem() = default;
    ESystem(int n, std::set<EEquation> eqs);

    void insert(const EEquation &e);
    bool satisfied_by(const Tuple &t) const;
    std::string to_string() const;
};

// All canonical equations over indices 1..n, in canonical order. The count
// is n + n^2*(n+1): n unit equations and n*(n(n+1)/2) of each of Add/Mul.
std::vector<EEquation> enumerate_en(int n);

// Parses the system text format: first line `vars N`, then one equation per
// line. Duplicate lines are deduplicated; if `warnings` is given, one note
// per duplicate is appended.
ESystem parse_system(const std::string &text, std::vector<std::string> *warnings = nullptr);

// Parses a single `xK = 1` / `xI + xJ = xK` / `xI * xJ = xK` line;
// `lineno` is used in error messages only.
EEquation parse_equation_line(const std::string &line, int lineno);

std::string render_system(const ESystem &s);

}  // namespace diophkit
