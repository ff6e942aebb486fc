#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diophkit/esystem.hpp"
#include "diophkit/polynomial.hpp"

namespace diophkit {

struct SolveOptions {
    // When false, solutions are counted but not materialized.
    bool store_solutions = true;
    // Above this many solutions the report switches to count-only.
    std::size_t storage_cap = 1000000;
    // Stop as soon as at least this many solutions are known to exist.
    std::optional<Nat> stop_after;
    // Pins variable v (1-based) to assignment[v-1] before searching.
    std::vector<std::optional<Nat>> assignment;
    // Also count solutions inside [0, floor(B/2)]^n to fill `half_count`
    // and `stable`.
    bool with_stability = true;
};

// Outcome of a bounded exhaustive search. `stable` (count unchanged from
// the half-sized box) is heuristic evidence of a finite solution set,
// reported as "conjectured-finite"; `pinned_unique` marks the one case
// where uniqueness is actually proved (value derivation pinned every
// variable over unbounded naturals).
struct SolveReport {
    Nat bound;
    Nat count = 0;
    Nat half_count = 0;
    bool stable = false;
    bool overflowed = false;
    bool pinned_unique = false;
    std::optional<Nat> min_max_norm;
    std::vector<Tuple> solutions;  // lexicographically sorted; empty when overflowed

    std::string classification() const;
};

// Forced-value derivation over unbounded naturals. Repeatedly applies
// exact consequences of the equations (a unit pins 1, an addition with two
// known sides pins the third, x+x=x pins 0, ...) starting from `seed`.
//   Pinned     -> `values` is the unique solution extending the seed, over
//                 all of N^n (not just a box)
//   Unsat      -> no solution extends the seed
//   Incomplete -> derivation stalled; nothing is claimed
struct PinResult {
    enum class Status { Pinned, Incomplete, Unsat };
    Status status = Status::Incomplete;
    Tuple values;
};

PinResult pin_unique(const ESystem &s,
                     const std::vector<std::optional<Nat>> &seed = {});

// All solutions of `s` with every coordinate <= bound. Interval propagation
// and the pin derivation prune the search but never change the answer:
// results are exactly those of a naive (B+1)^n scan. Sequential and
// deterministic; callers that parallelize do so across solve_box calls and
// merge reports associatively.
SolveReport solve_box(const ESystem &s, const Nat &bound, const SolveOptions &opts = {});

// All roots of `d` in [0, bound]^p, by direct enumeration in lexicographic
// order.
SolveReport solve_poly_box(const Polynomial &d, const Nat &bound,
                           const SolveOptions &opts = {});

// True iff some solution of `s` has all coordinates <= b. Agrees with
// solve_box(s, b).count >= 1.
bool has_solution_leq(const ESystem &s, const Nat &b);

std::string render_report(const SolveReport &r);

}  // namespace diophkit
