#pragma once

// Exhaustive verification sweeps shared by the CLI `verify` verb and the
// acceptance suite: the five algebraic identity checks over every topological
// quandle (and every disjoint pair for the product laws) up to a ground-size
// bound, plus the two compatibility-transfer implications and the
// sandwich-bijection property of ⊙≺ quotients.

#include <string>
#include <vector>

namespace tq {

struct sweep_line {
    std::string name;
    long long cases = 0;        // instances examined
    long long failures = 0;     // instances where the property failed
    std::string first_failure;  // readable description of the first failure
    bool pass() const { return failures == 0; }
};

/// Runs every sweep exhaustively for ground sizes 0..max_n (pair sweeps over
/// all splits n1+n2 ≤ max_n with disjoint letter grounds). jobs > 1 shards
/// the outer loops; results are merged in index order so output is
/// deterministic regardless of scheduling.
std::vector<sweep_line> run_verification(int max_n, int jobs = 1);

/// Renders the sweeps as an aligned pass/fail table.
std::string format_report(const std::vector<sweep_line>& lines);

} // namespace tq
