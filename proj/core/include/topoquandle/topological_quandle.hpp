#pragma once

// The compatibility layer: a topological quandle is a quandle together with a
// quasi-order on the same ground such that x ≤ x' and y ≤ y' imply
// x ◁ y ≤ x' ◁ y'. Equivalently every right translation is an order
// isomorphism and every left translation is monotone; both characterizations
// are implemented and must agree.

#include <optional>
#include <string>

#include "topoquandle/quandle.hpp"
#include "topoquandle/topology.hpp"

namespace tq {

/// A violated monotonicity instance: x ≤ x', y ≤ y', but x◁y ≰ x'◁y'.
struct compat_witness {
    int x, xp, y, yp;
    std::string describe(const labels_t& labels) const;
};

/// Lexicographically smallest violating quadruple, or nullopt if compatible.
std::optional<compat_witness> compat_violation(const quandle& q, const topology& t);

/// Direct O(n⁴) monotonicity check.
bool is_compatible(const quandle& q, const topology& t);

/// Same predicate via translations: every R_x is monotone with monotone
/// inverse and every L_x is monotone.
bool is_compatible_via_translations(const quandle& q, const topology& t);

class topo_quandle {
public:
    /// Constructs iff q and t share the ground and are compatible; throws
    /// ground_mismatch or validation_error (with the smallest witness).
    static topo_quandle make(quandle q, topology t);

    const quandle& q() const { return q_; }
    const topology& t() const { return t_; }
    int size() const { return q_.size(); }
    const labels_t& labels() const { return q_.labels(); }

    topo_quandle restrict_to_subquandle(mask_t y) const;
    topo_quandle relabel(const perm& sigma) const;
    topo_quandle with_labels(labels_t fresh) const;

    bool operator==(const topo_quandle&) const = default;
    std::string encode() const;

private:
    topo_quandle(quandle q, topology t) : q_(std::move(q)), t_(std::move(t)) {}
    quandle q_;
    topology t_;
};

/// Compatibility transfer along a quotient, first direction: with tp ⊙≺ t
/// (throws validation_error otherwise), returns whether t/tp is q-compatible.
/// Whenever t and tp are both q-compatible this is expected to hold; the test
/// suite sweeps that implication.
bool kebab_forward(const quandle& q, const topology& t, const topology& tp);

/// Second direction: with tp ⊙≺ t, returns whether tp is q-compatible; swept
/// under the premise that t and t/tp are q-compatible.
bool kebab_backward(const quandle& q, const topology& t, const topology& tp);

/// Disjoint-union product of topological quandles (trivial cross action,
/// block-diagonal topology). The result is always compatible; asserted.
topo_quandle product(const topo_quandle& a, const topo_quandle& b);

} // namespace tq
