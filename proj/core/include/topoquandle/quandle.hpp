#pragma once

// Finite quandles stored as dense n-by-n operation tables over an ordered
// label set. Entry (i, j) of the table is the index of x_i ◁ x_j, so column j
// read top-down is the right translation by x_j. Objects are immutable values
// after construction; all operations are pure.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "topoquandle/errors.hpp"

namespace tq {

using labels_t = std::vector<std::string>;
using mask_t = std::uint64_t;

/// Largest ground-set size representable (relation rows are 64-bit masks).
inline constexpr int max_ground = 64;

inline mask_t bit(int i) { return mask_t{1} << i; }

/// A permutation of {0..n-1}, used for right translations and relabelings.
class perm {
public:
    perm() = default;
    explicit perm(std::vector<int> image);
    static perm identity(int n);

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<size_t>(i)]; }
    const std::vector<int>& image() const { return img_; }

    perm then(const perm& second) const;  // x ↦ second(this(x))
    perm inverse() const;
    perm pow(long long k) const;
    long long order() const;  // lcm of cycle lengths

    bool operator==(const perm&) const = default;

private:
    std::vector<int> img_;
};

/// One axiom violation found by quandle validation.
struct quandle_violation {
    enum class kind { idempotency, right_bijectivity, self_distributivity };
    kind which;
    int i = -1, j = -1, k = -1;  // witness indices; unused slots stay -1
    std::string describe(const labels_t& labels) const;
};

/// A finite group given by its Cayley table (row 0 must be the identity),
/// input for the conjugation and core quandle constructions.
class group {
public:
    static group make(labels_t labels, std::vector<std::vector<int>> table);
    static group cyclic(int n);  // Z/n with labels "0".."n-1"

    int size() const { return static_cast<int>(labels_.size()); }
    const labels_t& labels() const { return labels_; }
    int mul(int i, int j) const { return table_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    int inv(int i) const { return inv_[static_cast<size_t>(i)]; }

private:
    group() = default;
    labels_t labels_;
    std::vector<std::vector<int>> table_;
    std::vector<int> inv_;
};

class quandle {
public:
    /// Validates the three quandle axioms and constructs; throws
    /// validation_error naming the first violation otherwise.
    static quandle make(labels_t labels, std::vector<std::vector<int>> table);

    /// All axiom violations of a candidate table, in deterministic order
    /// (idempotency witnesses first, then column, then triple witnesses).
    static std::vector<quandle_violation> check(const std::vector<std::vector<int>>& table);

    /// The quandle with a ◁ b = a for all a, b.
    static quandle trivial(labels_t labels);
    /// Dihedral quandle on Z/n: i ◁ j = 2j − i mod n, labels "a", "b", ...
    static quandle dihedral(int n);
    /// Conjugation quandle of a group: x ◁ y = y⁻¹ x y.
    static quandle conjugation(const group& g);
    /// Core quandle of a group: x ◁ y = y x⁻¹ y.
    static quandle core(const group& g);

    int size() const { return static_cast<int>(labels_.size()); }
    const labels_t& labels() const { return labels_; }
    const std::vector<std::vector<int>>& table() const { return table_; }
    int at(int i, int j) const { return table_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    int index_of(const std::string& label) const;  // throws error if absent

    /// Right translation R_b : a ↦ a ◁ b (column b; always a permutation).
    perm right_translation(int b) const;
    /// Left translation L_a : b ↦ a ◁ b (row a; not necessarily bijective).
    std::vector<int> left_translation(int a) const;

    /// True iff the masked subset is closed under ◁.
    bool is_subquandle(mask_t y) const;
    /// All ◁-closed subsets as bitmasks, ascending; ∅ and the full set are
    /// included only when include_trivial is set.
    std::vector<mask_t> subquandles(bool include_trivial) const;

    /// Least α ≥ 1 with R_b^α fixing the masked subset pointwise. The infimum
    /// over an empty subset is 1, so alpha(∅, b) = 1 and the complement over
    /// an empty subset is the quandle itself.
    int alpha(mask_t y, int b) const;

    /// The complement quandle (X∖Y, ◁^{X,Y}) with a ◁^{X,Y} b = R_b^{α(b)}(a).
    /// Requires y to be a subquandle. Labels keep their ambient order.
    quandle complement(mask_t y) const;

    /// Restriction to a ◁-closed subset (throws validation_error otherwise).
    quandle restrict(mask_t y) const;

    /// Structure transport along a permutation of positions: the relabeled
    /// quandle q' has q'.at(σ(i), σ(j)) = σ(q.at(i, j)) over the same labels.
    quandle relabel(const perm& sigma) const;

    /// Same structure presented over a different label sequence.
    quandle with_labels(labels_t fresh) const;

    bool operator==(const quandle&) const = default;

    /// Deterministic byte encoding (labels plus table), used for canonical
    /// term ordering inside formal sums.
    std::string encode() const;

private:
    quandle() = default;
    labels_t labels_;
    std::vector<std::vector<int>> table_;
};

/// Disjoint-union quandle: both blocks keep their operations and the cross
/// action is trivial (a ◁ b = a whenever a and b lie in different factors —
/// the only cross action under which every column stays a permutation).
/// Ground labels are q1's followed by q2's; throws ground_overlap on clash.
quandle product(const quandle& q1, const quandle& q2);

} // namespace tq
