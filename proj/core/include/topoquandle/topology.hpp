#pragma once

// Finite Alexandroff topologies represented as quasi-orders: a reflexive,
// transitive relation stored as one 64-bit row mask per point (bit j of row i
// set iff x_i ≤ x_j). Supplies the finer relation, restriction, connected
// components, the quotient T/T', block products, and the ⊙≺ refinement used
// by the internal coproduct.

#include <cstdint>
#include <string>
#include <vector>

#include "topoquandle/quandle.hpp"  // labels_t, mask_t, perm

namespace tq {

/// A partition of {0..n-1}; block_of[i] is the least element of i's block,
/// so two partitions are equal iff their block_of vectors are.
struct partition {
    std::vector<int> block_of;
    bool operator==(const partition&) const = default;
    std::vector<mask_t> blocks() const;  // ascending by least element
};

struct topology_violation {
    enum class kind { not_reflexive, not_transitive };
    kind which;
    int i = -1, j = -1, k = -1;
    std::string describe(const labels_t& labels) const;
};

class topology {
public:
    /// Validates reflexivity and transitivity; throws validation_error.
    static topology make(labels_t labels, std::vector<mask_t> leq);
    static topology make(labels_t labels, const std::vector<std::vector<bool>>& leq);
    static std::vector<topology_violation> check(const std::vector<mask_t>& leq, int n);

    /// Reflexive-transitive closure of an arbitrary relation (always valid).
    static topology closure(labels_t labels, std::vector<mask_t> rel);

    static topology discrete(labels_t labels);
    static topology indiscrete(labels_t labels);

    int size() const { return static_cast<int>(labels_.size()); }
    const labels_t& labels() const { return labels_; }
    const std::vector<mask_t>& rows() const { return leq_; }
    bool leq(int i, int j) const { return (leq_[static_cast<size_t>(i)] >> j) & 1; }
    int index_of(const std::string& label) const;

    bool is_discrete() const;

    /// T' is finer than T (T' ≺ T) iff every T'-relation is a T-relation.
    /// Both must share the ground; throws ground_mismatch.
    bool finer_than(const topology& coarser) const;

    topology restrict(mask_t y) const;

    /// Components of the comparability graph (symmetric closure of ≤).
    partition components() const;
    /// Classes of x ∼ y ⟺ x ≤ y and y ≤ x.
    partition equivalence_classes() const;

    /// The quotient topology T/T': reflexive-transitive closure of
    /// { x R y ⟺ x ≤_T y or y ≤_{T'} x }. Total on same-ground pairs.
    topology quotient(const topology& tprime) const;

    /// Structure transport along a permutation of positions.
    topology relabel(const perm& sigma) const;
    topology with_labels(labels_t fresh) const;

    bool operator==(const topology&) const = default;
    std::string encode() const;

private:
    topology() = default;
    labels_t labels_;
    std::vector<mask_t> leq_;
};

/// Block-diagonal disjoint union T1 T2 (no cross relations).
topology product(const topology& t1, const topology& t2);

/// The ⊙≺ refinement: tprime ⊙≺ t iff (1) tprime is finer than t, (2) tprime
/// and t agree on every tprime-connected component, and (3) the equivalence
/// classes of t/tprime are exactly the connected components of tprime.
bool is_circle_finer(const topology& tprime, const topology& t);

/// All quasi-orders T' on t's ground with T' ⊙≺ t, in enumeration order.
/// Backed by the exhaustive quasi-order generator, so t.size() ≤ 5.
std::vector<topology> circle_finer_set(const topology& t);

/// Adjacent pairs chaining each equivalence class in label order ("x ~ y"
/// lines of the text format); deterministic.
std::vector<std::pair<int, int>> sim_chain_pairs(const topology& t);

/// Covering pairs of the induced order on equivalence classes, one per pair
/// of classes, as (least element of lower, least element of upper) — the
/// "x < y" lines of the text format; deterministic.
std::vector<std::pair<int, int>> cover_pairs(const topology& t);

} // namespace tq
