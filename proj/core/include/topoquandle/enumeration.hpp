#pragma once

// Exhaustive generators for small quandles, quasi-orders, and compatible
// pairs, plus relabel-invariant canonical forms. All streams are produced in
// a deterministic lexicographic order so logs and serialized corpora are
// reproducible byte for byte. Hard caps guard against accidental blowups and
// raise cap_exceeded.

#include <string>
#include <vector>

#include "topoquandle/topological_quandle.hpp"

namespace tq {

inline constexpr int max_enum_quandles = 6;
inline constexpr int max_enum_quasiorders = 5;
inline constexpr int max_enum_topological_quandles = 4;
inline constexpr int max_canonical = 8;

/// Ground labels used by the generators: the first n letters "a", "b", ...
labels_t default_labels(int n);

/// All labelled quandles on n points, by column-wise backtracking over the
/// diagonal-fixing permutations with self-distributivity pruning.
std::vector<quandle> enumerate_quandles(int n);

/// All labelled quasi-orders on n points, ascending by relation bitmask.
/// The result is cached per n; the reference stays valid for the process.
const std::vector<topology>& enumerate_quasiorders(int n);

/// All compatible (quandle, quasi-order) pairs on n points, ordered by
/// (quandle stream position, quasi-order stream position).
std::vector<topo_quandle> enumerate_topological_quandles(int n);

/// Relabel-invariant canonical form: the minimum structure encoding over all
/// n! permutations of the ground. Two objects have equal forms iff one is a
/// relabeling of the other. Label strings do not participate.
struct canonical_form {
    std::string bytes;
    auto operator<=>(const canonical_form&) const = default;
    std::string hex() const;
};

canonical_form canonical(const quandle& q);
canonical_form canonical(const topology& t);
canonical_form canonical(const topo_quandle& x);

/// The canonical representative: the object relabeled by a minimizing
/// permutation, over labels "a", "b", ... — equal for isomorphic inputs.
quandle canonical_representative(const quandle& q);
topology canonical_representative(const topology& t);
topo_quandle canonical_representative(const topo_quandle& x);

/// Distinct canonical forms in a stream, preserving first-seen order.
template <class T>
std::vector<T> dedup_by_canonical(const std::vector<T>& xs) {
    std::vector<T> out;
    std::vector<canonical_form> seen;
    for (const auto& x : xs) {
        canonical_form f = canonical(x);
        bool fresh = true;
        for (const auto& g : seen)
            if (g == f) { fresh = false; break; }
        if (fresh) {
            seen.push_back(std::move(f));
            out.push_back(x);
        }
    }
    return out;
}

} // namespace tq
