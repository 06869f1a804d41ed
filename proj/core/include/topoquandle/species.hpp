#pragma once

// Tensor words and integer formal sums over topological quandles, with the
// structure maps of the two coproducts:
//
//   delta      — external coproduct: one term per subquandle Y, the right
//                factor carrying the complement operation ◁^{X,Y},
//   gamma      — internal coproduct: one term per operation-compatible
//                refinement T' ⊙≺ T, the right factor carrying T/T',
//   product_m  — disjoint-union product on basis elements,
//   xi         — replaces the first factor's operation by the product of the
//                restriction to Y and the complement operation on X∖Y,
//   m13        — merges factors 1 and 3 of a 4-word into a mixed 3-word.
//
// Words compare syntactically: each factor is normalized to sorted label
// order at construction so that sums built along different routes (ambient
// order vs. concatenation order) agree on equal structures. Coefficients are
// arbitrary-precision integers.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "topoquandle/topological_quandle.hpp"

namespace tq {

using coeff_t = boost::multiprecision::cpp_int;

enum class word_mode {
    external,  // factor grounds pairwise disjoint; their union is the ambient set
    internal,  // all factors share one ground
    mixed,     // factor 0 on the ambient set; factors 1..k partition it
    paired,    // arity 4: factors 0,1 share one ground, 2,3 its complement
};

std::string to_string(word_mode m);
word_mode word_mode_from_string(const std::string& s);

class tensor_word {
public:
    /// Normalizes every factor to sorted label order and checks the mode's
    /// shape constraint; throws shape_error on mismatch.
    tensor_word(word_mode mode, std::vector<topo_quandle> factors);

    word_mode mode() const { return mode_; }
    int arity() const { return static_cast<int>(factors_.size()); }
    const std::vector<topo_quandle>& factors() const { return factors_; }
    const topo_quandle& factor(int i) const { return factors_[static_cast<size_t>(i)]; }

    /// Total order: lexicographic on (mode, arity, factor encodings).
    const std::string& key() const { return key_; }
    bool operator==(const tensor_word& o) const { return key_ == o.key_; }
    bool operator<(const tensor_word& o) const { return key_ < o.key_; }

private:
    word_mode mode_;
    std::vector<topo_quandle> factors_;
    std::string key_;
};

class formal_sum {
public:
    formal_sum() = default;

    void add(tensor_word w, coeff_t c);
    formal_sum& operator+=(const formal_sum& o);
    formal_sum& operator-=(const formal_sum& o);
    formal_sum operator+(const formal_sum& o) const;
    formal_sum operator-(const formal_sum& o) const;

    bool operator==(const formal_sum&) const = default;
    bool empty() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    const std::map<tensor_word, coeff_t>& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

private:
    std::map<tensor_word, coeff_t> terms_;  // canonical order, zeros erased
};

/// Applies a basis map to every term and collects the images linearly.
formal_sum sum_map(const formal_sum& s,
                   const std::function<formal_sum(const tensor_word&, const coeff_t&)>& f);

/// External coproduct. One term (Y, T|Y, ◁) ⊗ (X∖Y, T|X∖Y, ◁^{X,Y}) per
/// subquandle Y; the empty and full subsets participate iff include_trivial.
/// Both factors are re-validated for compatibility.
formal_sum delta(const topo_quandle& x, bool include_trivial);

/// Internal coproduct. One term (X, T', ◁) ⊗ (X, T/T', ◁) per
/// operation-compatible refinement T' ⊙≺ T; right factors re-validated.
formal_sum gamma(const topo_quandle& x);

/// Basis product: disjoint union with trivial cross action (same object as
/// tq::product; exported under the algebra's name).
topo_quandle product_m(const topo_quandle& a, const topo_quandle& b);

/// The defect map on mixed 3-words (X) ⊗ (Y) ⊗ (X∖Y): replaces the first
/// factor's operation by product(◁|Y, ◁^{X,Y}) computed in the first factor's
/// own quandle; topologies are untouched. Y must be a subquandle of the first
/// factor's quandle; throws shape_error otherwise.
tensor_word xi(const tensor_word& w);

/// Merges a 4-word (Y,·) ⊗ (Y,·) ⊗ (X∖Y,·) ⊗ (X∖Y,·) into the mixed 3-word
/// (product of factors 1 and 3) ⊗ factor 2 ⊗ factor 4.
tensor_word m13(const tensor_word& w);

/// Outcome of one identity check: whether both sides agreed, and if not a
/// readable description of the first differing term.
struct check_result {
    bool ok = true;
    std::string detail;
};

/// (delta ⊗ id)∘delta = (id ⊗ delta)∘delta, trivial terms included.
check_result check_coassoc_delta(const topo_quandle& x);
/// (gamma ⊗ id)∘gamma = (id ⊗ gamma)∘gamma.
check_result check_coassoc_gamma(const topo_quandle& x);
/// delta∘m = m^{23}∘(delta ⊗ delta) on a pair of disjoint-ground factors.
check_result check_compat_delta_m(const topo_quandle& a, const topo_quandle& b);
/// gamma∘m = (m ⊗ m)∘τ₂₃∘(gamma ⊗ gamma).
check_result check_gamma_multiplicative(const topo_quandle& a, const topo_quandle& b);
/// xi∘(id ⊗ delta)∘gamma = m^{1,3}∘(gamma ⊗ gamma)∘delta, trivial terms included.
check_result check_cointeraction(const topo_quandle& x);

/// The two composition legs of the cointeraction square, exposed for
/// diagnostics and the CLI.
formal_sum cointeraction_lhs(const topo_quandle& x);
formal_sum cointeraction_rhs(const topo_quandle& x);

/// One-line renderings used in diagnostics and by the pretty-printer:
/// "[rows ; ...]" tables with "{x<y, x~y}" order suffixes when non-discrete.
std::string describe(const topo_quandle& x);
std::string describe(const tensor_word& w);

} // namespace tq
