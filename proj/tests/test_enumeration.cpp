#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "topoquandle/enumeration.hpp"

using namespace tq;

namespace {

// Every operation table on n points, tested directly against the axioms —
// an oracle for the backtracking generator.
std::set<std::string> brute_force_quandles(int n) {
    std::set<std::string> out;
    const long long cells = static_cast<long long>(n) * n;
    long long total = 1;
    for (long long i = 0; i < cells; ++i) total *= n;
    for (long long code = 0; code < total; ++code) {
        std::vector<std::vector<int>> table(static_cast<size_t>(n),
                                            std::vector<int>(static_cast<size_t>(n)));
        long long rest = code;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                table[static_cast<size_t>(i)][static_cast<size_t>(j)] = static_cast<int>(rest % n);
                rest /= n;
            }
        if (quandle::check(table).empty())
            out.insert(quandle::make(default_labels(n), table).encode());
    }
    return out;
}

perm random_perm(int n, std::mt19937& rng) {
    std::vector<int> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    return perm(std::move(img));
}

template <class T>
bool isomorphic_by_brute_force(const T& a, const T& b) {
    const int n = a.size();
    if (b.size() != n) return false;
    std::vector<int> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    do {
        if (a.relabel(perm(img)) == b) return true;
    } while (std::next_permutation(img.begin(), img.end()));
    return false;
}

} // namespace

TEST_SUITE("enumeration") {

TEST_CASE("default labels") {
    CHECK(default_labels(0).empty());
    CHECK(default_labels(3) == labels_t{"a", "b", "c"});
    const labels_t many = default_labels(28);
    CHECK(many[25] == "z");
    CHECK(many[26] == "a1");
    CHECK(many[27] == "b1");
}

TEST_CASE("labeled quandle counts and the brute-force oracle") {
    const std::vector<size_t> expected = {1, 1, 1, 5, 36};
    for (int n = 0; n <= 4; ++n) CHECK(enumerate_quandles(n).size() == expected[static_cast<size_t>(n)]);

    for (int n = 0; n <= 3; ++n) {
        const auto oracle = brute_force_quandles(n);
        std::set<std::string> fast;
        for (const auto& q : enumerate_quandles(n)) fast.insert(q.encode());
        CHECK(fast == oracle);
    }

    // Streams are deterministic.
    const auto a = enumerate_quandles(3);
    const auto b = enumerate_quandles(3);
    CHECK(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("labeled quasi-order counts") {
    const std::vector<size_t> expected = {1, 1, 4, 29, 355, 6942};
    for (int n = 0; n <= 5; ++n)
        CHECK(enumerate_quasiorders(n).size() == expected[static_cast<size_t>(n)]);

    // Every stream element is valid and distinct; the stream ascends by
    // relation bitmask, so it is strictly ordered.
    const auto& ts = enumerate_quasiorders(3);
    for (size_t i = 1; i < ts.size(); ++i) CHECK(ts[i - 1].rows() != ts[i].rows());
}

TEST_CASE("compatible pair counts") {
    const std::vector<size_t> expected = {1, 1, 4, 46, 1022};
    for (int n = 0; n <= 4; ++n)
        CHECK(enumerate_topological_quandles(n).size() == expected[static_cast<size_t>(n)]);

    // Cross-check against the definition at n = 3: count compatible
    // combinations directly.
    size_t direct = 0;
    for (const auto& q : enumerate_quandles(3))
        for (const auto& t : enumerate_quasiorders(3))
            if (is_compatible(q, t)) ++direct;
    CHECK(direct == 46);
}

TEST_CASE("isomorphism class counts") {
    const std::vector<size_t> expected = {1, 1, 1, 3, 7, 22, 73};
    for (int n = 0; n <= 6; ++n)
        CHECK(dedup_by_canonical(enumerate_quandles(n)).size() == expected[static_cast<size_t>(n)]);
}

TEST_CASE("the three isomorphism classes on three points") {
    const auto reps = dedup_by_canonical(enumerate_quandles(3));
    REQUIRE(reps.size() == 3);

    std::set<canonical_form> got;
    for (const auto& q : reps) got.insert(canonical(q));

    const std::set<canonical_form> expected = {
        canonical(quandle::trivial({"a", "b", "c"})),
        canonical(quandle::dihedral(3)),
        canonical(fixtures::swap3()),
    };
    CHECK(got == expected);

    // Dedup keeps the first representative of each class in stream order.
    const auto all = enumerate_quandles(3);
    std::set<canonical_form> seen;
    std::vector<quandle> firsts;
    for (const auto& q : all)
        if (seen.insert(canonical(q)).second) firsts.push_back(q);
    CHECK(firsts.size() == reps.size());
    for (size_t i = 0; i < firsts.size(); ++i) CHECK(firsts[i] == reps[i]);
}

TEST_CASE("canonical forms are exactly the isomorphism invariants") {
    SUBCASE("invariance under random relabelings") {
        std::mt19937 rng(20240811);
        for (int n = 0; n <= 4; ++n)
            for (const auto& q : enumerate_quandles(n))
                for (int trial = 0; trial < 3; ++trial)
                    CHECK(canonical(q.relabel(random_perm(n, rng))) == canonical(q));
        for (const auto& t : enumerate_quasiorders(3))
            CHECK(canonical(t.relabel(random_perm(3, rng))) == canonical(t));
        for (const auto& x : enumerate_topological_quandles(3))
            CHECK(canonical(x.relabel(random_perm(3, rng))) == canonical(x));
    }
    SUBCASE("equal form means isomorphic, for quandles") {
        const auto qs = enumerate_quandles(3);
        for (const auto& a : qs)
            for (const auto& b : qs)
                CHECK((canonical(a) == canonical(b)) == isomorphic_by_brute_force(a, b));
    }
    SUBCASE("equal form means isomorphic, for quasi-orders") {
        const auto& ts = enumerate_quasiorders(3);
        for (const auto& a : ts)
            for (const auto& b : ts)
                CHECK((canonical(a) == canonical(b)) == isomorphic_by_brute_force(a, b));
    }
    SUBCASE("equal form means simultaneously isomorphic, for pairs") {
        const auto xs = enumerate_topological_quandles(3);
        for (const auto& a : xs)
            for (const auto& b : xs)
                CHECK((canonical(a) == canonical(b)) == isomorphic_by_brute_force(a, b));
    }
    SUBCASE("labels do not participate") {
        const quandle q = fixtures::swap3();
        CHECK(canonical(q.with_labels({"x", "y", "z"})) == canonical(q));
    }
}

TEST_CASE("canonical representatives") {
    const quandle q = fixtures::swap3();
    const quandle rep = canonical_representative(q);
    CHECK(canonical(rep) == canonical(q));
    CHECK(canonical_representative(rep) == rep);
    CHECK(rep.labels() == default_labels(3));
    // This table is already minimal, so it is its own representative.
    CHECK(rep == q);
    CHECK(canonical(q).hex() == "000000020101010202");

    std::mt19937 rng(7);
    for (int trial = 0; trial < 5; ++trial)
        CHECK(canonical_representative(q.relabel(random_perm(3, rng))) == rep);

    const topology t = fixtures::valley3();
    CHECK(canonical(canonical_representative(t)) == canonical(t));
    const topo_quandle x = topo_quandle::make(q, t);
    CHECK(canonical(canonical_representative(x)) == canonical(x));
}

TEST_CASE("size caps are enforced") {
    CHECK_THROWS_AS(enumerate_quandles(7), cap_exceeded);
    CHECK_THROWS_AS(enumerate_quasiorders(6), cap_exceeded);
    CHECK_THROWS_AS(enumerate_topological_quandles(5), cap_exceeded);
    CHECK_THROWS_AS(canonical(quandle::trivial(default_labels(9))), cap_exceeded);
    CHECK_THROWS_AS(enumerate_quandles(-1), validation_error);
}

} // TEST_SUITE("enumeration")
