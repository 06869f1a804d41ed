#include "topoquandle/enumeration.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace tq {

labels_t default_labels(int n) {
    labels_t out;
    out.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::string l(1, static_cast<char>('a' + i % 26));
        if (i >= 26) l += std::to_string(i / 26);
        out.push_back(std::move(l));
    }
    return out;
}

// ----------------------------------------------------------------- quandles

namespace {

// Columns of a Cayley table are the right translations; axiom (i) pins the
// diagonal, so column j ranges over the permutations fixing j.
std::vector<std::vector<int>> perms_fixing(int n, int j) {
    std::vector<int> p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        if (p[static_cast<size_t>(j)] == j) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Self-distributivity instances whose three columns (b, c, and b<|c) are all
// already assigned. Re-run after each column placement; n is tiny.
bool partial_self_distributive(const std::vector<std::vector<int>>& cols, int placed, int n) {
    for (int c = 0; c <= placed; ++c)
        for (int b = 0; b <= placed; ++b) {
            const int bc = cols[static_cast<size_t>(c)][static_cast<size_t>(b)];
            if (bc > placed) continue;
            for (int a = 0; a < n; ++a) {
                const int left = cols[static_cast<size_t>(c)][static_cast<size_t>(
                    cols[static_cast<size_t>(b)][static_cast<size_t>(a)])];
                const int right = cols[static_cast<size_t>(bc)][static_cast<size_t>(
                    cols[static_cast<size_t>(c)][static_cast<size_t>(a)])];
                if (left != right) return false;
            }
        }
    return true;
}

void extend_columns(int n, int j, std::vector<std::vector<int>>& cols,
                    const std::vector<std::vector<std::vector<int>>>& cands,
                    std::vector<quandle>& out) {
    if (j == n) {
        std::vector<std::vector<int>> table(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
        for (int i = 0; i < n; ++i)
            for (int c = 0; c < n; ++c)
                table[static_cast<size_t>(i)][static_cast<size_t>(c)] =
                    cols[static_cast<size_t>(c)][static_cast<size_t>(i)];
        out.push_back(quandle::make(default_labels(n), std::move(table)));
        return;
    }
    for (const auto& cand : cands[static_cast<size_t>(j)]) {
        cols[static_cast<size_t>(j)] = cand;
        if (partial_self_distributive(cols, j, n)) extend_columns(n, j + 1, cols, cands, out);
    }
}

} // namespace

std::vector<quandle> enumerate_quandles(int n) {
    if (n < 0) throw validation_error("negative ground size");
    if (n > max_enum_quandles) throw cap_exceeded("quandle enumeration capped at 6 points");
    if (n == 0) return {quandle::make({}, {})};
    std::vector<std::vector<std::vector<int>>> cands;
    cands.reserve(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) cands.push_back(perms_fixing(n, j));
    std::vector<std::vector<int>> cols(static_cast<size_t>(n));
    std::vector<quandle> out;
    extend_columns(n, 0, cols, cands, out);
    return out;
}

// -------------------------------------------------------------- quasi-orders

namespace {

bool transitive(const std::vector<mask_t>& rows, int n) {
    for (int i = 0; i < n; ++i) {
        mask_t reach = rows[static_cast<size_t>(i)];
        for (int k = 0; k < n; ++k)
            if (reach & bit(k))
                if (rows[static_cast<size_t>(k)] & ~reach) return false;
    }
    return true;
}

std::vector<topology> build_quasiorders(int n) {
    if (n == 0) return {topology::make(labels_t{}, std::vector<mask_t>{})};
    const labels_t labels = default_labels(n);
    const int off = n * (n - 1);
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) cells.emplace_back(i, j);
    std::vector<topology> out;
    for (uint64_t code = 0; code < (uint64_t{1} << off); ++code) {
        std::vector<mask_t> rows(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) rows[static_cast<size_t>(i)] = bit(i);
        for (int b = 0; b < off; ++b)
            if (code & (uint64_t{1} << b))
                rows[static_cast<size_t>(cells[static_cast<size_t>(b)].first)] |=
                    bit(cells[static_cast<size_t>(b)].second);
        if (transitive(rows, n)) out.push_back(topology::make(labels, std::move(rows)));
    }
    return out;
}

} // namespace

const std::vector<topology>& enumerate_quasiorders(int n) {
    if (n < 0) throw validation_error("negative ground size");
    if (n > max_enum_quasiorders) throw cap_exceeded("quasi-order enumeration capped at 5 points");
    static std::mutex guard;
    static std::map<int, std::vector<topology>> cache;
    std::scoped_lock lock(guard);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_quasiorders(n)).first;
    return it->second;
}

std::vector<topo_quandle> enumerate_topological_quandles(int n) {
    if (n < 0) throw validation_error("negative ground size");
    if (n > max_enum_topological_quandles)
        throw cap_exceeded("compatible-pair enumeration capped at 4 points");
    std::vector<topo_quandle> out;
    for (const quandle& q : enumerate_quandles(n))
        for (const topology& t : enumerate_quasiorders(n))
            if (is_compatible(q, t)) out.push_back(topo_quandle::make(q, t));
    return out;
}

// ----------------------------------------------------------- canonical forms

namespace {

// Minimum over all relabelings of `bytes_under`, which renders the structure
// with point i renamed to p[i]. The same permutation covers every component
// of a composite object, so pass one closure per object kind.
template <class F>
std::pair<std::string, std::vector<int>> minimize(int n, F&& bytes_under) {
    std::vector<int> p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::string best = bytes_under(p);
    std::vector<int> argmin = p;
    while (std::next_permutation(p.begin(), p.end())) {
        std::string cur = bytes_under(p);
        if (cur < best) {
            best = std::move(cur);
            argmin = p;
        }
    }
    return {std::move(best), std::move(argmin)};
}

std::string quandle_bytes(const quandle& q, const std::vector<int>& p) {
    const int n = q.size();
    std::string out(static_cast<size_t>(n * n), '\0');
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out[static_cast<size_t>(p[static_cast<size_t>(i)] * n + p[static_cast<size_t>(j)])] =
                static_cast<char>(p[static_cast<size_t>(q.at(i, j))]);
    return out;
}

std::string topology_bytes(const topology& t, const std::vector<int>& p) {
    const int n = t.size();
    std::string out(static_cast<size_t>(n * n), '\0');
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out[static_cast<size_t>(p[static_cast<size_t>(i)] * n + p[static_cast<size_t>(j)])] =
                t.leq(i, j) ? '\1' : '\0';
    return out;
}

void check_canonical_cap(int n) {
    if (n > max_canonical) throw cap_exceeded("canonical forms capped at 8 points");
}

} // namespace

std::string canonical_form::hex() const {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out += digits[c >> 4];
        out += digits[c & 0xf];
    }
    return out;
}

canonical_form canonical(const quandle& q) {
    check_canonical_cap(q.size());
    return {minimize(q.size(), [&](const std::vector<int>& p) { return quandle_bytes(q, p); }).first};
}

canonical_form canonical(const topology& t) {
    check_canonical_cap(t.size());
    return {minimize(t.size(), [&](const std::vector<int>& p) { return topology_bytes(t, p); }).first};
}

canonical_form canonical(const topo_quandle& x) {
    check_canonical_cap(x.size());
    return {minimize(x.size(), [&](const std::vector<int>& p) {
                return quandle_bytes(x.q(), p) + '\x1d' + topology_bytes(x.t(), p);
            }).first};
}

quandle canonical_representative(const quandle& q) {
    check_canonical_cap(q.size());
    auto [bytes, p] = minimize(q.size(), [&](const std::vector<int>& s) { return quandle_bytes(q, s); });
    return q.relabel(perm(p)).with_labels(default_labels(q.size()));
}

topology canonical_representative(const topology& t) {
    check_canonical_cap(t.size());
    auto [bytes, p] = minimize(t.size(), [&](const std::vector<int>& s) { return topology_bytes(t, s); });
    return t.relabel(perm(p)).with_labels(default_labels(t.size()));
}

topo_quandle canonical_representative(const topo_quandle& x) {
    check_canonical_cap(x.size());
    auto [bytes, p] = minimize(x.size(), [&](const std::vector<int>& s) {
        return quandle_bytes(x.q(), s) + '\x1d' + topology_bytes(x.t(), s);
    });
    return x.relabel(perm(p)).with_labels(default_labels(x.size()));
}

} // namespace tq
