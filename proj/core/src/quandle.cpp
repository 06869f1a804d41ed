#include "topoquandle/quandle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tq {

// ---------------------------------------------------------------- perm

perm::perm(std::vector<int> image) : img_(std::move(image)) {
    const int n = static_cast<int>(img_.size());
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int v : img_) {
        if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
            throw validation_error("not a permutation image");
        seen[static_cast<size_t>(v)] = true;
    }
}

perm perm::identity(int n) {
    std::vector<int> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    return perm(std::move(img));
}

perm perm::then(const perm& second) const {
    if (size() != second.size()) throw ground_mismatch("permutation sizes differ");
    std::vector<int> img(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) img[i] = second.img_[static_cast<size_t>(img_[i])];
    return perm(std::move(img));
}

perm perm::inverse() const {
    std::vector<int> img(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) img[static_cast<size_t>(img_[i])] = static_cast<int>(i);
    return perm(std::move(img));
}

perm perm::pow(long long k) const {
    const long long ord = order();
    k %= ord;
    if (k < 0) k += ord;
    perm acc = identity(size());
    perm base = *this;
    while (k > 0) {
        if (k & 1) acc = acc.then(base);
        base = base.then(base);
        k >>= 1;
    }
    return acc;
}

long long perm::order() const {
    const int n = size();
    std::vector<bool> seen(static_cast<size_t>(n), false);
    long long ord = 1;
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        long long len = 0;
        for (int j = i; !seen[static_cast<size_t>(j)]; j = img_[static_cast<size_t>(j)]) {
            seen[static_cast<size_t>(j)] = true;
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return ord;
}

// ---------------------------------------------------------------- violations

std::string quandle_violation::describe(const labels_t& labels) const {
    auto name = [&](int v) { return v >= 0 && v < static_cast<int>(labels.size()) ? labels[static_cast<size_t>(v)] : "?"; };
    std::ostringstream os;
    switch (which) {
        case kind::idempotency:
            os << "idempotency fails at " << name(i) << ": " << name(i) << "<|" << name(i) << " != " << name(i);
            break;
        case kind::right_bijectivity:
            os << "column " << name(j) << " is not a permutation";
            break;
        case kind::self_distributivity:
            os << "self-distributivity fails at (" << name(i) << ", " << name(j) << ", " << name(k) << ")";
            break;
    }
    return os.str();
}

// ---------------------------------------------------------------- group

group group::make(labels_t labels, std::vector<std::vector<int>> table) {
    const int n = static_cast<int>(labels.size());
    if (n == 0) throw validation_error("group must be nonempty");
    if (static_cast<int>(table.size()) != n)
        throw validation_error("group table has wrong number of rows");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n) throw validation_error("group table row has wrong length");
        for (int v : row)
            if (v < 0 || v >= n) throw validation_error("group table entry out of range");
    }
    // Row 0 is required to be the identity element.
    for (int i = 0; i < n; ++i)
        if (table[0][static_cast<size_t>(i)] != i || table[static_cast<size_t>(i)][0] != i)
            throw validation_error("row 0 of the group table is not an identity element");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                int ij = table[static_cast<size_t>(i)][static_cast<size_t>(j)];
                int jk = table[static_cast<size_t>(j)][static_cast<size_t>(k)];
                if (table[static_cast<size_t>(ij)][static_cast<size_t>(k)] !=
                    table[static_cast<size_t>(i)][static_cast<size_t>(jk)])
                    throw validation_error("group table is not associative");
            }
    std::vector<int> inv(static_cast<size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (table[static_cast<size_t>(i)][static_cast<size_t>(j)] == 0 &&
                table[static_cast<size_t>(j)][static_cast<size_t>(i)] == 0) {
                inv[static_cast<size_t>(i)] = j;
                break;
            }
        if (inv[static_cast<size_t>(i)] < 0) throw validation_error("group element has no inverse");
    }
    group g;
    g.labels_ = std::move(labels);
    g.table_ = std::move(table);
    g.inv_ = std::move(inv);
    return g;
}

group group::cyclic(int n) {
    labels_t labels;
    std::vector<std::vector<int>> table(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i) {
        labels.push_back(std::to_string(i));
        for (int j = 0; j < n; ++j) table[static_cast<size_t>(i)][static_cast<size_t>(j)] = (i + j) % n;
    }
    return make(std::move(labels), std::move(table));
}

// ---------------------------------------------------------------- quandle

std::vector<quandle_violation> quandle::check(const std::vector<std::vector<int>>& table) {
    using kind = quandle_violation::kind;
    std::vector<quandle_violation> out;
    const int n = static_cast<int>(table.size());
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n)
            throw validation_error("operation table is not square");
        for (int v : row)
            if (v < 0 || v >= n) throw validation_error("operation table entry out of range");
    }
    for (int i = 0; i < n; ++i)
        if (table[static_cast<size_t>(i)][static_cast<size_t>(i)] != i)
            out.push_back({kind::idempotency, i, -1, -1});
    for (int j = 0; j < n; ++j) {
        std::vector<bool> seen(static_cast<size_t>(n), false);
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            int v = table[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (seen[static_cast<size_t>(v)]) { ok = false; break; }
            seen[static_cast<size_t>(v)] = true;
        }
        if (!ok) out.push_back({kind::right_bijectivity, -1, j, -1});
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                int ij = table[static_cast<size_t>(i)][static_cast<size_t>(j)];
                int ik = table[static_cast<size_t>(i)][static_cast<size_t>(k)];
                int jk = table[static_cast<size_t>(j)][static_cast<size_t>(k)];
                if (table[static_cast<size_t>(ij)][static_cast<size_t>(k)] !=
                    table[static_cast<size_t>(ik)][static_cast<size_t>(jk)])
                    out.push_back({kind::self_distributivity, i, j, k});
            }
    return out;
}

quandle quandle::make(labels_t labels, std::vector<std::vector<int>> table) {
    const int n = static_cast<int>(labels.size());
    if (n > max_ground) throw cap_exceeded("ground set larger than supported");
    if (static_cast<int>(table.size()) != n)
        throw validation_error("operation table size does not match label count");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (labels[static_cast<size_t>(i)] == labels[static_cast<size_t>(j)])
                throw validation_error("duplicate label: " + labels[static_cast<size_t>(i)]);
    auto violations = check(table);
    if (!violations.empty())
        throw validation_error("not a quandle: " + violations.front().describe(labels));
    quandle q;
    q.labels_ = std::move(labels);
    q.table_ = std::move(table);
    return q;
}

quandle quandle::trivial(labels_t labels) {
    const int n = static_cast<int>(labels.size());
    std::vector<std::vector<int>> table(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) table[static_cast<size_t>(i)][static_cast<size_t>(j)] = i;
    return make(std::move(labels), std::move(table));
}

static labels_t letter_labels(int n) {
    labels_t out;
    for (int i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
    return out;
}

quandle quandle::dihedral(int n) {
    std::vector<std::vector<int>> table(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            table[static_cast<size_t>(i)][static_cast<size_t>(j)] = ((2 * j - i) % n + n) % n;
    return make(letter_labels(n), std::move(table));
}

quandle quandle::conjugation(const group& g) {
    const int n = g.size();
    std::vector<std::vector<int>> table(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            table[static_cast<size_t>(x)][static_cast<size_t>(y)] = g.mul(g.mul(g.inv(y), x), y);
    return make(g.labels(), std::move(table));
}

quandle quandle::core(const group& g) {
    const int n = g.size();
    std::vector<std::vector<int>> table(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            table[static_cast<size_t>(x)][static_cast<size_t>(y)] = g.mul(g.mul(y, g.inv(x)), y);
    return make(g.labels(), std::move(table));
}

int quandle::index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
        if (labels_[static_cast<size_t>(i)] == label) return i;
    throw error("unknown label: " + label);
}

perm quandle::right_translation(int b) const {
    std::vector<int> img(static_cast<size_t>(size()));
    for (int a = 0; a < size(); ++a) img[static_cast<size_t>(a)] = at(a, b);
    return perm(std::move(img));
}

std::vector<int> quandle::left_translation(int a) const {
    return table_[static_cast<size_t>(a)];
}

bool quandle::is_subquandle(mask_t y) const {
    for (int i = 0; i < size(); ++i) {
        if (!(y & bit(i))) continue;
        for (int j = 0; j < size(); ++j)
            if ((y & bit(j)) && !(y & bit(at(i, j)))) return false;
    }
    return true;
}

std::vector<mask_t> quandle::subquandles(bool include_trivial) const {
    if (size() > 20) throw cap_exceeded("subset enumeration capped at 20 points");
    const mask_t full = size() == 0 ? 0 : (bit(size()) - 1);
    std::vector<mask_t> out;
    for (mask_t y = 0;; ++y) {
        if ((include_trivial || (y != 0 && y != full)) && is_subquandle(y)) out.push_back(y);
        if (y == full) break;
    }
    return out;
}

int quandle::alpha(mask_t y, int b) const {
    const perm rb = right_translation(b);
    const long long ord = rb.order();
    perm p = rb;
    for (long long a = 1; a <= ord; ++a) {
        bool fixes = true;
        for (int i = 0; i < size() && fixes; ++i)
            if ((y & bit(i)) && p(i) != i) fixes = false;
        if (fixes) return static_cast<int>(a);
        p = p.then(rb);
    }
    // Unreachable: R_b^ord is the identity, which fixes everything.
    throw error("no power of the translation fixes the subset");
}

static std::vector<int> mask_positions(mask_t y, int n) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (y & bit(i)) out.push_back(i);
    return out;
}

quandle quandle::complement(mask_t y) const {
    if (!is_subquandle(y)) throw validation_error("complement requires a subquandle");
    const mask_t full = size() == 64 ? ~mask_t{0} : (bit(size()) - 1);
    const mask_t z = full & ~y;
    const auto pos = mask_positions(z, size());
    const int m = static_cast<int>(pos.size());
    std::vector<int> back(static_cast<size_t>(size()), -1);
    for (int i = 0; i < m; ++i) back[static_cast<size_t>(pos[static_cast<size_t>(i)])] = i;

    labels_t labels;
    for (int p : pos) labels.push_back(labels_[static_cast<size_t>(p)]);
    std::vector<std::vector<int>> table(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
    for (int jj = 0; jj < m; ++jj) {
        const int b = pos[static_cast<size_t>(jj)];
        const perm power = right_translation(b).pow(alpha(y, b));
        for (int ii = 0; ii < m; ++ii) {
            const int a = pos[static_cast<size_t>(ii)];
            const int v = power(a);
            if (back[static_cast<size_t>(v)] < 0)
                throw validation_error("complement operation left the complement set");
            table[static_cast<size_t>(ii)][static_cast<size_t>(jj)] = back[static_cast<size_t>(v)];
        }
    }
    return make(std::move(labels), std::move(table));
}

quandle quandle::restrict(mask_t y) const {
    if (!is_subquandle(y)) throw validation_error("restriction requires a closed subset");
    const auto pos = mask_positions(y, size());
    const int m = static_cast<int>(pos.size());
    std::vector<int> back(static_cast<size_t>(size()), -1);
    for (int i = 0; i < m; ++i) back[static_cast<size_t>(pos[static_cast<size_t>(i)])] = i;
    labels_t labels;
    for (int p : pos) labels.push_back(labels_[static_cast<size_t>(p)]);
    std::vector<std::vector<int>> table(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            table[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                back[static_cast<size_t>(at(pos[static_cast<size_t>(i)], pos[static_cast<size_t>(j)]))];
    return make(std::move(labels), std::move(table));
}

quandle quandle::relabel(const perm& sigma) const {
    if (sigma.size() != size()) throw ground_mismatch("relabeling size mismatch");
    const perm inv = sigma.inverse();
    std::vector<std::vector<int>> table(static_cast<size_t>(size()), std::vector<int>(static_cast<size_t>(size())));
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j)
            table[static_cast<size_t>(i)][static_cast<size_t>(j)] = sigma(at(inv(i), inv(j)));
    return make(labels_, std::move(table));
}

quandle quandle::with_labels(labels_t fresh) const {
    if (static_cast<int>(fresh.size()) != size()) throw ground_mismatch("label count mismatch");
    return make(std::move(fresh), table_);
}

std::string quandle::encode() const {
    std::string out;
    for (const auto& l : labels_) {
        out += l;
        out += '\x1f';
    }
    out += '\x1e';
    for (const auto& row : table_)
        for (int v : row) out += static_cast<char>(v);
    return out;
}

quandle product(const quandle& q1, const quandle& q2) {
    for (const auto& l : q2.labels())
        for (const auto& m : q1.labels())
            if (l == m) throw ground_overlap("ground sets share label: " + l);
    const int n1 = q1.size(), n2 = q2.size(), n = n1 + n2;
    if (n > max_ground) throw cap_exceeded("product ground too large");
    labels_t labels = q1.labels();
    labels.insert(labels.end(), q2.labels().begin(), q2.labels().end());
    std::vector<std::vector<int>> table(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int v;
            if (i < n1 && j < n1) v = q1.at(i, j);
            else if (i >= n1 && j >= n1) v = n1 + q2.at(i - n1, j - n1);
            else v = i;  // trivial cross action
            table[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
        }
    return quandle::make(std::move(labels), std::move(table));
}

} // namespace tq
