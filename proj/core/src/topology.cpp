#include "topoquandle/topology.hpp"

#include <algorithm>
#include <sstream>

#include "topoquandle/enumeration.hpp"

namespace tq {

std::vector<mask_t> partition::blocks() const {
    std::vector<mask_t> out;
    std::vector<int> reps;
    for (int i = 0; i < static_cast<int>(block_of.size()); ++i) {
        const int r = block_of[static_cast<size_t>(i)];
        auto it = std::find(reps.begin(), reps.end(), r);
        if (it == reps.end()) {
            reps.push_back(r);
            out.push_back(bit(i));
        } else {
            out[static_cast<size_t>(it - reps.begin())] |= bit(i);
        }
    }
    return out;
}

std::string topology_violation::describe(const labels_t& labels) const {
    auto name = [&](int v) { return v >= 0 && v < static_cast<int>(labels.size()) ? labels[static_cast<size_t>(v)] : "?"; };
    std::ostringstream os;
    if (which == kind::not_reflexive)
        os << "not reflexive at " << name(i);
    else
        os << "not transitive: " << name(i) << " <= " << name(j) << " <= " << name(k) << " but not "
           << name(i) << " <= " << name(k);
    return os.str();
}

std::vector<topology_violation> topology::check(const std::vector<mask_t>& leq, int n) {
    using kind = topology_violation::kind;
    std::vector<topology_violation> out;
    for (int i = 0; i < n; ++i)
        if (!((leq[static_cast<size_t>(i)] >> i) & 1)) out.push_back({kind::not_reflexive, i, -1, -1});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!((leq[static_cast<size_t>(i)] >> j) & 1)) continue;
            const mask_t missing = leq[static_cast<size_t>(j)] & ~leq[static_cast<size_t>(i)];
            if (!missing) continue;
            for (int k = 0; k < n; ++k)
                if ((missing >> k) & 1) out.push_back({kind::not_transitive, i, j, k});
        }
    return out;
}

topology topology::make(labels_t labels, std::vector<mask_t> leq) {
    const int n = static_cast<int>(labels.size());
    if (n > max_ground) throw cap_exceeded("ground set larger than supported");
    if (static_cast<int>(leq.size()) != n)
        throw validation_error("relation size does not match label count");
    const mask_t full = n == 0 ? 0 : (n == 64 ? ~mask_t{0} : bit(n) - 1);
    for (mask_t row : leq)
        if (row & ~full) throw validation_error("relation mentions points outside the ground");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (labels[static_cast<size_t>(i)] == labels[static_cast<size_t>(j)])
                throw validation_error("duplicate label: " + labels[static_cast<size_t>(i)]);
    auto violations = check(leq, n);
    if (!violations.empty())
        throw validation_error("not a quasi-order: " + violations.front().describe(labels));
    topology t;
    t.labels_ = std::move(labels);
    t.leq_ = std::move(leq);
    return t;
}

topology topology::make(labels_t labels, const std::vector<std::vector<bool>>& leq) {
    std::vector<mask_t> rows;
    for (const auto& row : leq) {
        if (row.size() != leq.size()) throw validation_error("relation matrix is not square");
        mask_t m = 0;
        for (size_t j = 0; j < row.size(); ++j)
            if (row[j]) m |= bit(static_cast<int>(j));
        rows.push_back(m);
    }
    return make(std::move(labels), std::move(rows));
}

static void close_in_place(std::vector<mask_t>& rows) {
    const int n = static_cast<int>(rows.size());
    for (int i = 0; i < n; ++i) rows[static_cast<size_t>(i)] |= bit(i);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if ((rows[static_cast<size_t>(i)] >> k) & 1) rows[static_cast<size_t>(i)] |= rows[static_cast<size_t>(k)];
}

topology topology::closure(labels_t labels, std::vector<mask_t> rel) {
    if (rel.size() != labels.size()) throw validation_error("relation size does not match label count");
    close_in_place(rel);
    return make(std::move(labels), std::move(rel));
}

topology topology::discrete(labels_t labels) {
    std::vector<mask_t> rows;
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) rows.push_back(bit(i));
    return make(std::move(labels), std::move(rows));
}

topology topology::indiscrete(labels_t labels) {
    const int n = static_cast<int>(labels.size());
    const mask_t full = n == 0 ? 0 : (n == 64 ? ~mask_t{0} : bit(n) - 1);
    std::vector<mask_t> rows(static_cast<size_t>(n), full);
    return make(std::move(labels), std::move(rows));
}

int topology::index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
        if (labels_[static_cast<size_t>(i)] == label) return i;
    throw error("unknown label: " + label);
}

bool topology::is_discrete() const {
    for (int i = 0; i < size(); ++i)
        if (leq_[static_cast<size_t>(i)] != bit(i)) return false;
    return true;
}

bool topology::finer_than(const topology& coarser) const {
    if (labels_ != coarser.labels_) throw ground_mismatch("topologies live on different grounds");
    for (int i = 0; i < size(); ++i)
        if (leq_[static_cast<size_t>(i)] & ~coarser.leq_[static_cast<size_t>(i)]) return false;
    return true;
}

topology topology::restrict(mask_t y) const {
    std::vector<int> pos;
    for (int i = 0; i < size(); ++i)
        if (y & bit(i)) pos.push_back(i);
    labels_t labels;
    std::vector<mask_t> rows;
    for (int i : pos) {
        labels.push_back(labels_[static_cast<size_t>(i)]);
        mask_t row = 0;
        for (int jj = 0; jj < static_cast<int>(pos.size()); ++jj)
            if (leq(i, pos[static_cast<size_t>(jj)])) row |= bit(jj);
        rows.push_back(row);
    }
    return make(std::move(labels), std::move(rows));
}

static partition partition_from_rows(std::vector<mask_t> rows) {
    // rows[i] = set related to i under some symmetric-closed relation; the
    // transitive closure's rows are then exactly the blocks.
    close_in_place(rows);
    partition p;
    p.block_of.resize(rows.size());
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
        int least = i;
        for (int j = 0; j < static_cast<int>(rows.size()); ++j)
            if ((rows[static_cast<size_t>(i)] >> j) & 1) { least = j; break; }
        p.block_of[static_cast<size_t>(i)] = least;
    }
    return p;
}

partition topology::components() const {
    std::vector<mask_t> sym(leq_);
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j)
            if (leq(i, j)) sym[static_cast<size_t>(j)] |= bit(i);
    return partition_from_rows(std::move(sym));
}

partition topology::equivalence_classes() const {
    std::vector<mask_t> sim(static_cast<size_t>(size()));
    for (int i = 0; i < size(); ++i) {
        mask_t row = 0;
        for (int j = 0; j < size(); ++j)
            if (leq(i, j) && leq(j, i)) row |= bit(j);
        sim[static_cast<size_t>(i)] = row;
    }
    return partition_from_rows(std::move(sim));
}

topology topology::quotient(const topology& tprime) const {
    if (labels_ != tprime.labels_) throw ground_mismatch("quotient operands live on different grounds");
    std::vector<mask_t> rows(leq_);
    for (int j = 0; j < size(); ++j)
        for (int i = 0; i < size(); ++i)
            if (tprime.leq(j, i)) rows[static_cast<size_t>(i)] |= bit(j);
    close_in_place(rows);
    return make(labels_, std::move(rows));
}

topology topology::relabel(const perm& sigma) const {
    if (sigma.size() != size()) throw ground_mismatch("relabeling size mismatch");
    const perm inv = sigma.inverse();
    std::vector<mask_t> rows(static_cast<size_t>(size()));
    for (int i = 0; i < size(); ++i) {
        mask_t row = 0;
        for (int j = 0; j < size(); ++j)
            if (leq(inv(i), inv(j))) row |= bit(j);
        rows[static_cast<size_t>(i)] = row;
    }
    return make(labels_, std::move(rows));
}

topology topology::with_labels(labels_t fresh) const {
    if (static_cast<int>(fresh.size()) != size()) throw ground_mismatch("label count mismatch");
    return make(std::move(fresh), leq_);
}

std::string topology::encode() const {
    std::string out;
    for (const auto& l : labels_) {
        out += l;
        out += '\x1f';
    }
    out += '\x1e';
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j) out += leq(i, j) ? '\1' : '\0';
    return out;
}

topology product(const topology& t1, const topology& t2) {
    for (const auto& l : t2.labels())
        for (const auto& m : t1.labels())
            if (l == m) throw ground_overlap("ground sets share label: " + l);
    const int n1 = t1.size(), n = n1 + t2.size();
    if (n > max_ground) throw cap_exceeded("product ground too large");
    labels_t labels = t1.labels();
    labels.insert(labels.end(), t2.labels().begin(), t2.labels().end());
    std::vector<mask_t> rows(static_cast<size_t>(n));
    for (int i = 0; i < n1; ++i) rows[static_cast<size_t>(i)] = t1.rows()[static_cast<size_t>(i)];
    for (int i = n1; i < n; ++i) rows[static_cast<size_t>(i)] = t2.rows()[static_cast<size_t>(i - n1)] << n1;
    return topology::make(std::move(labels), std::move(rows));
}

bool is_circle_finer(const topology& tprime, const topology& t) {
    if (tprime.labels() != t.labels()) throw ground_mismatch("topologies live on different grounds");
    if (!tprime.finer_than(t)) return false;
    // Restriction agreement on every tprime-connected component (equivalent
    // to agreement on every tprime-connected subset, since those sit inside
    // components and restriction equality is inherited by subsets).
    const partition comps = tprime.components();
    for (mask_t c : comps.blocks()) {
        for (int i = 0; i < t.size(); ++i) {
            if (!(c & bit(i))) continue;
            if ((tprime.rows()[static_cast<size_t>(i)] & c) != (t.rows()[static_cast<size_t>(i)] & c))
                return false;
        }
    }
    // Equivalence classes of the quotient must be the tprime-components.
    return t.quotient(tprime).equivalence_classes() == comps;
}

std::vector<topology> circle_finer_set(const topology& t) {
    std::vector<topology> out;
    for (const topology& cand : enumerate_quasiorders(t.size())) {
        const topology aligned = cand.with_labels(t.labels());
        if (is_circle_finer(aligned, t)) out.push_back(aligned);
    }
    return out;
}

std::vector<std::pair<int, int>> sim_chain_pairs(const topology& t) {
    std::vector<std::pair<int, int>> out;
    for (mask_t block : t.equivalence_classes().blocks()) {
        int prev = -1;
        for (int i = 0; i < t.size(); ++i) {
            if (!(block & bit(i))) continue;
            if (prev >= 0) out.emplace_back(prev, i);
            prev = i;
        }
    }
    return out;
}

std::vector<std::pair<int, int>> cover_pairs(const topology& t) {
    const auto blocks = t.equivalence_classes().blocks();
    std::vector<int> reps;
    for (mask_t b : blocks)
        for (int i = 0; i < t.size(); ++i)
            if (b & bit(i)) { reps.push_back(i); break; }
    auto strictly_below = [&](int r1, int r2) { return t.leq(r1, r2) && !t.leq(r2, r1); };
    std::vector<std::pair<int, int>> out;
    for (int r1 : reps)
        for (int r2 : reps) {
            if (!strictly_below(r1, r2)) continue;
            bool covered = true;
            for (int r3 : reps)
                if (strictly_below(r1, r3) && strictly_below(r3, r2)) { covered = false; break; }
            if (covered) out.emplace_back(r1, r2);
        }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace tq
