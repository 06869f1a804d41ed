#include "topoquandle/species.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tq {

std::string to_string(word_mode m) {
    switch (m) {
        case word_mode::external: return "external";
        case word_mode::internal: return "internal";
        case word_mode::mixed: return "mixed";
        case word_mode::paired: return "paired";
    }
    return "?";
}

word_mode word_mode_from_string(const std::string& s) {
    if (s == "external") return word_mode::external;
    if (s == "internal") return word_mode::internal;
    if (s == "mixed") return word_mode::mixed;
    if (s == "paired") return word_mode::paired;
    throw parse_error("unknown word mode: " + s);
}

// Re-presents a factor over its own labels sorted ascending, so words built
// along different construction routes compare equal on equal structures.
static topo_quandle sort_presentation(const topo_quandle& x) {
    const labels_t& ls = x.labels();
    const int n = x.size();
    std::vector<int> idx(static_cast<size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return ls[static_cast<size_t>(a)] < ls[static_cast<size_t>(b)]; });
    if (std::is_sorted(ls.begin(), ls.end())) return x;
    std::vector<int> sig(static_cast<size_t>(n));
    labels_t sorted;
    for (int p = 0; p < n; ++p) {
        sig[static_cast<size_t>(idx[static_cast<size_t>(p)])] = p;
        sorted.push_back(ls[static_cast<size_t>(idx[static_cast<size_t>(p)])]);
    }
    return x.relabel(perm(sig)).with_labels(std::move(sorted));
}

static bool disjoint(const labels_t& a, const labels_t& b) {
    for (const auto& x : a)
        for (const auto& y : b)
            if (x == y) return false;
    return true;
}

static labels_t sorted_union(const std::vector<const labels_t*>& parts) {
    labels_t out;
    for (const labels_t* p : parts) out.insert(out.end(), p->begin(), p->end());
    std::sort(out.begin(), out.end());
    return out;
}

tensor_word::tensor_word(word_mode mode, std::vector<topo_quandle> factors) : mode_(mode) {
    if (factors.empty() || factors.size() > 4)
        throw shape_error("tensor words carry one to four factors");
    factors_.reserve(factors.size());
    for (const auto& f : factors) factors_.push_back(sort_presentation(f));

    const auto labels_of = [&](size_t i) -> const labels_t& { return factors_[i].labels(); };
    switch (mode_) {
        case word_mode::external:
            for (size_t i = 0; i < factors_.size(); ++i)
                for (size_t j = i + 1; j < factors_.size(); ++j)
                    if (!disjoint(labels_of(i), labels_of(j)))
                        throw shape_error("external factors must have disjoint grounds");
            break;
        case word_mode::internal:
            for (size_t i = 1; i < factors_.size(); ++i)
                if (labels_of(i) != labels_of(0))
                    throw shape_error("internal factors must share one ground");
            break;
        case word_mode::mixed: {
            if (factors_.size() < 2) throw shape_error("mixed words need at least two factors");
            std::vector<const labels_t*> rest;
            for (size_t i = 1; i < factors_.size(); ++i) {
                for (size_t j = i + 1; j < factors_.size(); ++j)
                    if (!disjoint(labels_of(i), labels_of(j)))
                        throw shape_error("mixed tail factors must have disjoint grounds");
                rest.push_back(&labels_of(i));
            }
            if (labels_of(0) != sorted_union(rest))
                throw shape_error("mixed head ground must be the union of the tail grounds");
            break;
        }
        case word_mode::paired:
            if (factors_.size() != 4) throw shape_error("paired words carry exactly four factors");
            if (labels_of(0) != labels_of(1) || labels_of(2) != labels_of(3))
                throw shape_error("paired words need matching grounds in each half");
            if (!disjoint(labels_of(0), labels_of(2)))
                throw shape_error("paired halves must have disjoint grounds");
            break;
    }

    key_ += static_cast<char>(mode_);
    key_ += static_cast<char>(factors_.size());
    for (const auto& f : factors_) {
        key_ += f.encode();
        key_ += '\x1c';
    }
}

void formal_sum::add(tensor_word w, coeff_t c) {
    if (c == 0) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(std::move(w), std::move(c));
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

formal_sum& formal_sum::operator+=(const formal_sum& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

formal_sum& formal_sum::operator-=(const formal_sum& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

formal_sum formal_sum::operator+(const formal_sum& o) const {
    formal_sum out = *this;
    out += o;
    return out;
}

formal_sum formal_sum::operator-(const formal_sum& o) const {
    formal_sum out = *this;
    out -= o;
    return out;
}

formal_sum sum_map(const formal_sum& s,
                   const std::function<formal_sum(const tensor_word&, const coeff_t&)>& f) {
    formal_sum out;
    for (const auto& [w, c] : s.terms()) out += f(w, c);
    return out;
}

// ---------------------------------------------------------------- coproducts

formal_sum delta(const topo_quandle& x, bool include_trivial) {
    const mask_t full = x.size() >= 64 ? ~mask_t{0} : (x.size() == 0 ? 0 : (bit(x.size()) - 1));
    formal_sum out;
    for (mask_t y : x.q().subquandles(include_trivial)) {
        const topo_quandle left = x.restrict_to_subquandle(y);
        const topo_quandle right = topo_quandle::make(x.q().complement(y), x.t().restrict(full & ~y));
        out.add(tensor_word(word_mode::external, {left, right}), 1);
    }
    return out;
}

formal_sum gamma(const topo_quandle& x) {
    formal_sum out;
    for (const topology& tp : circle_finer_set(x.t())) {
        if (!is_compatible(x.q(), tp)) continue;
        const topo_quandle left = topo_quandle::make(x.q(), tp);
        const topo_quandle right = topo_quandle::make(x.q(), x.t().quotient(tp));
        out.add(tensor_word(word_mode::internal, {left, right}), 1);
    }
    return out;
}

topo_quandle product_m(const topo_quandle& a, const topo_quandle& b) {
    return product(a, b);
}

// ---------------------------------------------------------------- xi and m13

tensor_word xi(const tensor_word& w) {
    if (w.mode() != word_mode::mixed || w.arity() != 3)
        throw shape_error("xi expects a mixed word (X) (x) (Y) (x) (X\\Y)");
    const topo_quandle& head = w.factor(0);
    const quandle& q = head.q();
    mask_t y = 0;
    for (const auto& l : w.factor(1).labels()) y |= bit(q.index_of(l));
    if (!q.is_subquandle(y))
        throw shape_error("xi: the second factor's ground is not a subquandle of the first factor");
    const quandle replaced = product(q.restrict(y), q.complement(y));
    // The replacement comes back in block order (Y first, then the rest);
    // re-present it over the head's label order so it pairs with the
    // untouched topology.
    const labels_t& head_order = head.labels();
    const labels_t& pl = replaced.labels();
    std::vector<int> sig(pl.size());
    for (size_t i = 0; i < pl.size(); ++i)
        for (size_t p = 0; p < head_order.size(); ++p)
            if (pl[i] == head_order[p]) { sig[i] = static_cast<int>(p); break; }
    const quandle aligned = replaced.relabel(perm(sig)).with_labels(head_order);
    const topo_quandle new_head = topo_quandle::make(aligned, head.t());
    return tensor_word(word_mode::mixed, {new_head, w.factor(1), w.factor(2)});
}

tensor_word m13(const tensor_word& w) {
    if (w.mode() != word_mode::paired)
        throw shape_error("m13 expects a paired four-factor word");
    const topo_quandle merged = product(w.factor(0), w.factor(2));
    return tensor_word(word_mode::mixed, {merged, w.factor(1), w.factor(3)});
}

// ---------------------------------------------------------------- rendering

std::string describe(const topo_quandle& x) {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < x.size(); ++i) {
        if (i) os << " ; ";
        for (int j = 0; j < x.size(); ++j) {
            if (j) os << ' ';
            os << x.labels()[static_cast<size_t>(x.q().at(i, j))];
        }
    }
    os << ']';
    if (!x.t().is_discrete()) {
        os << '{';
        bool first = true;
        for (auto [i, j] : sim_chain_pairs(x.t())) {
            if (!first) os << ", ";
            first = false;
            os << x.labels()[static_cast<size_t>(i)] << " ~ " << x.labels()[static_cast<size_t>(j)];
        }
        for (auto [i, j] : cover_pairs(x.t())) {
            if (!first) os << ", ";
            first = false;
            os << x.labels()[static_cast<size_t>(i)] << " < " << x.labels()[static_cast<size_t>(j)];
        }
        os << '}';
    }
    return os.str();
}

std::string describe(const tensor_word& w) {
    std::ostringstream os;
    for (int i = 0; i < w.arity(); ++i) {
        if (i) os << " (x) ";
        os << describe(w.factor(i));
    }
    return os.str();
}

// ---------------------------------------------------------------- checks

static std::string diff_detail(const formal_sum& lhs, const formal_sum& rhs) {
    formal_sum d = lhs - rhs;
    if (d.empty()) return {};
    const auto& [w, c] = *d.begin();
    std::ostringstream os;
    os << "sides differ at " << describe(w) << " (left-minus-right coefficient " << c << "; "
       << lhs.size() << " vs " << rhs.size() << " terms)";
    return os.str();
}

static check_result compare(const formal_sum& lhs, const formal_sum& rhs) {
    if (lhs == rhs) return {true, {}};
    return {false, diff_detail(lhs, rhs)};
}

check_result check_coassoc_delta(const topo_quandle& x) {
    try {
        formal_sum lhs, rhs;
        const formal_sum once = delta(x, true);
        for (const auto& [w, c] : once.terms()) {
            const formal_sum left = delta(w.factor(0), true);
            for (const auto& [u, d] : left.terms())
                lhs.add(tensor_word(word_mode::external, {u.factor(0), u.factor(1), w.factor(1)}), c * d);
            const formal_sum right = delta(w.factor(1), true);
            for (const auto& [u, d] : right.terms())
                rhs.add(tensor_word(word_mode::external, {w.factor(0), u.factor(0), u.factor(1)}), c * d);
        }
        return compare(lhs, rhs);
    } catch (const error& e) {
        return {false, std::string("construction failed: ") + e.what()};
    }
}

check_result check_coassoc_gamma(const topo_quandle& x) {
    try {
        formal_sum lhs, rhs;
        const formal_sum once = gamma(x);
        for (const auto& [w, c] : once.terms()) {
            const formal_sum left = gamma(w.factor(0));
            for (const auto& [u, d] : left.terms())
                lhs.add(tensor_word(word_mode::internal, {u.factor(0), u.factor(1), w.factor(1)}), c * d);
            const formal_sum right = gamma(w.factor(1));
            for (const auto& [u, d] : right.terms())
                rhs.add(tensor_word(word_mode::internal, {w.factor(0), u.factor(0), u.factor(1)}), c * d);
        }
        return compare(lhs, rhs);
    } catch (const error& e) {
        return {false, std::string("construction failed: ") + e.what()};
    }
}

check_result check_compat_delta_m(const topo_quandle& a, const topo_quandle& b) {
    try {
        const formal_sum lhs = delta(product_m(a, b), true);
        const formal_sum da = delta(a, true);
        const formal_sum db = delta(b, true);
        formal_sum rhs;
        for (const auto& [wa, ca] : da.terms())
            for (const auto& [wb, cb] : db.terms())
                rhs.add(tensor_word(word_mode::external,
                                    {product_m(wa.factor(0), wb.factor(0)),
                                     product_m(wa.factor(1), wb.factor(1))}),
                        ca * cb);
        return compare(lhs, rhs);
    } catch (const error& e) {
        return {false, std::string("construction failed: ") + e.what()};
    }
}

check_result check_gamma_multiplicative(const topo_quandle& a, const topo_quandle& b) {
    try {
        const formal_sum lhs = gamma(product_m(a, b));
        const formal_sum ga = gamma(a);
        const formal_sum gb = gamma(b);
        formal_sum rhs;
        for (const auto& [wa, ca] : ga.terms())
            for (const auto& [wb, cb] : gb.terms())
                rhs.add(tensor_word(word_mode::internal,
                                    {product_m(wa.factor(0), wb.factor(0)),
                                     product_m(wa.factor(1), wb.factor(1))}),
                        ca * cb);
        return compare(lhs, rhs);
    } catch (const error& e) {
        return {false, std::string("construction failed: ") + e.what()};
    }
}

formal_sum cointeraction_lhs(const topo_quandle& x) {
    formal_sum out;
    const formal_sum internal = gamma(x);
    for (const auto& [w, c] : internal.terms()) {
        const formal_sum split = delta(w.factor(1), true);
        for (const auto& [u, d] : split.terms())
            out.add(xi(tensor_word(word_mode::mixed, {w.factor(0), u.factor(0), u.factor(1)})), c * d);
    }
    return out;
}

formal_sum cointeraction_rhs(const topo_quandle& x) {
    formal_sum out;
    const formal_sum split = delta(x, true);
    for (const auto& [w, c] : split.terms()) {
        const formal_sum ga = gamma(w.factor(0));
        const formal_sum gb = gamma(w.factor(1));
        for (const auto& [ua, da] : ga.terms())
            for (const auto& [ub, db] : gb.terms())
                out.add(m13(tensor_word(word_mode::paired,
                                        {ua.factor(0), ua.factor(1), ub.factor(0), ub.factor(1)})),
                        c * da * db);
    }
    return out;
}

check_result check_cointeraction(const topo_quandle& x) {
    try {
        return compare(cointeraction_lhs(x), cointeraction_rhs(x));
    } catch (const error& e) {
        return {false, std::string("construction failed: ") + e.what()};
    }
}

} // namespace tq
