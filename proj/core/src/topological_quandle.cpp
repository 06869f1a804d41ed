#include "topoquandle/topological_quandle.hpp"

#include <sstream>

namespace tq {

std::string compat_witness::describe(const labels_t& labels) const {
    auto name = [&](int v) { return labels[static_cast<size_t>(v)]; };
    std::ostringstream os;
    os << name(x) << " <= " << name(xp) << " and " << name(y) << " <= " << name(yp)
       << " but not " << name(x) << "<|" << name(y) << " <= " << name(xp) << "<|" << name(yp);
    return os.str();
}

std::optional<compat_witness> compat_violation(const quandle& q, const topology& t) {
    if (q.labels() != t.labels()) throw ground_mismatch("quandle and topology live on different grounds");
    const int n = q.size();
    for (int x = 0; x < n; ++x)
        for (int xp = 0; xp < n; ++xp) {
            if (!t.leq(x, xp)) continue;
            for (int y = 0; y < n; ++y)
                for (int yp = 0; yp < n; ++yp) {
                    if (!t.leq(y, yp)) continue;
                    if (!t.leq(q.at(x, y), q.at(xp, yp))) return compat_witness{x, xp, y, yp};
                }
        }
    return std::nullopt;
}

bool is_compatible(const quandle& q, const topology& t) {
    return !compat_violation(q, t).has_value();
}

bool is_compatible_via_translations(const quandle& q, const topology& t) {
    if (q.labels() != t.labels()) throw ground_mismatch("quandle and topology live on different grounds");
    const int n = q.size();
    for (int c = 0; c < n; ++c) {
        const perm r = q.right_translation(c);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (t.leq(i, j) != t.leq(r(i), r(j))) return false;  // order isomorphism
    }
    for (int a = 0; a < n; ++a)
        for (int y = 0; y < n; ++y)
            for (int yp = 0; yp < n; ++yp)
                if (t.leq(y, yp) && !t.leq(q.at(a, y), q.at(a, yp))) return false;
    return true;
}

topo_quandle topo_quandle::make(quandle q, topology t) {
    if (auto w = compat_violation(q, t))
        throw validation_error("operation and order are not compatible: " + w->describe(q.labels()));
    return topo_quandle(std::move(q), std::move(t));
}

topo_quandle topo_quandle::restrict_to_subquandle(mask_t y) const {
    return make(q_.restrict(y), t_.restrict(y));
}

topo_quandle topo_quandle::relabel(const perm& sigma) const {
    return make(q_.relabel(sigma), t_.relabel(sigma));
}

topo_quandle topo_quandle::with_labels(labels_t fresh) const {
    quandle q = q_.with_labels(fresh);
    return make(std::move(q), t_.with_labels(std::move(fresh)));
}

std::string topo_quandle::encode() const {
    return q_.encode() + '\x1d' + t_.encode();
}

bool kebab_forward(const quandle& q, const topology& t, const topology& tp) {
    if (!is_circle_finer(tp, t)) throw validation_error("premise failed: refinement is not circle-finer");
    return is_compatible(q, t.quotient(tp));
}

bool kebab_backward(const quandle& q, const topology& t, const topology& tp) {
    if (!is_circle_finer(tp, t)) throw validation_error("premise failed: refinement is not circle-finer");
    return is_compatible(q, tp);
}

topo_quandle product(const topo_quandle& a, const topo_quandle& b) {
    return topo_quandle::make(product(a.q(), b.q()), product(a.t(), b.t()));
}

} // namespace tq
