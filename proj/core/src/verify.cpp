#include "topoquandle/verify.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "topoquandle/enumeration.hpp"
#include "topoquandle/species.hpp"

namespace tq {

namespace {

// Evaluates check(items[i]) for every i, sharding contiguous index ranges
// across threads. Results land in per-index slots, so the merged line (and
// in particular the first recorded failure) does not depend on jobs.
template <class Item, class F>
sweep_line run_sweep(std::string name, const std::vector<Item>& items, int jobs, F&& check) {
    const size_t n = items.size();
    std::vector<std::string> results(n);
    const auto worker = [&](size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i) {
            try {
                results[i] = check(items[i]);
            } catch (const std::exception& e) {
                results[i] = std::string("unexpected error: ") + e.what();
            }
        }
    };
    const size_t shards = std::max<size_t>(1, std::min<size_t>(static_cast<size_t>(std::max(jobs, 1)), n));
    if (shards <= 1) {
        worker(0, n);
    } else {
        std::vector<std::thread> pool;
        const size_t step = (n + shards - 1) / shards;
        for (size_t s = 0; s < shards; ++s)
            pool.emplace_back(worker, s * step, std::min(n, (s + 1) * step));
        for (auto& th : pool) th.join();
    }
    sweep_line line{std::move(name), static_cast<long long>(n), 0, {}};
    for (size_t i = 0; i < n; ++i) {
        if (results[i].empty()) continue;
        if (line.failures == 0) {
            std::ostringstream os;
            os << "case " << i << ": " << results[i];
            line.first_failure = os.str();
        }
        ++line.failures;
    }
    return line;
}

std::string topology_str(const topology& t) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (auto [i, j] : sim_chain_pairs(t)) {
        if (!first) os << ", ";
        first = false;
        os << t.labels()[static_cast<size_t>(i)] << " ~ " << t.labels()[static_cast<size_t>(j)];
    }
    for (auto [i, j] : cover_pairs(t)) {
        if (!first) os << ", ";
        first = false;
        os << t.labels()[static_cast<size_t>(i)] << " < " << t.labels()[static_cast<size_t>(j)];
    }
    if (first) os << "discrete";
    os << '}';
    return os.str();
}

std::string quandle_str(const quandle& q) {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < q.size(); ++i) {
        if (i) os << " ; ";
        for (int j = 0; j < q.size(); ++j) {
            if (j) os << ' ';
            os << q.labels()[static_cast<size_t>(q.at(i, j))];
        }
    }
    os << ']';
    return os.str();
}

std::vector<topo_quandle> all_objects(int max_n) {
    std::vector<topo_quandle> out;
    for (int n = 0; n <= max_n; ++n)
        for (const topo_quandle& x : enumerate_topological_quandles(n)) out.push_back(x);
    return out;
}

std::vector<std::pair<topo_quandle, topo_quandle>> all_pairs(int max_n) {
    std::vector<std::pair<topo_quandle, topo_quandle>> out;
    for (int n1 = 0; n1 <= max_n; ++n1)
        for (int n2 = 0; n1 + n2 <= max_n; ++n2) {
            const labels_t joint = default_labels(n1 + n2);
            const labels_t tail(joint.begin() + n1, joint.end());
            for (const topo_quandle& a : enumerate_topological_quandles(n1))
                for (const topo_quandle& b : enumerate_topological_quandles(n2))
                    out.emplace_back(a, b.with_labels(tail));
        }
    return out;
}

std::string render(const check_result& r) { return r.ok ? std::string{} : r.detail; }

} // namespace

std::vector<sweep_line> run_verification(int max_n, int jobs) {
    if (max_n < 0) max_n = 0;
    if (max_n > max_enum_topological_quandles) max_n = max_enum_topological_quandles;

    const std::vector<topo_quandle> objects = all_objects(max_n);
    const std::vector<std::pair<topo_quandle, topo_quandle>> pairs = all_pairs(max_n);

    // Compatibility-transfer instances: premises first, conclusion checked.
    std::vector<std::tuple<quandle, topology, topology>> forward_cases, backward_cases;
    std::vector<std::pair<topology, topology>> sandwich_cases;
    for (int n = 0; n <= max_n; ++n) {
        for (const topology& t : enumerate_quasiorders(n)) {
            const std::vector<topology> refinements = circle_finer_set(t);
            for (const topology& tp : refinements) sandwich_cases.emplace_back(t, tp);
            for (const quandle& q : enumerate_quandles(n)) {
                if (!is_compatible(q, t)) continue;
                for (const topology& tp : refinements) {
                    if (is_compatible(q, tp)) forward_cases.emplace_back(q, t, tp);
                    if (is_compatible(q, t.quotient(tp))) backward_cases.emplace_back(q, t, tp);
                }
            }
        }
    }

    std::vector<sweep_line> lines;
    lines.push_back(run_sweep("delta-coassociative", objects, jobs, [](const topo_quandle& x) {
        return render(check_coassoc_delta(x));
    }));
    lines.push_back(run_sweep("gamma-coassociative", objects, jobs, [](const topo_quandle& x) {
        return render(check_coassoc_gamma(x));
    }));
    lines.push_back(run_sweep("delta-multiplicative", pairs, jobs,
                              [](const std::pair<topo_quandle, topo_quandle>& p) {
                                  return render(check_compat_delta_m(p.first, p.second));
                              }));
    lines.push_back(run_sweep("gamma-multiplicative", pairs, jobs,
                              [](const std::pair<topo_quandle, topo_quandle>& p) {
                                  return render(check_gamma_multiplicative(p.first, p.second));
                              }));
    lines.push_back(run_sweep("cointeraction", objects, jobs, [](const topo_quandle& x) {
        return render(check_cointeraction(x));
    }));
    lines.push_back(run_sweep("quotient-compatibility-forward", forward_cases, jobs,
                              [](const std::tuple<quandle, topology, topology>& c) -> std::string {
                                  const auto& [q, t, tp] = c;
                                  if (kebab_forward(q, t, tp)) return {};
                                  return "quotient lost compatibility: q=" + quandle_str(q) +
                                         " t=" + topology_str(t) + " t'=" + topology_str(tp);
                              }));
    lines.push_back(run_sweep("quotient-compatibility-backward", backward_cases, jobs,
                              [](const std::tuple<quandle, topology, topology>& c) -> std::string {
                                  const auto& [q, t, tp] = c;
                                  if (kebab_backward(q, t, tp)) return {};
                                  return "refinement lost compatibility: q=" + quandle_str(q) +
                                         " t=" + topology_str(t) + " t'=" + topology_str(tp);
                              }));
    lines.push_back(run_sweep(
        "quotient-sandwich-bijection", sandwich_cases, jobs,
        [](const std::pair<topology, topology>& c) -> std::string {
            const auto& [t, tpp] = c;
            const topology quot = t.quotient(tpp);
            std::vector<topology> images;
            for (const topology& mid : circle_finer_set(t)) {
                if (!is_circle_finer(tpp, mid)) continue;
                const topology image = mid.quotient(tpp);
                for (const topology& seen : images)
                    if (seen == image)
                        return "two refinements share the image " + topology_str(image) +
                               " under t=" + topology_str(t) + " t''=" + topology_str(tpp);
                if (!is_circle_finer(image, quot))
                    return "image " + topology_str(image) + " is not a quotient refinement of " +
                           topology_str(quot);
                images.push_back(image);
            }
            const size_t targets = circle_finer_set(quot).size();
            if (images.size() != targets) {
                std::ostringstream os;
                os << "refinement map misses targets: " << images.size() << " images vs "
                   << targets << " refinements of " << topology_str(quot) << " (t=" << topology_str(t)
                   << ", t''=" << topology_str(tpp) << ")";
                return os.str();
            }
            return {};
        }));
    return lines;
}

std::string format_report(const std::vector<sweep_line>& lines) {
    size_t width = 0;
    for (const auto& l : lines) width = std::max(width, l.name.size());
    std::ostringstream os;
    for (const auto& l : lines) {
        os << (l.pass() ? "PASS" : "FAIL") << "  " << l.name
           << std::string(width - l.name.size() + 2, ' ') << "cases=" << l.cases
           << "  failures=" << l.failures;
        if (!l.pass()) os << "  first: " << l.first_failure;
        os << '\n';
    }
    return os.str();
}

} // namespace tq
