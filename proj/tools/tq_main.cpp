// Command-line front end: parse structures, run single operations, stream
// enumerations, and run the exhaustive verification sweeps.
//
// Exit codes: 0 on success / all checks passing, 1 when a requested check
// fails (invalid structure, failed identity, shape mismatch), 2 on usage or
// input errors. All output is byte-deterministic for fixed inputs and flags.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "topoquandle/enumeration.hpp"
#include "topoquandle/io.hpp"
#include "topoquandle/species.hpp"
#include "topoquandle/verify.hpp"
#include "topoquandle/version.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw tq::parse_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

tq::parsed_object load(const std::string& path, const std::string& format) {
    return tq::parse_object(read_file(path), format);
}

// Bare quandles get the discrete topology so every verb accepts them.
tq::topo_quandle as_pair(const tq::parsed_object& obj, const std::string& path) {
    if (const auto* x = std::get_if<tq::topo_quandle>(&obj)) return *x;
    if (const auto* q = std::get_if<tq::quandle>(&obj))
        return tq::topo_quandle::make(*q, tq::topology::discrete(q->labels()));
    throw tq::parse_error(path + " does not hold an operation table");
}

void print_sum(const tq::formal_sum& s, bool as_json) {
    if (as_json)
        std::cout << tq::to_json(s).dump(2) << '\n';
    else
        std::cout << tq::pretty(s);
}

int cmd_validate(const std::vector<std::string>& inputs, const std::string& format) {
    int rc = 0;
    for (const auto& path : inputs) {
        try {
            const tq::parsed_object obj = load(path, format);
            struct kind_visitor {
                std::string operator()(const tq::quandle& q) const {
                    return "quandle, n=" + std::to_string(q.size());
                }
                std::string operator()(const tq::topology& t) const {
                    return "quasi-order, n=" + std::to_string(t.size());
                }
                std::string operator()(const tq::topo_quandle& x) const {
                    return "topological quandle, n=" + std::to_string(x.size());
                }
                std::string operator()(const tq::formal_sum& s) const {
                    return "formal sum, " + std::to_string(s.size()) + " terms";
                }
            };
            std::cout << path << ": ok (" << std::visit(kind_visitor{}, obj) << ")\n";
        } catch (const tq::parse_error&) {
            throw;  // unreadable input is a usage error, not a failed check
        } catch (const tq::error& e) {
            std::cout << path << ": invalid: " << e.what() << '\n';
            rc = 1;
        }
    }
    return rc;
}

int cmd_enumerate(const std::string& kind, int max_n, bool dedup, const std::string& manifest_path) {
    std::vector<long long> counts;
    for (int n = 0; n <= max_n; ++n) {
        long long count = 0;
        const auto emit = [&](const nlohmann::ordered_json& j) {
            std::cout << j.dump() << '\n';
            ++count;
        };
        if (kind == "quandle") {
            auto qs = tq::enumerate_quandles(n);
            if (dedup) qs = tq::dedup_by_canonical(qs);
            for (const auto& q : qs) emit(tq::to_json(q));
        } else if (kind == "quasiorder") {
            auto ts = tq::enumerate_quasiorders(n);
            if (dedup) ts = tq::dedup_by_canonical(ts);
            for (const auto& t : ts) emit(tq::to_json(t));
        } else {
            auto xs = tq::enumerate_topological_quandles(n);
            if (dedup) xs = tq::dedup_by_canonical(xs);
            for (const auto& x : xs) emit(tq::to_json(x));
        }
        counts.push_back(count);
    }
    if (!manifest_path.empty()) {
        nlohmann::ordered_json m;
        m["kind"] = kind;
        m["max_n"] = max_n;
        m["dedup"] = dedup;
        m["counts"] = counts;
        m["version"] = tq::version;
        std::ofstream out(manifest_path, std::ios::binary);
        if (!out) throw tq::parse_error("cannot write " + manifest_path);
        out << m.dump(2) << '\n';
    }
    return 0;
}

int cmd_product(const std::vector<std::string>& inputs, const std::string& format, bool as_json) {
    const tq::parsed_object a = load(inputs[0], format);
    const tq::parsed_object b = load(inputs[1], format);
    const bool bare = std::holds_alternative<tq::quandle>(a) && std::holds_alternative<tq::quandle>(b);
    if (bare && !as_json) {
        std::cout << tq::print_quandle(
            tq::product(std::get<tq::quandle>(a), std::get<tq::quandle>(b)));
        return 0;
    }
    const tq::topo_quandle x = tq::product_m(as_pair(a, inputs[0]), as_pair(b, inputs[1]));
    std::cout << tq::to_json(x).dump(2) << '\n';
    return 0;
}

int cmd_quotient(const std::vector<std::string>& inputs, const std::string& format, bool as_json) {
    const auto as_topology = [&](const std::string& path) {
        const tq::parsed_object obj = load(path, format);
        if (const auto* t = std::get_if<tq::topology>(&obj)) return *t;
        if (const auto* x = std::get_if<tq::topo_quandle>(&obj)) return x->t();
        throw tq::parse_error(path + " does not hold a quasi-order");
    };
    const tq::topology t = as_topology(inputs[0]);
    const tq::topology tp = as_topology(inputs[1]);
    const tq::topology q = t.quotient(tp);
    if (as_json)
        std::cout << tq::to_json(q).dump(2) << '\n';
    else
        std::cout << tq::print_topology(q);
    return 0;
}

int cmd_xi(const std::string& input, const std::string& format, bool as_json) {
    const tq::parsed_object obj = load(input, format);
    const auto* s = std::get_if<tq::formal_sum>(&obj);
    if (!s) throw tq::parse_error(input + " does not hold a formal sum of tensor words");
    const tq::formal_sum out = tq::sum_map(
        *s, [](const tq::tensor_word& w, const tq::coeff_t& c) {
            tq::formal_sum one;
            one.add(tq::xi(w), c);
            return one;
        });
    print_sum(out, as_json);
    return 0;
}

int cmd_canon(const std::string& input, const std::string& format, bool hex, bool as_json) {
    const tq::parsed_object obj = load(input, format);
    if (const auto* q = std::get_if<tq::quandle>(&obj)) {
        if (hex)
            std::cout << tq::canonical(*q).hex() << '\n';
        else if (as_json)
            std::cout << tq::to_json(tq::canonical_representative(*q)).dump(2) << '\n';
        else
            std::cout << tq::print_quandle(tq::canonical_representative(*q));
        return 0;
    }
    if (const auto* t = std::get_if<tq::topology>(&obj)) {
        if (hex)
            std::cout << tq::canonical(*t).hex() << '\n';
        else if (as_json)
            std::cout << tq::to_json(tq::canonical_representative(*t)).dump(2) << '\n';
        else
            std::cout << tq::print_topology(tq::canonical_representative(*t));
        return 0;
    }
    if (const auto* x = std::get_if<tq::topo_quandle>(&obj)) {
        if (hex)
            std::cout << tq::canonical(*x).hex() << '\n';
        else
            std::cout << tq::to_json(tq::canonical_representative(*x)).dump(2) << '\n';
        return 0;
    }
    throw tq::parse_error(input + " does not hold a single structure");
}

int cmd_verify(int max_n, int jobs, bool as_json) {
    const std::vector<tq::sweep_line> lines = tq::run_verification(max_n, jobs);
    if (as_json) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& l : lines) {
            nlohmann::ordered_json j;
            j["name"] = l.name;
            j["cases"] = l.cases;
            j["failures"] = l.failures;
            if (!l.pass()) j["first_failure"] = l.first_failure;
            arr.push_back(std::move(j));
        }
        std::cout << arr.dump(2) << '\n';
    } else {
        std::cout << tq::format_report(lines);
    }
    for (const auto& l : lines)
        if (!l.pass()) return 1;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite topological quandles: validation, enumeration, coproducts, and identity sweeps"};
    app.set_version_flag("--version", tq::version);
    app.require_subcommand(1);

    std::vector<std::string> inputs;
    std::string format = "json";
    std::string kind = "pair";
    std::string manifest_path;
    int max_n = 3;
    int jobs = 1;
    bool include_trivial = false;
    bool reduced = false;
    bool dedup = false;
    bool as_json = false;
    bool hex = false;
    bool all = false;
    int rc = 0;

    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "input format")
            ->check(CLI::IsMember({"json", "matrix", "topology"}))
            ->capture_default_str();
    };
    const auto add_json = [&](CLI::App* sub) {
        sub->add_flag("--json", as_json, "emit JSON instead of text");
    };

    auto* validate = app.add_subcommand("validate", "check axioms of one or more inputs");
    validate->add_option("--input", inputs, "input file (repeatable)")->required();
    add_format(validate);
    validate->callback([&] { rc = cmd_validate(inputs, format); });

    auto* enumerate = app.add_subcommand("enumerate", "stream all structures up to a ground size");
    enumerate->add_option("--kind", kind, "quandle, quasiorder, or pair")
        ->check(CLI::IsMember({"quandle", "quasiorder", "pair"}))
        ->capture_default_str();
    enumerate->add_option("--max-n", max_n, "largest ground size")->capture_default_str();
    enumerate->add_flag("--dedup", dedup, "keep one representative per isomorphism class");
    enumerate->add_option("--manifest", manifest_path, "write a JSON manifest to this path");
    enumerate->callback([&] { rc = cmd_enumerate(kind, max_n, dedup, manifest_path); });

    auto* delta = app.add_subcommand("delta", "external coproduct of a (topological) quandle");
    delta->add_option("--input", inputs, "input file")->required()->expected(1);
    add_format(delta);
    add_json(delta);
    auto* inc = delta->add_flag("--include-trivial", include_trivial,
                                "include the empty and full subquandle terms");
    delta->add_flag("--reduced", reduced, "omit trivial terms (default)")->excludes(inc);
    delta->callback([&] {
        print_sum(tq::delta(as_pair(load(inputs[0], format), inputs[0]), include_trivial), as_json);
    });

    auto* gamma = app.add_subcommand("gamma", "internal coproduct of a topological quandle");
    gamma->add_option("--input", inputs, "input file")->required()->expected(1);
    add_format(gamma);
    add_json(gamma);
    gamma->callback(
        [&] { print_sum(tq::gamma(as_pair(load(inputs[0], format), inputs[0])), as_json); });

    auto* product = app.add_subcommand("product", "disjoint-union product of two inputs");
    product->add_option("--input", inputs, "input file (exactly two)")->required()->expected(2);
    add_format(product);
    add_json(product);
    product->callback([&] { rc = cmd_product(inputs, format, as_json); });

    auto* quotient = app.add_subcommand("quotient", "quotient of the first quasi-order by the second");
    quotient->add_option("--input", inputs, "input file (exactly two)")->required()->expected(2);
    add_format(quotient);
    add_json(quotient);
    quotient->callback([&] { rc = cmd_quotient(inputs, format, as_json); });

    auto* xi = app.add_subcommand("xi", "apply the cointeraction defect map to a sum of words");
    xi->add_option("--input", inputs, "input file")->required()->expected(1);
    add_format(xi);
    add_json(xi);
    xi->callback([&] { rc = cmd_xi(inputs[0], format, as_json); });

    auto* verify = app.add_subcommand("verify", "run the exhaustive identity sweeps");
    verify->add_flag("--all", all, "run every sweep (the default and only mode)");
    verify->add_option("--max-n", max_n, "largest ground size (capped at 4)")->capture_default_str();
    verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    add_json(verify);
    verify->callback([&] { rc = cmd_verify(max_n, jobs, as_json); });

    auto* canon = app.add_subcommand("canon", "canonical representative of a structure");
    canon->add_option("--input", inputs, "input file")->required()->expected(1);
    add_format(canon);
    add_json(canon);
    canon->add_flag("--hex", hex, "print the canonical form digest instead");
    canon->callback([&] { rc = cmd_canon(inputs[0], format, hex, as_json); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const tq::parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const tq::cap_exceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const tq::error& e) {
        // The requested operation rejected its input: a failed check.
        std::cerr << "check failed: " << e.what() << '\n';
        return 1;
    }
    return rc;
}
