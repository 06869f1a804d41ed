#include "topoquandle/io.hpp"

#include <limits>
#include <sstream>

namespace tq {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::vector<std::string> nonblank_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!tokenize(line).empty()) out.push_back(line);
    }
    return out;
}

} // namespace

// ------------------------------------------------------------- matrix text

std::string print_quandle(const quandle& q) {
    std::ostringstream os;
    for (int i = 0; i < q.size(); ++i) {
        for (int j = 0; j < q.size(); ++j) {
            if (j) os << ' ';
            os << q.labels()[static_cast<size_t>(q.at(i, j))];
        }
        os << '\n';
    }
    return os.str();
}

quandle parse_quandle(const std::string& text) {
    const auto lines = nonblank_lines(text);
    const int n = static_cast<int>(lines.size());
    std::vector<std::vector<std::string>> cells;
    for (const auto& line : lines) {
        cells.push_back(tokenize(line));
        if (static_cast<int>(cells.back().size()) != n)
            throw parse_error("operation table must be square: row " +
                              std::to_string(cells.size()) + " has " +
                              std::to_string(cells.back().size()) + " of " + std::to_string(n) +
                              " entries");
    }
    // Idempotency puts the ground labels on the diagonal, in row order.
    labels_t labels;
    for (int i = 0; i < n; ++i) labels.push_back(cells[static_cast<size_t>(i)][static_cast<size_t>(i)]);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (labels[static_cast<size_t>(i)] == labels[static_cast<size_t>(j)])
                throw parse_error("diagonal repeats the label " + labels[static_cast<size_t>(i)]);
    std::vector<std::vector<int>> table(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const std::string& cell = cells[static_cast<size_t>(i)][static_cast<size_t>(j)];
            int v = -1;
            for (int k = 0; k < n; ++k)
                if (labels[static_cast<size_t>(k)] == cell) { v = k; break; }
            if (v < 0) throw parse_error("entry " + cell + " is not a ground label");
            table[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
        }
    return quandle::make(std::move(labels), std::move(table));
}

// ----------------------------------------------------------- topology text

std::string print_topology(const topology& t) {
    std::ostringstream os;
    for (int i = 0; i < t.size(); ++i) {
        if (i) os << ' ';
        os << t.labels()[static_cast<size_t>(i)];
    }
    os << '\n';
    for (auto [i, j] : sim_chain_pairs(t))
        os << t.labels()[static_cast<size_t>(i)] << " ~ " << t.labels()[static_cast<size_t>(j)] << '\n';
    for (auto [i, j] : cover_pairs(t))
        os << t.labels()[static_cast<size_t>(i)] << " < " << t.labels()[static_cast<size_t>(j)] << '\n';
    return os.str();
}

topology parse_topology(const std::string& text) {
    const auto lines = nonblank_lines(text);
    if (lines.empty()) return topology::make(labels_t{}, std::vector<mask_t>{});
    labels_t labels = tokenize(lines.front());
    const int n = static_cast<int>(labels.size());
    if (n > max_ground) throw parse_error("ground exceeds 64 points");
    const auto index_of = [&](const std::string& l) {
        for (int k = 0; k < n; ++k)
            if (labels[static_cast<size_t>(k)] == l) return k;
        throw parse_error("relation mentions " + l + ", which is not a ground label");
    };
    std::vector<mask_t> rel(static_cast<size_t>(n));
    for (size_t li = 1; li < lines.size(); ++li) {
        const auto toks = tokenize(lines[li]);
        if (toks.size() != 3 || (toks[1] != "<" && toks[1] != "~"))
            throw parse_error("expected \"x < y\" or \"x ~ y\", got: " + lines[li]);
        const int i = index_of(toks[0]);
        const int j = index_of(toks[2]);
        rel[static_cast<size_t>(i)] |= bit(j);
        if (toks[1] == "~") rel[static_cast<size_t>(j)] |= bit(i);
    }
    return topology::closure(std::move(labels), std::move(rel));
}

// -------------------------------------------------------------------- JSON

namespace {

nlohmann::ordered_json coeff_to_json(const coeff_t& c) {
    static const coeff_t lo = std::numeric_limits<long long>::min();
    static const coeff_t hi = std::numeric_limits<long long>::max();
    if (c >= lo && c <= hi) return nlohmann::ordered_json(c.convert_to<long long>());
    return nlohmann::ordered_json(c.str());
}

coeff_t coeff_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return coeff_t(j.get<long long>());
    if (j.is_string()) return coeff_t(j.get<std::string>());
    throw parse_error("coefficient must be an integer or a decimal string");
}

} // namespace

nlohmann::ordered_json to_json(const quandle& q) {
    nlohmann::ordered_json j;
    j["labels"] = q.labels();
    j["table"] = q.table();
    return j;
}

nlohmann::ordered_json to_json(const topology& t) {
    nlohmann::ordered_json j;
    j["labels"] = t.labels();
    auto rows = nlohmann::ordered_json::array();
    for (int i = 0; i < t.size(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (int k = 0; k < t.size(); ++k) row.push_back(t.leq(i, k));
        rows.push_back(std::move(row));
    }
    j["leq"] = std::move(rows);
    return j;
}

nlohmann::ordered_json to_json(const topo_quandle& x) {
    nlohmann::ordered_json j;
    j["quandle"] = to_json(x.q());
    j["topology"] = to_json(x.t());
    return j;
}

nlohmann::ordered_json to_json(const tensor_word& w) {
    nlohmann::ordered_json j;
    j["mode"] = to_string(w.mode());
    auto fs = nlohmann::ordered_json::array();
    for (int i = 0; i < w.arity(); ++i) fs.push_back(to_json(w.factor(i)));
    j["factors"] = std::move(fs);
    return j;
}

nlohmann::ordered_json to_json(const formal_sum& s) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& [w, c] : s.terms()) {
        nlohmann::ordered_json term;
        term["coeff"] = coeff_to_json(c);
        auto fs = nlohmann::ordered_json::array();
        for (int i = 0; i < w.arity(); ++i) fs.push_back(to_json(w.factor(i)));
        term["factors"] = std::move(fs);
        term["mode"] = to_string(w.mode());
        out.push_back(std::move(term));
    }
    return out;
}

quandle quandle_from_json(const nlohmann::json& j) {
    try {
        labels_t labels = j.at("labels").get<labels_t>();
        auto table = j.at("table").get<std::vector<std::vector<int>>>();
        return quandle::make(std::move(labels), std::move(table));
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad quandle object: ") + e.what());
    }
}

topology topology_from_json(const nlohmann::json& j) {
    try {
        labels_t labels = j.at("labels").get<labels_t>();
        const auto& rows = j.at("leq");
        if (!rows.is_array() || rows.size() != labels.size())
            throw parse_error("leq must be a square boolean matrix over the labels");
        if (labels.size() > static_cast<size_t>(max_ground)) throw parse_error("ground exceeds 64 points");
        std::vector<mask_t> leq(labels.size());
        for (size_t i = 0; i < labels.size(); ++i) {
            const auto& row = rows[i];
            if (!row.is_array() || row.size() != labels.size())
                throw parse_error("leq must be a square boolean matrix over the labels");
            for (size_t k = 0; k < labels.size(); ++k) {
                const auto& cell = row[k];
                const bool v = cell.is_boolean() ? cell.get<bool>() : (cell.get<long long>() != 0);
                if (v) leq[i] |= bit(static_cast<int>(k));
            }
        }
        return topology::make(std::move(labels), std::move(leq));
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad topology object: ") + e.what());
    }
}

topo_quandle topo_quandle_from_json(const nlohmann::json& j) {
    try {
        return topo_quandle::make(quandle_from_json(j.at("quandle")),
                                  topology_from_json(j.at("topology")));
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad pair object: ") + e.what());
    }
}

tensor_word tensor_word_from_json(const nlohmann::json& j) {
    try {
        const word_mode mode = word_mode_from_string(j.at("mode").get<std::string>());
        std::vector<topo_quandle> factors;
        for (const auto& f : j.at("factors")) factors.push_back(topo_quandle_from_json(f));
        return tensor_word(mode, std::move(factors));
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad tensor word: ") + e.what());
    }
}

formal_sum formal_sum_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw parse_error("a formal sum is a JSON array of terms");
    formal_sum out;
    for (const auto& term : j) {
        coeff_t c = term.contains("coeff") ? coeff_from_json(term.at("coeff")) : coeff_t(1);
        out.add(tensor_word_from_json(term), std::move(c));
    }
    return out;
}

// ------------------------------------------------------------------ pretty

std::string pretty(const topo_quandle& x) { return describe(x); }

std::string pretty(const formal_sum& s) {
    if (s.empty()) return "0\n";
    std::ostringstream os;
    for (const auto& [w, c] : s.terms()) os << c << ' ' << describe(w) << '\n';
    return os.str();
}

// ----------------------------------------------------------- format switch

parsed_object parse_object(const std::string& text, const std::string& format) {
    if (format == "matrix") return parse_quandle(text);
    if (format == "topology") return parse_topology(text);
    if (format != "json") throw parse_error("unknown format: " + format);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (j.is_array()) return formal_sum_from_json(j);
    if (j.is_object()) {
        if (j.contains("quandle") && j.contains("topology")) return topo_quandle_from_json(j);
        if (j.contains("table")) return quandle_from_json(j);
        if (j.contains("leq")) return topology_from_json(j);
        if (j.contains("mode") && j.contains("factors")) {
            formal_sum s;
            s.add(tensor_word_from_json(j), 1);
            return s;
        }
    }
    throw parse_error("JSON object is not a quandle, topology, pair, word, or sum");
}

} // namespace tq
