#include "springer/formats.hpp"

#include <sstream>
#include <stdexcept>

namespace springer {

using nlohmann::json;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, sep)) out.push_back(token);
    if (!text.empty() && text.back() == sep) out.push_back("");
    return out;
}

std::string trimmed(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

int parse_int(const std::string& token, const std::string& what) {
    const std::string t = trimmed(token);
    if (t.empty()) {
        throw std::invalid_argument("empty " + what + " token");
    }
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(t, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid " + what + " token '" + t + "'");
    }
    if (used != t.size()) {
        throw std::invalid_argument("invalid " + what + " token '" + t + "'");
    }
    return value;
}

std::vector<int> int_vector_from_json(const json& j, const char* what) {
    if (!j.is_array()) {
        throw std::invalid_argument(std::string(what) + " must be a JSON array");
    }
    std::vector<int> out;
    for (const auto& e : j) {
        if (!e.is_number_integer()) {
            throw std::invalid_argument(std::string(what) + " must contain integers");
        }
        out.push_back(e.get<int>());
    }
    return out;
}

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) {
        throw std::invalid_argument(std::string("missing JSON field '") + name + "'");
    }
    return j.at(name);
}

}  // namespace

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    for (const std::string& token : split(text, ',')) {
        const std::string t = trimmed(token);
        const std::size_t caret = t.find('^');
        if (caret == std::string::npos) {
            parts.push_back(parse_int(t, "partition"));
        } else {
            const int part = parse_int(t.substr(0, caret), "partition");
            const int mult = parse_int(t.substr(caret + 1), "partition exponent");
            if (mult < 1) {
                throw std::invalid_argument("invalid partition exponent in '" + t + "'");
            }
            for (int k = 0; k < mult; ++k) parts.push_back(part);
        }
    }
    return Partition(std::move(parts));
}

std::string to_text(const Partition& lambda) {
    std::string out;
    for (std::size_t i = 0; i < lambda.parts().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(lambda.parts()[i]);
    }
    return out;
}

RowStrictTableau parse_tableau(const std::string& text) {
    std::vector<std::vector<int>> rows;
    for (const std::string& row_text : split(text, '/')) {
        std::vector<int> row;
        for (const std::string& token : split(row_text, ',')) {
            row.push_back(parse_int(token, "tableau entry"));
        }
        rows.push_back(std::move(row));
    }
    return RowStrictTableau(std::move(rows));
}

std::string to_text(const RowStrictTableau& sigma) {
    std::string out;
    for (std::size_t r = 0; r < sigma.rows().size(); ++r) {
        if (r) out += '/';
        const auto& row = sigma.rows()[r];
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += std::to_string(row[c]);
        }
    }
    return out;
}

json partition_to_json(const Partition& lambda) {
    return json{{"parts", lambda.parts()}};
}

Partition partition_from_json(const json& j) {
    return Partition(int_vector_from_json(field(j, "parts"), "parts"));
}

json tableau_to_json(const RowStrictTableau& sigma) {
    return json{{"shape", sigma.shape().parts()}, {"rows", sigma.rows()}};
}

RowStrictTableau tableau_from_json(const json& j) {
    const json& rows_json = field(j, "rows");
    if (!rows_json.is_array()) {
        throw std::invalid_argument("tableau rows must be a JSON array");
    }
    std::vector<std::vector<int>> rows;
    for (const auto& row : rows_json) {
        rows.push_back(int_vector_from_json(row, "tableau row"));
    }
    RowStrictTableau out{std::move(rows)};
    if (j.contains("shape")) {
        const auto shape = int_vector_from_json(j.at("shape"), "shape");
        if (Partition(shape) != out.shape()) {
            throw std::invalid_argument("tableau shape field disagrees with rows");
        }
    }
    return out;
}

json pairset_to_json(const PairSet& ps) {
    json arr = json::array();
    for (const auto& [i, j] : ps.pairs) arr.push_back(json::array({i, j}));
    return json{{"kind", ps.kind == PairKind::Inversions ? "inv" : "pairs"},
                {"pairs", arr}};
}

PairSet pairset_from_json(const json& j) {
    PairSet out;
    const std::string kind = field(j, "kind").get<std::string>();
    if (kind == "inv") {
        out.kind = PairKind::Inversions;
    } else if (kind == "pairs") {
        out.kind = PairKind::Pairs;
    } else {
        throw std::invalid_argument("invalid pair-set kind '" + kind + "'");
    }
    for (const auto& e : field(j, "pairs")) {
        const auto pair = int_vector_from_json(e, "pair");
        if (pair.size() != 2 || pair[0] <= pair[1]) {
            throw std::invalid_argument("pairs must be [i, j] with i > j");
        }
        out.pairs.emplace_back(pair[0], pair[1]);
    }
    return out;
}

json frame_to_json(const ToricFrame& frame) {
    return json{{"n", frame.n}, {"I", frame.I}, {"J", frame.J}, {"K", frame.K}};
}

ToricFrame frame_from_json(const json& j) {
    return ToricFrame(field(j, "n").get<int>(),
                      int_vector_from_json(field(j, "I"), "I"),
                      int_vector_from_json(field(j, "J"), "J"),
                      int_vector_from_json(field(j, "K"), "K"));
}

json ctuple_to_json(const std::vector<int>& J, const std::vector<int>& c) {
    return json{{"J", J}, {"c", c}};
}

std::pair<std::vector<int>, std::vector<int>> ctuple_from_json(const json& j) {
    auto J = int_vector_from_json(field(j, "J"), "J");
    auto c = int_vector_from_json(field(j, "c"), "c");
    if (J.size() != c.size()) {
        throw std::invalid_argument("c-tuple must align with J");
    }
    return {std::move(J), std::move(c)};
}

json exponents_to_json(const ExponentVector& b) {
    return json{{"n", b.n}, {"exps", b.exps}};
}

ExponentVector exponents_from_json(const json& j) {
    ExponentVector out;
    out.n = field(j, "n").get<int>();
    for (const auto& e : field(j, "exps")) {
        out.exps.push_back(e.get<std::int64_t>());
    }
    if (out.exps.size() != static_cast<std::size_t>(out.n - 1)) {
        throw std::invalid_argument("exponent vector must have length n-1");
    }
    return out;
}

json polynomial_to_json(const IntPolynomial& p) {
    return json{{"coeffs", p.coeffs()}};
}

IntPolynomial polynomial_from_json(const json& j) {
    std::vector<std::int64_t> coeffs;
    for (const auto& e : field(j, "coeffs")) {
        coeffs.push_back(e.get<std::int64_t>());
    }
    return IntPolynomial(std::move(coeffs));
}

json equivariant_to_json(const EquivariantPolynomial& p) {
    json arr = json::array();
    for (const auto& comp : p.by_char) arr.push_back(polynomial_to_json(comp));
    return json{{"n", p.n}, {"by_char", arr}};
}

EquivariantPolynomial equivariant_from_json(const json& j) {
    EquivariantPolynomial out;
    out.n = field(j, "n").get<int>();
    for (const auto& e : field(j, "by_char")) {
        out.by_char.push_back(polynomial_from_json(e));
    }
    if (out.by_char.size() != static_cast<std::size_t>(out.n)) {
        throw std::invalid_argument("equivariant polynomial must have n components");
    }
    return out;
}

json shifted_to_json(const ShiftedPolynomial& p) {
    return json{{"shift", p.shift}, {"poly", polynomial_to_json(p.poly)}};
}

ShiftedPolynomial shifted_from_json(const json& j) {
    return ShiftedPolynomial{field(j, "shift").get<std::int64_t>(),
                             polynomial_from_json(field(j, "poly"))};
}

json blocks_to_json(const std::vector<Block>& blocks) {
    json arr = json::array();
    for (const Block& b : blocks) {
        arr.push_back(json{{"row", b.row}, {"col", b.col}, {"first", b.first},
                           {"last", b.last}});
    }
    return arr;
}

json cells_to_json(const std::vector<ExtendedCell>& cells) {
    json arr = json::array();
    for (const ExtendedCell& cell : cells) {
        arr.push_back(json{{"tableau", tableau_to_json(cell.tableau)},
                           {"r", cell.r},
                           {"dim", cell.dim}});
    }
    return arr;
}

json decomposition_to_json(const InvariantDecomposition& d) {
    return json{{"g", exponents_to_json(d.g)},
                {"m", d.m},
                {"scalar_exponent", d.scalar_exponent},
                {"proportionality_residue", d.proportionality_residue}};
}

json report_to_json(const VerificationReport& r) {
    return json{{"check", r.check},
                {"range", r.range},
                {"pass", r.pass},
                {"counterexample", r.counterexample},
                {"ms", r.ms}};
}

VerificationReport report_from_json(const json& j) {
    VerificationReport out;
    out.check = field(j, "check").get<std::string>();
    out.range = field(j, "range").get<std::string>();
    out.pass = field(j, "pass").get<bool>();
    out.counterexample = field(j, "counterexample");
    out.ms = field(j, "ms").get<double>();
    return out;
}

std::string to_latex(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = 0; k <= p.degree(); ++k) {
        const std::int64_t c = p.coeff(k);
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (k == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c);
            out += (k == 1) ? "t" : "t^{" + std::to_string(k) + "}";
        }
    }
    return out;
}

std::string to_csv(const IntPolynomial& p) {
    std::string out = "degree,coefficient\n";
    for (int k = 0; k <= p.degree(); ++k) {
        out += std::to_string(k) + "," + std::to_string(p.coeff(k)) + "\n";
    }
    return out;
}

}  // namespace springer
