#include "monores/io.hpp"

#include "monores/errors.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace monores {

namespace {

bool is_identifier_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool is_identifier_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

class ExpressionParser {
public:
    ExpressionParser(std::string_view text, const std::vector<std::string>& variables, std::size_t line,
                     std::size_t column)
        : text_(text), variables_(variables), line_(line), column_(column) {}

    Polynomial parse() {
        skip_space();
        if (at_end()) {
            fail("empty expression");
        }
        Polynomial p = expression();
        skip_space();
        if (!at_end()) {
            fail(std::string("unexpected '") + text_[pos_] + "'");
        }
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw parse_error(message, line_, column_ + pos_); }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
            ++pos_;
        }
    }

    Polynomial expression() {
        skip_space();
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = peek() == '-';
            ++pos_;
        }
        Polynomial p = term();
        if (negate) {
            p = -p;
        }
        for (;;) {
            skip_space();
            const char op = peek();
            if (op != '+' && op != '-') {
                return p;
            }
            ++pos_;
            const Polynomial t = term();
            if (op == '+') {
                p += t;
            } else {
                p -= t;
            }
        }
    }

    Polynomial term() {
        Polynomial p = factor();
        for (;;) {
            skip_space();
            if (peek() != '*') {
                return p;
            }
            ++pos_;
            p *= factor();
        }
    }

    std::string digits() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected a number");
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    Polynomial factor() {
        skip_space();
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            const std::string num = digits();
            std::string den = "1";
            skip_space();
            if (peek() == '/') {
                ++pos_;
                skip_space();
                den = digits();
                if (std::all_of(den.begin(), den.end(), [](char d) { return d == '0'; })) {
                    fail("zero denominator");
                }
            }
            return Polynomial::constant(Rational::from_strings(num, den), variables_.size());
        }
        if (c == '(') {
            ++pos_;
            Polynomial inner = expression();
            skip_space();
            if (peek() != ')') {
                fail("expected ')'");
            }
            ++pos_;
            return power(std::move(inner));
        }
        if (is_identifier_start(c)) {
            const std::size_t start = pos_;
            while (!at_end() && is_identifier_char(text_[pos_])) {
                ++pos_;
            }
            const std::string name(text_.substr(start, pos_ - start));
            const auto it = std::find(variables_.begin(), variables_.end(), name);
            if (it == variables_.end()) {
                pos_ = start;
                fail("undeclared variable " + name);
            }
            Multidegree m(variables_.size());
            m[static_cast<std::size_t>(it - variables_.begin())] = 1;
            return power(Polynomial::monomial(m));
        }
        if (at_end()) {
            fail("unexpected end of expression");
        }
        fail(std::string("unexpected '") + c + "'");
    }

    Polynomial power(Polynomial base) {
        skip_space();
        if (peek() != '^') {
            return base;
        }
        ++pos_;
        skip_space();
        const std::string e = digits();
        if (e.size() > 4) {
            fail("exponent " + e + " is too large");
        }
        Polynomial result = Polynomial::constant(1, variables_.size());
        for (int k = std::stoi(e); k > 0; --k) {
            result *= base;
        }
        return result;
    }

    std::string_view text_;
    const std::vector<std::string>& variables_;
    std::size_t line_;
    std::size_t column_;
    std::size_t pos_ = 0;
};

struct Line {
    std::size_t number;
    std::string key;
    std::string_view value;
    std::size_t value_column;
};

// Splits "key: value" lines, dropping comments and blank lines.
std::vector<Line> key_value_lines(std::string_view text, std::vector<std::string>& storage) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t start = 0;
    storage.clear();
    std::vector<std::pair<std::size_t, std::string>> raw;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find('\n', start), text.size());
        ++number;
        std::string line(text.substr(start, end - start));
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        raw.emplace_back(number, std::move(line));
        start = end + 1;
    }
    storage.reserve(raw.size());
    for (auto& [n, line] : raw) {
        storage.push_back(std::move(line));
        const std::string& stored = storage.back();
        const auto first = stored.find_first_not_of(" \t");
        if (first == std::string::npos) {
            continue;
        }
        const auto colon = stored.find(':');
        if (colon == std::string::npos) {
            throw parse_error("expected 'key: value'", n, first + 1);
        }
        std::string key = stored.substr(first, colon - first);
        while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back())) != 0) {
            key.pop_back();
        }
        out.push_back({n, key, std::string_view(stored).substr(colon + 1), colon + 2});
    }
    return out;
}

// Comma separated pieces with their 1-based starting column.
std::vector<std::pair<std::string_view, std::size_t>> split_commas(std::string_view text, std::size_t column) {
    std::vector<std::pair<std::string_view, std::size_t>> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = text.find(',', start);
        const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
        out.emplace_back(text.substr(start, end - start), column + start);
        if (comma == std::string_view::npos) {
            return out;
        }
        start = comma + 1;
    }
}

std::vector<std::string> parse_variables(const Line& line) {
    std::vector<std::string> names;
    std::size_t k = 0;
    const std::string_view v = line.value;
    while (k < v.size()) {
        if (std::isspace(static_cast<unsigned char>(v[k])) != 0 || v[k] == ',') {
            ++k;
            continue;
        }
        const std::size_t start = k;
        if (!is_identifier_start(v[k])) {
            throw parse_error("invalid variable name", line.number, line.value_column + k);
        }
        while (k < v.size() && is_identifier_char(v[k])) {
            ++k;
        }
        std::string name(v.substr(start, k - start));
        if (std::find(names.begin(), names.end(), name) != names.end()) {
            throw parse_error("variable " + name + " declared twice", line.number, line.value_column + start);
        }
        names.push_back(std::move(name));
    }
    if (names.empty()) {
        throw parse_error("no variables declared", line.number, line.value_column);
    }
    return names;
}

} // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables, std::size_t line,
                            std::size_t column) {
    return ExpressionParser(text, variables, line, column).parse();
}

MonomialIdeal parse_ideal(std::string_view text) {
    std::vector<std::string> storage;
    std::optional<std::vector<std::string>> variables;
    std::vector<Multidegree> generators;
    std::size_t last_line = 1;
    for (const Line& line : key_value_lines(text, storage)) {
        last_line = line.number;
        if (line.key == "vars") {
            if (variables) {
                throw parse_error("variables declared twice", line.number, 1);
            }
            variables = parse_variables(line);
        } else if (line.key == "gens") {
            if (!variables) {
                throw parse_error("gens before vars", line.number, 1);
            }
            for (const auto& [piece, column] : split_commas(line.value, line.value_column)) {
                const Polynomial p = parse_polynomial(piece, *variables, line.number, column);
                if (!p.is_term() || !p.terms().begin()->second.is_one()) {
                    throw parse_error("generator is not a monomial", line.number, column);
                }
                generators.push_back(p.terms().begin()->first);
            }
        } else {
            throw parse_error("unknown key '" + line.key + "'", line.number, 1);
        }
    }
    if (!variables) {
        throw parse_error("missing vars line", last_line, 1);
    }
    if (generators.empty()) {
        throw parse_error("missing gens line", last_line, 1);
    }
    return MonomialIdeal(*variables, std::move(generators));
}

CIData parse_ci(std::string_view text, const MonomialIdeal& ideal) {
    std::vector<std::string> storage;
    std::vector<Polynomial> elements;
    std::vector<std::optional<std::vector<Polynomial>>> coefficients;
    const auto& vars = ideal.variables();
    for (const Line& line : key_value_lines(text, storage)) {
        if (line.key == "vars") {
            if (parse_variables(line) != vars) {
                throw parse_error("variables differ from the ideal's", line.number, line.value_column);
            }
        } else if (line.key == "a") {
            elements.push_back(parse_polynomial(line.value, vars, line.number, line.value_column));
            coefficients.emplace_back();
        } else if (line.key == "coeffs") {
            if (elements.empty() || coefficients.back()) {
                throw parse_error("coeffs must follow its own 'a:' line", line.number, 1);
            }
            std::vector<Polynomial> row;
            for (const auto& [piece, column] : split_commas(line.value, line.value_column)) {
                row.push_back(parse_polynomial(piece, vars, line.number, column));
            }
            if (row.size() != ideal.num_generators()) {
                throw parse_error("expected " + std::to_string(ideal.num_generators()) + " coefficients, got " +
                                      std::to_string(row.size()),
                                  line.number, line.value_column);
            }
            coefficients.back() = std::move(row);
        } else {
            throw parse_error("unknown key '" + line.key + "'", line.number, 1);
        }
    }
    std::vector<std::vector<Polynomial>> rows;
    for (std::size_t s = 0; s < elements.size(); ++s) {
        rows.push_back(coefficients[s] ? *coefficients[s] : express_in_generators(elements[s], ideal));
    }
    return CIData(ideal, std::move(elements), std::move(rows));
}

namespace {

IndexSet index_set_from_json(const nlohmann::json& j) {
    std::vector<std::size_t> members;
    for (const auto& v : j) {
        members.push_back(v.get<std::size_t>());
    }
    return IndexSet(std::span<const std::size_t>(members));
}

} // namespace

MorseMatching parse_matching(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what(), 1, e.byte);
    }
    std::vector<MorseEdge> edges;
    try {
        for (const auto& e : j.at("edges")) {
            edges.push_back({index_set_from_json(e.at("upper")), index_set_from_json(e.at("lower"))});
        }
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("malformed matching: ") + e.what(), 1, 1);
    }
    return MorseMatching(std::move(edges));
}

std::vector<std::size_t> parse_index_list(std::string_view text) {
    std::vector<std::size_t> out;
    for (const auto& [piece, column] : split_commas(text, 1)) {
        const auto first = piece.find_first_not_of(' ');
        const auto last = piece.find_last_not_of(' ');
        if (first == std::string_view::npos) {
            throw parse_error("empty index", 1, column);
        }
        const std::string_view digits = piece.substr(first, last - first + 1);
        if (!std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
            digits.size() > 6) {
            throw parse_error("invalid index '" + std::string(digits) + "'", 1, column + first);
        }
        const std::size_t value = std::stoul(std::string(digits));
        if (value == 0) {
            throw parse_error("indices are 1-based", 1, column + first);
        }
        out.push_back(value);
    }
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

namespace {

nlohmann::ordered_json integer_to_json(const mpz_class& z) {
    if (z.fits_slong_p()) {
        return z.get_si();
    }
    return z.get_str();
}

std::string integer_from_json(const nlohmann::json& j) {
    if (j.is_string()) {
        return j.get<std::string>();
    }
    return std::to_string(j.get<long long>());
}

} // namespace

nlohmann::ordered_json polynomial_to_json(const Polynomial& p) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::ordered_json term;
        term["exps"] = m.exponents();
        term["num"] = integer_to_json(c.numerator());
        term["den"] = integer_to_json(c.denominator());
        out.push_back(std::move(term));
    }
    return out;
}

Polynomial polynomial_from_json(const nlohmann::json& j, std::size_t nvars) {
    Polynomial p;
    for (const auto& term : j) {
        Multidegree m(term.at("exps").get<std::vector<unsigned>>());
        if (m.size() != nvars) {
            throw dimension_error("term exponent vector has the wrong length");
        }
        p.add_term(m, Rational::from_strings(integer_from_json(term.at("num")), integer_from_json(term.at("den"))));
    }
    return p;
}

nlohmann::ordered_json complex_to_json(const BasedComplex& c) {
    nlohmann::ordered_json out;
    out["degrees"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < c.length(); ++i) {
        nlohmann::ordered_json degree;
        degree["rank"] = c.rank(i);
        degree["basis"] = nlohmann::ordered_json::array();
        for (const BasisLabel& label : c.basis(i)) {
            nlohmann::ordered_json b;
            b["cell"] = label.cell.members();
            b["multidegree"] = label.degree.exponents();
            degree["basis"].push_back(std::move(b));
        }
        out["degrees"].push_back(std::move(degree));
    }
    out["differentials"] = nlohmann::ordered_json::array();
    for (std::size_t i = 1; i < c.length(); ++i) {
        const PolyMatrix& d = c.differential(i);
        nlohmann::ordered_json m;
        m["rows"] = d.rows();
        m["cols"] = d.cols();
        m["entries"] = nlohmann::ordered_json::array();
        for (const auto& [index, value] : d.entries()) {
            nlohmann::ordered_json e;
            e["row"] = index.first;
            e["col"] = index.second;
            e["poly"] = polynomial_to_json(value);
            m["entries"].push_back(std::move(e));
        }
        out["differentials"].push_back(std::move(m));
    }
    return out;
}

BasedComplex complex_from_json(const nlohmann::json& j) {
    try {
        std::vector<std::vector<BasisLabel>> bases;
        std::size_t nvars = 0;
        bool have_nvars = false;
        for (const auto& degree : j.at("degrees")) {
            std::vector<BasisLabel> basis;
            for (const auto& b : degree.at("basis")) {
                BasisLabel label{index_set_from_json(b.at("cell")),
                                 Multidegree(b.at("multidegree").get<std::vector<unsigned>>())};
                if (!have_nvars) {
                    nvars = label.degree.size();
                    have_nvars = true;
                }
                basis.push_back(std::move(label));
            }
            if (basis.size() != degree.at("rank").get<std::size_t>()) {
                throw structural_error("rank does not match the basis length");
            }
            bases.push_back(std::move(basis));
        }
        std::vector<PolyMatrix> differentials;
        for (const auto& m : j.at("differentials")) {
            PolyMatrix d(m.at("rows").get<std::size_t>(), m.at("cols").get<std::size_t>());
            for (const auto& e : m.at("entries")) {
                d.set(e.at("row").get<std::size_t>(), e.at("col").get<std::size_t>(),
                      polynomial_from_json(e.at("poly"), nvars));
            }
            differentials.push_back(std::move(d));
        }
        return BasedComplex(nvars, std::move(bases), std::move(differentials));
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("malformed complex: ") + e.what(), 1, 1);
    } catch (const std::out_of_range& e) {
        throw parse_error(std::string("malformed complex: ") + e.what(), 1, 1);
    }
}

namespace {

// e13 for ε_{1,3}; braces once an index has two digits.
std::string label_text(const BasisLabel& label) {
    const auto members = label.cell.members();
    if (members.empty() || members.back() >= 10) {
        return "e" + label.cell.to_string();
    }
    std::string out = "e";
    for (std::size_t i : members) {
        out += std::to_string(i);
    }
    return out;
}

} // namespace

std::string complex_to_text(const BasedComplex& c, const std::vector<std::string>& variables) {
    std::ostringstream out;
    out << "ranks:";
    for (std::size_t r : c.ranks()) {
        out << ' ' << r;
    }
    out << '\n';
    for (std::size_t i = c.length(); i-- > 0;) {
        out << "F" << i << ":";
        for (const BasisLabel& label : c.basis(i)) {
            out << ' ' << label_text(label) << '[' << format_monomial(label.degree, variables) << ']';
        }
        out << '\n';
    }
    for (std::size_t i = c.length(); i-- > 1;) {
        const PolyMatrix& d = c.differential(i);
        std::vector<std::vector<std::string>> cells(d.rows() + 1, std::vector<std::string>(d.cols() + 1));
        for (std::size_t k = 0; k < d.cols(); ++k) {
            cells[0][k + 1] = label_text(c.basis(i)[k]);
        }
        for (std::size_t r = 0; r < d.rows(); ++r) {
            cells[r + 1][0] = label_text(c.basis(i - 1)[r]);
            for (std::size_t k = 0; k < d.cols(); ++k) {
                cells[r + 1][k + 1] = d.at(r, k).to_string(variables);
            }
        }
        std::vector<std::size_t> width(d.cols() + 1, 0);
        for (const auto& row : cells) {
            for (std::size_t k = 0; k < row.size(); ++k) {
                width[k] = std::max(width[k], row[k].size());
            }
        }
        out << "d" << i << ": F" << i << " -> F" << i - 1 << '\n';
        for (const auto& row : cells) {
            std::string line = " ";
            for (std::size_t k = 0; k < row.size(); ++k) {
                line += ' ' + row[k] + std::string(width[k] - row[k].size(), ' ');
            }
            line.erase(line.find_last_not_of(' ') + 1);
            out << line << '\n';
        }
    }
    return out.str();
}

std::string sha256_hex(std::string_view bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("SHA-256 computation failed");
    }
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int k = 0; k < length; ++k) {
        out += hex[digest[k] >> 4];
        out += hex[digest[k] & 0xf];
    }
    return out;
}

} // namespace monores
