#include "dqp/serialize.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace dqp {

namespace {

using nlohmann::json;

std::string pair_list(const Preorder& p) {
    std::ostringstream out;
    bool first = true;
    for (auto [i, j] : p.nonreflexive_pairs()) {
        if (!first)
            out << ",";
        first = false;
        out << "(" << i + 1 << "," << j + 1 << ")";
    }
    return out.str();
}

void skip_spaces(const std::string& s, size_t& pos) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t'))
        ++pos;
}

int parse_int(const std::string& s, size_t& pos) {
    skip_spaces(s, pos);
    size_t start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9')
        ++pos;
    if (pos == start)
        throw ParseError("expected an integer in '" + s + "'");
    try {
        return std::stoi(s.substr(start, pos - start));
    } catch (const std::out_of_range&) {
        throw ParseError("integer out of range in '" + s + "'");
    }
}

void expect(const std::string& s, size_t& pos, char c) {
    skip_spaces(s, pos);
    if (pos >= s.size() || s[pos] != c)
        throw ParseError(std::string("expected '") + c + "' in '" + s + "'");
    ++pos;
}

std::vector<std::pair<int, int>> parse_pair_list(const std::string& s, size_t& pos, int n) {
    std::vector<std::pair<int, int>> pairs;
    skip_spaces(s, pos);
    while (pos < s.size() && s[pos] == '(') {
        ++pos;
        const int i = parse_int(s, pos);
        expect(s, pos, ',');
        const int j = parse_int(s, pos);
        expect(s, pos, ')');
        if (i < 1 || i > n || j < 1 || j > n)
            throw ParseError("pair out of range in '" + s + "'");
        pairs.emplace_back(i - 1, j - 1);
        skip_spaces(s, pos);
        if (pos < s.size() && s[pos] == ',') {
            ++pos;
            skip_spaces(s, pos);
            if (pos >= s.size() || s[pos] != '(')
                throw ParseError("trailing comma in pair list '" + s + "'");
        }
    }
    return pairs;
}

Preorder build(int n, const std::vector<std::pair<int, int>>& pairs, bool strict) {
    return strict ? Preorder::from_closed_pairs(n, pairs) : Preorder::closure(n, pairs);
}

json dqp_to_json_value(const DoubleQuasiPoset& p) {
    json le1 = json::array();
    for (auto [i, j] : p.le1().nonreflexive_pairs())
        le1.push_back({i + 1, j + 1});
    json le2 = json::array();
    for (auto [i, j] : p.le2().nonreflexive_pairs())
        le2.push_back({i + 1, j + 1});
    return json{{"n", p.size()}, {"le1", le1}, {"le2", le2}};
}

std::vector<std::pair<int, int>> pairs_from_json(const json& list, int n) {
    std::vector<std::pair<int, int>> pairs;
    if (!list.is_array())
        throw ParseError("relation must be an array of pairs");
    for (const auto& entry : list) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
            !entry[1].is_number_integer())
            throw ParseError("relation entries must be integer pairs");
        const int i = entry[0].get<int>();
        const int j = entry[1].get<int>();
        if (i < 1 || i > n || j < 1 || j > n)
            throw ParseError("pair out of range");
        pairs.emplace_back(i - 1, j - 1);
    }
    return pairs;
}

DoubleQuasiPoset dqp_from_json_value(const json& value, bool strict) {
    if (!value.is_object() || !value.contains("n") || !value.contains("le1") ||
        !value.contains("le2") || !value["n"].is_number_integer())
        throw ParseError("expected an object with fields n, le1, le2");
    const int n = value["n"].get<int>();
    if (n < 0 || n > Preorder::max_elements)
        throw SizeLimitError("ground-set size out of range");
    return {build(n, pairs_from_json(value["le1"], n), strict),
            build(n, pairs_from_json(value["le2"], n), strict)};
}

json combination_to_json_value(const LinearCombination& a) {
    json out = json::array();
    for (const auto& [p, c] : a)
        out.push_back({{"coeff", rational_to_string(c)}, {"term", dqp_to_json_value(p)}});
    return out;
}

json parse_json(const std::string& s) {
    json value = json::parse(s, nullptr, false);
    if (value.is_discarded())
        throw ParseError("malformed JSON");
    return value;
}

} // namespace

std::string preorder_to_text(const Preorder& p) {
    std::string out = std::to_string(p.size()) + ";";
    const std::string pairs = pair_list(p);
    if (!pairs.empty())
        out += " " + pairs;
    return out;
}

Preorder preorder_from_text(const std::string& s, bool strict) {
    size_t pos = 0;
    const int n = parse_int(s, pos);
    if (n > Preorder::max_elements)
        throw SizeLimitError("ground-set size out of range");
    expect(s, pos, ';');
    const auto pairs = parse_pair_list(s, pos, n);
    skip_spaces(s, pos);
    if (pos != s.size())
        throw ParseError("trailing characters in '" + s + "'");
    return build(n, pairs, strict);
}

std::string dqp_to_text(const DoubleQuasiPoset& p) {
    std::string out = "dqp " + std::to_string(p.size()) + ";";
    const std::string first = pair_list(p.le1());
    const std::string second = pair_list(p.le2());
    out += first.empty() ? ";" : " " + first + ";";
    if (!second.empty())
        out += " " + second;
    return out;
}

DoubleQuasiPoset dqp_from_text(const std::string& s, bool strict) {
    size_t pos = 0;
    skip_spaces(s, pos);
    if (s.compare(pos, 3, "dqp") != 0)
        throw ParseError("expected leading 'dqp' in '" + s + "'");
    pos += 3;
    const int n = parse_int(s, pos);
    if (n > Preorder::max_elements)
        throw SizeLimitError("ground-set size out of range");
    expect(s, pos, ';');
    const auto pairs1 = parse_pair_list(s, pos, n);
    expect(s, pos, ';');
    const auto pairs2 = parse_pair_list(s, pos, n);
    skip_spaces(s, pos);
    if (pos != s.size())
        throw ParseError("trailing characters in '" + s + "'");
    return {build(n, pairs1, strict), build(n, pairs2, strict)};
}

std::string dqp_to_json(const DoubleQuasiPoset& p) {
    return dqp_to_json_value(p).dump();
}

DoubleQuasiPoset dqp_from_json(const std::string& s, bool strict) {
    return dqp_from_json_value(parse_json(s), strict);
}

std::string combination_to_json(const LinearCombination& a) {
    return combination_to_json_value(a).dump();
}

LinearCombination combination_from_json(const std::string& s) {
    const json value = parse_json(s);
    if (!value.is_array())
        throw ParseError("expected a JSON array of terms");
    LinearCombination out;
    for (const auto& entry : value) {
        if (!entry.is_object() || !entry.contains("coeff") || !entry.contains("term") ||
            !entry["coeff"].is_string())
            throw ParseError("terms must be {coeff, term} objects");
        out.add(canonicalize(dqp_from_json_value(entry["term"], /*strict=*/true)),
                rational_from_string(entry["coeff"].get<std::string>()));
    }
    return out;
}

std::string tensor_combination_to_json(const TensorCombination& t) {
    json out = json::array();
    for (const auto& [pair, c] : t)
        out.push_back({{"coeff", rational_to_string(c)},
                       {"left", dqp_to_json_value(pair.first)},
                       {"right", dqp_to_json_value(pair.second)}});
    return out.dump();
}

DoubleQuasiPoset dqp_from_any(const std::string& s) {
    size_t pos = 0;
    skip_spaces(s, pos);
    if (pos < s.size() && s[pos] == '{')
        return dqp_from_json(s);
    return dqp_from_text(s);
}

LinearCombination combination_from_any(const std::string& s) {
    size_t pos = 0;
    skip_spaces(s, pos);
    if (pos < s.size() && s[pos] == '[')
        return combination_from_json(s);
    return to_basis(dqp_from_any(s));
}

std::string packed_word_to_string(const PackedWord& w) {
    if (w.size() == 0)
        return "";
    std::ostringstream out;
    if (w.max_letter() <= 9) {
        for (int v : w.letters())
            out << v;
    } else {
        for (size_t i = 0; i < w.letters().size(); ++i) {
            if (i)
                out << ",";
            out << w.letters()[i];
        }
    }
    return out.str();
}

namespace {

std::vector<int> letters_from_string(const std::string& s) {
    std::vector<int> letters;
    if (s.find(',') != std::string::npos) {
        size_t pos = 0;
        while (pos < s.size()) {
            letters.push_back(parse_int(s, pos));
            skip_spaces(s, pos);
            if (pos < s.size()) {
                if (s[pos] != ',')
                    throw ParseError("expected ',' in word '" + s + "'");
                ++pos;
            }
        }
    } else {
        for (char c : s) {
            if (c == ' ')
                continue;
            if (c < '0' || c > '9')
                throw ParseError("invalid digit in word '" + s + "'");
            letters.push_back(c - '0');
        }
    }
    return letters;
}

} // namespace

PackedWord packed_word_from_string(const std::string& s) {
    return PackedWord(letters_from_string(s));
}

std::string perm_to_string(const Perm& p) {
    return packed_word_to_string(PackedWord::from_perm(p));
}

Perm perm_from_string(const std::string& s) {
    const PackedWord w(letters_from_string(s));
    if (!w.is_permutation())
        throw ParseError("'" + s + "' is not a permutation");
    return w.to_perm();
}

std::string word_combination_to_json(const WordCombination& a) {
    json out = json::array();
    for (const auto& [w, c] : a)
        out.push_back({{"coeff", rational_to_string(c)}, {"word", packed_word_to_string(w)}});
    return out.dump();
}

std::string perm_combination_to_json(const PermCombination& a) {
    json out = json::array();
    for (const auto& [p, c] : a)
        out.push_back({{"coeff", rational_to_string(c)}, {"perm", perm_to_string(p)}});
    return out.dump();
}

std::string gram_to_csv(const GramMatrix& m) {
    std::ostringstream out;
    for (size_t i = 0; i < m.basis.size(); ++i) {
        if (i)
            out << ",";
        out << '"' << dqp_to_text(m.basis[i]) << '"';
    }
    out << "\n";
    for (const auto& row : m.entries) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j)
                out << ",";
            out << row[j];
        }
        out << "\n";
    }
    return out.str();
}

} // namespace dqp
