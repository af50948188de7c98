#include "hfdlab/text.hpp"

#include <cctype>
#include <sstream>

namespace hfdlab {

namespace {

std::string strip_spaces(const std::string& text) {
    std::string out;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    }
    return out;
}

// Splits on commas that sit outside parentheses.
std::vector<std::string> split_top_level(const std::string& text) {
    std::vector<std::string> parts;
    std::string current;
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    parts.push_back(current);
    return parts;
}

int parse_residue(const std::string& text) {
    if (text.empty()) throw InvalidParameterError("empty residue");
    std::size_t i = 0;
    long long v = 0;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw InvalidParameterError("cannot parse residue '" + text + "'");
        }
        v = v * 10 + (text[i] - '0');
        if (v > 1'000'000) throw InvalidParameterError("residue out of range");
    }
    return static_cast<int>(v);
}

} // namespace

std::string format_element(const GroupElement& g) {
    if (g.empty()) return "()";
    std::ostringstream out;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i > 0) out << ',';
        out << g[i];
    }
    return out.str();
}

GroupElement parse_element(const std::string& text, const FiniteAbelianGroup& group) {
    std::string clean = strip_spaces(text);
    if (clean.size() >= 2 && clean.front() == '(' && clean.back() == ')') {
        clean = clean.substr(1, clean.size() - 2);
    }
    GroupElement g;
    if (!clean.empty()) {
        std::string part;
        for (char c : clean + ":") {
            if (c == ':' || c == ',') {
                g.push_back(parse_residue(part));
                part.clear();
            } else {
                part.push_back(c);
            }
        }
    }
    if (g.size() != group.rank()) {
        throw IncompatibleElementError("element '" + text + "' does not match the group rank");
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] < 0 || g[i] >= group.moduli()[i]) {
            throw IncompatibleElementError("residue out of range in '" + text + "'");
        }
    }
    return g;
}

std::string format_sequence(const ZeroSumSequence& s, const ClassSubset& cs) {
    std::ostringstream out;
    out << '(';
    bool first = true;
    for (std::size_t i = 0; i < s.mult.size(); ++i) {
        for (int k = 0; k < s.mult[i]; ++k) {
            if (!first) out << ',';
            first = false;
            const std::string rendered = format_element(cs.classes()[i]);
            if (cs.group().rank() >= 2) {
                out << '(' << rendered << ')';
            } else {
                out << rendered;
            }
        }
    }
    out << ')';
    return out.str();
}

ZeroSumSequence parse_sequence(const std::string& text, const ClassSubset& cs) {
    std::string clean = strip_spaces(text);
    if (clean.size() < 2 || clean.front() != '(' || clean.back() != ')') {
        throw InvalidParameterError("sequence literal must be parenthesized: '" + text + "'");
    }
    clean = clean.substr(1, clean.size() - 2);
    std::vector<int> mult(cs.size(), 0);
    if (!clean.empty()) {
        for (const auto& part : split_top_level(clean)) {
            const GroupElement g = parse_element(part, cs.group());
            const int idx = cs.index_of(g);
            if (idx < 0) {
                throw InvalidParameterError("class '" + part + "' is not in the class subset");
            }
            ++mult[static_cast<std::size_t>(idx)];
        }
    }
    return make_sequence(cs, std::move(mult));
}

} // namespace hfdlab
