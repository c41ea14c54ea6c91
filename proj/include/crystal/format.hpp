#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "crystal/abacus.hpp"

namespace crystal {

inline std::string compact(const Partition& p) {
    std::string out = "(";
    for (int i = 0; i < p.length(); ++i) {
        if (i) out += ",";
        out += std::to_string(p.parts()[static_cast<std::size_t>(i)]);
    }
    return out + ")";
}

/// Compact one-line notation, components joined by '|': "(2,2)|(2)".
inline std::string compact(const std::vector<Partition>& components) {
    std::string out;
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (i) out += "|";
        out += compact(components[i]);
    }
    return out;
}

inline std::string compact(const ChargedMultipartition& cm) { return compact(cm.components()); }

/// Parse "(12^7,4,1)" or "12^7,4,1"; "^" repeats a part. Empty, "()" and "-"
/// all denote the empty partition.
inline Partition parse_partition(std::string text) {
    auto fail = [&] { throw std::invalid_argument("malformed partition: " + text); };
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (!s.empty() && s.front() == '(') {
        if (s.back() != ')') fail();
        s = s.substr(1, s.size() - 2);
    }
    if (s.empty() || s == "-") return Partition();
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) fail();
        int value = 0, count = 1;
        auto caret = item.find('^');
        try {
            if (caret == std::string::npos) {
                value = std::stoi(item);
            } else {
                value = std::stoi(item.substr(0, caret));
                count = std::stoi(item.substr(caret + 1));
            }
        } catch (const std::exception&) {
            fail();
        }
        for (int i = 0; i < count; ++i) parts.push_back(value);
    }
    return Partition(std::move(parts));
}

/// Parse "(1,1),(2),()" into components; each component is parenthesized.
inline std::vector<Partition> parse_components(const std::string& text) {
    std::vector<Partition> out;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth < 0) throw std::invalid_argument("malformed multipartition: " + text);
        if (c == ',' && depth == 0) {
            out.push_back(parse_partition(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (depth != 0) throw std::invalid_argument("malformed multipartition: " + text);
    out.push_back(parse_partition(cur));
    return out;
}

/// JSON schema used by every CLI command:
/// {"e": <int>, "charge": [<int> x l], "components": [[<int> desc] x l]}
inline nlohmann::json to_json(const ChargedMultipartition& cm) {
    nlohmann::json j;
    j["e"] = cm.modulus();
    j["charge"] = cm.charge();
    auto comps = nlohmann::json::array();
    for (const auto& c : cm.components()) comps.push_back(c.parts());
    j["components"] = comps;
    return j;
}

inline ChargedMultipartition cm_from_json(const nlohmann::json& j) {
    if (!j.contains("e") || !j.contains("charge") || !j.contains("components"))
        throw std::invalid_argument("multipartition JSON needs e, charge, components");
    int e = j.at("e").get<int>();
    Charge charge = j.at("charge").get<Charge>();
    std::vector<Partition> comps;
    for (const auto& c : j.at("components"))
        comps.emplace_back(c.get<std::vector<int>>());
    return ChargedMultipartition(std::move(comps), std::move(charge), e);
}

/// Text drawing of the abacus: row l on top, 'O' for a bead, '.' for a space,
/// and a ruler of column positions underneath.
inline std::string render_abacus(const ChargedMultipartition& cm) {
    Abacus a = Abacus::materialize(cm, 0);
    int lo = a.full_threshold() - cm.modulus();
    int hi = max_bead_column(cm) + 1;
    std::size_t width = 2;
    for (int beta : {lo, hi}) width = std::max(width, std::to_string(beta).size() + 1);
    std::ostringstream out;
    for (int row = cm.level(); row >= 1; --row) {
        out << "row " << row << " |";
        for (int beta = lo; beta <= hi; ++beta) {
            std::string cell(width - 1, ' ');
            cell += a.is_bead(Bead{beta, row}) ? 'O' : '.';
            out << cell;
        }
        out << "\n";
    }
    out << "      |";
    for (int beta = lo; beta <= hi; ++beta) {
        std::string num = std::to_string(beta);
        out << std::string(width - num.size(), ' ') << num;
    }
    out << "\n";
    return out.str();
}

} // namespace crystal
