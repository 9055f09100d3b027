#pragma once

#include <cctype>
#include <string>

#include <json.hpp>

#include "qcomb/laurent.hpp"

namespace qcomb {

// Parser for the canonical polynomial text form produced by
// LaurentPoly::str(). Accepts optional whitespace and '*' separators:
//   poly   := ['-'] term (('+'|'-') term)*  |  '0'
//   term   := coef ['*' factors] | factors
//   factor := name ['^' int]
//   coef   := int ['/' int]
inline LaurentPoly parse_poly(const std::string& text) {
    size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto parse_int = [&]() -> Int {
        skip();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
            throw parse_error("expected integer at offset " + std::to_string(start));
        return Int(text.substr(start, pos - start));
    };
    auto parse_name = [&]() -> std::string {
        skip();
        size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos]))))
            ++pos;
        return text.substr(start, pos - start);
    };

    std::map<Monomial, Rat> acc;
    skip();
    bool first = true;
    while (pos < text.size()) {
        int sign = 1;
        skip();
        if (!first) {
            if (text[pos] == '+') {
                ++pos;
            } else if (text[pos] == '-') {
                sign = -1;
                ++pos;
            } else {
                throw parse_error("expected '+' or '-' at offset " + std::to_string(pos));
            }
        } else if (text[pos] == '-') {
            sign = -1;
            ++pos;
        }
        first = false;
        skip();
        Rat coef(1);
        bool have_coef = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            Int n = parse_int();
            Int d(1);
            skip();
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                d = parse_int();
            }
            coef = Rat(n, d);
            have_coef = true;
        }
        skip();
        if (pos < text.size() && text[pos] == '*') {
            ++pos;
            skip();
        }
        Monomial m;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) {
            std::string name = parse_name();
            auto v = var_from_name(name);
            if (!v) throw parse_error("unknown variable '" + name + "'");
            std::int32_t e = 1;
            skip();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                e = static_cast<std::int32_t>(parse_int());
            }
            m = m * Monomial::var(*v, e);
            skip();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip();
            }
        }
        if (!have_coef && m.is_one()) throw parse_error("empty term at offset " + std::to_string(pos));
        acc[m] += coef * sign;
        skip();
    }
    return LaurentPoly::from_map(acc);
}

inline nlohmann::json poly_to_json(const LaurentPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : p.terms()) {
        nlohmann::json exps = nlohmann::json::object();
        for (const auto& [v, e] : t.mono.exps()) exps[var_name(v)] = e;
        terms.push_back({{"coeff", t.coef.str()}, {"exps", exps}});
    }
    return terms;
}

inline LaurentPoly poly_from_json(const nlohmann::json& j) {
    std::map<Monomial, Rat> acc;
    for (const auto& item : j) {
        std::string cs = item.at("coeff").get<std::string>();
        Rat c;
        auto slash = cs.find('/');
        if (slash == std::string::npos)
            c = Rat(Int(cs));
        else
            c = Rat(Int(cs.substr(0, slash)), Int(cs.substr(slash + 1)));
        Monomial m;
        for (auto it = item.at("exps").begin(); it != item.at("exps").end(); ++it) {
            auto v = var_from_name(it.key());
            if (!v) throw parse_error("unknown variable '" + it.key() + "' in JSON");
            m = m * Monomial::var(*v, it.value().get<std::int32_t>());
        }
        acc[m] += c;
    }
    return LaurentPoly::from_map(acc);
}

}  // namespace qcomb
