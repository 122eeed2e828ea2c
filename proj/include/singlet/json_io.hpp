#ifndef SINGLET_JSON_IO_HPP
#define SINGLET_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "singlet/intertwiner.hpp"
#include "singlet/qseries.hpp"
#include "singlet/screening.hpp"

namespace singlet {

using json = nlohmann::json;

inline json to_json(const Rational& r) { return fraction_string(r); }

/* scalar as ["rat", "surd"], pure rationals as a single string */
inline json to_json(const ExactScalar& s) {
    if (s.is_rational()) return fraction_string(s.rat());
    return json::array({fraction_string(s.rat()), fraction_string(s.surd())});
}

inline json to_json(const FockVector& v) {
    json terms = json::array();
    for (const auto& [mono, coeff] : v.terms()) {
        json part = json::array();
        for (int n : mono.parts) part.push_back(n);
        terms.push_back(json{{"partition", part}, {"coeff", to_json(coeff)}});
    }
    return json{{"sector", v.sector()}, {"terms", terms}};
}

inline json to_json(const KernelReport& rep) {
    json rows = json::array();
    for (const auto& row : rep.rows)
        rows.push_back(json{{"degree", row.degree},
                            {"dim", row.dim},
                            {"rank", row.rank},
                            {"kernel", row.kernel}});
    return json{{"op", rep.op}, {"power", rep.power}, {"sector", rep.sector}, {"rows", rows}};
}

inline json to_json(const QSeries& s) {
    json coeffs = json::array();
    for (const auto& c : s.coeffs) coeffs.push_back(fraction_string(c));
    return json{{"offset", fraction_string(s.offset)}, {"coeffs", coeffs}};
}

inline json to_json(const LogCharacter& ch) {
    return json{{"diag", to_json(ch.diag)}, {"tau_part", to_json(ch.tau_part)}};
}

inline json to_json(const JordanVector& v) {
    return json{{"sector", v.sector()},
                {"w1", to_json(v.w1())},
                {"w2", to_json(v.w2())}};
}

inline json to_json(const LogLaurentSeries& s) {
    json out = json::array();
    for (const auto& [key, vec] : s.terms)
        out.push_back(json{{"exponent", fraction_string(key.first)},
                           {"log", key.second},
                           {"vector", to_json(vec)}});
    return out;
}

inline json to_json(const EmbeddingDiagram& dia) {
    json vertices = json::array();
    for (const auto& v : dia.vertices)
        vertices.push_back(json{{"kind", v.kind}, {"n", v.n}, {"weight", fraction_string(v.weight)}});
    json arrows = json::array();
    for (const auto& a : dia.arrows)
        arrows.push_back(json{{"from", a.from}, {"to", a.to}, {"label", a.label},
                              {"verified", a.verified}});
    return json{{"vertices", vertices}, {"arrows", arrows}};
}

/* TSV character table: one line per coefficient, columns k, exponent, value */
inline std::string qseries_tsv(const QSeries& s) {
    std::string out = "k\texponent\tcoefficient\n";
    for (long k = 0; k <= qs_truncation(s); ++k) {
        out += std::to_string(k) + "\t" + fraction_string(s.offset + k) + "\t" +
               fraction_string(s.coeffs[k]) + "\n";
    }
    return out;
}

} // namespace singlet

#endif
