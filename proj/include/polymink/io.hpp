#ifndef POLYMINK_IO_HPP
#define POLYMINK_IO_HPP

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "polymink/polytope.hpp"

namespace polymink {

enum class FileFormat { CddExt, CddIne, Json };

namespace detail {

// Strict "p" or "p/q" rational parser; GMP would abort on a zero denominator,
// so the string is validated before construction.
inline Rational parse_rational(const std::string& tok, std::size_t line_no) {
    auto fail = [&](const std::string& why) -> Rational {
        throw ParseError("line " + std::to_string(line_no) + ": " + why + ": '" + tok + "'");
    };
    auto digits = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto slash = tok.find('/');
    if (slash == std::string::npos) {
        if (!digits(tok)) return fail("malformed number");
        return Rational(Int(tok));
    }
    std::string num = tok.substr(0, slash), den = tok.substr(slash + 1);
    if (!digits(num) || !digits(den)) return fail("malformed rational");
    Int d(den);
    if (d == 0) return fail("zero denominator");
    return Rational(Int(num)) / Rational(d);
}

inline std::string rational_str(const Rational& r) {
    return r.str(); // "p" or "p/q", canonical form
}

inline std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

inline ExactPolytope parse_cdd(const std::string& text, bool vrep) {
    std::istringstream is(text);
    std::string line;
    std::size_t line_no = 0;
    auto next_line = [&]() -> std::string {
        while (std::getline(is, line)) {
            ++line_no;
            auto toks = split_ws(line);
            if (!toks.empty() && toks[0][0] != '*') return line; // '*' comments
        }
        throw ParseError("line " + std::to_string(line_no) + ": unexpected end of file");
    };
    std::string header = next_line();
    std::string expect = vrep ? "V-representation" : "H-representation";
    if (split_ws(header)[0] != expect)
        throw ParseError("line " + std::to_string(line_no) + ": expected " + expect);
    if (split_ws(next_line())[0] != "begin")
        throw ParseError("line " + std::to_string(line_no) + ": expected begin");
    auto counts = split_ws(next_line());
    if (counts.size() < 2)
        throw ParseError("line " + std::to_string(line_no) + ": malformed counts line");
    long n = 0, cols = 0;
    try {
        n = std::stol(counts[0]);
        cols = std::stol(counts[1]);
    } catch (...) {
        throw ParseError("line " + std::to_string(line_no) + ": malformed counts line");
    }
    if (n < 1 || cols < 2)
        throw ParseError("line " + std::to_string(line_no) + ": invalid counts");
    const std::size_t d = static_cast<std::size_t>(cols - 1);

    std::vector<QVector> rows;
    for (long i = 0; i < n; ++i) {
        auto toks = split_ws(next_line());
        if (toks.size() != static_cast<std::size_t>(cols))
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(cols) + " entries");
        QVector row;
        for (const auto& t : toks) row.push_back(parse_rational(t, line_no));
        rows.push_back(std::move(row));
    }
    if (split_ws(next_line())[0] != "end")
        throw ParseError("line " + std::to_string(line_no) + ": expected end");

    if (vrep) {
        std::vector<QVector> pts;
        for (auto& row : rows) {
            if (row[0] != 1)
                throw ParseError("only bounded V-representations (leading 1) are supported");
            pts.push_back(QVector(row.begin() + 1, row.end()));
        }
        return hull_from_vertices(std::move(pts));
    }
    // H rows "b a1 .. ad" mean b + a.x >= 0, i.e. a.x >= -b
    std::vector<Halfspace> hs;
    for (auto& row : rows) {
        QVector a(row.begin() + 1, row.end());
        if (is_zero(a))
            throw ParseError("H-representation row with zero normal");
        hs.push_back({std::move(a), -row[0]});
    }
    (void)d;
    return vertices_from_halfspaces(hs);
}

inline ExactPolytope parse_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        std::string kind = j.at("representation").get<std::string>();
        if (kind == "V") {
            std::vector<QVector> pts;
            for (const auto& row : j.at("vertices")) {
                QVector v;
                for (const auto& x : row)
                    v.push_back(parse_rational(x.get<std::string>(), 0));
                if (v.empty() || v[0] != 1)
                    throw ParseError("V row must start with homogeneous 1");
                pts.push_back(QVector(v.begin() + 1, v.end()));
            }
            return hull_from_vertices(std::move(pts));
        }
        if (kind == "H") {
            std::vector<Halfspace> hs;
            for (const auto& row : j.at("rows")) {
                QVector v;
                for (const auto& x : row)
                    v.push_back(parse_rational(x.get<std::string>(), 0));
                QVector a(v.begin() + 1, v.end());
                if (is_zero(a)) throw ParseError("H row with zero normal");
                hs.push_back({std::move(a), -v[0]});
            }
            return vertices_from_halfspaces(hs);
        }
        throw ParseError("representation must be \"V\" or \"H\"");
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed polytope JSON: ") + e.what());
    }
}

} // namespace detail

// Detects cdd V/H headers or a JSON object.
inline ExactPolytope parse_polytope_file(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') return detail::parse_json(text);
        break;
    }
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        auto toks = detail::split_ws(line);
        if (toks.empty() || toks[0][0] == '*') continue;
        if (toks[0] == "V-representation") return detail::parse_cdd(text, true);
        if (toks[0] == "H-representation") return detail::parse_cdd(text, false);
        break;
    }
    throw ParseError("unrecognized polytope file format");
}

// Canonical emission: the polytope's own ordering is already canonical
// (lexicographic vertices, sorted primitive facets), so emit-parse-emit is
// byte identical.
inline std::string emit_polytope_file(const ExactPolytope& p, FileFormat format) {
    std::ostringstream os;
    switch (format) {
    case FileFormat::CddExt:
        os << "V-representation\nbegin\n";
        os << " " << p.f0() << " " << p.ambient_dim + 1 << " rational\n";
        for (const auto& v : p.vertices) {
            os << " 1";
            for (const auto& x : v) os << " " << detail::rational_str(x);
            os << "\n";
        }
        os << "end\n";
        return os.str();
    case FileFormat::CddIne: {
        // equations become opposite inequality pairs
        std::size_t rows = p.facets.size() + 2 * p.hull_equations.size();
        os << "H-representation\nbegin\n";
        os << " " << rows << " " << p.ambient_dim + 1 << " rational\n";
        auto emit_row = [&](const QVector& a, const Rational& offset) {
            os << " " << detail::rational_str(-offset);
            for (const auto& x : a) os << " " << detail::rational_str(x);
            os << "\n";
        };
        for (const auto& f : p.facets) emit_row(f.normal, f.offset);
        for (const auto& e : p.hull_equations) {
            emit_row(e.first, e.second);
            emit_row(scale(e.first, -1), -e.second);
        }
        os << "end\n";
        return os.str();
    }
    case FileFormat::Json: {
        nlohmann::json j;
        j["representation"] = "V";
        j["dimension"] = p.ambient_dim;
        auto rows = nlohmann::json::array();
        for (const auto& v : p.vertices) {
            auto row = nlohmann::json::array();
            row.push_back("1");
            for (const auto& x : v) row.push_back(detail::rational_str(x));
            rows.push_back(std::move(row));
        }
        j["vertices"] = std::move(rows);
        return j.dump(2) + "\n";
    }
    }
    throw std::logic_error("emit_polytope_file: unknown format");
}

} // namespace polymink

#endif
