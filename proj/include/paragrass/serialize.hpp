#pragma once

#include <json.hpp>
#include <sstream>

#include "paragrass/berezin.hpp"
#include "paragrass/element.hpp"
#include "paragrass/report.hpp"

namespace paragrass {

using nlohmann::json;

enum class OutputFormat { Json, Csv, Text };

inline OutputFormat parse_format(const std::string& s) {
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "text") return OutputFormat::Text;
    throw std::invalid_argument("unknown output format: " + s);
}

// Exact integers are emitted as int64 when they fit and as decimal strings
// otherwise, so large tables survive JSON round-trips bit-exactly.
inline json integer_to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return static_cast<long>(z.get_si());
    return z.get_str();
}

inline mpz_class integer_from_json(const json& j) {
    if (j.is_string()) return mpz_class(j.get<std::string>());
    return mpz_class(static_cast<long>(j.get<long long>()));
}

inline json rational_to_json(const Rational& r) {
    return json::array({integer_to_json(r.get_num()), integer_to_json(r.get_den())});
}

inline Rational rational_from_json(const json& j) {
    Rational r(integer_from_json(j.at(0)), integer_from_json(j.at(1)));
    r.canonicalize();
    return r;
}

// Scalars: a real exact value is a [num, den] pair; anything with an
// imaginary part (and every float value) is an {re, im} object.
inline json scalar_to_json(const GaussianRational& c) {
    if (c.im == 0) return rational_to_json(c.re);
    return json{{"re", rational_to_json(c.re)}, {"im", rational_to_json(c.im)}};
}

inline json scalar_to_json(const Complex64& c) {
    return json{{"re", c.real()}, {"im", c.imag()}};
}

template <class C>
C scalar_from_json(const json& j);

template <>
inline GaussianRational scalar_from_json<GaussianRational>(const json& j) {
    if (j.is_array()) return GaussianRational{rational_from_json(j), Rational(0)};
    return GaussianRational{rational_from_json(j.at("re")), rational_from_json(j.at("im"))};
}

template <>
inline Complex64 scalar_from_json<Complex64>(const json& j) {
    if (j.is_array()) {
        Rational r = rational_from_json(j);
        return Complex64(r.get_d(), 0.0);
    }
    return Complex64(j.at("re").get<double>(), j.at("im").get<double>());
}

template <class C>
json alpha_to_json(const std::vector<C>& alpha) {
    if (alpha.empty()) return nullptr;
    json arr = json::array();
    for (const C& a : alpha) arr.push_back(scalar_to_json(a));
    return arr;
}

// ---- table output: {"n":, "kind":, "alpha": [...] | null, "entries": [...]} ----

inline json table_to_json(int n, const std::string& kind, const json& alpha, const json& entries) {
    return json{{"n", n}, {"kind", kind}, {"alpha", alpha}, {"entries", entries}};
}

inline json g_table_to_json(const GTable& t) {
    json entries = json::array();
    for (long g : t.g) entries.push_back(g);
    return table_to_json(t.n, "g", nullptr, entries);
}

template <class C>
json scalar_table_to_json(int n, const std::string& kind, const std::vector<C>& alpha,
                          const std::vector<C>& values) {
    json entries = json::array();
    for (const C& v : values) entries.push_back(scalar_to_json(v));
    return table_to_json(n, kind, alpha_to_json(alpha), entries);
}

template <class C>
std::string scalar_table_to_csv(const std::vector<C>& values) {
    std::ostringstream out;
    out << "index,value\n";
    for (size_t i = 0; i < values.size(); ++i)
        out << i << "," << scalar_traits<C>::to_string(values[i]) << "\n";
    return out.str();
}

inline std::string g_table_to_csv(const GTable& t) {
    std::ostringstream out;
    out << "index,value\n";
    for (size_t i = 0; i < t.g.size(); ++i) out << i << "," << t.g[i] << "\n";
    return out.str();
}

template <class C>
std::string scalar_table_to_text(const std::string& kind, const std::vector<C>& values) {
    std::ostringstream out;
    for (size_t i = 0; i < values.size(); ++i)
        out << kind << "_" << i << " = " << scalar_traits<C>::to_string(values[i]) << "\n";
    return out.str();
}

inline std::string g_table_to_text(const GTable& t) {
    std::ostringstream out;
    for (size_t i = 0; i < t.g.size(); ++i) out << "g_" << i << " = " << t.g[i] << "\n";
    return out.str();
}

// ---- element output: entries carry monomial exponent lists plus the payload ----

template <class C>
json element_to_json(const Element<C>& x, const std::string& kind, const std::vector<C>& alpha) {
    json entries = json::array();
    for (const auto& [m, payload] : x.terms()) {
        json unstarred = json::array(), starred = json::array();
        for (int g = 0; g < x.generators(); ++g) {
            unstarred.push_back(m.unstarred(g));
            starred.push_back(m.starred(g));
        }
        json data = json::array();
        for (int r = 0; r < payload.rows(); ++r)
            for (int c = 0; c < payload.cols(); ++c) data.push_back(scalar_to_json(payload(r, c)));
        entries.push_back(json{{"unstarred", unstarred},
                               {"starred", starred},
                               {"rows", payload.rows()},
                               {"cols", payload.cols()},
                               {"payload", data}});
    }
    json out = table_to_json(x.degree(), kind, alpha_to_json(alpha), entries);
    out["payload_kind"] = payload_kind_name(x.kind());
    return out;
}

template <class C>
std::string element_to_csv(const Element<C>& x) {
    std::ostringstream out;
    out << "monomial,row,col,value\n";
    for (const auto& [m, payload] : x.terms())
        for (int r = 0; r < payload.rows(); ++r)
            for (int c = 0; c < payload.cols(); ++c) {
                if (scalar_traits<C>::is_zero(payload(r, c))) continue;
                out << "\"" << m.to_string() << "\"," << r << "," << c << ","
                    << scalar_traits<C>::to_string(payload(r, c)) << "\n";
            }
    return out.str();
}

// ---- verification report output ----

inline json report_to_json(const Report& rep) {
    json records = json::array();
    for (const CheckRecord& r : rep.records) {
        records.push_back(json{{"scope", r.scope},
                               {"id", r.id},
                               {"n", r.n},
                               {"alpha", r.alpha.empty() ? json(nullptr) : json(r.alpha)},
                               {"status", check_status_name(r.status)},
                               {"detail", r.detail}});
    }
    size_t fails = rep.failures(), disc = rep.discrepancies();
    return json{{"records", records},
                {"summary",
                 {{"total", rep.records.size()},
                  {"pass", rep.records.size() - fails - disc},
                  {"fail", fails},
                  {"discrepancy", disc}}}};
}

inline std::string csv_escape(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    return out + "\"";
}

inline std::string report_to_csv(const Report& rep) {
    std::ostringstream out;
    out << "scope,id,n,alpha,status,detail\n";
    for (const CheckRecord& r : rep.records)
        out << r.scope << "," << r.id << "," << r.n << "," << csv_escape(r.alpha) << ","
            << check_status_name(r.status) << "," << csv_escape(r.detail) << "\n";
    return out.str();
}

inline std::string report_to_text(const Report& rep) {
    std::ostringstream out;
    for (const CheckRecord& r : rep.records) {
        out << "[" << check_status_name(r.status) << "] " << r.scope << "/" << r.id << " n=" << r.n;
        if (!r.alpha.empty()) out << " " << r.alpha;
        if (!r.detail.empty() && r.status != CheckStatus::Pass) out << " -- " << r.detail;
        out << "\n";
    }
    size_t fails = rep.failures(), disc = rep.discrepancies();
    out << rep.records.size() << " checks: " << (rep.records.size() - fails - disc) << " pass, "
        << fails << " fail, " << disc << " discrepancy\n";
    return out.str();
}

// ---- CLI parameter parsing ----

template <class C>
std::vector<C> parse_alpha(const std::string& text, int n);

template <>
inline std::vector<GaussianRational> parse_alpha<GaussianRational>(const std::string& text, int n) {
    std::vector<GaussianRational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto q = parse_rational(item);
        if (!q) throw std::invalid_argument("alpha entry is not a rational: " + item);
        out.push_back(GaussianRational{*q});
    }
    if (static_cast<int>(out.size()) == 1 && n > 1)
        out.assign(static_cast<size_t>(n), out[0]);  // single value broadcasts
    if (static_cast<int>(out.size()) != n)
        throw std::invalid_argument("alpha needs " + std::to_string(n) + " entries");
    return out;
}

template <>
inline std::vector<Complex64> parse_alpha<Complex64>(const std::string& text, int n) {
    std::vector<Complex64> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (auto q = parse_rational(item)) {
            out.push_back(Complex64(q->get_d(), 0.0));
            continue;
        }
        size_t pos = 0;
        double v = std::stod(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("alpha entry is not a number: " + item);
        out.push_back(Complex64(v, 0.0));
    }
    if (static_cast<int>(out.size()) == 1 && n > 1) out.assign(static_cast<size_t>(n), out[0]);
    if (static_cast<int>(out.size()) != n)
        throw std::invalid_argument("alpha needs " + std::to_string(n) + " entries");
    return out;
}

}  // namespace paragrass
