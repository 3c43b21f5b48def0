#include "rmac/io.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace rmac::io {

using nlohmann::json;

namespace {

int integer_field(const json& doc, const std::string& path)
{
    if (!doc.is_number_integer())
        throw std::invalid_argument(path + ": expected an integer");
    const auto value = doc.get<std::int64_t>();
    if (value < std::numeric_limits<int>::min() || value > std::numeric_limits<int>::max())
        throw std::invalid_argument(path + ": integer out of range");
    return static_cast<int>(value);
}

std::string csv_line(const std::vector<std::string>& cells)
{
    std::string line;
    for (std::size_t t = 0; t < cells.size(); ++t) {
        if (t > 0)
            line += ',';
        line += cells[t];
    }
    return line + '\n';
}

std::string json_optional(const std::optional<double>& value)
{
    return value ? format_double(*value) : "null";
}

std::string json_string(const std::string& text)
{
    return json(text).dump();
}

} // namespace

json complex_to_json(const SimplicialComplex& complex)
{
    json facets = json::array();
    for (VertexSet facet : complex.facets())
        facets.push_back(facet.labels());
    return json{{"n", complex.n()}, {"facets", facets}};
}

SimplicialComplex complex_from_json(const json& doc)
{
    if (!doc.is_object())
        throw std::invalid_argument("complex: expected a JSON object");
    if (!doc.contains("n"))
        throw std::invalid_argument("n: missing");
    const int n = integer_field(doc["n"], "n");
    if (!doc.contains("facets"))
        throw std::invalid_argument("facets: missing");
    const json& list = doc["facets"];
    if (!list.is_array())
        throw std::invalid_argument("facets: expected an array");
    std::vector<std::vector<int>> facets;
    for (std::size_t f = 0; f < list.size(); ++f) {
        const std::string path = "facets[" + std::to_string(f) + "]";
        if (!list[f].is_array())
            throw std::invalid_argument(path + ": expected an array of vertex labels");
        std::vector<int> facet;
        for (std::size_t v = 0; v < list[f].size(); ++v)
            facet.push_back(integer_field(list[f][v], path + "[" + std::to_string(v) + "]"));
        facets.push_back(std::move(facet));
    }
    try {
        return build_complex(n, facets);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("complex: ") + e.what());
    }
}

SimplicialComplex load_complex(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open complex file '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("complex file '" + path + "' is not valid JSON: " + e.what());
    }
    return complex_from_json(doc);
}

json table_to_json(const BigradedTable& table)
{
    json entries = json::array();
    for (const auto& [key, beta] : table.entries_by_j())
        entries.push_back(json{{"i", key.second}, {"j", key.first}, {"beta", beta}});
    return json{{"n", table.n()}, {"field", table.field().to_string()}, {"entries", entries}};
}

BigradedTable table_from_json(const json& doc)
{
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("field") || !doc.contains("entries"))
        throw std::invalid_argument("table: expected n, field and entries");
    BigradedTable table(integer_field(doc["n"], "n"), FieldSpec::parse(doc["field"].get<std::string>()));
    for (std::size_t t = 0; t < doc["entries"].size(); ++t) {
        const json& e = doc["entries"][t];
        const std::string path = "entries[" + std::to_string(t) + "]";
        table.add(integer_field(e.at("i"), path + ".i"), integer_field(e.at("j"), path + ".j"),
                  e.at("beta").get<std::uint64_t>());
    }
    return table;
}

std::string to_string(PolyKind kind)
{
    switch (kind) {
    case PolyKind::F: return "f";
    case PolyKind::G: return "g";
    case PolyKind::Variance: return "var";
    case PolyKind::Covariance: return "cov";
    }
    return "?";
}

PolyKind parse_poly_kind(const std::string& text)
{
    if (text == "f")
        return PolyKind::F;
    if (text == "g")
        return PolyKind::G;
    if (text == "var")
        return PolyKind::Variance;
    if (text == "cov")
        return PolyKind::Covariance;
    throw std::invalid_argument("kind must be one of f, g, var, cov (got '" + text + "')");
}

json poly_to_json(const IntPolynomial& poly, int d, int j, PolyKind kind, std::optional<int> m,
                  const FieldSpec& field)
{
    json coeffs = json::array();
    for (const mpz_class& c : poly.coeffs()) {
        if (c.fits_slong_p())
            coeffs.push_back(static_cast<std::int64_t>(c.get_si()));
        else
            coeffs.push_back(c.get_str());
    }
    json doc{{"d", d}, {"j", j}, {"kind", to_string(kind)}, {"m", nullptr}, {"field", field.to_string()},
             {"coeffs", coeffs}};
    if (m)
        doc["m"] = *m;
    return doc;
}

std::string format_double(double value)
{
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows)
{
    std::string out = "d,j,i,p,n,trials,mean,std_err,limit,abs_dev\n";
    for (const auto& r : rows)
        out += csv_line({std::to_string(r.d), std::to_string(r.j), std::to_string(r.i), format_double(r.p),
                         std::to_string(r.n), std::to_string(r.trials), format_double(r.mean),
                         format_double(r.std_err), format_double(r.limit), format_double(r.abs_dev)});
    return out;
}

std::string convergence_json(const std::vector<ConvergenceRow>& rows)
{
    std::ostringstream os;
    os << "{\"rows\":[";
    for (std::size_t t = 0; t < rows.size(); ++t) {
        const auto& r = rows[t];
        os << (t ? "," : "") << "\n  {\"d\":" << r.d << ",\"j\":" << r.j << ",\"i\":" << r.i
           << ",\"p\":" << format_double(r.p) << ",\"n\":" << r.n << ",\"trials\":" << r.trials
           << ",\"mean\":" << format_double(r.mean) << ",\"std_err\":" << format_double(r.std_err)
           << ",\"limit\":" << format_double(r.limit) << ",\"abs_dev\":" << format_double(r.abs_dev) << "}";
    }
    os << "\n]}\n";
    return os.str();
}

std::string variance_csv(const VarianceScaling& scaling)
{
    std::string out = "d,j,i,p,n,trials,mean,variance,excluded\n";
    for (const auto& r : scaling.rows)
        out += csv_line({std::to_string(r.d), std::to_string(r.j), std::to_string(r.i), format_double(r.p),
                         std::to_string(r.n), std::to_string(r.trials), format_double(r.mean),
                         format_double(r.variance), r.excluded ? "1" : "0"});
    return out;
}

std::string variance_json(const VarianceScaling& scaling)
{
    std::ostringstream os;
    os << "{\"rows\":[";
    for (std::size_t t = 0; t < scaling.rows.size(); ++t) {
        const auto& r = scaling.rows[t];
        os << (t ? "," : "") << "\n  {\"d\":" << r.d << ",\"j\":" << r.j << ",\"i\":" << r.i
           << ",\"p\":" << format_double(r.p) << ",\"n\":" << r.n << ",\"trials\":" << r.trials
           << ",\"mean\":" << format_double(r.mean) << ",\"variance\":" << format_double(r.variance)
           << ",\"excluded\":" << (r.excluded ? "true" : "false") << "}";
    }
    os << "\n],\"fits\":[";
    for (std::size_t t = 0; t < scaling.fits.size(); ++t) {
        const auto& f = scaling.fits[t];
        os << (t ? "," : "") << "\n  {\"p\":" << format_double(f.p) << ",\"slope\":" << json_optional(f.slope)
           << ",\"points\":" << f.points << ",\"diagnostic\":" << json_string(f.diagnostic) << "}";
    }
    os << "\n]}\n";
    return os.str();
}

std::string covariance_csv(const CovarianceCheck& c)
{
    std::string out = "d,j,i,m,n,p,trials,covariance,std_err,radius,exact,consistent\n";
    out += csv_line({std::to_string(c.d), std::to_string(c.j), std::to_string(c.i), std::to_string(c.m),
                     std::to_string(c.n), format_double(c.p), std::to_string(c.trials), format_double(c.covariance),
                     format_double(c.std_err), format_double(c.radius), c.exact ? format_double(*c.exact) : "",
                     c.consistent() ? "1" : "0"});
    return out;
}

std::string covariance_json(const CovarianceCheck& c)
{
    std::ostringstream os;
    os << "{\"d\":" << c.d << ",\"j\":" << c.j << ",\"i\":" << c.i << ",\"m\":" << c.m << ",\"n\":" << c.n
       << ",\"p\":" << format_double(c.p) << ",\"trials\":" << c.trials
       << ",\"covariance\":" << format_double(c.covariance) << ",\"std_err\":" << format_double(c.std_err)
       << ",\"radius\":" << format_double(c.radius) << ",\"exact\":" << json_optional(c.exact)
       << ",\"consistent\":" << (c.consistent() ? "true" : "false") << "}\n";
    return os.str();
}

} // namespace rmac::io
