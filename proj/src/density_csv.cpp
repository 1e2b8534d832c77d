#include "qphase/density_csv.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

namespace qphase {

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return {};
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

bool parse_double(const std::string& field, double& out) {
    const std::string t = strip(field);
    if (t.empty())
        return false;
    char* end = nullptr;
    out = std::strtod(t.c_str(), &end);
    return end == t.c_str() + t.size() && std::isfinite(out);
}

std::vector<std::string> split_commas(const std::string& line) {
    std::vector<std::string> fields;
    size_t start = 0;
    while (true) {
        const size_t pos = line.find(',', start);
        if (pos == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

} // namespace

GridDensity load_grid_density_csv(std::istream& in) {
    struct Row {
        double q, p, rho;
        int line;
    };

    std::vector<Row> rows;
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = strip(line);
        if (t.empty() || t[0] == '#')
            continue;
        if (!header_seen) {
            auto fields = split_commas(t);
            if (fields.size() != 3 || strip(fields[0]) != "q" || strip(fields[1]) != "p" ||
                strip(fields[2]) != "rho")
                throw CsvError(line_no, "expected header `q,p,rho`");
            header_seen = true;
            continue;
        }
        auto fields = split_commas(t);
        if (fields.size() != 3)
            throw CsvError(line_no, "expected 3 comma-separated fields");
        Row r;
        r.line = line_no;
        if (!parse_double(fields[0], r.q) || !parse_double(fields[1], r.p) ||
            !parse_double(fields[2], r.rho))
            throw CsvError(line_no, "field is not a finite number");
        rows.push_back(r);
    }
    if (!header_seen)
        throw CsvError(line_no, "missing header `q,p,rho`");
    if (rows.size() < 4)
        throw CsvError(line_no, "need at least a 2x2 grid");

    // p cycles fastest: the first block shares q with row 0
    size_t np = 1;
    while (np < rows.size() && rows[np].q == rows[0].q)
        ++np;
    if (np < 2 || rows.size() % np != 0)
        throw CsvError(rows[np < rows.size() ? np : rows.size() - 1].line,
                       "rows do not form a rectangular q-then-p grid");
    const size_t nq = rows.size() / np;
    if (nq < 2)
        throw CsvError(rows.back().line, "need at least 2 distinct q values");

    const double q0 = rows.front().q;
    const double q1 = rows.back().q;
    const double p0 = rows.front().p;
    const double p1 = rows[np - 1].p;
    const double q_tol = 1e-9 * std::max(1.0, std::fabs(q1 - q0));
    const double p_tol = 1e-9 * std::max(1.0, std::fabs(p1 - p0));
    if (!(q1 > q0) || !(p1 > p0))
        throw CsvError(rows.back().line, "grid coordinates must increase");

    std::vector<double> values(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        const size_t iq = i / np;
        const size_t ip = i % np;
        const double q_expect = q0 + (q1 - q0) * iq / (nq - 1);
        const double p_expect = p0 + (p1 - p0) * ip / (np - 1);
        if (std::fabs(rows[i].q - q_expect) > q_tol)
            throw CsvError(rows[i].line, "q breaks the uniform row-major grid");
        if (std::fabs(rows[i].p - p_expect) > p_tol)
            throw CsvError(rows[i].line, "p breaks the uniform row-major grid");
        values[i] = rows[i].rho;
    }
    return make_grid_density(q0, q1, p0, p1, static_cast<int>(nq), static_cast<int>(np),
                             std::move(values));
}

GridDensity load_grid_density_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw CsvError(0, "cannot open file " + path);
    return load_grid_density_csv(in);
}

void write_grid_density_csv(std::ostream& out, const GridDensity& d) {
    out << "q,p,rho\n";
    char buf[96];
    for (int iq = 0; iq < d.nq; ++iq) {
        for (int ip = 0; ip < d.np; ++ip) {
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", d.q_at(iq), d.p_at(ip),
                          d.value(iq, ip));
            out << buf;
        }
    }
}

} // namespace qphase
