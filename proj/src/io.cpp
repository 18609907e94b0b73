#include "trimdist/io.hpp"

#include "trimdist/errors.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace trimdist {

namespace {

std::string trim_ws(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

double parse_double(const std::string& s, const std::string& where) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw InvalidInput(where + ": trailing characters in '" + s + "'");
        return v;
    } catch (const InvalidInput&) {
        throw;
    } catch (const std::exception&) {
        throw InvalidInput(where + ": cannot parse number '" + s + "'");
    }
}

} // namespace

std::vector<double> read_sample_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open sample file: " + path);
    std::vector<double> out;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        line = trim_ws(line);
        if (line.empty()) continue;
        if (line.find(',') != std::string::npos)
            throw InvalidInput("sample CSV must hold one value per line: " + path);
        if (first && line == "value") {
            first = false;
            continue;
        }
        first = false;
        out.push_back(parse_double(line, path));
    }
    if (out.empty()) throw InvalidInput("sample CSV is empty: " + path);
    return out;
}

GridFunction read_curve_csv(const std::string& path, Interp interp) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open curve file: " + path);
    std::vector<double> t, v;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        line = trim_ws(line);
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw InvalidInput("curve CSV needs t,value rows: " + path);
        const std::string a = trim_ws(line.substr(0, comma));
        const std::string b = trim_ws(line.substr(comma + 1));
        if (first && a == "t" && b == "value") {
            first = false;
            continue;
        }
        first = false;
        const double tt = parse_double(a, path);
        if (!t.empty() && tt == t.back()) continue; // right-limit row of a jump
        t.push_back(tt);
        v.push_back(parse_double(b, path));
    }
    return GridFunction(std::move(t), std::move(v), interp);
}

void write_curve_csv(std::ostream& os, const GridFunction& f) {
    os << "t,value\n";
    const auto& t = f.nodes();
    const auto& v = f.values();
    for (std::size_t i = 0; i < t.size(); ++i) {
        os << format_double(t[i]) << ',' << format_double(v[i]) << '\n';
        if (f.interp() == Interp::StepLeft && i + 1 < t.size() && v[i + 1] != v[i])
            os << format_double(t[i]) << ',' << format_double(v[i + 1]) << '\n';
    }
}

void write_curve_csv(const std::string& path, const GridFunction& f) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot open output file: " + path);
    write_curve_csv(out, f);
}

std::string format_double(double v) {
    if (std::isnan(v) || std::isinf(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void JsonWriter::separator() {
    if (needs_comma_) out_ += ',';
    needs_comma_ = true;
}

JsonWriter& JsonWriter::begin_object() {
    separator();
    out_ += '{';
    needs_comma_ = false;
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    out_ += '}';
    needs_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    separator();
    out_ += '[';
    needs_comma_ = false;
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    out_ += ']';
    needs_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::key(const std::string& name) {
    separator();
    out_ += '"';
    out_ += name;
    out_ += "\":";
    needs_comma_ = false;
    return *this;
}

JsonWriter& JsonWriter::number(double v) {
    separator();
    out_ += format_double(v);
    return *this;
}

JsonWriter& JsonWriter::integer(long long v) {
    separator();
    out_ += std::to_string(v);
    return *this;
}

JsonWriter& JsonWriter::string(const std::string& v) {
    separator();
    out_ += '"';
    for (char c : v) {
        if (c == '"' || c == '\\') {
            out_ += '\\';
            out_ += c;
        } else if (c == '\n') {
            out_ += "\\n";
        } else {
            out_ += c;
        }
    }
    out_ += '"';
    return *this;
}

JsonWriter& JsonWriter::null() {
    separator();
    out_ += "null";
    return *this;
}

JsonWriter& JsonWriter::field(const std::string& name, double v) {
    return key(name).number(v);
}

JsonWriter& JsonWriter::field(const std::string& name, long long v) {
    return key(name).integer(v);
}

JsonWriter& JsonWriter::field(const std::string& name, const std::string& v) {
    return key(name).string(v);
}

} // namespace trimdist
