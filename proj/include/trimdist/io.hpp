#ifndef TRIMDIST_IO_HPP
#define TRIMDIST_IO_HPP

#include "trimdist/grid_function.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace trimdist {

// Sample CSV: one numeric value per line, optional header "value". Lines
// containing commas are rejected (values must be newline-separated).
std::vector<double> read_sample_csv(const std::string& path);

// Curve CSV: header "t,value", then rows of t,value with t nondecreasing.
// Duplicate t rows (both one-sided limits at a discontinuity, left limit
// first) collapse to the first occurrence, which carries the function value
// under left-continuous semantics.
GridFunction read_curve_csv(const std::string& path, Interp interp);

// Writes a curve with both one-sided limit rows at discontinuities
// (duplicate t allowed, left limit first). Numbers use 17 significant
// digits.
void write_curve_csv(std::ostream& os, const GridFunction& f);
void write_curve_csv(const std::string& path, const GridFunction& f);

// Minimal JSON emitter with stable key order and 17-significant-digit
// numbers, so identical inputs produce byte-identical output.
class JsonWriter {
public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& key(const std::string& name);
    JsonWriter& number(double v);
    JsonWriter& integer(long long v);
    JsonWriter& string(const std::string& v);
    JsonWriter& null();
    JsonWriter& begin_array();
    JsonWriter& end_array();

    JsonWriter& field(const std::string& name, double v);
    JsonWriter& field(const std::string& name, long long v);
    JsonWriter& field(const std::string& name, const std::string& v);

    const std::string& str() const { return out_; }

private:
    void separator();
    std::string out_;
    bool needs_comma_ = false;
};

std::string format_double(double v); // %.17g with inf/nan mapped to JSON null

} // namespace trimdist

#endif
