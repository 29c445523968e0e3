#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace qbm::cli {

// "start:stop:count" (linear), "start:stop:count:log", or "a,b,c" explicit.
std::vector<double> parse_range(const std::string& text);

// key=value recipe file; '#' starts a comment.  Flags given on the command
// line take precedence over recipe values.
std::map<std::string, std::string> read_spec_file(const std::string& path);

// Deterministic [0,1) stream from mt19937_64.  The engine sequence is fully
// specified by the standard; the shift-and-scale mapping avoids the
// implementation-defined std distributions, so identical seeds give identical
// output bytes.
class UniformStream {
public:
    explicit UniformStream(std::uint64_t seed) : engine_(seed) {}
    double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double log_uniform(double lo, double hi);

private:
    std::mt19937_64 engine_;
};

// Table with '#' header lines, formatted to full precision (%.17g); cells may
// be empty.  Serialized as CSV or as a JSON object {header, columns, rows}.
struct Table {
    std::vector<std::string> header_lines;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> footer_lines;

    void add_row(const std::vector<double>& values);
    std::string to_csv() const;
    std::string to_json() const;
};

std::string format_full(double v);

// Runs f(0..n-1) on a small worker pool; results land in caller-owned slots,
// so output order is deterministic.  Returns the first error (index, message)
// if any f threw.
std::optional<std::pair<std::size_t, std::string>> parallel_for(
    std::size_t n, const std::function<void(std::size_t)>& f);

// Writes to path, or stdout when path is empty.
void write_output(const std::string& path, const std::string& content);

}  // namespace qbm::cli
