#include "sweep_io.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace qbm::cli {

std::vector<double> parse_range(const std::string& text) {
    std::vector<double> out;
    if (text.find(',') != std::string::npos || text.find(':') == std::string::npos) {
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (!tok.empty()) out.push_back(std::stod(tok));
        }
        if (out.empty()) throw std::invalid_argument("empty range: '" + text + "'");
        return out;
    }

    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ':')) parts.push_back(tok);
    if (parts.size() < 3 || parts.size() > 4)
        throw std::invalid_argument("range must be start:stop:count[:log], got '" + text + "'");
    const double start = std::stod(parts[0]);
    const double stop = std::stod(parts[1]);
    const long count = std::stol(parts[2]);
    const bool log_spaced = parts.size() == 4 && parts[3] == "log";
    if (parts.size() == 4 && !log_spaced)
        throw std::invalid_argument("range suffix must be 'log', got '" + parts[3] + "'");
    if (count < 1) throw std::invalid_argument("range count must be >= 1");
    if (log_spaced && (start <= 0.0 || stop <= 0.0))
        throw std::invalid_argument("log range requires positive endpoints");

    out.reserve(count);
    if (count == 1) {
        out.push_back(start);
        return out;
    }
    for (long i = 0; i < count; ++i) {
        const double u = static_cast<double>(i) / (count - 1);
        out.push_back(log_spaced ? start * std::pow(stop / start, u)
                                 : start + (stop - start) * u);
    }
    return out;
}

std::map<std::string, std::string> read_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open spec file: " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!key.empty()) kv[key] = value;
    }
    return kv;
}

double UniformStream::log_uniform(double lo, double hi) {
    return lo * std::pow(hi / lo, next());
}

std::string format_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void Table::add_row(const std::vector<double>& values) {
    std::vector<std::string> row;
    row.reserve(values.size());
    for (double v : values) row.push_back(format_full(v));
    rows.push_back(std::move(row));
}

std::string Table::to_csv() const {
    std::string out;
    for (const auto& h : header_lines) out += "# " + h + "\n";
    for (std::size_t i = 0; i < columns.size(); ++i) {
        out += columns[i];
        out += (i + 1 < columns.size()) ? ',' : '\n';
    }
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out += row[i];
            out += (i + 1 < row.size()) ? ',' : '\n';
        }
    }
    for (const auto& f : footer_lines) out += "# " + f + "\n";
    return out;
}

std::string Table::to_json() const {
    nlohmann::json j;
    j["header"] = header_lines;
    j["columns"] = columns;
    auto& rows_json = j["rows"] = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& cell : row) {
            if (cell.empty())
                r.push_back(nullptr);
            else
                r.push_back(std::stod(cell));
        }
        rows_json.push_back(std::move(r));
    }
    j["footer"] = footer_lines;
    return j.dump(2) + "\n";
}

std::optional<std::pair<std::size_t, std::string>> parallel_for(
    std::size_t n, const std::function<void(std::size_t)>& f) {
    const unsigned workers =
        std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()), 8u);

    std::vector<std::string> errors(n);
    std::vector<char> failed(n, 0);
    auto guarded = [&](std::size_t i) {
        try {
            f(i);
        } catch (const std::exception& e) {
            errors[i] = e.what();
            failed[i] = 1;
        }
    };

    if (workers <= 1 || n < 4) {
        for (std::size_t i = 0; i < n; ++i) guarded(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < n; i = next++) guarded(i);
            });
        }
        for (auto& t : pool) t.join();
    }

    for (std::size_t i = 0; i < n; ++i)
        if (failed[i]) return std::make_pair(i, errors[i]);
    return std::nullopt;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << content;
}

}  // namespace qbm::cli
