#include "bench/trajectory_io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>

#include "common/error.hpp"

namespace janus {

namespace {

std::string number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_double(const std::string& text, std::size_t line) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used == text.size()) return v;
    } catch (const std::exception&) {
    }
    throw ParseError("bad number '" + text + "'", line);
}

}  // namespace

void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory) {
    out << "sweep,energy,magnetization\n";
    for (const Sample& s : trajectory.samples()) {
        out << s.sweep << ',' << number(s.energy) << ',';
        if (s.magnetization) out << number(*s.magnetization);
        out << '\n';
    }
}

void write_trajectory_meta(std::ostream& out, const Trajectory& trajectory) {
    for (const auto& [k, v] : trajectory.metadata()) out << k << '=' << v << '\n';
}

void save_trajectory(const std::string& path, const Trajectory& trajectory) {
    {
        std::ofstream csv(path, std::ios::binary);
        if (!csv) throw IoError("cannot open '" + path + "' for writing");
        write_trajectory_csv(csv, trajectory);
        if (!csv.flush()) throw IoError("failed writing '" + path + "'");
    }
    std::ofstream meta(path + ".meta", std::ios::binary);
    if (!meta) throw IoError("cannot open '" + path + ".meta' for writing");
    write_trajectory_meta(meta, trajectory);
    if (!meta.flush()) throw IoError("failed writing '" + path + ".meta'");
}

Trajectory read_trajectory_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "sweep,energy,magnetization")
        throw ParseError("expected header 'sweep,energy,magnetization'", 1);
    Trajectory t;
    for (std::size_t number = 2; std::getline(in, line); ++number) {
        if (line.empty()) continue;
        const auto c1 = line.find(',');
        const auto c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
        if (c2 == std::string::npos) throw ParseError("expected three comma-separated fields", number);
        Sample s;
        const std::string sweep = line.substr(0, c1);
        if (sweep.empty() || sweep.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad sweep index '" + sweep + "'", number);
        s.sweep = std::stoull(sweep);
        s.energy = parse_double(line.substr(c1 + 1, c2 - c1 - 1), number);
        const std::string m = line.substr(c2 + 1);
        if (!m.empty()) s.magnetization = parse_double(m, number);
        try {
            t.add(s);
        } catch (const DomainError& e) {
            throw ParseError(e.what(), number);
        }
    }
    return t;
}

}  // namespace janus
