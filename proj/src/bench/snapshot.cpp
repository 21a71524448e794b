#include "bench/snapshot.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "common/error.hpp"

namespace janus {

namespace {

constexpr char kDigits[] = "0123456789abcdefghijklmnopqrstuv";

int digit_value(char c) noexcept {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'v') return c - 'a' + 10;
    return -1;
}

int parse_int(const std::string& text, const char* what, std::size_t line) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(text, &used);
        if (used == text.size()) return v;
    } catch (const std::exception&) {
    }
    throw ParseError(std::string("bad ") + what + " '" + text + "'", line);
}

}  // namespace

void write_snapshot(std::ostream& out, ModelKind kind, const SpinConfig& config) {
    if (config.domain() != domain_of(kind)) throw DomainError("snapshot: configuration does not match model kind");
    const auto& g = config.geometry();
    const int l = g.side();
    out << "janus-snap v1 " << to_string(kind) << ' ' << l << ' ' << config.q() << '\n';
    std::string row(static_cast<std::size_t>(l), '0');
    std::size_t site = 0;
    for (int z = 0; z < l; ++z)
        for (int y = 0; y < l; ++y) {
            for (int x = 0; x < l; ++x) row[static_cast<std::size_t>(x)] = kDigits[config.digit(site++)];
            out << row << '\n';
        }
    if (!out) throw IoError("snapshot: write failed");
}

Snapshot read_snapshot(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty snapshot (missing header)", 1);
    std::istringstream header(line);
    std::string magic, version, kind_name, side_text, q_text, extra;
    header >> magic >> version >> kind_name >> side_text >> q_text;
    if (magic != "janus-snap") throw ParseError("not a snapshot file (expected 'janus-snap')", 1);
    if (version != "v1") throw ParseError("unsupported snapshot version '" + version + "'", 1);
    if (q_text.empty()) throw ParseError("header needs kind, L and q", 1);
    if (header >> extra) throw ParseError("unexpected trailing header text '" + extra + "'", 1);
    const auto kind = parse_model_kind(kind_name);
    if (!kind) throw ParseError("unknown model kind '" + kind_name + "'", 1);
    const int side = parse_int(side_text, "lattice side", 1);
    const int q = parse_int(q_text, "state count", 1);
    if (side < 2 || side > 1024) throw ParseError("lattice side out of range", 1);
    if (q < 2 || q > kMaxStates) throw ParseError("state count out of range", 1);
    if (*kind == ModelKind::IsingEA && q != 2) throw ParseError("Ising snapshot needs q = 2", 1);

    SpinConfig config(LatticeGeometry(side), domain_of(*kind), q);
    const auto rows = static_cast<std::size_t>(side) * static_cast<std::size_t>(side);
    std::size_t site = 0;
    for (std::size_t r = 0; r < rows; ++r) {
        const std::size_t number = r + 2;
        if (!std::getline(in, line)) throw ParseError("truncated snapshot: expected " + std::to_string(rows) +
                                                          " rows, got " + std::to_string(r), number);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.size() != static_cast<std::size_t>(side))
            throw ParseError("row has " + std::to_string(line.size()) + " digits, expected " + std::to_string(side),
                             number);
        for (char c : line) {
            const int d = digit_value(c);
            if (d < 0 || d >= q) throw ParseError(std::string("invalid digit '") + c + "' for q = " + std::to_string(q), number);
            config.set_digit(site++, d);
        }
    }
    for (std::size_t number = rows + 2; std::getline(in, line); ++number)
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            throw ParseError("unexpected content after the last row", number);
    return {*kind, std::move(config)};
}

}  // namespace janus
