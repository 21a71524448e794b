#include "model/couplings.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include "common/error.hpp"
#include "common/hash.hpp"
#include "prng/parisi_rapuano.hpp"

namespace janus {

CouplingSet::CouplingSet(LatticeGeometry geometry, int q, bool with_permutations)
    : geometry_(geometry), q_(q), signs_(geometry.bond_count(), 1), occupancy_(geometry.site_count(), 1) {
    if (q < 2 || q > kMaxStates) throw DomainError("q must lie in [2, 32], got " + std::to_string(q));
    if (with_permutations) {
        perms_.resize(geometry.bond_count() * static_cast<std::size_t>(q));
        for (std::size_t b = 0; b < geometry.bond_count(); ++b)
            for (int s = 0; s < q; ++s) perms_[b * q + s] = static_cast<std::uint8_t>(s);
    }
}

void CouplingSet::set_coupling(std::size_t bond, int value) {
    if (bond >= signs_.size()) throw DomainError("bond index out of range");
    if (value != 1 && value != -1) throw DomainError("couplings are +/-1, got " + std::to_string(value));
    signs_[bond] = static_cast<std::int8_t>(value);
}

void CouplingSet::set_permutation(std::size_t bond, std::span<const std::uint8_t> perm) {
    if (!has_permutations()) throw DomainError("coupling set carries no permutations");
    if (bond >= signs_.size()) throw DomainError("bond index out of range");
    if (perm.size() != static_cast<std::size_t>(q_)) throw DomainError("permutation length differs from q");
    std::vector<bool> seen(q_, false);
    for (auto v : perm) {
        if (v >= q_ || seen[v]) throw DomainError("not a permutation of 0..q-1");
        seen[v] = true;
    }
    std::copy(perm.begin(), perm.end(), perms_.begin() + static_cast<std::ptrdiff_t>(bond * q_));
}

void CouplingSet::set_occupancy(std::size_t site, int value) {
    if (site >= occupancy_.size()) throw DomainError("site index out of range");
    if (value != 0 && value != 1) throw DomainError("occupancy must be 0 or 1");
    occupancy_[site] = static_cast<std::uint8_t>(value);
}

bool CouplingSet::diluted() const noexcept {
    return std::any_of(occupancy_.begin(), occupancy_.end(), [](std::uint8_t e) { return e == 0; });
}

double CouplingSet::field() const noexcept {
    return std::ldexp(static_cast<double>(field_fixed_), -kFieldFractionBits);
}

void CouplingSet::set_field(double h) {
    if (!std::isfinite(h) || std::fabs(h) > kMaxFieldMagnitude)
        throw DomainError("field must be finite with |h| <= 64");
    field_fixed_ = std::llround(std::ldexp(h, kFieldFractionBits));
}

bool CouplingSet::has_negative_couplings() const noexcept {
    return std::any_of(signs_.begin(), signs_.end(), [](std::int8_t j) { return j < 0; });
}

std::uint64_t couplings_fingerprint(const CouplingSet& couplings) noexcept {
    const auto bytes = [](auto span) {
        return std::string_view(reinterpret_cast<const char*>(span.data()), span.size());
    };
    std::uint64_t h = fnv1a64(bytes(couplings.couplings()));
    h = fnv1a64(bytes(couplings.permutations()), h);
    h = fnv1a64(bytes(couplings.occupancies()), h);
    const auto field = static_cast<std::uint64_t>(couplings.field_fixed());
    return fnv1a64_words(std::span<const std::uint64_t>(&field, 1), h);
}

CouplingSet generate_couplings(ModelKind kind, const LatticeGeometry& geometry, std::uint64_t seed,
                               const CouplingParams& params) {
    const int q = kind == ModelKind::IsingEA ? 2 : params.q;
    if (kind == ModelKind::IsingEA && params.q != 2)
        throw DomainError("Ising model has q = 2");
    if (!(params.occupation >= 0.0 && params.occupation <= 1.0))
        throw DomainError("occupation probability must lie in [0, 1]");
    if (params.field != 0.0 && kind != ModelKind::IsingEA)
        throw DomainError("an external field is only defined for the Ising model");

    CouplingSet set(geometry, q, kind == ModelKind::GlassyPotts);

    if (has_coupling_signs(kind) && !params.ferromagnetic) {
        std::uint64_t state = prng::stream_seed(seed, 0);
        for (std::size_t b = 0; b < geometry.bond_count(); ++b)
            set.set_coupling(b, (prng::splitmix64_next(state) >> 63) ? -1 : 1);
    }

    if (kind == ModelKind::GlassyPotts) {
        std::uint64_t state = prng::stream_seed(seed, 1);
        std::vector<std::uint8_t> perm(q);
        for (std::size_t b = 0; b < geometry.bond_count(); ++b) {
            std::iota(perm.begin(), perm.end(), std::uint8_t{0});
            for (int i = q - 1; i > 0; --i) {
                const auto j = static_cast<int>(prng::bounded(state, static_cast<std::uint64_t>(i) + 1));
                std::swap(perm[i], perm[j]);
            }
            set.set_permutation(b, perm);
        }
    }

    if (params.occupation < 1.0) {
        std::uint64_t state = prng::stream_seed(seed, 2);
        for (std::size_t s = 0; s < geometry.site_count(); ++s) {
            const double u = std::ldexp(static_cast<double>(prng::splitmix64_next(state) >> 11), -53);
            set.set_occupancy(s, u < params.occupation ? 1 : 0);
        }
    }

    set.set_field(params.field);
    return set;
}

void write_couplings(std::ostream& out, ModelKind kind, const CouplingSet& couplings, std::uint64_t seed) {
    const auto& g = couplings.geometry();
    const bool perms = kind == ModelKind::GlassyPotts;
    if (perms && !couplings.has_permutations())
        throw DomainError("glassy Potts couplings require permutations");
    out << "janus-couplings v1 kind=" << to_string(kind) << " L=" << g.side() << " q=" << couplings.q()
        << " seed=" << seed << '\n';
    static constexpr char kAxisName[3] = {'x', 'y', 'z'};
    std::string line;
    for (int z = 0; z < g.side(); ++z)
        for (int y = 0; y < g.side(); ++y)
            for (int x = 0; x < g.side(); ++x) {
                const std::size_t site = g.index({x, y, z});
                for (int a = 0; a < 3; ++a) {
                    const std::size_t bond = LatticeGeometry::bond_index(site, static_cast<Axis>(a));
                    line = std::to_string(x) + ' ' + std::to_string(y) + ' ' + std::to_string(z) + ' ' +
                           kAxisName[a] + ' ';
                    if (perms) {
                        const auto p = couplings.permutation(bond);
                        for (std::size_t i = 0; i < p.size(); ++i) {
                            if (i) line += ',';
                            line += std::to_string(p[i]);
                        }
                    } else {
                        line += std::to_string(couplings.coupling(bond));
                    }
                    line += '\n';
                    out << line;
                }
            }
}

namespace {

template <class T>
T parse_number(std::string_view text, std::size_t line_no, const char* what) {
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    T value{};
    auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size())
        throw ParseError(std::string("invalid ") + what + " '" + std::string(text) + "'", line_no);
    return value;
}

std::string_view header_value(const std::string& token, std::string_view key, std::size_t line_no) {
    if (token.size() <= key.size() + 1 || token.compare(0, key.size(), key) != 0 || token[key.size()] != '=')
        throw ParseError("expected " + std::string(key) + "=<value>, got '" + token + "'", line_no);
    return std::string_view(token).substr(key.size() + 1);
}

}  // namespace

CouplingFile read_couplings(std::istream& in) {
    std::string line;
    std::size_t line_no = 1;
    if (!std::getline(in, line)) throw ParseError("empty couplings file", 0);

    std::istringstream head(line);
    std::string magic, version, kind_tok, l_tok, q_tok, seed_tok, extra;
    head >> magic >> version >> kind_tok >> l_tok >> q_tok >> seed_tok;
    if (magic != "janus-couplings" || version != "v1") throw ParseError("missing 'janus-couplings v1' header", 1);
    if (seed_tok.empty() || (head >> extra)) throw ParseError("malformed header", 1);

    const auto kind = parse_model_kind(header_value(kind_tok, "kind", 1));
    if (!kind) throw ParseError("unknown model kind in header", 1);
    const int side = parse_number<int>(header_value(l_tok, "L", 1), 1, "L");
    const int q = parse_number<int>(header_value(q_tok, "q", 1), 1, "q");
    const auto seed = parse_number<std::uint64_t>(header_value(seed_tok, "seed", 1), 1, "seed");

    try {
        LatticeGeometry geometry(side);
        CouplingFile file{*kind, seed, CouplingSet(geometry, q, *kind == ModelKind::GlassyPotts)};
        const bool perms = *kind == ModelKind::GlassyPotts;
        std::vector<std::uint8_t> perm;

        for (std::size_t bond = 0; bond < geometry.bond_count(); ++bond) {
            ++line_no;
            if (!std::getline(in, line)) throw ParseError("truncated file: expected bond line", line_no);
            std::istringstream ls(line);
            std::string xs, ys, zs, dir, value;
            ls >> xs >> ys >> zs >> dir >> value;
            if (value.empty() || (ls >> extra)) throw ParseError("expected 'x y z dir value'", line_no);
            const Coord c{parse_number<int>(xs, line_no, "x"), parse_number<int>(ys, line_no, "y"),
                          parse_number<int>(zs, line_no, "z")};
            const int axis = dir == "x" ? 0 : dir == "y" ? 1 : dir == "z" ? 2 : -1;
            if (axis < 0) throw ParseError("direction must be x, y or z", line_no);
            const std::size_t site = bond / 3;
            if (c.x < 0 || c.y < 0 || c.z < 0 || c.x >= side || c.y >= side || c.z >= side ||
                geometry.index(c) != site || axis != static_cast<int>(bond % 3))
                throw ParseError("bond out of canonical order", line_no);
            if (perms) {
                perm.clear();
                std::string_view rest(value);
                while (true) {
                    const auto comma = rest.find(',');
                    perm.push_back(parse_number<std::uint8_t>(rest.substr(0, comma), line_no, "permutation entry"));
                    if (comma == std::string_view::npos) break;
                    rest.remove_prefix(comma + 1);
                }
                try {
                    file.couplings.set_permutation(bond, perm);
                } catch (const DomainError& e) {
                    throw ParseError(e.what(), line_no);
                }
            } else {
                const int j = parse_number<int>(value, line_no, "coupling");
                if (j != 1 && j != -1) throw ParseError("coupling must be +1 or -1", line_no);
                if (j != 1 && !has_coupling_signs(*kind))
                    throw ParseError("model kind does not carry coupling signs", line_no);
                file.couplings.set_coupling(bond, j);
            }
        }
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty()) throw ParseError("unexpected trailing content", line_no);
        }
        return file;
    } catch (const DomainError& e) {
        throw ParseError(e.what(), 1);
    }
}

}  // namespace janus
