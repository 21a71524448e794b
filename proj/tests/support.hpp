#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>

#include "bench/snapshot.hpp"
#include "model/couplings.hpp"
#include "model/model.hpp"

namespace janus::test {

inline std::string data_path(const std::string& name) { return std::string(JANUS_TEST_DATA) + "/" + name; }

inline std::ifstream open_data(const std::string& name) {
    std::ifstream in(data_path(name));
    if (!in) throw std::runtime_error("missing test data " + name);
    return in;
}

inline CouplingFile load_couplings(const std::string& tag) {
    auto in = open_data(tag + ".couplings");
    return read_couplings(in);
}

inline ModelSpec load_model(const std::string& tag, Beta beta) {
    CouplingFile f = load_couplings(tag);
    return ModelSpec(f.kind, beta, std::make_shared<const CouplingSet>(std::move(f.couplings)));
}

inline SpinConfig load_snapshot(const std::string& name) {
    auto in = open_data(name);
    return read_snapshot(in).config;
}

/// `tag beta observable value` lines; beta "-" for configuration energies.
inline double oracle_value(const std::string& tag, const std::string& beta, const std::string& observable) {
    auto in = open_data("oracle_values.txt");
    std::string t, b, o, v;
    while (in >> t >> b >> o >> v)
        if (t == tag && b == beta && o == observable) return std::stod(v);
    throw std::runtime_error("no oracle value for " + tag + " " + beta + " " + observable);
}

}  // namespace janus::test
