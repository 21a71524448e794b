#include "common/beta.hpp"

#include <charconv>
#include <cstdio>

namespace janus {

std::string Beta::to_string() const {
    if (infinite_) return "inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, value_);
    return std::string(buf, res.ptr);
}

Beta parse_beta(const std::string& text) {
    if (text == "inf" || text == "infinity" || text == "Inf") return Beta::infinite();
    double v = 0.0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size())
        throw DomainError("invalid beta '" + text + "'");
    return Beta(v);
}

}  // namespace janus
