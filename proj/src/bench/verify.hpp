#pragma once

#include <functional>
#include <string>
#include <vector>

namespace janus {

/// Deliberate corruptions used to show the suite catches broken constants.
enum class VerifyFault { None, HeatBathTable };

struct VerifyCheck {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;

    bool passed() const noexcept;
};

/// Cross-engine bit-exactness and statistical oracle checks at fixed seeds.
/// With VerifyFault::HeatBathTable the heat-bath threshold for neighbor sum
/// +2 is overwritten with the one for 0 in every table the suite hands to an
/// engine. `progress` is called after each check.
VerifyReport run_verify(VerifyFault fault = VerifyFault::None,
                        const std::function<void(const VerifyCheck&)>& progress = {});

}  // namespace janus
