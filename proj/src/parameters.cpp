#include "rydswap/parameters.hpp"

#include <cmath>
#include <sstream>

namespace rydswap {

std::vector<std::string> GateParameters::validity_warnings() const {
    std::vector<std::string> warnings;
    auto check = [&](const char* label, double detuning, const PulseShape& pulse) {
        double peak = max_abs_rabi(pulse, t_gate);
        if (std::abs(detuning) <= 2.0 * peak) {
            std::ostringstream os;
            os << "large-detuning validity: |" << label << "|/2pi = "
               << rad_us_to_mhz(std::abs(detuning)) << " MHz does not exceed twice the pulse peak "
               << rad_us_to_mhz(peak) << " MHz";
            warnings.push_back(os.str());
        }
    };
    check("delta1", delta1, pulse1);
    check("delta2", delta2(), pulse2);
    return warnings;
}

}  // namespace rydswap
