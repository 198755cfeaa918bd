#include "weylk/report.hpp"

#include <sstream>

namespace weylk {

std::string VerificationReport::text(std::size_t max_failures) const {
    std::ostringstream out;
    out << (passed() ? "PASS" : "FAIL") << " " << suite << ": " << checked << " checks, "
        << failed() << " failures";
    out.setf(std::ios::fixed);
    out.precision(2);
    out << " (" << wall_seconds << " s)\n";
    std::size_t shown = 0;
    for (const auto &f : failures) {
        if (shown++ == max_failures) {
            out << "  ... " << (failures.size() - max_failures) << " more\n";
            break;
        }
        out << "  inputs:   " << f.inputs << "\n";
        out << "  expected: " << f.expected << "\n";
        out << "  actual:   " << f.actual << "\n";
        if (!f.repro.empty())
            out << "  repro:    " << f.repro << "\n";
    }
    return out.str();
}

} // namespace weylk
