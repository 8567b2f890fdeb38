#ifndef ZASYM_REPORT_HPP
#define ZASYM_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

namespace zasym {

/* Machine-checkable outcome of one identity verification. A failing
 * report always carries a witness that can be re-checked against the
 * primitive operations; lhs/rhs hold canonical encodings of both sides. */
struct verification_report {
    std::string claim;
    std::vector<std::pair<std::string, std::string>> params;
    bool pass = false;
    std::string lhs;
    std::string rhs;
    std::string witness;     // JSON text of a counterexample; empty when passing
    std::string domain_size; // decimal; empty when not applicable
    double elapsed_ms = 0.0;
};

} // namespace zasym

#endif
