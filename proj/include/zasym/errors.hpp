#ifndef ZASYM_ERRORS_HPP
#define ZASYM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zasym {

/* All library errors derive from zasym::error so callers can catch the
 * whole family at once. Each condition named in an operation contract
 * has its own type. */
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct not_weakly_decreasing : error {
    using error::error;
};
struct negative_part : error {
    using error::error;
};
struct non_strict_coordinates : error {
    using error::error;
};
struct length_mismatch : error {
    using error::error;
};
struct cell_out_of_shape : error {
    using error::error;
};
struct not_a_content_sequence : error {
    using error::error;
};
struct enumeration_too_large : error {
    using error::error;
};
struct inexact_division : error {
    using error::error;
};
struct repeated_point : error {
    using error::error;
};
struct length_exceeds_n : error {
    using error::error;
};
struct shape_not_of_form : error {
    using error::error;
};
struct precondition_violated : error {
    using error::error;
};

} // namespace zasym

#endif
