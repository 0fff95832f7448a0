#ifndef QTOP_ERRORS_HPP
#define QTOP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qtop {

// A computation refused for resource or domain reasons (Weyl cap exceeded,
// term budget exceeded, weight on an affine wall). Distinct from
// std::invalid_argument, which flags ill-formed inputs.
struct rejected : std::runtime_error {
    explicit rejected(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qtop

#endif
