#pragma once

#include <iosfwd>

namespace mem {

/// Oracle suites: closed-form blocks vs boundary quadrature, cross-backend
/// agreement, special-function identities and the field oracle. Writes one
/// line per check; returns true when all pass.
bool run_selftest(std::ostream& log);

}  // namespace mem
