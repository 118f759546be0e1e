#include "pn/errors.hpp"

namespace pn {

void throw_invalid(const std::string& what) { throw InvalidInput(what); }
void throw_resource(const std::string& what) { throw ResourceExhausted(what); }
void throw_invariant(const std::string& what) { throw InvariantViolation(what); }

}  // namespace pn
