#pragma once

#include <string>
#include <string_view>

namespace jssec::syntax {

// ECMAScript Number-to-String: shortest round-trip digits, exponent form
// outside [1e-7, 1e21), "NaN", "Infinity", and "0" for both zeros.
std::string number_to_string(double value);

// ECMAScript String-to-Number: trims white space, "" is 0, accepts decimal
// literals with optional sign, "Infinity", and 0x hex. Anything else is NaN.
double string_to_number(std::string_view text);

}  // namespace jssec::syntax
