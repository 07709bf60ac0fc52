#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace coinv {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Which quotient a computation targets: R kills x_i^{kr+1}, S kills x_i^{kr}.
enum class Ring { R, S };

inline const char* ring_name(Ring ring) { return ring == Ring::R ? "R" : "S"; }

inline Ring parse_ring(const std::string& s) {
    if (s == "R" || s == "r") return Ring::R;
    if (s == "S" || s == "s") return Ring::S;
    throw std::invalid_argument("ring must be R or S");
}

// Thrown when a configurable resource ceiling is hit.  Callers distinguish
// this from a wrong answer: the computation was abandoned, not completed.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Int factorial(int n);
Int binomial(int n, int k);
Int stirling2(int n, int k);
Int int_pow(Int base, int e);

// Packs an exponent vector into one key for dedup sets, 6 bits per entry.
// Requires each exponent < 64 and at most 10 entries.
std::uint64_t pack_exponents(const std::vector<int>& e);

}  // namespace coinv
