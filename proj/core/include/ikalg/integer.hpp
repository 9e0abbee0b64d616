#pragma once

#include <cstdint>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

namespace ikalg {

/// Exact coefficient type for algebra elements. Small values stay inline,
/// larger ones grow without overflow.
using Integer = boost::multiprecision::cpp_int;

/// Counting results (structure constants, class sizes, subset counts).
using Count = std::uint64_t;

/// Binomial coefficient; 0 when k < 0 or k > n. Throws BudgetExceeded if the
/// value does not fit a Count.
Count binomial(int n, int k);

/// Checked multiply for counts.
std::optional<Count> checked_mul(Count a, Count b) noexcept;

}  // namespace ikalg
