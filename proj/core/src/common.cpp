#include "ikalg/errors.hpp"
#include "ikalg/integer.hpp"

#include <limits>
#include <string>

namespace ikalg {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::BadTable: return "BadTable";
    case ErrorKind::UnknownBuiltin: return "UnknownBuiltin";
    case ErrorKind::LevelMismatch: return "LevelMismatch";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::WrongBaseGroup: return "WrongBaseGroup";
    case ErrorKind::InvalidLabel: return "InvalidLabel";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Config: return "Config";
  }
  return "Error";
}

std::optional<Count> checked_mul(Count a, Count b) noexcept {
  Count out = 0;
  if (__builtin_mul_overflow(a, b, &out)) return std::nullopt;
  return out;
}

Count binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  // C(n, i) = C(n, i-1) * (n-i+1) / i stays integral at every step.
  __extension__ using Wide = unsigned __int128;
  Wide acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned>(n - i + 1) / static_cast<unsigned>(i);
    if (acc > std::numeric_limits<Count>::max())
      throw Error(ErrorKind::BudgetExceeded,
                  "binomial(" + std::to_string(n) + ", " + std::to_string(k) + ") overflows");
  }
  return static_cast<Count>(acc);
}

}  // namespace ikalg
