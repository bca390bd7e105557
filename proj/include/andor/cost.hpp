#ifndef ANDOR_COST_HPP
#define ANDOR_COST_HPP

#include <limits>

namespace andor {

/// Non-negative extended real. IEEE addition already saturates at +inf, which
/// is exactly the absorbing behaviour unsolvable terminals need.
using Cost = double;

inline constexpr Cost kInfinity = std::numeric_limits<Cost>::infinity();

inline constexpr bool is_infinite(Cost c) noexcept { return c == kInfinity; }

/// Recursive cost scheme applied at AND nodes (OR nodes always minimise).
enum class CostScheme { Sum, Max };

inline constexpr Cost combine(CostScheme psi, Cost acc, Cost term) noexcept
{
    if (psi == CostScheme::Sum) return acc + term;
    return acc < term ? term : acc;
}

} // namespace andor

#endif // ANDOR_COST_HPP
