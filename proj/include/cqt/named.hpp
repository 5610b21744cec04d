#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "cqt/dynkin.hpp"
#include "cqt/quiver.hpp"

namespace cqt {

/// Oriented n-cycle 1 -> 2 -> ... -> n -> 1, n >= 3.
Quiver cyclic_quiver(int n);

/// Two directed paths 1 -> 2 -> ... -> a -> s and 1 -> 2' -> ... -> b' -> s
/// of lengths a and b, closed by the back arrow s -> 1. a, b >= 2.
Quiver g_quiver(int a, int b);

/// The tree with arms 1 -> 2 -> ... -> a, 1 -> 2' -> ... -> b' and s -> 1.
/// Same vertex names as g_quiver(a, b).
Quiver t_quiver(int a, int b);

/// Standard orientation of a Dynkin diagram: A_n is linear 1 -> ... -> n;
/// D_n is linear up to n-2, which then points to n-1 and n; E_n is linear
/// 1 -> ... -> n-1 with the extra arrow 3 -> n.
Quiver dynkin_quiver(const DynkinLabel& label);

/// Two vertices joined by a double arrow 1 => 2.
Quiver kronecker_quiver();

/// Cycle of even length n >= 4 whose odd vertices are sources and even
/// vertices are sinks.
Quiver alternating_cycle(int n);

/// Seeded random quiver on vertices "1".."rank": each unordered pair gets an
/// arrow with probability `density`, oriented at random, with multiplicity
/// uniform in [1, max_multiplicity].
Quiver random_quiver(std::size_t rank, std::uint64_t seed, double density = 0.5,
                     int max_multiplicity = 1);

/// Dispatches on family name: "C" n | "G" a b | "T" a b | "dynkin" label |
/// "kronecker" | "alternating-cycle" n. Throws InvalidParameters.
Quiver make_named_quiver(const std::string& family, std::span<const std::string> args);

}  // namespace cqt
