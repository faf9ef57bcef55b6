#pragma once

// Built-in algebras: K3, windows of AK(1), osp(1,2) = g(K3), windows of K(1)
// and of the Witt algebra.

#include "antialg/superalg.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace antialg {

enum class BuiltinName { k3, ak1, osp12, k1, witt };

std::string_view to_string(BuiltinName b);
/// Throws InputError on an unknown name.
BuiltinName parse_builtin(std::string_view text);
std::vector<BuiltinName> all_builtins();
bool needs_window(BuiltinName b);

/// The 1|2-dimensional tiny Kaplansky algebra: eps*eps = eps,
/// eps*a = 1/2 a, eps*b = 1/2 b, a*b = 1/2 eps.
AlgebraDef k3();
/// AK(1) on a window, filled directly from the closed-form rule.
AlgebraDef ak1(const WindowSpec& w);

/// Throws InputError when `window` is missing for ak1, k1 or witt.
AlgebraDef builtin(BuiltinName name, const std::optional<WindowSpec>& window = std::nullopt);

}  // namespace antialg
