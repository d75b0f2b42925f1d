#pragma once

namespace hre {

/// Selects the OpenMP kernel or the serial reference path. Both produce
/// bit-identical results.
enum class Execution { serial, parallel };

}  // namespace hre
