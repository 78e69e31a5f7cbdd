#pragma once

namespace polyassoc {

/// Selects the serial reference path or the OpenMP path of a kernel. Both
/// produce identical, canonically ordered output.
enum class Execution { serial, parallel };

}  // namespace polyassoc
