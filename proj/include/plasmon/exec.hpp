#pragma once

namespace plasmon {

// Serial is the reference path kept for testing; Parallel spreads grid points over OpenMP threads.
enum class Exec { Serial, Parallel };

}  // namespace plasmon
