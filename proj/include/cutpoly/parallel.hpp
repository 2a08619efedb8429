#pragma once

namespace cutpoly {

/// Selects between the OpenMP kernel and its serial reference. Both return
/// identical results; the serial path exists for testing and benchmarking.
enum class Exec { serial, parallel };

}  // namespace cutpoly
