#pragma once

namespace b2dunkl {

/// serial is the reference path; parallel uses OpenMP and must produce
/// bitwise-identical results (work is split per item, sums are ordered).
enum class Execution { serial, parallel };

} // namespace b2dunkl
