#pragma once

#include <string>

namespace hcs::io {

/// 17-significant-digit decimal representation, locale independent
/// ('.' separator, no grouping); round-trips any double bit-exactly.
std::string fmt17(double v);

} // namespace hcs::io
