#include "hcs/output.hpp"

#include <charconv>

namespace hcs::io {

std::string fmt17(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v,
                             std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

} // namespace hcs::io
