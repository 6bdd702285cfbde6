#pragma once

namespace qteich {
inline constexpr const char* kVersion = "0.1.0";
}
