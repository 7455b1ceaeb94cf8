#pragma once

namespace turan {
inline constexpr const char* kVersion = "0.1.0";
}
