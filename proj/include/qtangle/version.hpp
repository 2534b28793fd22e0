// SPDX-License-Identifier: MIT
#pragma once

namespace qtangle {
inline constexpr const char* artifact_version = "0.1.0";
}
