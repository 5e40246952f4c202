#pragma once

namespace bellsta {

/// Source revision this library was built from (git describe), or "unknown".
const char* build_version();

}  // namespace bellsta
