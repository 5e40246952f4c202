#include "bellsta/version.hpp"

#ifndef BELLSTA_VERSION
#define BELLSTA_VERSION "unknown"
#endif

namespace bellsta {

const char* build_version() { return BELLSTA_VERSION; }

}  // namespace bellsta
