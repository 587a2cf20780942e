#ifndef ODBA_VERSION_HPP
#define ODBA_VERSION_HPP

namespace odba {

inline constexpr const char* kVersion = "0.1.0";

}

#endif
