#ifndef TAILSUM_VERSION_HPP
#define TAILSUM_VERSION_HPP

namespace tailsum {

inline constexpr const char* kVersion = "0.1.0";

}

#endif
