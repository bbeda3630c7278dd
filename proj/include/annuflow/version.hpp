#ifndef ANNUFLOW_VERSION_HPP
#define ANNUFLOW_VERSION_HPP

namespace annuflow {

inline constexpr const char* kVersion = "0.1.0";

}

#endif
