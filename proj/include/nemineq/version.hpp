#ifndef NEMINEQ_VERSION_HPP
#define NEMINEQ_VERSION_HPP

namespace nemineq {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace nemineq

#endif  // NEMINEQ_VERSION_HPP
