#ifndef CHROMCON_VERSION_HPP
#define CHROMCON_VERSION_HPP

namespace chromcon {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

}  // namespace chromcon

#endif
