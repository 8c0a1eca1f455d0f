#pragma once

namespace mskkt {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kReportSchema = "mskkt-report/1";

}  // namespace mskkt
