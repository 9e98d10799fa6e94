#pragma once

namespace ospbi {

inline constexpr const char* version_string = "0.1.0";
inline constexpr int report_schema_version = 1;
inline constexpr int rep_fixture_version = 1;

} // namespace ospbi
