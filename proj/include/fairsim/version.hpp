#pragma once

namespace fairsim {

inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace fairsim
