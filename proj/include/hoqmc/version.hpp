#pragma once

namespace hoqmc {

inline constexpr const char* kToolVersion = "hoqmc 0.1.0";

}  // namespace hoqmc
