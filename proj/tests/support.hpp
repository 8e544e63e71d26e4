#pragma once

#include <spinorlab/spinorlab.hpp>

#include "oracle.hpp"

namespace support {

inline oracle::V4 to_oracle(const spinorlab::Spinor& s) { return {s[0], s[1], s[2], s[3]}; }

inline spinorlab::Spinor from_oracle(const oracle::V4& v) { return {v[0], v[1], v[2], v[3]}; }

inline oracle::M4 to_oracle(const spinorlab::Mat4& m) {
  oracle::M4 out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i][j] = m(i, j);
  return out;
}

/// Largest difference between library bilinears and the oracle's.
inline double bilinear_diff(const spinorlab::Bilinears& b, const oracle::Bil& o) {
  double m = std::max(std::abs(b.A - o.A), std::abs(b.B - o.B));
  for (std::size_t mu = 0; mu < 4; ++mu) {
    m = std::max({m, std::abs(b.J[mu] - o.J[mu]), std::abs(b.K[mu] - o.K[mu])});
    for (std::size_t nu = 0; nu < 4; ++nu) m = std::max(m, std::abs(b.S[mu][nu] - o.S[mu][nu]));
  }
  return m;
}

inline double diff(const spinorlab::Spinor& a, const spinorlab::Spinor& b) { return (a - b).norm(); }

}  // namespace support
