#pragma once

#include "oracle.hpp"
#include "pi0/pi0.hpp"

namespace support {

inline pi0::RatVector rv(std::initializer_list<pi0::Rational> xs) { return pi0::RatVector(xs); }

inline pi0::Rational half(long a) { return pi0::Rational(a, 2); }

// Plain-vector view of a datum and involution for the reference computation.
inline oracle::Datum to_oracle(const pi0::RootDatum& rd, const pi0::Involution& inv) {
  oracle::Datum d;
  d.rank = rd.rank;
  d.cochar = rd.cochar.generators();
  d.coroots = rd.coroots.generators();
  for (std::size_t i = 0; i < rd.rank; ++i) {
    pi0::RatVector row;
    for (std::size_t j = 0; j < rd.rank; ++j) row.push_back(inv.theta(i, j));
    d.theta.push_back(row);
  }
  return d;
}

inline std::size_t to_size(const pi0::Integer& x) { return static_cast<std::size_t>(x); }

}  // namespace support
