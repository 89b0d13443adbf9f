#ifndef RELAYSIM_DECIBEL_HPP
#define RELAYSIM_DECIBEL_HPP

#include <cmath>

namespace relaysim {

// dB-to-nat conversion constant: xi = 10 / ln 10.
inline constexpr double kXi = 4.342944819032518;

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

inline double dbm_to_dbw(double dbm) { return dbm - 30.0; }
inline double dbw_to_dbm(double dbw) { return dbw + 30.0; }
inline double dbm_to_watts(double dbm) { return db_to_linear(dbm - 30.0); }
inline double watts_to_dbm(double w) { return linear_to_db(w) + 30.0; }

} // namespace relaysim

#endif
