#pragma once

namespace varqa {

inline constexpr double kKcalPerMolPerHartree = 627.509474;
inline constexpr double kChemicalAccuracyKcal = 1.0;

inline double hartree_to_kcal(double e) { return e * kKcalPerMolPerHartree; }

}  // namespace varqa
