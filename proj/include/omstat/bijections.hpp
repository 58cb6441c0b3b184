#pragma once

#include "omstat/core.hpp"
#include "omstat/parking.hpp"

#include <vector>

namespace omstat {

DecoratedParkingFunction gamma_dinv(const OMP& pi);
DecoratedParkingFunction gamma_maj(const OMP& pi);
DecoratedParkingFunction gamma_inv(const OMP& pi);
DecoratedParkingFunction gamma_minimaj(const OMP& pi);

// Intermediate objects of gamma_minimaj, one per miniword segment read right to left.
std::vector<DecoratedParkingFunction> gamma_minimaj_stages(const OMP& pi);

}  // namespace omstat
