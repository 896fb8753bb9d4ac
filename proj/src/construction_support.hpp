#pragma once

#include <vector>

#include "mainswitch/constructions.hpp"

namespace mainswitch {

inline constexpr double kWitnessResidual = 1e-8;
inline constexpr double kWitnessSum = 1e-8;

/// Entry-sum of v / ||v||.
double normalized_sum(const std::vector<double>& v);

/// Runs the exact main profile on the switched graph and sets verified.
void finalize(ConstructionResult& r);

}  // namespace mainswitch
