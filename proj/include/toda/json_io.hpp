#pragma once

#include <string>

#include "toda/dubrovin.hpp"

namespace toda {

// Series serialize as {"N": int, "coeffs": [[re, im], ...]} ordered k = -N..N.
std::string series_to_json(const LaurentSeries& f);
LaurentSeries series_from_json(const std::string& text);

// Points serialize as {"lambda": series, "lambdabar": series} or
// {"w": series, "v": [re, im], "u": [re, im]}.
std::string point_to_json(const ManifoldPoint& pt);
ManifoldPoint point_from_json(const std::string& text, TruncationParams par);

// Parse "special:v,e_u" presets (real parameters) or load "@file".
ManifoldPoint point_from_spec(const std::string& spec, TruncationParams par);

// Critical sets as {"outer": [{"z": [re,im], "u": [...], "second": [...]}], ...}.
std::string critical_set_to_json(const CriticalSet& cs);
CriticalSet critical_set_from_json(const std::string& text);

// Psi-image data: continuous slot on the grid plus the discrete slots.
std::string psi_data_to_json(const PsiData& d);

// Formal solutions with the explicit a^k list, so runs are reproducible.
std::string formal_solution_to_json(const FormalDubrovinSolution& sol);

}  // namespace toda
