#pragma once

#include <string>

#include "crprime/symbolic/graded_series.hpp"
#include "crprime/symbolic/poly.hpp"

namespace crprime {

/// JSON term list: [{"exp": [a, b, c], "coef": [re_num, re_den, im_num, im_den]}, ...].
/// The exponent is the (z, zb, u) triple when no other generator occurs and
/// the full 7-entry vector otherwise. Coefficient parts are written as decimal
/// strings; the parser also accepts integers.
std::string poly_to_json(const Poly& p);
Poly poly_from_json(const std::string& text);

/// {"terms": [...], "error_order": k} with error_order null for exact series.
std::string series_to_json(const GradedSeries& s);
GradedSeries series_from_json(const std::string& text);

/// Coefficient helpers shared with report writers.
std::string coef_to_json(const GaussRational& c);
GaussRational coef_from_json(const std::string& text);

}  // namespace crprime
