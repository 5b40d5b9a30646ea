#pragma once

#include <json.hpp>

#include "majidx/bijections.hpp"
#include "majidx/mis.hpp"
#include "majidx/qpoly.hpp"
#include "majidx/words.hpp"

namespace majidx {

using json = nlohmann::json;

json to_json(const Word& w);
json to_json(const DescentSet& d);
json to_json(const MISequence& s);
json to_json(const Segmentation& s, const Word& sigma);
json to_json(const Partition& p);
json to_json(const InsertionTrace& t);

/// {"coeffs": [c0, c1, ...]}. Coefficients that do not fit in a signed 64-bit
/// integer are written as decimal strings.
json to_json(const QPolynomial& p);
QPolynomial qpoly_from_json(const json& j);

/// Text form of a segmentation: "1 | 7 6 | 2 | 8 | 3 4".
std::string format_segmentation(const Segmentation& s, const Word& sigma);

}  // namespace majidx
