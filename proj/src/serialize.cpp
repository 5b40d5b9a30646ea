#include "majidx/serialize.hpp"

#include <limits>

#include "majidx/error.hpp"

namespace majidx {

json to_json(const Word& w) { return json(std::vector<Letter>(w.letters().begin(), w.letters().end())); }

json to_json(const DescentSet& d) { return json(d.indices); }

json to_json(const MISequence& s) {
  return json(std::vector<std::int64_t>(s.entries().begin(), s.entries().end()));
}

json to_json(const Segmentation& s, const Word& sigma) {
  json out = json::array();
  for (const Segment& seg : s) {
    std::vector<Letter> letters(sigma.letters().begin() + static_cast<std::ptrdiff_t>(seg.first - 1),
                                sigma.letters().begin() + static_cast<std::ptrdiff_t>(seg.last));
    out.push_back({{"kind", seg.kind == SegmentKind::lesser ? "lesser" : "greater"},
                   {"span", {seg.first, seg.last}},
                   {"letters", letters}});
  }
  return out;
}

json to_json(const Partition& p) {
  return json(std::vector<std::int64_t>(p.parts().begin(), p.parts().end()));
}

json to_json(const InsertionTrace& t) {
  json out = json::array();
  for (const TraceStep& s : t.steps)
    out.push_back({{"i", s.i}, {"k", s.k}, {"m", s.m}, {"t", s.t}, {"sigma", to_json(s.sigma)}});
  return out;
}

json to_json(const QPolynomial& p) {
  json coeffs = json::array();
  for (const BigInt& c : p.coefficients()) {
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
      coeffs.push_back(static_cast<std::int64_t>(c));
    else
      coeffs.push_back(c.str());
  }
  return {{"coeffs", coeffs}};
}

QPolynomial qpoly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw InputError("polynomial JSON must be an object with a \"coeffs\" array");
  std::vector<BigInt> coeffs;
  for (const json& c : j["coeffs"]) {
    if (c.is_number_integer())
      coeffs.emplace_back(c.get<std::int64_t>());
    else if (c.is_string())
      coeffs.emplace_back(c.get<std::string>());
    else
      throw InputError("polynomial coefficient must be an integer or a decimal string");
  }
  return QPolynomial(std::move(coeffs));
}

std::string format_segmentation(const Segmentation& s, const Word& sigma) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += " | ";
    out += format_letters(sigma.letters().subspan(s[i].first - 1, s[i].last - s[i].first + 1));
  }
  return out;
}

}  // namespace majidx
