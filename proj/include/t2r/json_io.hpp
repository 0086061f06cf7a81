#pragma once

// JSON encodings (frozen schemas):
//   element        {"p":int, "n":int, "word":[[color,value],...]}
//   algebra        {"p":int, "n":int, "terms":[{"word":[[c,v],...],
//                   "num":"...", "den":"..."}]}   terms in canonical order
//   spectrum       {"n":..., "p":..., "method":...,
//                   "eigenvalues":[{"value":int,"i":int,"multiplicity":"..."}],
//                   "factored":"...", "char_poly":["...",...] when computed}
//   tv curve       array of records mirroring the CSV columns; exact rows
//                  carry integer strings in tv_exact_num/_den, log-space rows
//                  carry the decimal estimate in tv_exact_num and "" den.
// Integers that can exceed 64 bits always travel as decimal strings.

#include <string>
#include <vector>

#include "t2r/colored_group.hpp"
#include "t2r/mixing.hpp"
#include "t2r/shuffle_algebra.hpp"
#include "t2r/spectral.hpp"

namespace t2r {

std::string element_to_json(const ColoredPermutation& g);
ColoredPermutation element_from_json(const std::string& text);

std::string algebra_to_json(const AlgebraElement& x);
AlgebraElement algebra_from_json(const std::string& text);

std::string spectrum_to_json(const SpectrumReport& rep);

std::string tv_records_to_json(const std::vector<TVRecord>& records, int decimals = 12);

}  // namespace t2r
