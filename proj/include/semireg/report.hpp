#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "json.hpp"
#include "semireg/decompose.hpp"
#include "semireg/veronese.hpp"

namespace semireg {

// Generator file as read from disk, before validation.
struct RawInput {
  std::size_t d = 0;
  std::int64_t alpha = 0;
  std::vector<IntVec> generators;
};

/// Header line "d alpha", then one generator per line; '#' starts a comment
/// line. Throws ValidationError(Malformed) on syntax errors.
RawInput parse_input(std::istream& in);
RawInput read_input_file(const std::string& path);

SemigroupPresentation validate(const RawInput& raw);

nlohmann::ordered_json report_json(const RawInput& input, const Decomposition& decomposition,
                                   const RegularityReport& report);

nlohmann::ordered_json veronese_json(VeroneseParams params);

std::string render_decomposition(const Decomposition& decomposition, const RegularityReport& report);
std::string render_regularity(const RegularityReport& report);
std::string render_properties(const RegularityReport& report);
std::string render_veronese(VeroneseParams params);

}  // namespace semireg
