#ifndef THOMPSON_JSON_IO_HPP
#define THOMPSON_JSON_IO_HPP

#include <string>

#include "json.hpp"
#include "thompson/normal_word.hpp"

namespace thompson {

// Field order is part of the canonical serialization, hence ordered_json.
using Json = nlohmann::ordered_json;

/// {"pos":[i_1,...],"neg":[j_1,...]} with both arrays ascending.
Json to_json(const NormalWord& w);

/// Rejects anything that is not a canonical normal form.
NormalWord normal_word_from_json(const Json& j);

std::string to_canonical_json(const NormalWord& w);
NormalWord normal_word_from_json_text(const std::string& text);

}  // namespace thompson

#endif
