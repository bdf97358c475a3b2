#include "thompson/json_io.hpp"

namespace thompson {

Json to_json(const NormalWord& w) {
  Json j;
  j["pos"] = w.pos();
  j["neg"] = w.neg();
  return j;
}

namespace {

std::vector<Index> index_run(const Json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_array()) {
    throw ParseError(std::string("word object needs an array field '") +
                     field + "'");
  }
  std::vector<Index> out;
  out.reserve(j[field].size());
  for (const auto& entry : j[field]) {
    if (!entry.is_number_unsigned()) {
      throw ParseError(std::string("non-index entry in '") + field + "'");
    }
    out.push_back(entry.get<Index>());
  }
  return out;
}

}  // namespace

NormalWord normal_word_from_json(const Json& j) {
  if (!j.is_object()) {
    throw ParseError("word must be a JSON object");
  }
  return NormalWord::from_parts(index_run(j, "pos"), index_run(j, "neg"));
}

std::string to_canonical_json(const NormalWord& w) {
  return to_json(w).dump();
}

NormalWord normal_word_from_json_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw ParseError("malformed JSON word");
  }
  return normal_word_from_json(j);
}

}  // namespace thompson
