// SPDX-License-Identifier: Apache-2.0

#include "inductor/candidates.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

#include "inductor/diagnostics.hpp"
#include "inductor/lexer.hpp"
#include "json.hpp"

namespace inductor {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

// Removes a leading `property <name>;` and trailing `endproperty`, when both
// are present. Anything that does not match the full wrapper is returned
// unchanged.
std::string strip_property_wrapper(const std::string& text) {
  size_t begin = 0;
  while (begin < text.size() && is_space(text[begin])) ++begin;
  size_t end = text.size();
  while (end > begin && is_space(text[end - 1])) --end;

  static const std::string kHead = "property";
  static const std::string kTail = "endproperty";
  if (end - begin <= kHead.size() + kTail.size()) return text;
  if (text.compare(begin, kHead.size(), kHead) != 0) return text;
  size_t p = begin + kHead.size();
  if (p >= end || !is_space(text[p])) return text;  // e.g. `property_x`
  while (p < end && is_space(text[p])) ++p;
  if (p >= end || !(std::isalpha(static_cast<unsigned char>(text[p])) ||
                    text[p] == '_')) {
    return text;
  }
  while (p < end && is_ident_char(text[p])) ++p;
  while (p < end && is_space(text[p])) ++p;
  if (p >= end || text[p] != ';') return text;
  ++p;  // body starts here

  if (text.compare(end - kTail.size(), kTail.size(), kTail) != 0) return text;
  size_t body_end = end - kTail.size();
  if (body_end > p && is_ident_char(text[body_end - 1])) return text;
  return text.substr(p, body_end - p);
}

}  // namespace

std::string normalize_lemma(const std::string& text) {
  std::string repaired = repair_non_ascii(text).text;
  std::string body = strip_property_wrapper(repaired);

  std::string out;
  out.reserve(body.size());
  bool pending_space = false;
  for (char c : body) {
    if (is_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  while (!out.empty() && (out.back() == ';' || out.back() == ' ')) {
    out.pop_back();
  }
  return out;
}

bool CandidateSet::add(Candidate candidate) {
  std::string key = normalize_lemma(candidate.source);
  if (key.empty()) return false;
  for (const Candidate& existing : lemmas) {
    if (normalize_lemma(existing.source) == key) return false;
  }
  lemmas.push_back(std::move(candidate));
  return true;
}

void CandidateSet::merge(const CandidateSet& other) {
  for (const Candidate& c : other.lemmas) add(c);
  raw_responses.insert(raw_responses.end(), other.raw_responses.begin(),
                       other.raw_responses.end());
  diagnostics.insert(diagnostics.end(), other.diagnostics.begin(),
                     other.diagnostics.end());
}

bool CandidateSet::contains(const std::string& text) const {
  std::string key = normalize_lemma(text);
  if (key.empty()) return false;
  for (const Candidate& existing : lemmas) {
    if (normalize_lemma(existing.source) == key) return true;
  }
  return false;
}

std::string candidates_to_json(const CandidateSet& set) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Candidate& c : set.lemmas) {
    arr.push_back({{"source", c.source}, {"origin", c.origin},
                   {"round", c.round}});
  }
  return arr.dump(2);
}

CandidateSet candidates_from_json(const std::string& json) {
  nlohmann::json arr;
  try {
    arr = nlohmann::json::parse(json);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("candidate list is not valid JSON: ") + e.what());
  }
  if (!arr.is_array()) throw Error("candidate list must be a JSON array");
  CandidateSet set;
  for (const nlohmann::json& item : arr) {
    if (!item.is_object() || !item.contains("source") ||
        !item["source"].is_string()) {
      throw Error("candidate entry must be an object with a string 'source'");
    }
    Candidate c;
    c.source = item["source"].get<std::string>();
    if (item.contains("origin")) c.origin = item["origin"].get<std::string>();
    if (item.contains("round")) c.round = item["round"].get<int>();
    set.add(std::move(c));
  }
  return set;
}

}  // namespace inductor
