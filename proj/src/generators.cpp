// SPDX-License-Identifier: Apache-2.0

#include "inductor/generators.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <utility>

#include "inductor/diagnostics.hpp"
#include "inductor/frontend.hpp"
#include "inductor/lexer.hpp"

namespace inductor {

void validate(const GeneratorRequest& request) {
  if (request.messages.empty()) {
    throw ConfigError("generator request needs at least one message");
  }
  for (const ChatMessage& m : request.messages) {
    if (m.role != "system" && m.role != "user" && m.role != "assistant") {
      throw ConfigError("unknown message role: '" + m.role + "'");
    }
  }
  if (request.messages.back().role != "user") {
    throw ConfigError("generator request must end with a user message");
  }
  if (!request.sampling.is_object() && !request.sampling.is_null()) {
    throw ConfigError("sampling parameters must be a JSON object");
  }
}

// --- Mock -------------------------------------------------------------------

MockGenerator::MockGenerator(std::vector<std::string> responses,
                             std::string id)
    : responses_(std::move(responses)), id_(std::move(id)) {}

MockGenerator MockGenerator::from_file(const std::string& path,
                                       const std::string& id) {
  std::ifstream in(path);
  if (!in.good()) throw IoError("cannot read mock script: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(os.str());
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("mock script " + path + " is not valid JSON: " +
                      e.what());
  }
  if (!j.is_array()) {
    throw ConfigError("mock script " + path +
                      " must be a JSON array of response strings");
  }
  std::vector<std::string> responses;
  for (const nlohmann::json& item : j) {
    if (!item.is_string()) {
      throw ConfigError("mock script " + path +
                        " must be a JSON array of response strings");
    }
    responses.push_back(item.get<std::string>());
  }
  return MockGenerator(std::move(responses), id);
}

std::string MockGenerator::generate(const GeneratorRequest& request) {
  validate(request);
  std::lock_guard<std::mutex> lock(mu_);
  if (next_ >= responses_.size()) throw MockExhausted();
  return responses_[next_++];
}

size_t MockGenerator::remaining() const {
  std::lock_guard<std::mutex> lock(mu_);
  return responses_.size() - next_;
}

// --- Response parsing -------------------------------------------------------

namespace {

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

// Finds the next standalone occurrence of `word` at or after `from`.
size_t find_word(const std::string& text, const std::string& word,
                 size_t from) {
  for (size_t p = text.find(word, from); p != std::string::npos;
       p = text.find(word, p + 1)) {
    bool left_ok = p == 0 || !is_ident_char(text[p - 1]);
    size_t end = p + word.size();
    bool right_ok = end >= text.size() || !is_ident_char(text[end]);
    if (left_ok && right_ok) return p;
  }
  return std::string::npos;
}

std::string collapse_ws(const std::string& text) {
  std::string out;
  bool pending = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending = !out.empty();
      continue;
    }
    if (pending) out.push_back(' ');
    pending = false;
    out.push_back(c);
  }
  return out;
}

// Attempts to register one extracted fragment as a candidate; failures
// become diagnostics entries.
void try_add(CandidateSet& set, const std::string& fragment,
             const std::string& origin, int round) {
  std::string trimmed = collapse_ws(fragment);
  if (trimmed.empty()) return;
  try {
    parse_property(fragment);
  } catch (const Error& e) {
    set.diagnostics.push_back(std::string("unparsed fragment (") + e.what() +
                              "): " + trimmed);
    return;
  }
  set.add({fragment, origin, round});
}

}  // namespace

CandidateSet parse_response(const std::string& text, const std::string& origin,
                            int round) {
  CandidateSet set;
  set.raw_responses.push_back(text);
  std::string repaired = repair_non_ascii(text).text;

  // Every `property ... endproperty` block, wherever it appears.
  size_t pos = 0;
  while (true) {
    size_t start = find_word(repaired, "property", pos);
    if (start == std::string::npos) break;
    size_t stop = find_word(repaired, "endproperty", start);
    size_t end =
        stop == std::string::npos ? repaired.size() : stop + 11;  // inclusive
    try_add(set, repaired.substr(start, end - start), origin, round);
    pos = end;
  }

  // Fenced code blocks holding bare expressions. Blocks that contain a
  // property wrapper were already handled above.
  pos = 0;
  while (true) {
    size_t open = repaired.find("```", pos);
    if (open == std::string::npos) break;
    size_t content = repaired.find('\n', open + 3);  // skip the language tag
    if (content == std::string::npos) break;
    ++content;
    size_t close = repaired.find("```", content);
    size_t end = close == std::string::npos ? repaired.size() : close;
    std::string body = repaired.substr(content, end - content);
    pos = close == std::string::npos ? repaired.size() : close + 3;
    if (find_word(body, "property", 0) != std::string::npos) continue;

    std::string trimmed = collapse_ws(body);
    if (trimmed.empty()) continue;
    bool whole_parses = true;
    try {
      parse_property(body);
    } catch (const Error&) {
      whole_parses = false;
    }
    if (whole_parses) {
      set.add({body, origin, round});
      continue;
    }
    // Fall back to one candidate per line so a single garbage line does
    // not cost the rest of the block.
    std::istringstream lines(body);
    std::string line;
    while (std::getline(lines, line)) {
      try_add(set, line, origin, round);
    }
  }
  return set;
}

// --- Template enumeration ---------------------------------------------------

namespace {

unsigned long long choose(unsigned long long n, unsigned long long r) {
  if (r > n) return 0;
  unsigned long long out = 1;
  for (unsigned long long i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

// One clause over the chosen variables; `mask` bit i set negates the i-th
// literal (first variable in the most significant position, so polarity
// patterns enumerate as ++, +-, -+, --). A fully negative clause of two or
// more literals is spelled as a mutual exclusion.
std::string clause_text(const std::vector<std::string>& names,
                        const std::vector<size_t>& combo, unsigned mask) {
  size_t s = combo.size();
  bool all_negative = mask + 1 == 1u << s;
  if (all_negative && s >= 2) {
    std::string out = "~(";
    for (size_t i = 0; i < s; ++i) {
      if (i) out += " && ";
      out += names[combo[i]];
    }
    return out + ")";
  }
  std::string out;
  for (size_t i = 0; i < s; ++i) {
    if (i) out += " || ";
    if (mask >> (s - 1 - i) & 1u) out += "!";
    out += names[combo[i]];
  }
  return out;
}

}  // namespace

CandidateSet enumerate_templates(const TransitionSystem& ts,
                                 const TemplateConfig& config) {
  if (config.max_literals < 1) {
    throw ConfigError("template max_literals must be at least 1");
  }
  std::vector<std::string> names = ts.vars();
  std::sort(names.begin(), names.end());
  const size_t k = names.size();
  const size_t max_s =
      std::min<size_t>(static_cast<size_t>(config.max_literals), k);

  unsigned long long count = 0;
  for (size_t s = 1; s <= max_s; ++s) count += choose(k, s) << s;
  if (config.include_implications) count += k * (k - 1);
  if (count > config.cap) throw CombinatorialCap(count, config.cap);

  CandidateSet set;
  for (size_t s = 1; s <= max_s; ++s) {
    // Combinations of s variable indices in lexicographic order.
    std::vector<size_t> combo(s);
    for (size_t i = 0; i < s; ++i) combo[i] = i;
    while (true) {
      for (unsigned mask = 0; mask < 1u << s; ++mask) {
        set.add({clause_text(names, combo, mask), "templates", 0});
      }
      // Advance to the next combination.
      size_t i = s;
      while (i > 0 && combo[i - 1] == k - s + i - 1) --i;
      if (i == 0) break;
      ++combo[i - 1];
      for (size_t j = i; j < s; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  if (config.include_implications) {
    for (size_t i = 0; i < k; ++i) {
      for (size_t j = 0; j < k; ++j) {
        if (i == j) continue;
        set.add({names[i] + " -> " + names[j], "templates", 0});
      }
    }
  }
  return set;
}

}  // namespace inductor
