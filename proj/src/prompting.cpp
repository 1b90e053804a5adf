// SPDX-License-Identifier: Apache-2.0

#include "inductor/prompting.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "inductor/candidates.hpp"
#include "inductor/diagnostics.hpp"
#include "inductor/frontend.hpp"

namespace inductor {

namespace {

// --- Embedding vocabulary ---------------------------------------------------

// Keywords and operators get dedicated slots; all other identifiers share a
// fixed number of hash buckets and all numeric literals share one slot, so
// the dimension is independent of the input.
const char* const kVocab[] = {
    "module", "endmodule", "input",    "output",      "reg",     "wire",
    "assign", "always",    "posedge",  "negedge",     "if",      "else",
    "begin",  "end",       "case",     "endcase",     "default", "task",
    "endtask", "parameter", "property", "endproperty", "disable", "iff",
    "initial", "integer",
    "|->",    "|=>",       "<->",      "<=",          "==",      "!=",
    "&&",     "||",        "##",       "->",          "!",       "~",
    "&",      "|",         "^",        "(",           ")",       "[",
    "]",      "{",         "}",        ";",           ":",       ",",
    "=",      "<",         ">",        "@",           "?",       "+",
    "-",      "*",         "/",        "<num>",
};
constexpr std::size_t kVocabSize = sizeof(kVocab) / sizeof(kVocab[0]);
constexpr std::size_t kIdentBuckets = 64;
constexpr std::size_t kDim = kVocabSize + kIdentBuckets;

std::size_t ident_bucket(const std::string& ident) {
  // FNV-1a; any stable hash works, but std::hash is not pinned across
  // implementations and the bucket assignment must never move.
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : ident) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return kVocabSize + static_cast<std::size_t>(h % kIdentBuckets);
}

const std::map<std::string, std::size_t>& vocab_index() {
  static const std::map<std::string, std::size_t> index = [] {
    std::map<std::string, std::size_t> m;
    for (std::size_t i = 0; i < kVocabSize; ++i) m.emplace(kVocab[i], i);
    return m;
  }();
  return index;
}

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}
bool ident_char(char c) {
  return ident_start(c) || std::isdigit(static_cast<unsigned char>(c));
}

// Splits arbitrary text into vocabulary slots. Unlike the design lexer this
// must never throw: prompts and responses may contain prose, stray bytes or
// unknown punctuation, all of which are simply skipped.
std::vector<std::size_t> embed_tokens(const std::string& text) {
  const auto& vocab = vocab_index();
  std::vector<std::size_t> slots;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (ident_start(c)) {
      std::size_t j = i + 1;
      while (j < text.size() && ident_char(text[j])) ++j;
      std::string word = text.substr(i, j - i);
      auto it = vocab.find(word);
      slots.push_back(it != vocab.end() ? it->second : ident_bucket(word));
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < text.size() &&
             (ident_char(text[j]) || text[j] == '\'')) {
        ++j;  // sized literals like 2'b01 count as one number
      }
      slots.push_back(vocab.at("<num>"));
      i = j;
      continue;
    }
    bool matched = false;
    for (std::size_t len = 3; len >= 1 && !matched; --len) {
      if (i + len > text.size()) continue;
      auto it = vocab.find(text.substr(i, len));
      if (it != vocab.end()) {
        slots.push_back(it->second);
        i += len;
        matched = true;
      }
    }
    if (!matched) ++i;  // whitespace, quotes, non-ASCII bytes, ...
  }
  return slots;
}

std::string read_pool_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in.good()) throw IoError("cannot read pool file: " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// One lemma per nonempty line; // lines are comments.
std::vector<std::string> parse_lemma_lines(const std::string& text) {
  std::vector<std::string> lemmas;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t.rfind("//", 0) == 0) continue;
    lemmas.push_back(t);
  }
  return lemmas;
}

// The comparable text of a task or pool entry, fed to the embedding.
std::string embedding_text(const std::string& design,
                           const std::string& property) {
  return design + "\n" + property;
}

void replace_all(std::string& text, const std::string& from,
                 const std::string& to) {
  std::size_t pos = 0;
  while ((pos = text.find(from, pos)) != std::string::npos) {
    text.replace(pos, from.size(), to);
    pos += to.size();
  }
}

std::string render_example(const CotExample& ex) {
  std::ostringstream os;
  os << "=== Worked example ===\n\n";
  os << "Design:\n" << trim(ex.design_text) << "\n\n";
  os << "Property to prove:\n" << trim(ex.property_text) << "\n\n";
  os << "Answer:\n" << trim(ex.reasoning) << "\n";
  for (std::size_t i = 0; i < ex.lemmas.size(); ++i) {
    os << "\nproperty lemma_" << (i + 1) << ";\n"
       << "  " << ex.lemmas[i] << ";\n"
       << "endproperty\n";
  }
  return os.str();
}

std::string one_line(const std::string& text) {
  std::string flat = text;
  std::replace(flat.begin(), flat.end(), '\n', ' ');
  std::replace(flat.begin(), flat.end(), '\r', ' ');
  return flat;
}

}  // namespace

// --- Embeddings -------------------------------------------------------------

std::vector<double> embed(const std::string& text) {
  std::vector<double> v(kDim, 0.0);
  for (std::size_t slot : embed_tokens(text)) v[slot] += 1.0;
  double norm = std::sqrt(
      std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
  if (norm > 0.0) {
    for (double& x : v) x /= norm;
  }
  return v;
}

std::vector<double> embed(const std::string& text, EmbeddingProvider* provider,
                          std::vector<std::string>* warnings) {
  if (provider != nullptr) {
    try {
      return provider->embed(text);
    } catch (const ProviderError& e) {
      if (warnings != nullptr) {
        warnings->push_back(std::string("embedding provider failed (") +
                            e.what() + "); using the built-in embedding");
      }
    }
  }
  return embed(text);
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  std::size_t n = std::min(a.size(), b.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

// --- The example pool -------------------------------------------------------

std::vector<CotExample> load_cot_pool(const std::string& dir,
                                      const CheckBudget& budget,
                                      const SolverConfig& config) {
  namespace fs = std::filesystem;
  validate(budget);
  if (!fs::is_directory(dir)) {
    throw IoError("example pool directory not found: " + dir);
  }
  std::vector<fs::path> entries;
  for (const fs::directory_entry& e : fs::directory_iterator(dir)) {
    if (e.is_directory()) entries.push_back(e.path());
  }
  std::sort(entries.begin(), entries.end());

  std::vector<CotExample> pool;
  for (const fs::path& path : entries) {
    CotExample ex;
    ex.id = path.filename().string();
    ex.design_text = read_pool_file(path / "design.sv");
    ex.property_text = trim(read_pool_file(path / "property.txt"));
    ex.lemmas = parse_lemma_lines(read_pool_file(path / "lemmas.txt"));
    ex.reasoning = trim(read_pool_file(path / "reasoning.txt"));

    // Every entry must carry a strengthening that actually certifies its
    // own property; the pool is shown to generators as ground truth.
    try {
      ElaboratedDesign design = elaborate(parse_design(ex.design_text));
      PropRef prop = parse_property(ex.property_text, &design.properties);
      std::vector<PropRef> lemmas;
      for (const std::string& text : ex.lemmas) {
        lemmas.push_back(parse_property(text, &design.properties));
      }
      StrengtheningStatus status =
          check_strengthening(design, prop, lemmas, budget, config);
      if (status != StrengtheningStatus::Certified) {
        throw ConfigError("pool entry '" + ex.id +
                          "' is not certified: strengthening check returned " +
                          to_string(status));
      }
    } catch (const ConfigError&) {
      throw;
    } catch (const Error& e) {
      throw ConfigError("pool entry '" + ex.id + "' is invalid: " + e.what());
    }
    pool.push_back(std::move(ex));
  }
  return pool;
}

std::vector<CotExample> select_examples(const MiningTask& task,
                                        const std::vector<CotExample>& pool,
                                        int k, EmbeddingProvider* provider,
                                        std::vector<std::string>* warnings) {
  if (k < 1) throw ConfigError("example count must be at least 1");
  if (pool.size() < static_cast<std::size_t>(k)) {
    throw PoolTooSmall(pool.size(), static_cast<std::size_t>(k));
  }
  std::vector<double> target = embed(
      embedding_text(task.design_text, task.property_text), provider,
      warnings);

  struct Scored {
    double score;
    const CotExample* example;
  };
  std::vector<Scored> scored;
  for (const CotExample& ex : pool) {
    std::vector<double> v = embed(
        embedding_text(ex.design_text, ex.property_text), provider, warnings);
    scored.push_back({dot(target, v), &ex});
  }
  std::sort(scored.begin(), scored.end(), [](const Scored& a, const Scored& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.example->id < b.example->id;
  });

  std::vector<CotExample> selected;
  for (int i = 0; i < k; ++i) selected.push_back(*scored[i].example);
  return selected;
}

// --- Prompts ----------------------------------------------------------------

FewShotPrompt build_prompt(const MiningTask& task,
                           const std::vector<CotExample>& pool, int k,
                           const std::string& template_text,
                           EmbeddingProvider* provider,
                           std::vector<std::string>* warnings) {
  for (const char* placeholder : {"{{examples}}", "{{design}}",
                                  "{{property}}"}) {
    if (template_text.find(placeholder) == std::string::npos) {
      throw ConfigError(std::string("prompt template is missing the ") +
                        placeholder + " placeholder");
    }
  }
  std::vector<CotExample> selected =
      select_examples(task, pool, k, provider, warnings);

  std::ostringstream examples;
  for (std::size_t i = 0; i < selected.size(); ++i) {
    if (i > 0) examples << "\n";
    examples << render_example(selected[i]);
  }

  FewShotPrompt prompt;
  prompt.text = template_text;
  replace_all(prompt.text, "{{examples}}", examples.str());
  replace_all(prompt.text, "{{design}}", trim(task.design_text));
  replace_all(prompt.text, "{{property}}", trim(task.property_text));
  for (const CotExample& ex : selected) prompt.example_ids.push_back(ex.id);
  return prompt;
}

std::string generate_repair_msg(const std::vector<ClassifiedLemma>& classified,
                                int round, const std::string& reminder_text) {
  std::ostringstream os;
  os << "The suggested candidate lemmas do not include an inductive "
        "strengthening of the property.\n";
  if (classified.empty()) {
    os << "No well-formed candidate lemmas were found in the response.\n";
  } else {
    os << "Verdicts for each candidate:\n";
    for (const ClassifiedLemma& cl : classified) {
      os << "- `" << cl.normalized << "`: ";
      switch (cl.status) {
        case LemmaStatus::Inductive:
          os << "holds and is inductive on its own, but does not certify "
                "the property";
          break;
        case LemmaStatus::HoldsToBound:
          os << "holds up to bound " << cl.bound << " but is not inductive";
          break;
        case LemmaStatus::Falsified:
          os << "does not hold on the design";
          break;
        case LemmaStatus::IllFormed:
          os << "is not a well-formed lemma for this design: "
             << one_line(cl.diagnostics);
          break;
        case LemmaStatus::Unknown:
          os << "could not be resolved within the time budget";
          break;
      }
      os << "\n";
    }
  }
  os << "Suggest new or corrected candidate lemmas for an inductive "
        "strengthening.\n";
  if (round % 2 == 0 && !reminder_text.empty()) {
    os << "\n" << trim(reminder_text) << "\n";
  }
  return os.str();
}

}  // namespace inductor
