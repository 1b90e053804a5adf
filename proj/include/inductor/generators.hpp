// SPDX-License-Identifier: Apache-2.0
//
// Candidate-lemma sources: a generic chat-completion client, a scripted
// mock for deterministic runs, and an enumerative template generator that
// needs no model at all. All of them feed CandidateSet.

#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "inductor/candidates.hpp"
#include "inductor/transition_system.hpp"
#include "json.hpp"

namespace inductor {

struct ChatMessage {
  std::string role;  // "system", "user" or "assistant"
  std::string content;
};

// One sampling request: the conversation so far plus endpoint-specific
// sampling parameters, passed through opaquely (temperature, max tokens,
// whatever the endpoint accepts).
struct GeneratorRequest {
  std::vector<ChatMessage> messages;
  nlohmann::json sampling = nlohmann::json::object();
};

// Throws ConfigError unless the request has at least one message, every
// role is one of system/user/assistant, the last message is from the user,
// and `sampling` is a JSON object.
void validate(const GeneratorRequest& request);

// A source of sampled responses. Calls are stateless — each request carries
// its whole conversation — and implementations must tolerate concurrent
// calls from independent sampling tasks.
class Generator {
public:
  virtual ~Generator() = default;
  // Returns one sampled response. Throws TransportError, AuthError or
  // MockExhausted depending on the implementation.
  virtual std::string generate(const GeneratorRequest& request) = 0;
  // Identity recorded as candidate origin metadata.
  virtual std::string id() const = 0;
};

// Replays a fixed list of responses in order, regardless of the request
// contents. The cursor is internally synchronized so concurrent callers
// consume the script in a well-defined order; once the script is exhausted
// every further call throws MockExhausted.
class MockGenerator : public Generator {
public:
  explicit MockGenerator(std::vector<std::string> responses,
                         std::string id = "mock");
  // Loads a script file: a JSON array of response strings. Throws IoError
  // when unreadable, ConfigError when malformed.
  static MockGenerator from_file(const std::string& path,
                                 const std::string& id = "mock");

  std::string generate(const GeneratorRequest& request) override;
  std::string id() const override { return id_; }
  size_t remaining() const;

private:
  std::vector<std::string> responses_;
  size_t next_ = 0;
  std::string id_;
  mutable std::mutex mu_;
};

// Where and how to reach a chat-completion endpoint. The API key is read
// from the named environment variable at request time and substituted for
// "$KEY" in the header template; keys never appear in configuration files.
struct EndpointConfig {
  std::string base_url;  // e.g. "https://api.example.com" or "http://127.0.0.1:8080"
  std::string path = "/v1/chat/completions";
  std::string model;
  std::string api_key_env;  // empty = send no auth header
  std::string header_template = "Authorization: Bearer $KEY";
  int max_attempts = 3;       // total tries per generate() call
  double backoff_secs = 0.5;  // doubled after each failed attempt
  double timeout_secs = 60.0;
};

// Minimal chat-completion client: messages and sampling parameters go out
// as one JSON body, the first choice's message content comes back.
// Transient failures (connection errors, HTTP 429 and 5xx) are retried with
// exponential backoff up to max_attempts; HTTP 401/403 raise AuthError
// immediately, other client errors and malformed response bodies raise
// TransportError without retry.
class HttpGenerator : public Generator {
public:
  explicit HttpGenerator(EndpointConfig config);

  std::string generate(const GeneratorRequest& request) override;
  std::string id() const override;

private:
  EndpointConfig config_;
};

// Extracts candidate lemmas from free-form response text: every
// `property ... endproperty` block, plus the contents of fenced code blocks
// that hold bare property expressions (line by line when the block does not
// parse as a whole). Known Unicode operator glyphs are repaired in the
// extracted text; fragments that still fail to parse are recorded in the
// set's diagnostics instead of becoming lemmas. The verbatim response is
// kept in raw_responses. Never throws.
CandidateSet parse_response(const std::string& text,
                            const std::string& origin = "", int round = 0);

struct TemplateConfig {
  int max_literals = 2;              // largest clause size to enumerate
  bool include_implications = false; // also emit pairwise "a -> b" forms
  size_t cap = 10000;                // CombinatorialCap guard
};

// Enumerates boolean clauses over the system's state variables, smallest
// first: for name-sorted variables, all disjunctions of up to max_literals
// distinct literals ("a", "!a", "a || b", "a || !b", ...), with the
// all-negative clause spelled as a mutual exclusion ("~(a && b)"). The
// order is deterministic and independent of declaration order. Throws
// CombinatorialCap when the candidate count would exceed config.cap.
CandidateSet enumerate_templates(const TransitionSystem& ts,
                                 const TemplateConfig& config = {});

}  // namespace inductor
