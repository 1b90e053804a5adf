// SPDX-License-Identifier: Apache-2.0

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <thread>
#include <utility>

#include "httplib.h"
#include "inductor/diagnostics.hpp"
#include "inductor/generators.hpp"

namespace inductor {

namespace {

// Resolves the configured header template against the environment, e.g.
// "Authorization: Bearer $KEY" -> {"Authorization", "Bearer sk-..."}.
std::pair<std::string, std::string> auth_header(const EndpointConfig& c) {
  const char* key = std::getenv(c.api_key_env.c_str());
  if (key == nullptr || *key == '\0') {
    throw AuthError("environment variable " + c.api_key_env + " is not set");
  }
  std::string line = c.header_template;
  for (size_t p = line.find("$KEY"); p != std::string::npos;
       p = line.find("$KEY", p)) {
    line.replace(p, 4, key);
    p += std::string(key).size();
  }
  size_t colon = line.find(':');
  if (colon == std::string::npos || colon == 0) {
    throw ConfigError("header template must look like 'Name: value'");
  }
  std::string name = line.substr(0, colon);
  size_t value_at = line.find_first_not_of(' ', colon + 1);
  std::string value =
      value_at == std::string::npos ? "" : line.substr(value_at);
  return {name, value};
}

}  // namespace

HttpGenerator::HttpGenerator(EndpointConfig config)
    : config_(std::move(config)) {
  if (config_.base_url.empty()) {
    throw ConfigError("endpoint base URL is empty");
  }
  if (config_.max_attempts < 1) {
    throw ConfigError("endpoint max_attempts must be at least 1");
  }
}

std::string HttpGenerator::id() const {
  return config_.model.empty() ? "http" : config_.model;
}

std::string HttpGenerator::generate(const GeneratorRequest& request) {
  validate(request);

  nlohmann::json body;
  body["model"] = config_.model;
  body["messages"] = nlohmann::json::array();
  for (const ChatMessage& m : request.messages) {
    body["messages"].push_back({{"role", m.role}, {"content", m.content}});
  }
  if (request.sampling.is_object()) {
    for (const auto& [key, value] : request.sampling.items()) {
      body[key] = value;
    }
  }

  httplib::Headers headers;
  if (!config_.api_key_env.empty()) headers.insert(auth_header(config_));

  std::string last_error;
  for (int attempt = 0; attempt < config_.max_attempts; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(std::chrono::duration<double>(
          config_.backoff_secs * std::pow(2.0, attempt - 1)));
    }
    // One client per attempt: connections carry no state between calls.
    httplib::Client client(config_.base_url);
    auto timeout = std::chrono::duration<double>(config_.timeout_secs);
    client.set_connection_timeout(timeout);
    client.set_read_timeout(timeout);
    client.set_write_timeout(timeout);

    httplib::Result res =
        client.Post(config_.path, headers, body.dump(), "application/json");
    if (!res) {
      last_error = "connection failed: " + httplib::to_string(res.error());
      continue;
    }
    if (res->status == 401 || res->status == 403) {
      throw AuthError("endpoint rejected the credentials (HTTP " +
                      std::to_string(res->status) + ")");
    }
    if (res->status == 429 || res->status >= 500) {
      last_error = "HTTP " + std::to_string(res->status);
      continue;
    }
    if (res->status < 200 || res->status >= 300) {
      throw TransportError("endpoint returned HTTP " +
                           std::to_string(res->status));
    }
    try {
      nlohmann::json reply = nlohmann::json::parse(res->body);
      const nlohmann::json& choices = reply.at("choices");
      if (!choices.is_array() || choices.empty()) {
        throw TransportError("endpoint response has no choices");
      }
      return choices[0].at("message").at("content").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
      throw TransportError(std::string("malformed endpoint response: ") +
                           e.what());
    }
  }
  throw TransportError("request failed after " +
                       std::to_string(config_.max_attempts) + " attempts (" +
                       last_error + ")");
}

}  // namespace inductor
