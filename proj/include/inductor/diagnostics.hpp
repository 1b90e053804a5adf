// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace inductor {

// 1-based position in a source text. column counts bytes, not glyphs.
struct SourcePos {
  int line = 0;
  int column = 0;

  std::string str() const {
    return std::to_string(line) + ":" + std::to_string(column);
  }
};

// Base class for all toolkit errors that carry a message.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Frontend errors --------------------------------------------------------

class SyntaxError : public Error {
public:
  SyntaxError(SourcePos pos, const std::string& expected)
      : Error("syntax error at " + pos.str() + ": expected " + expected),
        pos_(pos), expected_(expected) {}
  SourcePos pos() const { return pos_; }
  const std::string& expected() const { return expected_; }

private:
  SourcePos pos_;
  std::string expected_;
};

class UnsupportedConstruct : public Error {
public:
  UnsupportedConstruct(SourcePos pos, const std::string& name)
      : Error("unsupported construct at " + pos.str() + ": " + name),
        pos_(pos), name_(name) {}
  SourcePos pos() const { return pos_; }
  const std::string& name() const { return name_; }

private:
  SourcePos pos_;
  std::string name_;
};

// Raised for non-ASCII bytes in property text that the repair table does
// not cover. Mapped symbols are silently rewritten before parsing.
class NonAsciiOperator : public Error {
public:
  NonAsciiOperator(SourcePos pos, const std::string& glyph,
                   const std::string& hint)
      : Error("non-ASCII operator at " + pos.str() + ": '" + glyph + "'" +
              (hint.empty() ? "" : " (" + hint + ")")),
        pos_(pos) {}
  SourcePos pos() const { return pos_; }

private:
  SourcePos pos_;
};

class UnknownSignal : public Error {
public:
  explicit UnknownSignal(const std::string& name)
      : Error("unknown signal: " + name), name_(name) {}
  const std::string& name() const { return name_; }

private:
  std::string name_;
};

class ElaborationError : public Error {
public:
  explicit ElaborationError(const std::string& msg)
      : Error("elaboration error: " + msg) {}
};

class UnsupportedTemporalDepth : public Error {
public:
  UnsupportedTemporalDepth(int depth, int cap)
      : Error("temporal depth " + std::to_string(depth) +
              " exceeds cap " + std::to_string(cap)) {}
};

// Core-layer errors ------------------------------------------------------

class UnboundVariable : public Error {
public:
  explicit UnboundVariable(const std::string& what)
      : Error("unbound variable: " + what) {}
};

class StateSpaceTooLarge : public Error {
public:
  explicit StateSpaceTooLarge(const std::string& msg)
      : Error("state space too large: " + msg) {}
};

// Generator errors -------------------------------------------------------

class TransportError : public Error {
public:
  explicit TransportError(const std::string& msg)
      : Error("transport error: " + msg) {}
};

class AuthError : public Error {
public:
  explicit AuthError(const std::string& msg)
      : Error("authentication error: " + msg) {}
};

class MockExhausted : public Error {
public:
  MockExhausted() : Error("mock generator: scripted responses consumed") {}
};

class CombinatorialCap : public Error {
public:
  CombinatorialCap(std::size_t count, std::size_t cap)
      : Error("template enumeration would emit " + std::to_string(count) +
              " candidates, cap is " + std::to_string(cap)) {}
};

class ProviderError : public Error {
public:
  explicit ProviderError(const std::string& msg)
      : Error("embedding provider error: " + msg) {}
};

class PoolTooSmall : public Error {
public:
  PoolTooSmall(std::size_t have, std::size_t want)
      : Error("example pool has " + std::to_string(have) +
              " entries, need " + std::to_string(want)) {}
};

// Tooling errors ---------------------------------------------------------

class ConfigError : public Error {
public:
  explicit ConfigError(const std::string& msg)
      : Error("config error: " + msg) {}
};

class IoError : public Error {
public:
  explicit IoError(const std::string& msg) : Error("io error: " + msg) {}
};

class SolverCrash : public Error {
public:
  explicit SolverCrash(const std::string& msg)
      : Error("external solver crash: " + msg) {}
};

}  // namespace inductor
