#pragma once

#include "koszul/depth.hpp"
#include "koszul/module.hpp"
#include "koszul/ring.hpp"
#include "koszul/torpairs.hpp"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace koszul {

struct SessionConfig {
  /// Longest free resolution any computation may build; defaults to vars + 4.
  std::optional<std::size_t> max_resolution_length;
  /// "text" or "json".
  std::string format = "text";
};

/// Everything a CLI run works on: one ring and the named objects over it.
struct Session {
  RingPtr ring;
  std::vector<std::pair<std::string, PresentedModule>> modules;
  PrimeTable primes;
  std::optional<PhiFunction> phi;
  SessionConfig config;

  /// Throws DomainError for an undeclared name.
  const PresentedModule& module(const std::string& name) const;
  std::size_t max_resolution_length() const;
};

/// Parses and validates a session document (JSON). Syntax errors carry the
/// line and column; semantic errors name the offending entry.
Session parse_session(std::string_view text);
Session load_session(const std::filesystem::path& path);

/// Canonical JSON form. parse_session(serialize(s)) reproduces s, and equal
/// sessions serialize to identical bytes.
std::string serialize(const Session& session);

/// 64-bit FNV-1a of the canonical form, as 16 hex digits.
std::string session_digest(const Session& session);

}  // namespace koszul
