#pragma once

// Command implementations behind the rotcolor tool. Each returns its output
// text so that callers (and tests) can compare bytes.

#include <cstdint>
#include <optional>
#include <string>

#include "rotcolor/render.hpp"
#include "rotcolor/serialize.hpp"
#include "rotcolor/trochoid.hpp"

namespace rotcolor {

/// One row per (k, l): theta, p', q', alpha, parity of p'q' and the weight of
/// the unit trochoid anchored at 0. format is "json" or "csv".
std::string cmd_enumerate(int p, int q, const std::string& format = "json");

struct ClassifyOutcome {
  Json json;
  int exit_code = 0;  // 0 Equivalent, 10 NotEquivalent, 20 Undetermined
};
ClassifyOutcome cmd_classify(const TrochoidSpec& a, const TrochoidSpec& b);

struct VerifyOptions {
  int level = 4;
  int bound = 2;
  std::string grid = "small";
  int depth = 8;
  int threads = 1;
  std::uint64_t seed = 20240611;
  std::optional<TrochoidSpec> spec;
};

struct VerifyReport {
  bool pass = true;
  std::string text;
};

/// suite is one of axioms, cocycle, weights, appendix, orbit.
VerifyReport cmd_verify(const std::string& suite, const VerifyOptions& opts = {});

std::string cmd_render(const TrochoidSpec& spec, const RenderConfig& cfg = {});

/// The orbit as JSON: start spec, then every state with its witness.
std::string cmd_orbit(const TrochoidSpec& spec, const OrbitOptions& opts);

}  // namespace rotcolor
