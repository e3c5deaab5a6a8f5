#pragma once

#include <json.hpp>

#include "hk/catfile.hpp"
#include "hk/sites.hpp"

namespace hk::cli {

/// Command, category, functors and window of one run. Empty strings select defaults.
struct SessionConfig {
  std::string command;
  std::string field;                     // Q, F2, F3, ...
  std::string category = "dualnumbers";  // builtin name or path to a category file
  std::vector<std::string> functors;
  std::string object;                    // A for sigma and sigma-theta
  std::string source, target;            // hom, noy-hom, kb-hom
  std::vector<std::string> morphisms;
  std::vector<std::string> skeleton;     // "NAME=morphism" Noy objects for topologies
  unsigned window_len = 0;               // 0: the category's own length bound
  unsigned window_dots = 0;              // 0: default dot bound for EN
  std::uint64_t seed = 1;
  unsigned samples = 0;                  // random combinations added to the morphism list
  unsigned p = 2, n = 2;                 // fr-plus
  bool json = false, verbose = false;
  bool assert_complete = false;          // diagram windows: treat the length bound as witness-complete
};

/// Set one configuration key by its flag name ("field", "category", "functor", "window-len", ...).
/// List-valued keys (functor, morphism, skeleton) append.
void set_config(SessionConfig& c, const std::string& key, const std::string& value);

struct Report {
  nlohmann::ordered_json body;
  int exit_code = 0;  // 0 success, 2 when every verdict is inconclusive
  std::string text() const;
  std::string json() const;
  std::string render(bool as_json) const { return as_json ? json() : text(); }
};

/// Runs one command. Throws hk::Error (or a subclass) on bad input.
Report run_command(const SessionConfig& c);

std::vector<std::string> command_names();
std::vector<std::string> builtin_category_names();

}  // namespace hk::cli
