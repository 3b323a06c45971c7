#pragma once

#include <string>
#include <vector>

#include "apg/process_spec.hpp"

namespace apg {

// Spec files are JSON with nested tables; schema:
//   {"d": 1, "T_max": 1.0, "label": "...",
//    "components": [{"drift": {...}, "gaussian": {...}, "kernel": {...}}]}
ProcessSpec spec_from_json(const std::string& text);
std::string spec_to_json(const ProcessSpec& spec);

// Loads a spec file; throws ConfigError with field-level diagnostics.
ProcessSpec load_spec_file(const std::string& path);

// Built-in canonical specs by name (brownian, drift, compound_poisson,
// stable_a05, stable_a1, stable_a15, subordinator_half, brownian_timechange,
// sec3_example, two_levy_sum, pareto_cp, brownian_2d).
ProcessSpec builtin_spec(const std::string& name);
std::vector<std::string> builtin_names();

// Resolves a --spec argument: builtin name first, then a file path.
ProcessSpec resolve_spec(const std::string& name_or_path);

}  // namespace apg
