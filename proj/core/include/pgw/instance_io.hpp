#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include "pgw/diagonal_group.hpp"
#include "pgw/instances.hpp"

namespace pgw {

std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);

void save_instance(const Instance& inst, const std::filesystem::path& path);
Instance load_instance(const std::filesystem::path& path);

std::string kronecker_spec_to_json(const KroneckerSpec& spec);
KroneckerSpec kronecker_spec_from_json(const std::string& text);

// Either an explicit instance or a Kronecker spec ("kind": "kronecker").
std::variant<Instance, KroneckerSpec> load_any(const std::filesystem::path& path);

// Constraint file: {"n": int, "z": ["0110", ...]}.
ConstraintSet load_constraints(const std::filesystem::path& path);
std::string constraints_to_json(const ConstraintSet& s);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace pgw
