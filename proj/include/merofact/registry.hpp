#pragma once

#include <string>
#include <vector>

#include "merofact/meromorphic.hpp"

// Shared registry of the library's named FunctionHandles:
//   gamma, digamma, H1, K, K1, A, A1, zeta, eta, beta
// Built once on first use (thread-safe); handles evaluate with the default
// EvalConfig and carry the closed-form pp/res tables where the source
// formulas provide them.
namespace merofact {

const meromorphic::FunctionHandle& registry_get(const std::string& name);
std::vector<std::string> registry_names();

}  // namespace merofact
