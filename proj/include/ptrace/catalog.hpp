#pragma once

#include <string>
#include <vector>

#include "ptrace/io.hpp"

namespace ptrace {

/// Names accepted by `example`, with `n` standing for a parameter.
std::vector<std::string> example_names();

/// Built-in presentation as JSON: kleinian-a:n, elliptic-cone,
/// elliptic-times-plane, symplectic:n (n pairs), symplectic-<dim>,
/// cyclic-quotient:n, klein-d:n, klein-e:6|7|8, zero-plane.
Json example_json(const std::string& name);

Document example(const std::string& name);

}  // namespace ptrace
