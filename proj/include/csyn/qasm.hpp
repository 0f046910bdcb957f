// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "csyn/circuit.hpp"

namespace csyn {

/// Parses the supported OpenQASM 2.0 subset.
///
/// Multiple `qreg` declarations are flattened into one index space in
/// declaration order. `ccx` is expanded into the 6-CNOT Toffoli network.
/// `creg` is accepted only as a measurement target; classical conditionals,
/// `reset`, and `gate`/`opaque` definitions are rejected.
///
/// Throws SyntaxError, UnsupportedGate or QubitIndexError (all ParseError)
/// with the offending line number.
[[nodiscard]] Circuit parse_qasm(std::string_view source, std::string name = "circuit");

/// Reads and parses a file; the circuit is named after the file stem.
/// Throws IOError if the file cannot be read.
[[nodiscard]] Circuit parse_qasm_file(const std::filesystem::path& path);

/// Prints a circuit as OpenQASM 2.0 over a single register `q`.
/// Angles are written in shortest round-trip form, so re-parsing is exact.
[[nodiscard]] std::string to_qasm(const Circuit& c);

}  // namespace csyn
