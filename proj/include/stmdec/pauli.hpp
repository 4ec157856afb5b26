#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace stmdec {

// n-qubit Pauli operator in symplectic form: qubit q carries X iff x[q],
// Z iff z[q], Y iff both. Phases are irrelevant for decoding and ignored.
struct PauliError {
    std::vector<std::uint8_t> x;
    std::vector<std::uint8_t> z;

    static PauliError identity(int n) {
        return PauliError{std::vector<std::uint8_t>(n, 0), std::vector<std::uint8_t>(n, 0)};
    }

    int n() const { return static_cast<int>(x.size()); }
    int weight() const;
    bool is_identity() const;

    // Group product (symplectic XOR).
    void compose(const PauliError& other);

    bool operator==(const PauliError&) const = default;
};

// One token per errored qubit, e.g. "Z4 X7 Y10". Empty string is the identity.
std::string format_error(const PauliError& e);

// Parses the token format above. Throws std::invalid_argument on malformed
// tokens, out-of-range indices or repeated qubits.
PauliError parse_error(const std::string& text, int n);

}  // namespace stmdec
