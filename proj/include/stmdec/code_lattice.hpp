#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "stmdec/pauli.hpp"

namespace stmdec {

enum class CodeFamily { standard, rotated };
enum class StabType { x, z };

// Boundary sides, per pass. For the X-generator pass (Z errors) low/high are
// the left/right lattice boundaries; for the Z-generator pass they are
// top/bottom.
enum class BoundarySide { low, high };

struct CodeSpec {
    CodeFamily family;
    int d = 0;  // code distance, odd
    int n = 0;  // data qubits
    int k = 1;  // logical qubits
    int t = 0;  // guaranteed correctable weight, (d-1)/2
};

struct DataQubit {
    int id = -1;
    int row = 0, col = 0;                    // family-specific lattice coordinates
    std::array<int, 2> touched_x{-1, -1};    // global ids of X generators seeing a Z error here
    std::array<int, 2> touched_z{-1, -1};    // global ids of Z generators seeing an X error here
    int column_z = 0;                        // column in [1,d] a Z error here crosses; 0 = none
    int column_x = 0;                        // dual column for an X error; 0 = none
    int boundary_x = -1;                     // X pass: -1 interior, 0 low, 1 high
    int boundary_z = -1;                     // Z pass boundary flag

    int touched_count(StabType type) const {
        const auto& t = type == StabType::x ? touched_x : touched_z;
        return (t[0] >= 0 ? 1 : 0) + (t[1] >= 0 ? 1 : 0);
    }
};

struct Generator {
    int id = -1;  // global index: X generators first, then Z generators
    StabType type = StabType::x;
    std::vector<int> support;  // data qubit ids, ascending
    int hpos = 0;              // metric position in [1, d-1] along the pass axis
    int row = 0, col = 0;      // lattice coordinates
};

struct Syndrome {
    std::vector<int> x_defects;  // global generator ids, ascending
    std::vector<int> z_defects;

    bool empty() const { return x_defects.empty() && z_defects.empty(); }
    std::size_t size() const { return x_defects.size() + z_defects.size(); }
};

enum class ResidualClass { identity, logical_x, logical_z, logical_y, stabilizer_mismatch };

const char* to_string(ResidualClass c);

// Immutable description of one surface-code instance. Safe to share across
// threads once built.
class CodeLayout {
  public:
    const CodeSpec& spec() const { return spec_; }
    int n() const { return spec_.n; }
    int d() const { return spec_.d; }

    const std::vector<DataQubit>& qubits() const { return qubits_; }
    const std::vector<Generator>& generators() const { return generators_; }
    const Generator& generator(int id) const { return generators_[id]; }
    int num_generators() const { return static_cast<int>(generators_.size()); }
    int num_generators(StabType type) const { return type == StabType::x ? num_x_ : num_z_; }
    int first_generator(StabType type) const { return type == StabType::x ? 0 : num_x_; }
    int local_index(int gen_id) const {
        return generators_[gen_id].type == StabType::x ? gen_id : gen_id - num_x_;
    }
    int global_index(StabType type, int local) const {
        return type == StabType::x ? local : local + num_x_;
    }

    const std::vector<int>& x_logical() const { return x_logical_; }
    const std::vector<int>& z_logical() const { return z_logical_; }
    const std::vector<int>& logical_support(StabType pass) const {
        // Chains produced by the X-generator pass are Z corrections, so the
        // crossing operator is the logical Z (and dually for the other pass).
        return pass == StabType::x ? z_logical_ : x_logical_;
    }

    // Ancilla adjacency for one pass: entry v is a list of (neighbor, qubit)
    // where neighbor is a local generator index, kBoundaryLow or kBoundaryHigh.
    static constexpr int kBoundaryLow = -1;
    static constexpr int kBoundaryHigh = -2;
    const std::vector<std::vector<std::pair<int, int>>>& pass_adjacency(StabType type) const {
        return type == StabType::x ? adj_x_ : adj_z_;
    }

  private:
    friend CodeLayout build_code(CodeFamily, int);

    CodeSpec spec_;
    std::vector<DataQubit> qubits_;
    std::vector<Generator> generators_;
    int num_x_ = 0, num_z_ = 0;
    std::vector<int> x_logical_, z_logical_;
    std::vector<std::vector<std::pair<int, int>>> adj_x_, adj_z_;
};

// Builds a standard ([[d^2+(d-1)^2, 1, d]]) or rotated ([[d^2, 1, d]]) layout.
// Throws std::invalid_argument for even or sub-3 distances.
CodeLayout build_code(CodeFamily family, int d);

Syndrome extract_syndrome(const CodeLayout& layout, const PauliError& error);

// Classifies error * correction. Returns stabilizer_mismatch when the
// correction does not reproduce the error syndrome (a decoder bug).
ResidualClass residual_class(const CodeLayout& layout, const PauliError& error,
                             const PauliError& correction);

// Metric position of an ancilla along its pass axis.
int hpos(const CodeLayout& layout, int ancilla);
// Ghost positions: 0 on the low side, d on the high side.
int ghost_hpos(const CodeLayout& layout, BoundarySide side);

// Deterministic minimal qubit chain whose syndrome is exactly {a, b}
// (resp. {a} for the boundary form). Standard codes walk the metric axis
// first, then the cross axis; rotated codes take a BFS shortest path with a
// fixed tie order.
std::vector<int> canonical_path(const CodeLayout& layout, StabType type, int anc_a, int anc_b);
std::vector<int> canonical_boundary_path(const CodeLayout& layout, StabType type, int anc,
                                         BoundarySide side);

std::string render_ascii(const CodeLayout& layout);
std::string render_json(const CodeLayout& layout);

}  // namespace stmdec
