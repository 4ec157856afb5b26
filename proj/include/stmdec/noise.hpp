#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "stmdec/code_lattice.hpp"
#include "stmdec/pauli.hpp"

namespace stmdec {

// Depolarizing channel: each qubit independently picks up X, Y or Z with
// probability p/3 each. An optional per-qubit vector overrides p (used by the
// weighted distance provider).
struct NoiseModel {
    double p = 0.0;
    std::vector<double> per_qubit;  // empty = uniform

    double prob(int qubit) const {
        return per_qubit.empty() ? p : per_qubit[qubit];
    }
};

// Deterministic engine keyed by (seed, stream). Equal keys reproduce equal
// draw sequences regardless of scheduling, so Monte Carlo trials can run in
// any order or thread count.
class SeededRng {
  public:
    SeededRng(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64() { return eng_(); }
    double next_double();                       // uniform in [0, 1)
    std::uint32_t next_below(std::uint32_t n);  // uniform in [0, n)

  private:
    std::mt19937_64 eng_;
};

PauliError sample_error(const CodeLayout& layout, const NoiseModel& model, SeededRng& rng);

// All C(n,w) * 3^w weight-w depolarizing patterns, addressable by index so
// ranges can be split across threads.
class ErrorEnumerator {
  public:
    ErrorEnumerator(int n, int weight);

    std::uint64_t size() const { return total_; }
    PauliError at(std::uint64_t index) const;

  private:
    int n_;
    int weight_;
    std::uint64_t total_;
    std::vector<std::vector<std::uint64_t>> choose_;  // choose_[m][j] = C(m, j)
};

ErrorEnumerator enumerate_errors(const CodeLayout& layout, int weight);

// Uniform draw from the weight-w patterns (sampling fallback for beta).
PauliError sample_fixed_weight(const CodeLayout& layout, int weight, SeededRng& rng);

}  // namespace stmdec
