#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bdg/graph.hpp"
#include "bdg/hamilton.hpp"

namespace bdg {

/// Exhaustive backtracking search for a directed cycle of exactly `length`
/// vertices (even, between 2 and 2*min(a, b)).  Cycles are enumerated with
/// their least X-vertex first and neighbours in ascending order; the first
/// complete cycle found is returned.  Independent of the matching machinery.
std::optional<std::vector<Vertex>> brute_cycle(const BipartiteDigraph& d, int length);

/// Number of directed cycles of exactly `length` vertices, counting cycles
/// equal up to rotation once.
long long count_cycles(const BipartiteDigraph& d, int length);

/// Instance codes for the space of all digraphs with class sizes (a, b):
/// bit i*b + j is arc x_i -> y_j, bit a*b + j*a + i is arc y_j -> x_i,
/// codes running over [0, 2^(2ab)).
std::uint64_t enumeration_count(int a, int b);  // too_large when 2ab > 63
std::uint64_t digraph_code(const BipartiteDigraph& d);
BipartiteDigraph digraph_from_code(std::uint64_t code, int a, int b);

struct IndexRange {
  std::uint64_t lo{0}, hi{0};  // half-open
};

/// Iterable code range; *it yields (code, digraph).
class DigraphEnumeration {
public:
  DigraphEnumeration(int a, int b);
  DigraphEnumeration(int a, int b, IndexRange range);

  class iterator {
  public:
    iterator(int a, int b, std::uint64_t code) : a_(a), b_(b), code_(code) {}
    std::pair<std::uint64_t, BipartiteDigraph> operator*() const {
      return {code_, digraph_from_code(code_, a_, b_)};
    }
    iterator& operator++() { ++code_; return *this; }
    friend bool operator==(const iterator&, const iterator&) = default;

  private:
    int a_, b_;
    std::uint64_t code_;
  };

  iterator begin() const { return {a_, b_, range_.lo}; }
  iterator end() const { return {a_, b_, range_.hi}; }
  std::uint64_t size() const { return range_.hi - range_.lo; }

private:
  int a_, b_;
  IndexRange range_;
};

struct VerificationStats {
  std::uint64_t total{0};
  std::uint64_t satisfying{0};
  std::uint64_t hamiltonian_among_satisfying{0};
  std::vector<std::uint64_t> counterexamples;  // satisfiers with no spanning cycle
  // theorem_violation raises, cycle outcomes the oracle rejects, and witness
  // outcomes on instances whose level-2 hypothesis holds.
  std::vector<std::uint64_t> engine_failures;

  friend bool operator==(const VerificationStats&, const VerificationStats&) = default;
};

/// Associative merge of stats from adjacent ranges (in range order).
VerificationStats merge(VerificationStats left, const VerificationStats& right);

/// Sweeps every balanced instance with |X| = a (optionally a code sub-range):
/// evaluates the mode's hypothesis at level k, and for each satisfier runs
/// both the engine and the brute-force oracle at length 2a.
VerificationStats exhaustive_verify(int a, int k, EngineMode mode,
                                    std::optional<IndexRange> range = std::nullopt);

/// Same result as the sequential sweep, computed by `jobs` workers over a
/// partition of the code space.
VerificationStats exhaustive_verify_parallel(int a, int k, EngineMode mode, int jobs);

/// Codes of instances satisfying the pair condition at level k with no
/// spanning cycle, in enumeration order.
std::vector<std::uint64_t> sharpness_search(int a, int k);

/// Codes of (a, b)-instances satisfying the strict half-sum condition with no
/// cycle through all of X, in enumeration order.
std::vector<std::uint64_t> conjecture_search(int a, int b);

}  // namespace bdg
