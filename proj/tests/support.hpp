#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "quiverthick/curve.hpp"
#include "quiverthick/representation.hpp"

namespace qt_test {

using namespace quiverthick;

std::filesystem::path fixture(const std::string& name);

// Uniform integer in [lo, hi] using raw modulo so sequences are identical across standard libraries.
Integer draw(std::mt19937_64& rng, Integer lo, Integer hi);

Scalar random_scalar(const Field& f, std::mt19937_64& rng);
Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng);
Matrix random_invertible(const Field& f, std::size_t n, std::mt19937_64& rng);

Quiver random_quiver(std::mt19937_64& rng, std::size_t max_vertices, Integer max_arrows);
Representation random_rep(const Quiver& q, const Field& f, std::mt19937_64& rng, Integer max_dim);

// Middle term of 0 -> N -> E -> M -> 0 glued by one matrix per arrow (shape dims_N[s] x dims_M[t]).
Representation extension(const Representation& n, const Representation& m, const std::map<ArrowId, Matrix>& gluing);
std::map<ArrowId, Matrix> random_gluing(const Representation& n, const Representation& m, std::mt19937_64& rng);

// Counts morphisms by enumerating every tuple of linear maps; only for tiny F_p instances.
std::uint64_t brute_force_hom_count(const Representation& m, const Representation& n);

// Euler form on the curve and the quiver of a witness, written out from the Riemann-Roch formula.
Integer rr_chi(Integer genus, Integer r1, Integer d1, Integer r2, Integer d2);
IntMatrix rr_quiver(Integer genus, const std::vector<std::pair<Integer, Integer>>& bundles);

// Is v in the integer span of the rows of basis (small entries).
bool in_integer_span(const std::vector<std::vector<Integer>>& basis, const std::vector<Integer>& v);

struct GoldenCase {
  std::string name;
  std::vector<std::string> args;
  int exit_code;
};
std::vector<GoldenCase> golden_cases();

struct GoldenResult {
  bool matches;
  int exit_code;
  std::string actual;
};
// Runs a case in process and compares against tests/golden/<name>.json with timings removed.
GoldenResult run_golden(const GoldenCase& c, bool update);

}  // namespace qt_test
