#include "support.hpp"

#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#include "quiverthick/cli.hpp"
#include "quiverthick/io.hpp"

namespace qt_test {

std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(QUIVERTHICK_TEST_DATA_DIR) / "fixtures" / name;
}

Integer draw(std::mt19937_64& rng, Integer lo, Integer hi) {
  return lo + static_cast<Integer>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
  if (f.is_prime()) return f.from(draw(rng, 0, f.characteristic() - 1));
  const auto num = draw(rng, -3, 3);
  const auto den = draw(rng, 1, 2);
  mpq_class q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_scalar(f, rng);
  return m;
}

Matrix random_invertible(const Field& f, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    auto m = random_matrix(f, n, n, rng);
    if (is_invertible(f, m)) return m;
  }
}

Quiver random_quiver(std::mt19937_64& rng, std::size_t max_vertices, Integer max_arrows) {
  const auto n = static_cast<std::size_t>(draw(rng, 1, static_cast<Integer>(max_vertices)));
  IntMatrix adj(n, std::vector<Integer>(n));
  for (auto& row : adj)
    for (auto& e : row) e = draw(rng, 0, max_arrows);
  return Quiver(adj);
}

Representation random_rep(const Quiver& q, const Field& f, std::mt19937_64& rng, Integer max_dim) {
  std::vector<Integer> dims(q.vertex_count());
  for (auto& d : dims) d = draw(rng, 0, max_dim);
  std::map<ArrowId, Matrix> maps;
  for (std::size_t s = 0; s < q.vertex_count(); ++s)
    for (std::size_t t = 0; t < q.vertex_count(); ++t)
      for (Integer c = 0; c < q.arrows(s, t); ++c)
        maps[{s, t, c}] = random_matrix(f, static_cast<std::size_t>(dims[s]), static_cast<std::size_t>(dims[t]), rng);
  return Representation(q, f, dims, maps);
}

Representation extension(const Representation& n, const Representation& m, const std::map<ArrowId, Matrix>& gluing) {
  const auto& q = n.quiver();
  const auto& f = n.field();
  std::vector<Integer> dims(q.vertex_count());
  for (std::size_t v = 0; v < dims.size(); ++v) dims[v] = n.dim(v) + m.dim(v);
  std::map<ArrowId, Matrix> maps;
  for (std::size_t s = 0; s < q.vertex_count(); ++s)
    for (std::size_t t = 0; t < q.vertex_count(); ++t)
      for (Integer c = 0; c < q.arrows(s, t); ++c) {
        const ArrowId a{s, t, c};
        const auto ns = static_cast<std::size_t>(n.dim(s)), nt = static_cast<std::size_t>(n.dim(t));
        Matrix e(static_cast<std::size_t>(dims[s]), static_cast<std::size_t>(dims[t]));
        const auto rn = n.arrow_map(a), rm = m.arrow_map(a);
        for (std::size_t i = 0; i < rn.rows(); ++i)
          for (std::size_t j = 0; j < rn.cols(); ++j) e(i, j) = rn(i, j);
        for (std::size_t i = 0; i < rm.rows(); ++i)
          for (std::size_t j = 0; j < rm.cols(); ++j) e(ns + i, nt + j) = rm(i, j);
        if (auto it = gluing.find(a); it != gluing.end())
          for (std::size_t i = 0; i < it->second.rows(); ++i)
            for (std::size_t j = 0; j < it->second.cols(); ++j) e(i, nt + j) = it->second(i, j);
        maps[a] = e;
      }
  return Representation(q, f, dims, maps);
}

std::map<ArrowId, Matrix> random_gluing(const Representation& n, const Representation& m, std::mt19937_64& rng) {
  const auto& q = n.quiver();
  std::map<ArrowId, Matrix> gluing;
  for (std::size_t s = 0; s < q.vertex_count(); ++s)
    for (std::size_t t = 0; t < q.vertex_count(); ++t)
      for (Integer c = 0; c < q.arrows(s, t); ++c)
        gluing[{s, t, c}] = random_matrix(n.field(), static_cast<std::size_t>(n.dim(s)),
                                          static_cast<std::size_t>(m.dim(t)), rng);
  return gluing;
}

std::uint64_t brute_force_hom_count(const Representation& m, const Representation& n) {
  const auto& q = m.quiver();
  const auto& f = m.field();
  const auto p = static_cast<std::uint64_t>(f.characteristic());
  const auto vcount = q.vertex_count();
  std::size_t unknowns = 0;
  for (std::size_t v = 0; v < vcount; ++v) unknowns += static_cast<std::size_t>(m.dim(v) * n.dim(v));
  std::vector<std::uint64_t> digits(unknowns, 0);
  std::uint64_t count = 0;
  for (;;) {
    std::vector<Matrix> phi;
    std::size_t pos = 0;
    for (std::size_t v = 0; v < vcount; ++v) {
      Matrix mv(static_cast<std::size_t>(n.dim(v)), static_cast<std::size_t>(m.dim(v)));
      for (std::size_t r = 0; r < mv.rows(); ++r)
        for (std::size_t c = 0; c < mv.cols(); ++c) mv(r, c) = f.from(static_cast<long>(digits[pos++]));
      phi.push_back(mv);
    }
    bool ok = true;
    for (std::size_t s = 0; s < vcount && ok; ++s)
      for (std::size_t t = 0; t < vcount && ok; ++t)
        for (Integer c = 0; c < q.arrows(s, t) && ok; ++c) {
          const ArrowId a{s, t, c};
          ok = multiply(f, phi[s], m.arrow_map(a)) == multiply(f, n.arrow_map(a), phi[t]);
        }
    count += ok ? 1 : 0;
    std::size_t i = 0;
    while (i < unknowns && ++digits[i] == p) digits[i++] = 0;
    if (i == unknowns) break;
  }
  return count;
}

Integer rr_chi(Integer genus, Integer r1, Integer d1, Integer r2, Integer d2) {
  return r1 * d2 - r2 * d1 + r1 * r2 * (1 - genus);
}

IntMatrix rr_quiver(Integer genus, const std::vector<std::pair<Integer, Integer>>& bundles) {
  const auto n = bundles.size();
  IntMatrix adj(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      adj[i][j] = (i == j ? 1 : 0) -
                  rr_chi(genus, bundles[j].first, bundles[j].second, bundles[i].first, bundles[i].second);
  return adj;
}

namespace {

// Row-style Hermite reduction over the integers; returns a basis of the row lattice.
std::vector<std::vector<Integer>> lattice_basis(std::vector<std::vector<Integer>> rows, std::size_t width) {
  std::vector<std::vector<Integer>> basis;
  for (std::size_t col = 0; col < width; ++col) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t r = 0; r < rows.size(); ++r)
        if (rows[r][col] != 0 && (best == rows.size() || std::abs(rows[r][col]) < std::abs(rows[best][col]))) best = r;
      if (best == rows.size()) break;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == best || rows[r][col] == 0) continue;
        const auto k = rows[r][col] / rows[best][col];
        for (std::size_t c = 0; c < width; ++c) rows[r][c] -= k * rows[best][c];
      }
      bool others_zero = true;
      for (std::size_t r = 0; r < rows.size(); ++r)
        if (r != best && rows[r][col] != 0) others_zero = false;
      if (others_zero) {
        basis.push_back(rows[best]);
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
        break;
      }
    }
  }
  return basis;
}

}  // namespace

bool in_integer_span(const std::vector<std::vector<Integer>>& basis, const std::vector<Integer>& v) {
  const auto width = v.size();
  auto echelon = lattice_basis(basis, width);
  auto rest = v;
  for (const auto& row : echelon) {
    std::size_t lead = 0;
    while (row[lead] == 0) ++lead;
    if (rest[lead] % row[lead] != 0) return false;
    const auto k = rest[lead] / row[lead];
    for (std::size_t c = 0; c < width; ++c) rest[c] -= k * row[c];
  }
  for (auto x : rest)
    if (x != 0) return false;
  return true;
}

std::vector<GoldenCase> golden_cases() {
  auto fx = [](const std::string& n) { return fixture(n).string(); };
  return {
      {"realize_g2", {"realize", "--genus", "2", "--quiver", fx("q_g2.json")}, 0},
      {"realize_g1_mismatch", {"realize", "--genus", "1", "--quiver", fx("q_two_loops.json")}, 1},
      {"realize_all_genera", {"realize", "--all-genera", "--quiver", fx("q_five_loops.json")}, 0},
      {"hom_zigzag", {"hom", fx("zz1.json"), fx("zz2.json"), "--basis"}, 0},
      {"ext1_simples", {"ext1", fx("a2_s1.json"), fx("a2_s0.json")}, 0},
      {"chi_curve", {"chi", "--genus", "2", "--bundle", "1,0", "--bundle", "1,0"}, 0},
      {"vertex_like_zigzag", {"vertex-like", fx("zz1.json"), fx("zz2.json")}, 0},
      {"reduce_duplicate", {"reduce", fx("s0.json"), fx("s0.json")}, 0},
      {"tree_depth3", {"tree", "--quiver", fx("q_eqhe.json"), "--depth", "3", "--verify-depth", "1"}, 0},
      {"iso_swap", {"iso", fx("q_23.json"), fx("q_23_swap.json")}, 0},
  };
}

GoldenResult run_golden(const GoldenCase& c, bool update) {
  std::ostringstream out, err;
  const int code = cli::run(c.args, out, err);
  auto envelope = io::Json::parse(out.str());
  envelope.erase("timings");
  const auto actual = io::canonical_dump(envelope);
  const auto path = std::filesystem::path(QUIVERTHICK_TEST_DATA_DIR) / "golden" / (c.name + ".json");
  if (update) {
    std::ofstream(path) << actual;
    return {true, code, actual};
  }
  std::ifstream in(path);
  if (!in) return {false, code, actual};
  std::stringstream expected;
  expected << in.rdbuf();
  return {expected.str() == actual, code, actual};
}

}  // namespace qt_test
