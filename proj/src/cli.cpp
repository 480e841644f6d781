#include "quiverthick/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>

#include "quiverthick/io.hpp"

namespace quiverthick::cli {

namespace {

using io::Json;
namespace fs = std::filesystem;

struct Outcome {
  int code = kPositive;
  Json body = Json::object();
};

std::vector<Integer> parse_integer_list(const std::string& text, const std::string& what) {
  std::vector<Integer> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw io::ParseError(what + ": malformed integer list \"" + text + "\"");
    }
  }
  if (out.empty()) throw io::ParseError(what + ": empty integer list");
  return out;
}

BundleClass parse_bundle(const std::string& text) {
  const auto v = parse_integer_list(text, "--bundle");
  if (v.size() != 2) throw io::ParseError("--bundle: expected RANK,DEGREE, got \"" + text + "\"");
  if (v[0] < 1) throw io::ParseError("--bundle: rank must be positive");
  return BundleClass{v[0], v[1]};
}

std::size_t depth_guard() {
  if (const char* env = std::getenv("QUIVERTHICK_DEPTH_GUARD")) {
    try {
      const auto v = std::stoll(env);
      if (v >= 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw io::ParseError(std::string("QUIVERTHICK_DEPTH_GUARD: not a nonnegative integer: ") + env);
  }
  return kDefaultDepthGuard;
}

std::vector<Representation> load_family(const std::vector<std::string>& files, Json& inputs) {
  std::vector<Representation> family;
  for (const auto& f : files) {
    family.push_back(io::load_representation_file(f));
    inputs["family"].push_back(io::representation_to_json(family.back()));
  }
  return family;
}

Outcome run_realize(Integer genus, bool genus_given, bool all_genera, const std::string& quiver_file, Json& inputs) {
  const auto q = io::load_quiver_file(quiver_file);
  inputs["quiver"] = io::quiver_to_json(q);
  Outcome out;
  if (all_genera) {
    inputs["all_genera"] = true;
    const auto report = realizable_genera(q);
    Json genera = Json::array();
    for (const auto& [g, verdict] : report.realizable) genera.push_back(Json{{"genus", g}, {"verdict", io::verdict_to_json(verdict)}});
    out.body["torsion_on_every_genus"] = report.torsion_on_every_genus;
    out.body["realizable_genera"] = std::move(genera);
    out.code = (report.torsion_on_every_genus || !report.realizable.empty()) ? kPositive : kNegative;
    return out;
  }
  if (!genus_given) throw io::ParseError("realize: --genus is required unless --all-genera is given");
  if (genus < 0) throw io::ParseError("--genus: must be nonnegative");
  inputs["genus"] = genus;
  const auto verdict = classify(genus, q);
  out.body["verdict"] = io::verdict_to_json(verdict);
  if (verdict.witness) out.body["witness"] = io::witness_to_json(*verdict.witness);
  if (verdict.reason) out.body["reason"] = verdict.reason->to_string();
  out.code = verdict.realizable() ? kPositive : kNegative;
  return out;
}

Outcome run_tree(const std::string& quiver_file, Integer depth, Integer verify_depth, std::uint64_t seed, Json& inputs) {
  const auto q = io::load_quiver_file(quiver_file);
  if (depth < 0) throw io::ParseError("--depth: must be nonnegative");
  if (verify_depth > depth) throw io::ParseError("--verify-depth: must not exceed --depth");
  inputs["quiver"] = io::quiver_to_json(q);
  inputs["depth"] = depth;
  inputs["verify_depth"] = verify_depth;
  inputs["seed"] = seed;
  const auto nodes = build_tree(q, static_cast<std::size_t>(depth), depth_guard());
  Outcome out;
  Json listed = Json::array(), verified = Json::array();
  bool all_passed = true;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    listed.push_back(io::tree_node_to_json(nodes[i]));
    if (static_cast<Integer>(nodes[i].depth) > verify_depth) continue;
    const auto report = verify_node(nodes[i], seed + i);
    all_passed = all_passed && report.passed;
    auto j = io::verification_to_json(report);
    j["path"] = nodes[i].path;
    verified.push_back(std::move(j));
  }
  out.body["node_count"] = nodes.size();
  out.body["nodes"] = std::move(listed);
  out.body["verified_count"] = verified.size();
  out.body["verifications"] = std::move(verified);
  out.body["all_verified"] = all_passed;
  out.code = all_passed ? kPositive : kNegative;
  return out;
}

Outcome run_reduce(const std::vector<std::string>& files, const std::string& out_dir, std::uint64_t seed, Json& inputs) {
  const auto family = load_family(files, inputs);
  inputs["seed"] = seed;
  const auto reduced = reduce_to_vertex_like(family, seed);
  Outcome out;
  Json members = Json::array();
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    Json entry{{"dims", reduced[i].dims()}, {"representation", io::representation_to_json(reduced[i])}};
    if (!out_dir.empty()) {
      fs::create_directories(out_dir);
      const auto name = "member_" + std::to_string(i) + ".json";
      std::ofstream file(fs::path(out_dir) / name);
      file << io::canonical_dump(io::representation_to_json(reduced[i]));
      if (!file) throw io::ParseError(out_dir + ": cannot write " + name);
      entry["file"] = name;
    }
    members.push_back(std::move(entry));
  }
  out.body["family_size"] = reduced.size();
  out.body["members"] = std::move(members);
  out.body["realized_quiver"] = io::quiver_to_json(*is_vertex_like(reduced).realized_quiver);
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Thick subcategories of curves and quiver representations", "quiverthick"};
  app.require_subcommand(1);

  Integer genus = 0;
  std::string quiver_file;
  bool all_genera = false;
  auto* realize = app.add_subcommand("realize", "decide realizability of a quiver on a curve of given genus");
  auto* genus_opt = realize->add_option("--genus", genus, "curve genus");
  realize->add_option("--quiver", quiver_file, "quiver file")->required();
  realize->add_flag("--all-genera", all_genera, "list every genus on which the quiver is realizable");

  std::string m_file, n_file;
  bool with_basis = false;
  auto* hom = app.add_subcommand("hom", "dimension of Hom(M, N)");
  hom->add_option("M", m_file)->required();
  hom->add_option("N", n_file)->required();
  hom->add_flag("--basis", with_basis, "also print a basis");

  auto* ext1 = app.add_subcommand("ext1", "dimension of Ext^1(M, N) by two independent routes");
  ext1->add_option("M", m_file)->required();
  ext1->add_option("N", n_file)->required();

  std::vector<std::string> bundles, classes, chi_files;
  std::optional<Integer> chi_genus;
  std::string chi_quiver;
  auto* chi = app.add_subcommand("chi", "Euler form of two bundles, two classes or two modules");
  chi->add_option("--genus", chi_genus, "curve genus (with --bundle)");
  chi->add_option("--bundle", bundles, "RANK,DEGREE (twice)");
  chi->add_option("--quiver", chi_quiver, "quiver file (with --class)");
  chi->add_option("--class", classes, "comma-separated class vector (twice)");
  chi->add_option("files", chi_files, "two representation files");

  std::vector<std::string> family_files;
  auto* vertex_like = app.add_subcommand("vertex-like", "check whether a family is vertex-like");
  vertex_like->add_option("files", family_files)->required();

  std::string out_dir;
  std::uint64_t seed = 0;
  auto* reduce = app.add_subcommand("reduce", "reduce a family to a vertex-like family");
  reduce->add_option("files", family_files)->required();
  reduce->add_option("--out", out_dir, "directory for the reduced family");
  reduce->add_option("--seed", seed, "seed for randomized searches");

  Integer depth = 0, verify_depth = -1;
  auto* tree = app.add_subcommand("tree", "descending binary tree of thick subcategories");
  tree->add_option("--quiver", quiver_file, "two-vertex quiver file")->required();
  tree->add_option("--depth", depth, "tree depth")->required();
  tree->add_option("--verify-depth", verify_depth, "verify nodes up to this depth");
  tree->add_option("--seed", seed, "seed for the verification bases");

  std::string q1_file, q2_file;
  auto* iso = app.add_subcommand("iso", "quiver isomorphism");
  iso->add_option("Q1", q1_file)->required();
  iso->add_option("Q2", q2_file)->required();

  std::vector<std::string> argv_storage{"quiverthick"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPositive : kInputError;
  }

  const auto start = std::chrono::steady_clock::now();
  Json inputs = Json::object();
  Outcome outcome;
  std::string command;
  try {
    if (realize->parsed()) {
      command = "realize";
      outcome = run_realize(genus, genus_opt->count() > 0, all_genera, quiver_file, inputs);
    } else if (hom->parsed() || ext1->parsed()) {
      command = hom->parsed() ? "hom" : "ext1";
      const auto m = io::load_representation_file(m_file);
      const auto n = io::load_representation_file(n_file);
      require_compatible(m, n);
      inputs["M"] = io::representation_to_json(m);
      inputs["N"] = io::representation_to_json(n);
      if (hom->parsed()) {
        const auto space = hom_basis(m, n);
        outcome.body["hom_dim"] = space.dim();
        if (with_basis) {
          inputs["basis"] = true;
          Json basis = Json::array();
          for (const auto& h : space.basis) basis.push_back(io::hom_element_to_json(h));
          outcome.body["basis"] = std::move(basis);
        }
      } else {
        outcome.body["hom_dim"] = hom_dim(m, n);
        outcome.body["ext1_dim"] = ext1_dim(m, n);
        outcome.body["ext1_dim_via_resolution"] = ext1_dim_via_resolution(m, n);
        outcome.body["euler_form"] = euler_form(m.quiver(), m.dimension_vector(), n.dimension_vector());
      }
    } else if (chi->parsed()) {
      command = "chi";
      if (!bundles.empty()) {
        if (!chi_genus || bundles.size() != 2) throw io::ParseError("chi: --genus and exactly two --bundle values required");
        if (*chi_genus < 0) throw io::ParseError("--genus: must be nonnegative");
        const auto e = parse_bundle(bundles[0]), f = parse_bundle(bundles[1]);
        inputs["genus"] = *chi_genus;
        inputs["bundles"] = Json{Json{e.rank, e.degree}, Json{f.rank, f.degree}};
        outcome.body["mode"] = "curve";
        outcome.body["chi"] = chi_curve(e, f, *chi_genus);
      } else if (!classes.empty()) {
        if (chi_quiver.empty() || classes.size() != 2) throw io::ParseError("chi: --quiver and exactly two --class values required");
        const auto q = io::load_quiver_file(chi_quiver);
        const ClassVector m{parse_integer_list(classes[0], "--class")}, n{parse_integer_list(classes[1], "--class")};
        if (m.size() != q.vertex_count() || n.size() != q.vertex_count())
          throw io::ParseError("--class: length must equal the vertex count");
        inputs["quiver"] = io::quiver_to_json(q);
        inputs["classes"] = Json{m.coords, n.coords};
        outcome.body["mode"] = "quiver";
        outcome.body["chi"] = euler_form(q, m, n);
      } else if (chi_files.size() == 2) {
        const auto m = io::load_representation_file(chi_files[0]);
        const auto n = io::load_representation_file(chi_files[1]);
        require_compatible(m, n);
        inputs["M"] = io::representation_to_json(m);
        inputs["N"] = io::representation_to_json(n);
        outcome.body["mode"] = "modules";
        outcome.body["chi"] = euler_form(m.quiver(), m.dimension_vector(), n.dimension_vector());
      } else {
        throw io::ParseError("chi: give two --bundle values, two --class values or two representation files");
      }
    } else if (vertex_like->parsed()) {
      command = "vertex-like";
      const auto family = load_family(family_files, inputs);
      const auto verdict = is_vertex_like(family);
      outcome.body["vertex_like"] = verdict.vertex_like;
      if (verdict.vertex_like) {
        outcome.body["realized_quiver"] = io::quiver_to_json(*verdict.realized_quiver);
      } else {
        outcome.body["offending_pair"] = Json{verdict.offending_pair->first, verdict.offending_pair->second};
        outcome.body["hom_dim"] = verdict.offending_hom_dim;
        outcome.code = kNegative;
      }
    } else if (reduce->parsed()) {
      command = "reduce";
      outcome = run_reduce(family_files, out_dir, seed, inputs);
    } else if (tree->parsed()) {
      command = "tree";
      outcome = run_tree(quiver_file, depth, verify_depth, seed, inputs);
    } else if (iso->parsed()) {
      command = "iso";
      const auto a = io::load_quiver_file(q1_file), b = io::load_quiver_file(q2_file);
      inputs["Q1"] = io::quiver_to_json(a);
      inputs["Q2"] = io::quiver_to_json(b);
      const auto sigma = quiver_isomorphism(a, b);
      outcome.body["isomorphic"] = sigma.has_value();
      if (sigma) outcome.body["permutation"] = *sigma;
      outcome.code = sigma ? kPositive : kNegative;
    }
  } catch (const NeedsFieldExtension& e) {
    err << "error: " << e.what() << "\n";
    Json envelope{{"command", command},
                  {"error", "NeedsFieldExtension"},
                  {"input_digest", io::sha256_hex(command + "\n" + io::canonical_dump(inputs))},
                  {"member", e.member()},
                  {"minimal_polynomial", e.minimal_polynomial()}};
    out << io::canonical_dump(envelope);
    return kFieldExtension;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  Json envelope = std::move(outcome.body);
  envelope["command"] = command;
  envelope["input_digest"] = io::sha256_hex(command + "\n" + io::canonical_dump(inputs));
  envelope["timings"] = Json{{"elapsed_ms", elapsed}};
  out << io::canonical_dump(envelope);
  return outcome.code;
}

}  // namespace quiverthick::cli
