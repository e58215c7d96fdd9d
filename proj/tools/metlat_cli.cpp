#include <CLI11.hpp>

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "metlat/adjoints.hpp"
#include "metlat/io.hpp"
#include "metlat/partitions.hpp"
#include "metlat/search.hpp"
#include "metlat/topology.hpp"
#include "metlat/weight.hpp"

namespace {

constexpr int kOk = 0;          // success / property holds
constexpr int kWitness = 1;     // counterexample found / predicate false
constexpr int kUsageError = 2;  // malformed input or violated precondition

std::vector<metlat::ExtValue> parse_pool(const std::vector<std::string>& tokens) {
  std::vector<metlat::ExtValue> pool;
  for (const std::string& token : tokens) pool.push_back(metlat::parse_ext_value(token));
  return pool;
}

struct Options {
  bool json = false;

  std::string check_file;

  std::string apply_op;
  std::string apply_file;
  std::string apply_file2;
  std::string apply_scale;

  std::string topo_map;
  std::string topo_file;
  std::string topo_side = "left";

  std::string embed_file;
  std::string alpha = "3/2";
  std::vector<std::string> verify_files;

  std::string search_property;
  std::string demo_name;
  std::string galois_id;
  std::string over;
  std::uint64_t trials = 500;
  std::uint64_t seed = 1;
  Eigen::Index n = 3;
  std::vector<std::string> pool_tokens;
};

int run_check(const Options& opt) {
  const metlat::WeightStructure d = metlat::read_weight_file(opt.check_file);
  const metlat::AxiomSet axioms = metlat::check_axioms(d);
  if (opt.json) {
    nlohmann::json out{{"axioms", metlat::to_string(axioms)}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << metlat::to_string(axioms) << '\n';
  }
  return kOk;
}

int run_apply(const Options& opt) {
  using metlat::WeightStructure;
  const WeightStructure d = metlat::read_weight_file(opt.apply_file);
  auto second = [&]() -> WeightStructure {
    if (opt.apply_file2.empty())
      throw std::invalid_argument("apply " + opt.apply_op + ": needs a second file");
    return metlat::read_weight_file(opt.apply_file2);
  };

  WeightStructure result = d;
  if (opt.apply_op == "dual") {
    result = metlat::dual(d);
  } else if (opt.apply_op == "scale") {
    if (opt.apply_scale.empty())
      throw std::invalid_argument("apply scale: needs --scale C");
    result = metlat::scale(d, metlat::parse_rational(opt.apply_scale));
  } else if (opt.apply_op == "zerofix") {
    result = metlat::with_zero_diagonal(d);
  } else if (opt.apply_op == "infdiag") {
    result = metlat::with_inf_diagonal(d);
  } else if (opt.apply_op == "symjoin") {
    result = metlat::symmetrize_max(d);
  } else if (opt.apply_op == "symmeet") {
    result = metlat::symmetrize_min(d);
  } else if (opt.apply_op == "triclosure") {
    result = metlat::triangle_closure(d);
  } else if (opt.apply_op == "meet") {
    result = metlat::pointwise_meet(d, second());
  } else if (opt.apply_op == "join") {
    result = metlat::pointwise_join(d, second());
  } else if (opt.apply_op == "metmeet") {
    result = metlat::metric_meet(d, second());
  } else {
    throw std::invalid_argument("unknown apply operation '" + opt.apply_op + "'");
  }
  metlat::write_weight(std::cout, result);
  return kOk;
}

int run_topo(const Options& opt) {
  const metlat::WeightStructure d = metlat::read_weight_file(opt.topo_file);
  const metlat::Side side = metlat::parse_side(opt.topo_side);
  metlat::FiniteTopology topology =
      opt.topo_map == "psi" ? metlat::ball_cover_topology(d, side)
      : opt.topo_map == "phi"
          ? metlat::neighborhood_topology(d, side)
          : throw std::invalid_argument("topology map must be 'psi' or 'phi'");
  std::cout << metlat::to_text(topology);
  return kOk;
}

int run_embed(const Options& opt) {
  auto [partition, labels] = metlat::read_partition_file(opt.embed_file);
  const metlat::WeightStructure d =
      metlat::embed_partition(partition, labels, metlat::parse_rational(opt.alpha));
  metlat::write_weight(std::cout, d);
  return kOk;
}

int run_verify_embedding(const Options& opt) {
  std::vector<metlat::Partition> parts;
  std::vector<std::string> labels;
  for (const std::string& file : opt.verify_files) {
    auto [partition, file_labels] = metlat::read_partition_file(file);
    if (parts.empty()) {
      labels = file_labels;
    } else if (file_labels != labels) {
      throw std::invalid_argument("partition files disagree on the point set");
    }
    parts.push_back(std::move(partition));
  }
  const metlat::EmbeddingReport report =
      metlat::verify_embedding(parts, labels, metlat::parse_rational(opt.alpha));
  const bool all_hold = report.meet_preserved && report.join_preserved &&
                        report.injective && report.topology_is_discrete;
  if (opt.json) {
    std::cout << metlat::to_json(report).dump(2) << '\n';
  } else {
    std::cout << "meet_preserved=" << (report.meet_preserved ? "yes" : "no") << '\n'
              << "join_preserved=" << (report.join_preserved ? "yes" : "no") << '\n'
              << "injective=" << (report.injective ? "yes" : "no") << '\n'
              << "topology_is_discrete="
              << (report.topology_is_discrete ? "yes" : "no") << '\n';
    if (report.join_witness) {
      const metlat::EmbeddingViolation& v = *report.join_witness;
      std::cout << "join witness: pair (" << v.point_a << "," << v.point_b
                << ") embedded " << metlat::to_string(v.embedded) << " vs pointwise "
                << metlat::to_string(v.pointwise) << '\n';
    }
    if (report.meet_witness) {
      const metlat::EmbeddingViolation& v = *report.meet_witness;
      std::cout << "meet witness: pair (" << v.point_a << "," << v.point_b
                << ") embedded " << metlat::to_string(v.embedded) << " vs pointwise "
                << metlat::to_string(v.pointwise) << '\n';
    }
  }
  return all_hold ? kOk : kWitness;
}

int run_search(const Options& opt) {
  metlat::PropertySpec spec;
  spec.property = metlat::parse_property(opt.search_property);
  if (!opt.over.empty()) spec.context = metlat::parse_axiom_set(opt.over);
  spec.n = opt.n;
  spec.trials = opt.trials;
  spec.seed = opt.seed;
  spec.pool = parse_pool(opt.pool_tokens);
  const metlat::SearchReport report = metlat::find_counterexample(spec);
  if (opt.json) {
    std::cout << metlat::to_json(report).dump(2) << '\n';
  } else {
    std::cout << report.property << ": " << report.outcome << " after "
              << report.trials_executed
              << (report.exhaustive ? " exhaustive checks" : " trials") << '\n';
    if (!report.note.empty()) std::cout << "note: " << report.note << '\n';
    if (report.witness) {
      for (const metlat::WeightStructure& d : report.witness->inputs)
        std::cout << metlat::to_wsm(d);
      auto block = [](const std::string& text) {
        return text.empty() || text.back() == '\n' ? text : text + '\n';
      };
      std::cout << "lhs:\n" << block(report.witness->lhs) << "rhs:\n"
                << block(report.witness->rhs);
    }
  }
  return report.outcome == "witness" ? kWitness : kOk;
}

int run_demo_cmd(const Options& opt) {
  const metlat::SearchReport report = metlat::run_demo(opt.demo_name);
  if (opt.json) {
    std::cout << metlat::to_json(report).dump(2) << '\n';
  } else {
    std::cout << report.property << ": " << report.outcome << '\n';
    if (!report.note.empty()) std::cout << report.note << '\n';
    if (report.witness)
      std::cout << "lhs: " << report.witness->lhs << "\nrhs: " << report.witness->rhs
                << '\n';
  }
  return report.outcome == "pass" ? kOk : kWitness;
}

int run_galois(const Options& opt) {
  metlat::AdjunctionId id{metlat::parse_adjunction_kind(opt.galois_id),
                          metlat::parse_axiom_set(opt.over)};
  metlat::GaloisOptions options;
  options.trials = opt.trials;
  options.seed = opt.seed;
  options.n = opt.n;
  options.pool = parse_pool(opt.pool_tokens);
  const metlat::GaloisReport report = metlat::galois_holds(id, options);
  if (opt.json) {
    std::cout << metlat::to_json(report).dump(2) << '\n';
  } else {
    std::cout << report.claim << ": " << (report.pass() ? "pass" : "witness")
              << " after " << report.checked
              << (report.exhaustive ? " exhaustive checks" : " trials") << '\n';
    if (report.witness)
      for (const metlat::WeightStructure& d : report.witness->inputs)
        std::cout << metlat::to_wsm(d);
  }
  return report.pass() ? kOk : kWitness;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice computations on weight structures"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "structured output on stdout");

  CLI::App* check = app.add_subcommand("check", "print the maximal axiom set of a .wsm");
  check->add_option("FILE", opt.check_file)->required();

  CLI::App* apply = app.add_subcommand(
      "apply",
      "apply one of: dual scale zerofix infdiag symjoin symmeet triclosure meet "
      "join metmeet");
  apply->add_option("OP", opt.apply_op)->required();
  apply->add_option("FILE", opt.apply_file)->required();
  apply->add_option("FILE2", opt.apply_file2);
  apply->add_option("--scale", opt.apply_scale, "factor for the scale operation");

  CLI::App* topo = app.add_subcommand("topo", "print the psi or phi topology");
  topo->add_option("MAP", opt.topo_map)->required();
  topo->add_option("FILE", opt.topo_file)->required();
  topo->add_option("--side", opt.topo_side, "left or right");

  CLI::App* embed = app.add_subcommand("embed", "embed a partition into Met(X)");
  embed->add_option("PARTFILE", opt.embed_file)->required();
  embed->add_option("--alpha", opt.alpha, "weight on equivalent pairs, in (1,2)");

  CLI::App* verify =
      app.add_subcommand("verify-embedding", "check lattice preservation of the embedding");
  verify->add_option("PARTFILE", opt.verify_files)->required()->expected(-1);
  verify->add_option("--alpha", opt.alpha, "weight on equivalent pairs, in (1,2)");

  CLI::App* search = app.add_subcommand("search", "seeded counterexample search");
  search->add_option("PROP", opt.search_property)->required();
  search->add_option("--n", opt.n);
  search->add_option("--trials", opt.trials);
  search->add_option("--seed", opt.seed);
  search->add_option("--pool", opt.pool_tokens)->delimiter(',');
  search->add_option("--over", opt.over, "axiom context, e.g. zero,sym");

  CLI::App* demo = app.add_subcommand("demo", "run a named fixed scenario");
  demo->add_option("NAME", opt.demo_name)->required();

  CLI::App* galois = app.add_subcommand("galois", "check an adjunction law");
  galois->add_option("ID", opt.galois_id)->required();
  galois->add_option("--trials", opt.trials);
  galois->add_option("--seed", opt.seed);
  galois->add_option("--n", opt.n);
  galois->add_option("--pool", opt.pool_tokens)->delimiter(',');
  galois->add_option("--over", opt.over, "axiom context, e.g. zero,sym");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kUsageError;
  }

  try {
    if (check->parsed()) return run_check(opt);
    if (apply->parsed()) return run_apply(opt);
    if (topo->parsed()) return run_topo(opt);
    if (embed->parsed()) return run_embed(opt);
    if (verify->parsed()) return run_verify_embedding(opt);
    if (search->parsed()) return run_search(opt);
    if (demo->parsed()) return run_demo_cmd(opt);
    if (galois->parsed()) return run_galois(opt);
  } catch (const metlat::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}
