#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <unistd.h>

#include "CLI11.hpp"
#include "cli_support.hpp"
#include "indcluster/error.hpp"
#include "indcluster/grassmann.hpp"
#include "indcluster/ind_window.hpp"
#include "indcluster/parallel.hpp"
#include "indcluster/sato.hpp"

using namespace indcluster;
using namespace indcluster::cli;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

nlohmann::json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  try {
    return nlohmann::json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  f << text;
}

Seed read_seed(const std::string& path) { return seed_from_json(read_json(path)); }

struct SeedOutput {
  std::string json_path, dot_path;
  bool json_stdout = false;
};

void add_seed_output(CLI::App* cmd, SeedOutput& o) {
  cmd->add_option("--out", o.json_path, "write the seed as JSON");
  cmd->add_option("--dot", o.dot_path, "write the quiver as DOT");
  cmd->add_flag("--json", o.json_stdout, "print JSON instead of the summary");
}

void emit_seed(const Seed& s, const SeedOutput& o) {
  if (o.json_stdout) {
    std::cout << seed_to_json(s).dump(2) << "\n";
  } else {
    print_seed(std::cout, s);
  }
  if (!o.json_path.empty()) write_text(o.json_path, seed_to_json(s).dump(2) + "\n");
  if (!o.dot_path.empty()) write_text(o.dot_path, quiver_to_dot(s));
}

// Applies the steps, echoing each exchange relation and, on request, its quadratic form.
Seed apply_steps(Seed s, const std::vector<std::string>& steps, bool show_relations) {
  for (const auto& token : steps) {
    VarId x = resolve_var(s, token);
    Seed next = s.var(x).label ? mutate_label(s, *s.var(x).label) : mutate(s, x);
    VarId fresh = next.at(s.index_of(x)).id;
    auto rel = exchange_relation(s, x, fresh);
    std::cout << exchange_relation_string(rel, s, next) << "\n";
    if (show_relations) {
      std::string q = exchange_as_relation(rel, s, next);
      if (!q.empty()) std::cout << q << "\n";
    }
    s = std::move(next);
  }
  return s;
}

// "rect:H,W" expands to the rectangles inside H x W plus the empty partition; other tokens name classes.
std::vector<VarId> parse_classes(const std::string& text) {
  std::vector<VarId> out;
  for (const auto& token : split_tokens(text)) {
    if (token.rfind("rect:", 0) == 0) {
      int h = 0, w = 0;
      char comma = 0;
      std::istringstream in(token.substr(5));
      if (!(in >> h >> comma >> w) || comma != ',' || h < 0 || w < 0)
        throw Error(ErrorCode::InvalidArgument, "expected rect:H,W");
      out.push_back(var(Partition{}.label_name()));
      for (int i = 1; i <= h; ++i)
        for (int j = 1; j <= w; ++j) out.push_back(var(Partition::rectangle(i, j).label_name()));
    } else if (token.front() == '(' || token.front() == '[') {
      out.push_back(var(parse_partition(token).label_name()));
    } else {
      out.push_back(var(token));
    }
  }
  return out;
}

const char* status_name(AttainmentStatus s) {
  switch (s) {
    case AttainmentStatus::Zero: return "zero";
    case AttainmentStatus::Attained: return "attained";
    default: return "unstable";
  }
}

nlohmann::json certificates_json(const IndSeedWindow& w) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : w.certificates) {
    nlohmann::json wit = nlohmann::json::array();
    for (const auto& [x, y] : c.witnesses) wit.push_back({var_name(x), var_name(y)});
    out.push_back({{"row", var_name(c.row)},
                   {"col", var_name(c.col)},
                   {"status", status_name(c.status)},
                   {"value", c.value},
                   {"attained_at", c.attained_at},
                   {"aligned_from", c.aligned_from},
                   {"witnesses", wit}});
  }
  nlohmann::json levels = nlohmann::json::object();
  for (const auto& [y, l] : w.column_uniform_level) levels[var_name(y)] = l;
  return {{"bound", w.bound},
          {"uniform_level", w.uniform_level ? nlohmann::json(*w.uniform_level) : nlohmann::json()},
          {"column_uniform_level", levels},
          {"certificates", out}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cluster-algebra and Sato Grassmannian toolkit"};
  app.require_subcommand(1);
  std::uint64_t rng_seed = 1;
  int jobs_flag = 0;
  app.add_option("--rng-seed", rng_seed, "seed for oracle matrices");
  app.add_option("--jobs", jobs_flag, "worker threads (default INDCLUSTER_JOBS or all cores)");

  int code = kPass;
  std::function<int()> action;
  auto on = [&](CLI::App* cmd, std::function<int()> fn) { cmd->callback([&action, fn] { action = fn; }); };

  // ---- seed
  auto* seed_cmd = app.add_subcommand("seed", "construct or validate seeds");
  seed_cmd->require_subcommand(1);
  SeedOutput seed_out;
  std::vector<std::string> seed_mutations;
  bool show_relations = false;
  int dim_a = 0, dim_b = 0;
  auto* grass = seed_cmd->add_subcommand("grass", "rectangle seed of Gr(M, M+N)");
  grass->add_option("M", dim_a)->required()->check(CLI::PositiveNumber);
  grass->add_option("N", dim_b)->required()->check(CLI::PositiveNumber);
  auto* qinf = seed_cmd->add_subcommand("qinf-window", "window of the infinite rectangle quiver");
  qinf->add_option("H", dim_a)->required()->check(CLI::PositiveNumber);
  qinf->add_option("W", dim_b)->required()->check(CLI::PositiveNumber);
  auto* quad = seed_cmd->add_subcommand("quad", "quadrilateral quiver of Gr(M, 2M)");
  quad->add_option("M", dim_a)->required()->check(CLI::Range(2, 12));
  std::string file_a, file_b, file_c;
  auto* validate = seed_cmd->add_subcommand("validate", "check a seed file");
  validate->add_option("FILE", file_a)->required();
  for (auto* c : {grass, qinf, quad}) {
    add_seed_output(c, seed_out);
    c->add_option("--mutate", seed_mutations, "labels or names to mutate, in order");
    c->add_flag("--show-relations", show_relations, "print each exchange as a quadratic relation");
  }
  auto build_and_emit = [&](std::function<Seed()> make) {
    return [&, make] {
      Seed s = make();
      std::vector<std::string> steps;
      for (const auto& m : seed_mutations)
        for (const auto& t : split_tokens(m)) steps.push_back(t);
      s = apply_steps(s, steps, show_relations);
      if (steps.empty() || seed_out.json_stdout || !seed_out.json_path.empty() || !seed_out.dot_path.empty() ||
          !show_relations)
        emit_seed(s, seed_out);
      return kPass;
    };
  };
  on(grass, build_and_emit([&] { return rect_seed(dim_a, dim_b); }));
  on(qinf, build_and_emit([&] { return q_infty_window(dim_a, dim_b); }));
  on(quad, build_and_emit([&] { return quad_quiver(dim_a); }));
  on(validate, [&] {
    Seed s = read_seed(file_a);
    auto rep = seed_validate(s);
    if (rep.valid()) {
      std::cout << "valid (" << s.size() << " variables, " << s.exchangeables().size() << " exchangeable"
                << (rep.skew_symmetric ? ", skew-symmetric" : ", skew-symmetrizable") << ")\n";
      return kPass;
    }
    for (const auto& v : rep.violations) std::cout << v.kind << ": " << v.detail << "\n";
    return kFail;
  });

  // ---- mutate
  auto* mutate_cmd = app.add_subcommand("mutate", "mutate a seed file along a sequence");
  std::string seq_text;
  SeedOutput mutate_out;
  mutate_cmd->add_option("FILE", file_a)->required();
  mutate_cmd->add_option("--seq", seq_text, "labels or names separated by spaces or ';'")->required();
  add_seed_output(mutate_cmd, mutate_out);
  on(mutate_cmd, [&] {
    Seed s = apply_steps(read_seed(file_a), split_tokens(seq_text), false);
    emit_seed(s, mutate_out);
    return kPass;
  });

  // ---- check
  auto* check_cmd = app.add_subcommand("check", "verification verbs");
  check_cmd->require_subcommand(1);
  std::string lam_a, lam_b;
  auto* weak = check_cmd->add_subcommand("weak-sep", "weak separation of two partitions");
  weak->add_option("LAMBDA", lam_a)->required();
  weak->add_option("MU", lam_b)->required();
  on(weak, [&] {
    bool ok = weakly_separated(parse_partition(lam_a), parse_partition(lam_b));
    std::cout << (ok ? "weakly separated" : "NOT weakly separated") << "\n";
    return ok ? kPass : kFail;
  });
  int depth = 3;
  auto* morph = check_cmd->add_subcommand("morphism", "melting-morphism axioms");
  morph->add_option("SRC", file_a)->required();
  morph->add_option("DST", file_b)->required();
  morph->add_option("MAP", file_c)->required();
  morph->add_option("--depth", depth)->check(CLI::NonNegativeNumber);
  on(morph, [&] {
    Seed src = read_seed(file_a), dst = read_seed(file_b);
    auto rep = check_melting_morphism(morphism_from_json(read_json(file_c)), src, dst, depth);
    auto line = [](const char* name, bool ok) { std::cout << name << ": " << (ok ? "pass" : "FAIL") << "\n"; };
    line("CM1", rep.cm1);
    line("MCM", rep.mcm);
    line("iMCM", rep.imcm);
    line("specialisation", rep.specialisation);
    if (rep.cm2_checked) {
      std::cout << "CM2: " << (rep.cm2 ? "pass" : "FAIL") << " (depth " << rep.depth << ", "
                << rep.sequences_checked << " sequences)\n";
    } else {
      std::cout << "CM2: skipped\n";
    }
    if (!rep.passed()) {
      std::cout << "failed axiom: " << rep.failed_axiom;
      if (!rep.detail.empty()) std::cout << " (" << rep.detail << ")";
      std::cout << "\n";
    }
    return rep.passed() ? kPass : kFail;
  });

  // ---- relations
  auto* rel_cmd = app.add_subcommand("relations", "quadratic Plücker relations");
  rel_cmd->require_subcommand(1);
  std::vector<int> oracle_box;
  auto add_oracle = [&](CLI::App* c) {
    c->add_option("--check-oracle", oracle_box, "evaluate at a random M x (M+N) integer matrix")->expected(2);
  };
  auto report_relation = [&](const QuadraticRelation& r) {
    std::cout << relation_to_string(r) << "\n";
    if (oracle_box.empty()) return kPass;
    std::mt19937_64 rng(rng_seed);
    auto oracle = minors_oracle(oracle_box[0], oracle_box[1], random_matrix(oracle_box[0], oracle_box[0] + oracle_box[1], rng));
    Rational res = relation_residual(r, [&](const Partition& p) { return oracle(p); });
    std::cout << "residual: " << rational_to_string(res) << "\n";
    return res == 0 ? kPass : kFail;
  };
  int rel_m = 0;
  std::string rel_i, rel_j;
  auto* plu = rel_cmd->add_subcommand("pluecker", "relation from index tuples I (m-1) and J (m+1)");
  plu->add_option("--m", rel_m)->required()->check(CLI::PositiveNumber);
  plu->add_option("--I", rel_i, "comma-separated")->required();
  plu->add_option("--J", rel_j, "comma-separated")->required();
  add_oracle(plu);
  auto ints = [](const std::string& text) {
    std::vector<int> out;
    std::string t = text;
    for (char& ch : t)
      if (ch == ',' || ch == '(' || ch == ')' || ch == '[' || ch == ']') ch = ' ';
    std::istringstream in(t);
    for (int v; in >> v;) out.push_back(v);
    if (!in.eof()) throw Error(ErrorCode::ParseError, "expected integers in '" + text + "'");
    return out;
  };
  on(plu, [&] { return report_relation(pluecker_relation(rel_m, ints(rel_i), ints(rel_j))); });
  int hook_a = 0, hook_b = 0;
  auto* hook = rel_cmd->add_subcommand("hook", "hook relation for (a|b)");
  hook->add_option("A", hook_a)->required();
  hook->add_option("B", hook_b)->required();
  add_oracle(hook);
  on(hook, [&] { return report_relation(hook_relation(hook_a, hook_b)); });
  int diag_k = 0;
  auto* diag = rel_cmd->add_subcommand("diag", "diagonal relation through (k^k)");
  diag->add_option("K", diag_k)->required();
  add_oracle(diag);
  on(diag, [&] { return report_relation(diag_relation(diag_k)); });

  // ---- laurent
  auto* laurent = app.add_subcommand("laurent", "expansion of d_lambda in the rectangle cluster");
  std::vector<int> box;
  bool verify_oracle = false, exact = false;
  laurent->add_option("LAMBDA", lam_a)->required();
  laurent->add_option("--box", box)->expected(2)->required();
  laurent->add_flag("--verify-oracle", verify_oracle, "report the minors-oracle check");
  laurent->add_flag("--exact", exact, "symbolic check against the generic minor (M + N <= 6)");
  on(laurent, [&] {
    LaurentOptions opts;
    opts.rng_seed = rng_seed;
    opts.exact = exact;
    auto e = laurent_expansion(parse_partition(lam_a), box[0], box[1], opts);
    std::cout << lp_to_fraction_string(e.poly) << "\n";
    if (verify_oracle || exact) {
      std::cout << "oracle: " << (e.oracle_ok ? "pass" : "FAIL") << " at " << e.points_verified << " points\n";
      if (e.exact_checked) std::cout << "exact: " << (e.exact_ok ? "pass" : "FAIL") << "\n";
      std::cout << "positive coefficients: " << (lp_is_coefficient_positive(e.poly) ? "yes" : "no") << "\n";
    }
    return e.verified() ? kPass : kFail;
  });

  // ---- ind window
  auto* ind = app.add_subcommand("ind", "windows of ind-seeds");
  ind->require_subcommand(1);
  std::string system_name, classes_text, ind_seq, certs_path;
  int bound = -1;
  SeedOutput window_out;
  auto* window = ind->add_subcommand("window", "materialize a window at a probe bound");
  window->add_option("--system", system_name, "grass-chain | xyz-chain | constant:<seed.json>")->required();
  window->add_option("--classes", classes_text, "class names, partition labels or rect:H,W")->required();
  window->add_option("--bound", bound, "probe bound K")->check(CLI::NonNegativeNumber);
  window->add_option("--certs", certs_path, "write certificates as JSON");
  window->add_option("--mutate", ind_seq, "also compare the two mutation routes along this sequence");
  add_seed_output(window, window_out);
  on(window, [&] {
    auto sys = system_by_name(system_name, bound >= 0 ? std::optional<int>(bound) : std::nullopt);
    int k = bound >= 0 ? bound : sys->probe_bound();
    auto classes = parse_classes(classes_text);
    auto w = ind_seed_window(*sys, classes, k);
    emit_seed(w.window, window_out);
    std::cout << "uniform attainment level: " << (w.uniform_level ? std::to_string(*w.uniform_level) : "none") << "\n";
    if (!certs_path.empty()) write_text(certs_path, certificates_json(w).dump(2) + "\n");
    if (ind_seq.empty()) return kPass;
    std::vector<VarId> seq;
    Seed cur = w.window;
    for (const auto& t : split_tokens(ind_seq)) {
      VarId x = resolve_var(cur, t);
      seq.push_back(x);
      cur = mutate(cur, x);
    }
    auto rep = verify_mutation_commutes(*sys, classes, seq, k);
    std::cout << "mutation routes: " << (rep.passed() ? "agree" : "DIFFER") << " (lifted from level " << rep.lift_from
              << ")\n";
    if (!rep.passed()) std::cout << rep.detail << "\n";
    return rep.passed() ? kPass : kFail;
  });

  // ---- tau
  auto* tau_cmd = app.add_subcommand("tau", "tau-function coefficient data");
  tau_cmd->require_subcommand(1);
  int size_bound = 6, m_bound = 3, index_bound = 4;
  std::string out_path;
  auto* from_point = tau_cmd->add_subcommand("from-point", "Plücker coordinates of a point file");
  from_point->add_option("FILE", file_a)->required();
  from_point->add_option("--size", size_bound)->check(CLI::NonNegativeNumber);
  from_point->add_option("--out", out_path);
  on(from_point, [&] {
    Tau t = tau_from_point(point_from_json(read_json(file_a)), size_bound);
    std::string text = tau_to_json(t).dump(2) + "\n";
    if (out_path.empty()) {
      std::cout << text;
    } else {
      write_text(out_path, text);
    }
    return kPass;
  });
  auto* tau_check = tau_cmd->add_subcommand("check", "all Plücker relations up to the bounds");
  tau_check->add_option("FILE", file_a)->required();
  tau_check->add_option("--m-bound", m_bound)->check(CLI::PositiveNumber);
  tau_check->add_option("--index-bound", index_bound)->check(CLI::PositiveNumber);
  on(tau_check, [&] {
    auto rep = check_plucker(tau_from_json(read_json(file_a)), m_bound, index_bound);
    if (rep.passed) {
      std::cout << "PASS (" << rep.relations_checked << " relations)\n";
      return kPass;
    }
    std::cout << "FAIL: " << relation_to_string(*rep.failing) << " has residual " << rational_to_string(rep.residual)
              << "\n";
    return kFail;
  });
  auto* tau_kp = tau_cmd->add_subcommand("kp", "KP residual");
  tau_kp->add_option("FILE", file_a)->required();
  on(tau_kp, [&] {
    Rational r = kp_residual(tau_from_json(read_json(file_a)));
    std::cout << "KP residual: " << rational_to_string(r) << "\n";
    return r == 0 ? kPass : kFail;
  });

  // ---- giambelli
  auto* giam = app.add_subcommand("giambelli", "Giambelli identity on a point file");
  giam->add_option("FILE", file_a)->required();
  giam->add_option("LAMBDA", lam_a)->required();
  on(giam, [&] {
    auto rep = giambelli_check(point_from_json(read_json(file_a)), parse_partition(lam_a));
    std::cout << rep.lambda.to_string() << " = " << frobenius_to_string(rep.frobenius) << "\n"
              << "normalized coordinate: " << rational_to_string(rep.lhs) << "\n"
              << "hook determinant: " << rational_to_string(rep.rhs) << "\n"
              << "residual: " << rational_to_string(rep.residual()) << "\n";
    return rep.passed() ? kPass : kFail;
  });

  // ---- positivity
  auto* pos = app.add_subcommand("positivity", "positive rectangle values give positive Plücker values");
  pos->add_option("FILE", file_a, "{box: [M, N], values: {rect: value}, lambdas?: [...]}")->required();
  on(pos, [&] {
    auto j = read_json(file_a);
    std::vector<int> b = j.at("box").get<std::vector<int>>();
    if (b.size() != 2) throw Error(ErrorCode::ParseError, "box must be [M, N]");
    std::map<Partition, Rational> values;
    for (const auto& [k, v] : j.at("values").items())
      values[parse_partition(k)] = v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long>());
    std::vector<Partition> lambdas;
    if (j.contains("lambdas")) {
      for (const auto& l : j["lambdas"]) lambdas.push_back(parse_partition(l.get<std::string>()));
    } else {
      lambdas = partitions_in_box(b[0], b[1]);
    }
    auto rep = positivity_certificate(values, lambdas, b[0], b[1]);
    for (const auto& [l, v] : rep.values) std::cout << l.label_name() << " = " << rational_to_string(v) << "\n";
    std::cout << (rep.all_positive ? "all positive" : "NOT all positive") << "\n";
    return rep.all_positive ? kPass : kFail;
  });

  // ---- explore, dot
  auto* explore = app.add_subcommand("explore", "interactive mutation session (default: rectangle seed 2 x 2)");
  explore->add_option("FILE", file_a);
  on(explore, [&] {
    Seed s = file_a.empty() ? rect_seed(2, 2) : read_seed(file_a);
    return run_explore(std::cin, std::cout, s, isatty(0) != 0);
  });
  auto* dot = app.add_subcommand("dot", "write the quiver of a seed file as DOT");
  dot->add_option("FILE", file_a)->required();
  dot->add_option("OUT", file_b)->required();
  on(dot, [&] {
    write_text(file_b, quiver_to_dot(read_seed(file_a)));
    return kPass;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }
  if (jobs_flag > 0) set_jobs(jobs_flag);
  try {
    code = action ? action() : kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: ParseError: " << e.what() << "\n";
    return kUsage;
  }
  return code;
}
