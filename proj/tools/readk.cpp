// Copyright 2026 The readk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Every verb maps onto one family of library calls.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "readk/abp.hpp"
#include "readk/abp_io.hpp"
#include "readk/evaldim.hpp"
#include "readk/hardpoly.hpp"
#include "readk/pit.hpp"
#include "readk/random_instances.hpp"
#include "readk/sequences.hpp"

namespace {

using namespace readk;

constexpr int kExitError = 2;
constexpr int kExitGuard = 3;

struct Globals {
  std::optional<std::uint32_t> field_prime;
  std::string generator = "grid";
  std::uint64_t seed = 1;
  std::size_t threads = 1;
  std::string report;
  std::size_t guard = kDefaultExpansionGuard;
};

class CliError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::size_t> parse_list(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoull(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw CliError("not a list of nonnegative integers: '" + s + "'");
    }
  }
  return out;
}

std::string join(const std::vector<std::size_t>& v, const char* sep = ",",
                 std::size_t offset = 0) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    os << (i ? sep : "") << v[i] + offset;
  }
  return os.str();
}

template <typename T>
std::string join_elems(const std::vector<T>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

ObliviousAbp load(const std::string& path, const Globals& g) {
  ObliviousAbp a = load_abp(path);
  if (g.field_prime && *g.field_prime != a.field().prime()) {
    throw CliError("--field-prime " + std::to_string(*g.field_prime) +
                   " differs from the file's field_prime " +
                   std::to_string(a.field().prime()));
  }
  return a;
}

PrimeField field_of(const Globals& g) {
  return PrimeField(g.field_prime.value_or(PrimeField::kDefaultPrime));
}

void write_report(const Globals& g, const std::string& content) {
  if (g.report.empty()) return;
  std::ofstream out(g.report);
  if (!out) throw CliError("cannot write report " + g.report);
  out << content;
}

std::string describe(const ObliviousAbp& a) {
  const AbpClass cls = abp_validate(a);
  std::ostringstream os;
  os << "read-" << cls.read_multiplicity;
  const std::size_t k = cls.read_multiplicity;
  if (cls.is_k_pass) {
    os << ", " << k << "-pass, order (" << join(cls.pass_orders[0], ",", 1)
       << ")";
  } else if (cls.is_varying_order_k_pass) {
    os << ", " << k << "-pass varying-order, orders";
    for (const auto& p : cls.pass_orders) os << " (" << join(p, ",", 1) << ")";
  } else {
    os << ", not " << k << "-pass";
  }
  return os.str();
}

int cmd_validate(const std::string& path, const Globals& g) {
  const ObliviousAbp a = load(path, g);
  std::cout << describe(a) << "\n";
  std::cout << "variables " << a.num_vars() << ", layers " << a.num_layers()
            << ", width " << a.width() << " (realized "
            << a.realized_width() << "), degree " << a.degree() << "\n";
  return 0;
}

int cmd_eval(const std::string& path, const std::string& point,
             const Globals& g) {
  const ObliviousAbp a = load(path, g);
  std::vector<Elem> pt;
  for (std::size_t v : parse_list(point)) {
    pt.push_back(a.field().reduce(static_cast<std::int64_t>(v)));
  }
  std::cout << abp_evaluate(a, pt) << "\n";
  return 0;
}

int cmd_expand(const std::string& path, const Globals& g) {
  const ObliviousAbp a = load(path, g);
  const SparsePoly f = abp_expand(a, g.guard);
  std::cout << to_string(f) << "\n";
  std::cout << f.size() << " terms\n";
  return 0;
}

int cmd_pit(const std::string& path, std::optional<std::size_t> count,
            const std::string& points_file, const Globals& g) {
  const ObliviousAbp a = load(path, g);
  PitOptions opts;
  opts.expansion_guard = g.guard;
  opts.generator.seed = g.seed;
  opts.generator.count = count;
  if (g.generator == "grid") {
    opts.generator.kind = GeneratorKind::kGrid;
  } else if (g.generator == "random") {
    opts.generator.kind = GeneratorKind::kRandom;
  } else {
    opts.generator.kind = GeneratorKind::kExternal;
    if (points_file.empty()) {
      throw CliError("--generator external needs --points <file>");
    }
    opts.generator.external_points =
        load_external_points(points_file, a.num_vars(), a.field());
  }
  const PitVerdict v = read_k_pit(a, opts);
  std::ostringstream csv;
  csv << "iteration,vars,set_size,candidates_tried,point\n";
  for (std::size_t i = 0; i < v.iterations.size(); ++i) {
    const auto& it = v.iterations[i];
    std::cout << "iteration " << i + 1 << ": vars {" << join(it.vars) << "}, "
              << it.set_size << " points, tried " << it.candidates_tried;
    if (!it.point.empty()) std::cout << ", chose (" << join_elems(it.point) << ")";
    std::cout << "\n";
    csv << i + 1 << ",\"" << join(it.vars, " ") << "\"," << it.set_size << ","
        << it.candidates_tried << ",\"" << join_elems(it.point) << "\"\n";
  }
  write_report(g, csv.str());
  std::cout << "generator " << generator_name(v.provenance) << ", read-"
            << v.read_multiplicity << ", " << v.planned_iterations
            << " planned iterations (bound "
            << iteration_bound(v.active_vars, v.read_multiplicity) << ")\n";
  if (v.is_zero) {
    std::cout << "zero\n";
    return 0;
  }
  std::cout << "nonzero\nwitness " << join_elems(*v.witness) << "\n";
  std::cout << "value " << abp_evaluate(a, *v.witness) << "\n";
  return 1;
}

std::vector<std::size_t> complement(std::size_t n,
                                    const std::vector<std::size_t>& a,
                                    const std::vector<std::size_t>& b) {
  std::vector<bool> used(n, false);
  for (std::size_t v : a) {
    if (v < n) used[v] = true;
  }
  for (std::size_t v : b) {
    if (v < n) used[v] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n; ++v) {
    if (!used[v]) out.push_back(v);
  }
  return out;
}

int cmd_evaldim(const std::string& path, const std::string& s_list,
                const std::string& t_list, const std::string& r_list,
                std::size_t trials, const Globals& g) {
  const ObliviousAbp a = load(path, g);
  const SparsePoly f = abp_expand(a, g.guard);
  const auto s = parse_list(s_list);
  const auto r = parse_list(r_list);
  const auto t = t_list.empty() ? complement(a.num_vars(), s, r)
                                : parse_list(t_list);
  EvalDimOptions opts;
  opts.trials = trials;
  opts.seed = g.seed;
  const EvalDimReport rep = eval_dim(f, s, t, r, opts);
  std::cout << "dimension " << rep.dimension << "\n";
  for (const auto& b : rep.basis_assignments) {
    std::cout << "basis point (" << join_elems(b) << ")\n";
  }
  return 0;
}

std::vector<std::size_t> order_or_identity(const std::string& s,
                                           std::size_t n) {
  if (!s.empty()) return parse_list(s);
  std::vector<std::size_t> o(n);
  std::iota(o.begin(), o.end(), 0);
  return o;
}

void print_roabp(const Roabp& r, const std::string& out) {
  std::cout << "order (" << join(r.order) << ")\n";
  std::cout << "cut widths (" << join(r.width_profile) << "), realized width "
            << r.abp.realized_width() << "\n";
  if (!out.empty()) {
    save_abp(out, r.abp);
    std::cout << "wrote " << out << "\n";
  }
}

int cmd_synth(const std::string& path, const std::string& order,
              const std::string& out, const Globals& g) {
  const ObliviousAbp a = load(path, g);
  const SparsePoly f = abp_expand(a, g.guard);
  const auto o = order_or_identity(order, a.num_vars());
  const auto profile = roabp_width_profile(f, o);
  std::cout << "evaluation dimension profile (" << join(profile) << ")\n";
  print_roabp(roabp_synthesize(f, o), out);
  return 0;
}

int cmd_collapse(const std::string& path, const std::string& mode,
                 const std::string& order, const std::string& out,
                 const Globals& g) {
  const ObliviousAbp a = load(path, g);
  const std::size_t k = abp_validate(a).read_multiplicity;
  Roabp r;
  if (mode == "k-pass") {
    r = k_pass_to_roabp(a);
  } else {
    const auto o = order_or_identity(order, a.num_vars());
    const GapProfile gp = k_gap_profile(a, o);
    std::cout << "gaps (" << join(gp.gaps) << ")\n";
    r = k_gap_to_roabp(a, o, k);
  }
  print_roabp(r, out);
  std::size_t bound = 1;
  for (std::size_t i = 0; i < 2 * k; ++i) bound *= a.width();
  std::cout << "width bound w^(2k) = " << bound << "\n";
  return 0;
}

std::vector<std::size_t> sequence_input(const std::string& path,
                                        const std::string& seq,
                                        const Globals& g) {
  if (!seq.empty()) return parse_list(seq);
  if (path.empty()) throw CliError("give a program file or --seq");
  const ObliviousAbp a = load(path, g);
  return abp_validate(a).normalized.read_order();
}

// Segment lines for `sequence check`; empty when the sequence does not meet
// the decomposition's preconditions.
std::vector<std::string> concat_decompose_safe(const ReadSequence& s) {
  std::vector<std::string> out;
  try {
    for (const auto& seg : concat_decompose(s)) {
      std::ostringstream os;
      os << "segment [" << seg.begin << "," << seg.end << ") "
         << (seg.increasing ? "increasing" : "decreasing") << " reads {"
         << join(seg.reads) << "}";
      out.push_back(os.str());
    }
  } catch (const SequenceError& e) {
    out.push_back(std::string("no segment decomposition: ") + e.what());
  }
  return out;
}
int cmd_sequence(const std::string& action, const std::string& path,
                 const std::string& seq, const Globals& g) {
  const auto elems = sequence_input(path, seq, g);
  const ReadSequence s = ReadSequence::from_elements(elems);
  std::cout << "read-" << s.k() << " sequence over " << s.universe_size()
            << " elements\n";
  if (action == "check") {
    std::cout << "per-read-monotone: "
              << (is_per_read_monotone(s) ? "yes" : "no") << "\n";
    const RegularityWitness w = is_regularly_interleaving(s);
    std::cout << "regularly-interleaving: " << (w.regular ? "yes" : "no")
              << "\n";
    for (const auto& pb : w.pairs) {
      std::cout << "  reads (" << pb.first_read << "," << pb.second_read
                << "):";
      for (const auto& b : pb.blocks) std::cout << " {" << join(b) << "}";
      std::cout << "\n";
    }
    for (const auto& seg : concat_decompose_safe(s)) std::cout << seg << "\n";
    return 0;
  }
  const auto mono = per_read_monotone_subset(s);
  std::cout << "per-read-monotone subset {" << join(mono) << "} ("
            << mono.size() << ")\n";
  const ReadSequence pruned =
      seq_restrict(s, std::set<std::size_t>(mono.begin(), mono.end()));
  const auto reg = regularly_interleaving_subset(pruned);
  std::cout << "regularly-interleaving subset {" << join(reg) << "} ("
            << reg.size() << ")\n";
  return 0;
}

int cmd_gen(const std::string& family, std::size_t n, const std::string& out,
            const Globals& g) {
  const PrimeField F = field_of(g);
  const HardFamilyInstance inst =
      family == "pn" ? gen_pn(F, n) : gen_qn(F, n);
  std::cout << describe(inst.realization) << "\n";
  std::cout << "variables:";
  for (std::size_t v = 0; v < inst.var_names.size(); ++v) {
    std::cout << " " << v << "=" << inst.var_names[v];
  }
  std::cout << "\n";
  if (inst.polynomial) {
    std::cout << inst.polynomial->size() << " terms\n";
  } else {
    std::cout << "symbolic form skipped (n above the guard)\n";
  }
  if (!out.empty()) {
    save_abp(out, inst.realization);
    std::cout << "wrote " << out << "\n";
  } else {
    std::cout << serialize_abp(inst.realization);
  }
  return 0;
}

std::string rows_csv(const std::vector<ExperimentRow>& rows,
                     const char* size_name) {
  std::ostringstream os;
  os << "subset," << size_name << ",dimension,floor,pass\n";
  for (const auto& r : rows) {
    os << "\"" << r.subset << "\"," << r.size << "," << r.dimension << ","
       << r.floor << "," << (r.pass ? "pass" : "fail") << "\n";
  }
  return os.str();
}

int summarize(const std::vector<ExperimentRow>& rows, const char* size_name,
              const Globals& g) {
  write_report(g, rows_csv(rows, size_name));
  const auto fails = std::count_if(rows.begin(), rows.end(),
                                   [](const auto& r) { return !r.pass; });
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> by_size;
  for (const auto& r : rows) {
    auto [it, fresh] = by_size.try_emplace(r.size, r.dimension, r.floor);
    if (!fresh) it->second.first = std::min(it->second.first, r.dimension);
  }
  for (const auto& [size, mf] : by_size) {
    std::cout << size_name << "=" << size << ": min dimension " << mf.first
              << ", floor " << mf.second << "\n";
  }
  std::cout << rows.size() << " rows, " << fails << " below the floor\n";
  return fails == 0 ? 0 : 1;
}

int cmd_exp_iteration_bound(const std::string& p_list,
                            const std::string& r_list, std::uint64_t n_max,
                            const Globals& g) {
  std::vector<double> ps;
  {
    std::stringstream ss(p_list);
    std::string tok;
    while (std::getline(ss, tok, ',')) ps.push_back(std::stod(tok));
  }
  const auto rs = parse_list(r_list);
  struct Cell {
    double p;
    std::size_t r;
    std::uint64_t fails = 0;
    std::uint64_t first_fail = 0;
  };
  std::vector<Cell> cells;
  for (double p : ps) {
    for (std::size_t r : rs) cells.push_back({p, r});
  }
  const std::size_t threads = std::max<std::size_t>(1, g.threads);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t c = t; c < cells.size(); c += threads) {
        for (std::uint64_t n = 1; n <= n_max; ++n) {
          if (!iteration_bound_check(n, cells[c].p, cells[c].r)) {
            if (cells[c].fails++ == 0) cells[c].first_fail = n;
          }
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  std::ostringstream csv;
  csv << "p,r,n_max,failures,first_failure\n";
  std::uint64_t total = 0;
  for (const auto& c : cells) {
    csv << c.p << "," << c.r << "," << n_max << "," << c.fails << ","
        << c.first_fail << "\n";
    total += c.fails;
  }
  write_report(g, csv.str());
  std::cout << cells.size() << " (p, r) cells x " << n_max << " values of n: "
            << (total == 0 ? "all pass" : std::to_string(total) + " failures")
            << "\n";
  return total == 0 ? 0 : 1;
}

int cmd_exp_eliminate(std::size_t trials, std::size_t n_max, std::size_t w_max,
                      std::size_t t_max, const Globals& g) {
  const PrimeField F = field_of(g);
  Rng rng(g.seed);
  std::ostringstream csv;
  csv << "trial,n,w,t,alpha_nonzero,annihilates,residuals_match,"
         "residual_width,bound,pass\n";
  std::size_t fails = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t n =
        std::uniform_int_distribution<std::size_t>(2, n_max)(rng);
    const std::size_t w =
        std::uniform_int_distribution<std::size_t>(1, w_max)(rng);
    const std::size_t t = std::uniform_int_distribution<std::size_t>(
        1, std::min(t_max, n - 1))(rng);
    const std::vector<Roabp> parts{random_roabp(F, rng, n, w, 1),
                                   random_roabp(F, rng, n, w, 1)};
    const Elimination e = eliminate_summand(parts, t);
    const EliminationCheck c = check_elimination(parts, t, e);
    fails += !c.ok();
    csv << i + 1 << "," << n << "," << w << "," << t << "," << c.alpha_nonzero
        << "," << c.annihilates << "," << c.residuals_match << ","
        << c.max_residual_width << "," << c.width_bound << ","
        << (c.ok() ? "pass" : "fail") << "\n";
  }
  write_report(g, csv.str());
  std::cout << trials << " eliminations, " << fails << " failures\n";
  return fails == 0 ? 0 : 1;
}

int cmd_exp_blocks(const std::string& path, std::size_t r, bool greedy,
                   const Globals& g) {
  const ObliviousAbp a = load(path, g);
  const BlockPartition bp = block_partition(a, r, greedy);
  std::cout << "k " << bp.k << ", layers " << bp.num_layers << ", r " << bp.r
            << ", blocks {" << join(bp.block_ids) << "}\n";
  std::cout << "U {" << join(bp.u) << "}\nV {" << join(bp.v) << "}\nW {"
            << join(bp.w) << "}\n";
  std::cout << "|W| <= k^2 L / r: " << (bp.w_bound_holds ? "yes" : "no")
            << "; n/10 form " << (bp.n_over_10_applicable ? "applies" : "vacuous")
            << " at this size\n";
  if (expansion_estimate(a) <= g.guard) {
    const SparsePoly f = abp_expand(a, g.guard);
    EvalDimOptions opts;
    opts.seed = g.seed;
    opts.want_basis = false;
    const std::size_t d = eval_dim(f, bp.u, bp.v, bp.w, opts).dimension;
    std::size_t cap = 1;
    for (std::size_t i = 0; i < 2 * bp.k; ++i) cap *= a.width();
    std::cout << "evaluation dimension (U, V; W) " << d << " <= w^(2k) = "
              << cap << ": " << (d <= cap ? "yes" : "no") << "\n";
  }
  std::ostringstream csv;
  csv << "set,variables\nU,\"" << join(bp.u, " ") << "\"\nV,\""
      << join(bp.v, " ") << "\"\nW,\"" << join(bp.w, " ") << "\"\n";
  write_report(g, csv.str());
  return bp.w_bound_holds ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Read-k oblivious algebraic branching programs"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--field-prime", g.field_prime, "Prime modulus");
  app.add_option("--generator", g.generator, "Hitting-set generator")
      ->check(CLI::IsMember({"grid", "random", "external"}));
  app.add_option("--seed", g.seed, "Seed for all randomness");
  app.add_option("--threads", g.threads, "Worker threads");
  app.add_option("--report", g.report, "Write a CSV report here");
  app.add_option("--guard", g.guard, "Expansion size guard");

  std::string file, point, s_list, t_list, r_list, order, out, mode = "k-pass",
                                                             seq, points;
  std::optional<std::size_t> count;
  std::size_t trials = 3, n = 2, r = 4, n_max = 6, w_max = 3, t_max = 2,
              t_hi = 4;
  std::uint64_t nn_max = 10000;
  bool greedy = false;
  std::string p_list = "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9",
              r_values = "1,2,3,4,5,6,7,8,9";
  int status = 0;

  auto sub = [&](const char* name, const char* desc) {
    auto* s = app.add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };
  auto* validate = sub("validate", "Classify a program");
  validate->add_option("file", file)->required();
  auto* eval = sub("eval", "Evaluate at a point");
  eval->add_option("file", file)->required();
  eval->add_option("--point", point, "Comma-separated values")->required();
  auto* expand = sub("expand", "Expand into a polynomial");
  expand->add_option("file", file)->required();
  auto* pit = sub("pit", "Identity test (exit 0 zero, 1 nonzero)");
  pit->add_option("file", file)->required();
  pit->add_option("--count", count, "Random generator point count");
  pit->add_option("--points", points, "External hitting-set file");
  auto* evaldim = sub("evaldim", "Evaluation dimension");
  evaldim->add_option("file", file)->required();
  evaldim->add_option("--s", s_list, "Evaluated variables")->required();
  evaldim->add_option("--t", t_list, "Remaining variables (default: rest)");
  evaldim->add_option("--r", r_list, "Variables moved to the field");
  evaldim->add_option("--trials", trials, "Random draws for --r");
  auto* synth = sub("synth-roabp", "Minimal-width read-once program");
  synth->add_option("file", file)->required();
  synth->add_option("--order", order, "Variable order");
  synth->add_option("--out", out, "Write the program here");
  auto* collapse = sub("collapse", "k-pass or k-gap program to read-once");
  collapse->add_option("file", file)->required();
  collapse->add_option("--mode", mode)->check(CLI::IsMember({"k-pass", "k-gap"}));
  collapse->add_option("--order", order, "Prefix order for k-gap");
  collapse->add_option("--out", out, "Write the program here");
  auto* sequence = sub("sequence", "Read-sequence pruning and checks");
  std::string action;
  sequence->add_option("action", action)
      ->required()
      ->check(CLI::IsMember({"prune", "check"}));
  sequence->add_option("file", file);
  sequence->add_option("--seq", seq, "Comma-separated element sequence");
  auto* gen = sub("gen", "Hard families");
  std::string family;
  gen->add_option("family", family)->required()->check(
      CLI::IsMember({"pn", "qn"}));
  gen->add_option("--n", n)->required();
  gen->add_option("--out", out, "Write the program here");
  auto* exp = sub("experiment", "Finite-size experiments");
  std::string which;
  exp->add_option("which", which)->required()->check(CLI::IsMember(
      {"pn-evaldim", "qn-evaldim", "eliminate", "blocks", "iteration-bound"}));
  exp->add_option("file", file, "Program (blocks)");
  exp->add_option("--n", n, "Family size");
  exp->add_option("--t-max", t_hi, "Largest subset size (pn-evaldim)");
  exp->add_option("--trials", trials, "Trials");
  exp->add_option("--r", r_values, "Block count (blocks) or r values");
  exp->add_option("--p", p_list, "p values (iteration-bound)");
  exp->add_option("--n-max", nn_max, "Largest n (iteration-bound) or n (eliminate)");
  exp->add_option("--w-max", w_max, "Largest width (eliminate)");
  exp->add_flag("--greedy", greedy, "Greedy block choice");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*validate) status = cmd_validate(file, g);
    if (*eval) status = cmd_eval(file, point, g);
    if (*expand) status = cmd_expand(file, g);
    if (*pit) status = cmd_pit(file, count, points, g);
    if (*evaldim) status = cmd_evaldim(file, s_list, t_list, r_list, trials, g);
    if (*synth) status = cmd_synth(file, order, out, g);
    if (*collapse) status = cmd_collapse(file, mode, order, out, g);
    if (*sequence) status = cmd_sequence(action, file, seq, g);
    if (*gen) status = cmd_gen(family, n, out, g);
    if (*exp) {
      const PrimeField F = field_of(g);
      if (which == "pn-evaldim") {
        std::vector<std::size_t> sizes(t_hi + 1);
        std::iota(sizes.begin(), sizes.end(), 0);
        status = summarize(experiment_pn_evaldim(F, n, sizes), "t", g);
      } else if (which == "qn-evaldim") {
        status = summarize(experiment_qn_evaldim(F, n, trials, g.seed), "m", g);
      } else if (which == "eliminate") {
        n_max = exp->count("--n-max") ? nn_max : n_max;
        status = cmd_exp_eliminate(trials, n_max, w_max, t_max, g);
      } else if (which == "blocks") {
        if (file.empty()) throw CliError("blocks needs a program file");
        r = parse_list(r_values).empty() ? r : parse_list(r_values).front();
        status = cmd_exp_blocks(file, r, greedy, g);
      } else {
        status = cmd_exp_iteration_bound(p_list, r_values, nn_max, g);
      }
    }
  } catch (const GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    return kExitGuard;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return status;
}
