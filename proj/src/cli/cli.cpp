#include "rota/cli/cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "rota/core/errors.hpp"
#include "rota/core/levi_civita.hpp"
#include "rota/core/linalg.hpp"
#include "rota/io/json_io.hpp"

namespace rota::cli {

namespace {

using io::Json;

struct Flags {
  unsigned threads = 0;
  int n = 0;
  int k = 0;
  int d = 0;
  int degree = 0;
  int max_degree = 0;
  int min_ell = 1;
  int max_ell = 1;
  int max_n = 5;
  std::uint64_t budget = 1000;
  std::uint64_t seed = 0;
  std::uint64_t max_terms = 0;
  std::uint64_t node_budget = 0;
  std::uint64_t tuple_budget = 10000;
  std::string tensor;
  std::string tensor2;
  std::string orders;
  std::string perms;
  std::string mats;
  std::string mats2;
  std::string bases;
  std::string arrangement;
  std::string matrix;
  std::string decomposition;
  std::string strategy;
  std::string mode = "pruned";
  std::string list;
};

using Handler = std::function<int(const Flags&, std::ostream&, std::ostream&)>;

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ValidationError("malformed integer list '" + text + "'");
    }
  }
  return out;
}

ExecOptions exec(const Flags& f) { return ExecOptions{f.threads}; }

int predicate(bool value, std::ostream& out) {
  out << (value ? "true" : "false") << "\n";
  return value ? kExitSuccess : kExitFalse;
}

TotalOrders orders_for(const Flags& f, const SparseTensor& x) {
  if (f.orders.empty()) return TotalOrders::natural(x.order(), x.dim());
  TotalOrders orders = io::orders_from_json(io::read_json_file(f.orders));
  orders.validate(x.order(), x.dim());
  return orders;
}

EnumerationMode parse_mode(const std::string& name) {
  if (name == "pruned") return EnumerationMode::kSupportPruned;
  if (name == "admissible") return EnumerationMode::kAdmissibleMaps;
  throw UsageError("unknown enumeration mode '" + name + "'");
}

Matrix rectangular_matrix(const Json& j) {
  if (j.is_object() && j.contains("dim")) return io::matrix_from_json(j);
  if (!j.is_object() || !j.contains("cols") || !j.at("cols").is_array()) throw ValidationError("matrix needs 'cols'");
  std::vector<std::vector<Scalar>> cols;
  for (const auto& c : j.at("cols")) {
    if (!c.is_array()) throw ValidationError("matrix column must be an array");
    std::vector<Scalar> col;
    for (const auto& v : c) col.push_back(io::scalar_from_json(v));
    cols.push_back(std::move(col));
  }
  return Matrix::from_columns(cols);
}

struct Command {
  CommandInfo info;
  std::function<void(CLI::App&, Flags&)> options;
  Handler handler;
};

const std::vector<Command>& commands() {
  static const std::vector<Command> table = {
      {{"lc", "emit the Levi-Civita tensor E_n", {"levi_civita_tensor"}},
       [](CLI::App& a, Flags& f) { a.add_option("--n", f.n, "dimension")->required(); },
       [](const Flags& f, std::ostream& out, std::ostream&) -> int {
         out << io::dump(io::tensor_to_json(levi_civita_tensor(f.n)));
         return 0;
       }},
      {{"sign", "sign of a permutation in one-line notation", {"perm_sign"}},
       [](CLI::App& a, Flags& f) { a.add_option("--perm", f.list, "comma-separated one-line notation")->required(); },
       [](const Flags& f, std::ostream& out, std::ostream&) -> int {
         out << perm_sign(parse_int_list(f.list)) << "\n";
         return 0;
       }},
      {{"symbol", "Levi-Civita symbol of a tuple", {"levi_civita_symbol"}},
       [](CLI::App& a, Flags& f) { a.add_option("--tuple", f.list, "comma-separated tuple over [n]")->required(); },
       [](const Flags& f, std::ostream& out, std::ostream&) -> int {
         out << levi_civita_symbol(parse_int_list(f.list)) << "\n";
         return 0;
       }},
      {{"act", "multilinear product (A_1, ..., A_d) . X", {"multilinear_product"}},
       [](CLI::App& a, Flags& f) {
         a.add_option("--tensor", f.tensor)->required();
         a.add_option("--mats", f.mats)->required();
       },
       [](const Flags& f, std::ostream& out, std::ostream&) -> int {
         const auto x = io::tensor_from_json(io::read_json_file(f.tensor));
         const auto mats = io::matrices_from_json(io::read_json_file(f.mats));
         out << io::dump(io::tensor_to_json(multilinear_product(mats, x)));
         return 0;
       }},
      {{"tprod", "tensor product X (x) Y", {"tensor_product"}},
       [](CLI::App& a, Flags& f) {
         a.add_option("--left", f.tensor)->required();
         a.add_option("--right", f.tensor2)->required();
       },
       [](const Flags& f, std::ostream& out, std::ostream&) -> int {
         const auto x = io::tensor_from_json(io::read_json_file(f.tensor));
         const auto y = io::tensor_from_json(io::read_json_file(f.tensor2));
         out << io::dump(io::tensor_to_json(tensor_product(x, y)));
         return 0;
       }},
      {{"tpow", "tensor power X^(x)k", {"tensor_power"}},
       [](CLI::App& a, Flags& f) {
         a.add_option("--tensor", f.tensor)->required();
         a.add_option("--k", f.k)->required();
       },
       [](const Flags& f, std::ostream& out, std::ostream&) -> int {
         const auto x = io::tensor_from_json(io::read_json_file(f.tensor));
         out << io::dump(io::tensor_to_json(tensor_power(x, f.k)));
         return 0;
       }},
      {{"det", "exact determinant of a square matrix", {"determinant"}},
       [](CLI::App& a, Flags& f) { a.add_option("--matrix", f.matrix)->required(); },
       [](const Flags& f, std::ostream& out, std::ostream&) -> int {
         out << to_string(determinant(io::matrix_from_json(io::read_json_file(f.matrix)))) << "\n";
         return 0;
       }},
      {{"rank", "exact rank of a (possibly rectangular) matrix", {"matrix_rank"}},
       [](CLI::App& a, Flags& f) { a.add_option("--matrix", f.matrix)->required(); },
       [](const Flags& f, std::ostream& out, std::ostream&) -> int {
         out << matrix_rank(rectangular_matrix(io::read_json_file(f.matrix))) << "\n";
         return 0;
       }},
      {{"decompose", "trivial slice decomposition along axis 1", {"trivial_decomposition"}},
       [](CLI::App& a, Flags& f) { a.add_option("--tensor", f.tensor)->required(); },
       [](const Flags& f, std::ostream& out, std::ostream&) -> int {
         const auto x = io::tensor_from_json(io::read_json_file(f.tensor));
         out << io::dump(io::decomposition_to_json(trivial_decomposition(x)));
         return 0;
       }},
      {{"checkdec", "check that a slice decomposition sums to the tensor", {"verify_slice_decomposition"}},
       [](CLI::App& a, Flags& f) {
         a.add_option("--tensor", f.tensor)->required();
         a.add_option("--decomposition", f.decomposition)->required();
       },
       [](const Flags& f, std::ostream& out, std::ostream&) -> int {
         const auto x = io::tensor_from_json(io::read_json_file(f.tensor));
         const auto dec = io::decomposition_from_json(io::read_json_file(f.decomposition));
         return predicate(verify_slice_decomposition(x, dec), out);
       }},
      {{"antichain", "is the support an antichain under the orders", {"is_antichain"}},
       [](CLI::App& a, Flags& f) {
         a.add_option("--tensor", f.tensor)->required();
         a.add_option("--orders", f.orders);
       },
       [](const Flags& f, std::ostream& out, std::ostream&) -> int {
         const auto x = io::tensor_from_json(io::read_json_file(f.tensor));
         return predicate(is_antichain(x, orders_for(f, x)), out);
       }},
      {{"slicerank", "exact slice rank of an antichain-supported tensor", {"antichain_slice_rank"}},
       [](CLI::App& a, Flags& f) {
         a.add_option("--tensor", f.tensor)->required();
         a.add_option("--orders", f.orders);
       },
       [](const Flags& f, std::ostream& out, std::ostream& err) -> int {
         const auto x = io::tensor_from_json(io::read_json_file(f.tensor));
         const auto r = antichain_slice_rank(x, orders_for(f, x));
         err << "slicerank: " << r.search_nodes << " search nodes\n";
         out << io::dump(Json{{"value", r.value}, {"partition", io::partition_to_json(r.partition)}});
         return 0;
       }},
      {{"shift", "cyclic shift of a tuple over [n]", {"cyclic_shift"}},
       [](CLI::App& a, Flags& f) {
         a.add_option("--n", f.n)->required();
         a.add_option("--tuple", f.list)->required();
       },
       [](const Flags& f, std::ostream& out, std::ostream&) -> int {
         out << Json(cyclic_shift(parse_int_list(f.list), f.n)).dump() << "\n";
         return 0;
       }},
      {{"diagcert", "diagonal certificate for E_n^(x)k", {"diagonal_certificate_for_power"}},
       [](CLI::App& a, Flags& f) {
         a.add_option("--n", f.n)->required();
         a.add_option("--k", f.k)->required();
       },
       [](const Flags& f, std::ostream& out, std::ostream&) -> int {
         out << io::dump(io::diagonal_to_json(diagonal_certificate_for_power(f.n, f.k)));
         return 0;
       }},
      {{"lowerbound", "diagonal lower-bound certificate for a tensor", {"diagonal_lower_bound"}},
       [](CLI::App& a, Flags& f) { a.add_option("--tensor", f.tensor)->required(); },
       [](const Flags& f, std::ostream& out, std::ostream&) -> int {
         const auto x = io::tensor_from_json(io::read_json_file(f.tensor));
         out << io::dump(io::diagonal_to_json(diagonal_lower_bound(x)));
         return 0;
       }},
      {{"blocksign", "block sign of a map [M] -> [n]", {"block_sign"}},
       [](CLI::App& a, Flags& f) {
         a.add_option("--n", f.n)->required();
         a.add_option("--map", f.list)->required();
       },
       [](const Flags& f, std::ostream& out, std::ostream&) -> int {
         out << block_sign(parse_int_list(f.list), f.n) << "\n";
         return 0;
       }},
      {{"invariant", "evaluate P_{M,pi}(X)", {"evaluate_invariant"}},
       [](CLI::App& a, Flags& f) {
         a.add_option("--tensor", f.tensor)->required();
         a.add_option("--M", f.degree)->required();
         a.add_option("--perms", f.perms)->required();
         a.add_option("--mode", f.mode, "pruned | admissible");
         a.add_option("--max-terms", f.max_terms, "admissible term guard (0 = off)");
       },
       [](const Flags& f, std::ostream& out, std::ostream& err) -> int {
         const auto x = io::tensor_from_json(io::read_json_file(f.tensor));
         const auto perms = io::perms_from_json(io::read_json_file(f.perms));
         InvariantOptions opt{parse_mode(f.mode), f.max_terms, exec(f)};
         const auto r = evaluate_invariant(x, f.degree, perms, opt);
         err << "invariant: " << r.terms_visited << " terms visited, " << r.nonzero_terms << " nonzero, "
             << admissible_term_count(x.order(), x.dim(), f.degree).get_str() << " admissible\n";
         out << to_string(r.value) << "\n";
         return 0;
       }},
      {{"relinv", "check relative GL-invariance of P_{M,pi}", {"check_relative_invariance"}},
       [](CLI::App& a, Flags& f) {
         a.add_option("--tensor", f.tensor)->required();
         a.add_option("--mats", f.mats)->required();
         a.add_option("--M", f.degree)->required();
         a.add_option("--perms", f.perms)->required();
       },
       [](const Flags& f, std::ostream& out, std::ostream&) -> int {
         const auto x = io::tensor_from_json(io::read_json_file(f.tensor));
         const auto mats = io::matrices_from_json(io::read_json_file(f.mats));
         const auto perms = io::perms_from_json(io::read_json_file(f.perms));
         InvariantOptions opt;
         opt.exec = exec(f);
         const auto r = check_relative_invariance(x, mats, f.degree, perms, opt);
         out << io::dump(Json{{"holds", r.holds}, {"lhs", to_string(r.lhs)}, {"rhs", to_string(r.rhs)}});
         return r.holds ? kExitSuccess : kExitFalse;
       }},
      {{"semistable", "search for a nonzero invariant P_{M,pi}(X)", {"semistability_search"}},
       [](CLI::App& a, Flags& f) {
         a.add_option("--tensor", f.tensor)->required();
         a.add_option("--max-M", f.max_degree)->required();
         a.add_option("--strategy", f.strategy, "exhaustive | random")->required();
         a.add_option("--budget", f.budget, "candidates per degree");
         a.add_option("--seed", f.seed);
         a.add_option("--max-terms", f.max_terms);
       },
       [](const Flags& f, std::ostream& out, std::ostream& err) -> int {
         SearchOptions opt;
         opt.strategy = parse_search_strategy(f.strategy);
         const auto x = io::tensor_from_json(io::read_json_file(f.tensor));
         opt.max_degree = f.max_degree;
         opt.budget = f.budget;
         opt.seed = f.seed;
         opt.max_terms = f.max_terms;
         opt.exec = exec(f);
         const auto r = semistability_search(x, opt);
         for (const auto& s : r.degrees) {
           err << "semistable: M=" << s.degree << " evaluated " << s.evaluated << (s.exhausted ? " (exhausted)" : "")
               << "\n";
         }
         const char* status = r.status == SearchStatus::kFound        ? "found"
                              : r.status == SearchStatus::kUnstable ? "unstable"
                                                                    : "inconclusive";
         Json doc{{"status", status}, {"certificate", nullptr}};
         if (r.certificate) doc["certificate"] = io::certificate_to_json(*r.certificate);
         out << io::dump(doc);
         return r.status == SearchStatus::kFound ? kExitSuccess : kExitFalse;
       }},
      {{"canon", "canonical form of a permutation tuple", {"canonicalize_perm_tuple"}},
       [](CLI::App& a, Flags& f) {
         a.add_option("--perms", f.perms)->required();
         a.add_option("--n", f.n)->required();
       },
       [](const Flags& f, std::ostream& out, std::ostream&) -> int {
         const auto c = canonicalize_perm_tuple(io::perms_from_json(io::read_json_file(f.perms)), f.n);
         out << io::dump(Json{{"perms", io::perms_to_json(c.perms)}, {"sign", c.sign}});
         return 0;
       }},
      {{"bound", "degree bound d^(d n^2 - d) n^d", {"degree_bound"}},
       [](CLI::App& a, Flags& f) {
         a.add_option("--d", f.d)->required();
         a.add_option("--n", f.n)->required();
       },
       [](const Flags& f, std::ostream& out, std::ostream&) -> int {
         out << degree_bound(f.d, f.n).get_str() << "\n";
         return 0;
       }},
      {{"atdiff", "signed count of n x n Latin squares", {"alon_tarsi_difference"}},
       [](CLI::App& a, Flags& f) {
         a.add_option("--n", f.n)->required();
         a.add_option("--max-n", f.max_n, "enumeration guard");
       },
       [](const Flags& f, std::ostream& out, std::ostream&) -> int {
         out << alon_tarsi_difference(f.n, f.max_n).get_str() << "\n";
         return 0;
       }},
      {{"detensor", "determinantal tensor of a basis sequence", {"determinantal_tensor"}},
       [](CLI::App& a, Flags& f) { a.add_option("--bases", f.bases)->required(); },
       [](const Flags& f, std::ostream& out, std::ostream&) -> int {
         const auto b = io::bases_from_json(io::read_json_file(f.bases));
         out << io::dump(io::tensor_to_json(determinantal_tensor(b).tensor()));
         return 0;
       }},
      {{"rota", "arrange n bases into an n x (ell n) matrix", {"solve_rota"}},
       [](CLI::App& a, Flags& f) {
         a.add_option("--bases", f.bases)->required();
         a.add_option("--strategy", f.strategy, "direct | invariant")->required();
         a.add_option("--min-ell", f.min_ell, "first multiplicity tried");
         a.add_option("--max-ell", f.max_ell)->required();
         a.add_option("--node-budget", f.node_budget, "search nodes per ell (0 = unlimited)");
         a.add_option("--tuple-budget", f.tuple_budget, "invariant strategy: tuples per ell");
       },
       [](const Flags& f, std::ostream& out, std::ostream& err) -> int {
         RotaOptions opt;
         opt.strategy = parse_rota_strategy(f.strategy);
         const auto b = io::bases_from_json(io::read_json_file(f.bases));
         opt.min_ell = f.min_ell;
         opt.max_ell = f.max_ell;
         opt.node_budget = f.node_budget;
         opt.tuple_budget = f.tuple_budget;
         const auto r = solve_rota(b, opt);
         err << "rota: " << r.nodes << " search nodes" << (r.budget_exhausted ? " (budget exhausted)" : "") << "\n";
         if (!r.arrangement) {
           err << "rota: no arrangement with ell <= " << f.max_ell << "\n";
           return kExitFalse;
         }
         out << io::dump(io::arrangement_to_json(*r.arrangement));
         return 0;
       }},
      {{"verify", "verify an arrangement against its bases", {"verify_arrangement"}},
       [](CLI::App& a, Flags& f) {
         a.add_option("--bases", f.bases)->required();
         a.add_option("--arrangement", f.arrangement)->required();
       },
       [](const Flags& f, std::ostream& out, std::ostream& err) -> int {
         const auto b = io::bases_from_json(io::read_json_file(f.bases));
         const auto a = io::arrangement_from_json(io::read_json_file(f.arrangement));
         const auto report = verify_arrangement(b, a);
         if (!report.ok) err << "verify: " << report.diagnostic << "\n";
         return predicate(report.ok, out);
       }},
      {{"basechange", "check D(A_1 B_1, ...) = (B_1^T, ...) . D(A_1, ...)", {"check_determinantal_base_change"}},
       [](CLI::App& a, Flags& f) {
         a.add_option("--a", f.mats)->required();
         a.add_option("--b", f.mats2)->required();
       },
       [](const Flags& f, std::ostream& out, std::ostream&) -> int {
         const auto a = io::matrices_from_json(io::read_json_file(f.mats));
         const auto b = io::matrices_from_json(io::read_json_file(f.mats2));
         return predicate(check_determinantal_base_change(a, b), out);
       }},
  };
  return table;
}

}  // namespace

const std::vector<CommandInfo>& command_table() {
  static const std::vector<CommandInfo> infos = [] {
    std::vector<CommandInfo> out;
    for (const auto& c : commands()) out.push_back(c.info);
    return out;
  }();
  return infos;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tensor, invariant and basis-arrangement computations", "rota"};
  app.require_subcommand(1);
  Flags flags;
  app.add_option("--threads", flags.threads, "worker threads (0 = hardware concurrency)");
  std::map<const CLI::App*, const Handler*> handlers;
  for (const auto& c : commands()) {
    CLI::App* sub = app.add_subcommand(c.info.name, c.info.summary);
    sub->fallthrough();
    c.options(*sub, flags);
    handlers[sub] = &c.handler;
  }

  std::vector<std::string> argv_storage{"rota"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    // Help requested on a subcommand surfaces as CallForHelp on that app.
    if (e.get_exit_code() == 0) {
      for (const auto& [sub, h] : handlers) {
        if (sub->parsed()) out << sub->help();
      }
      return kExitSuccess;
    }
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    for (const auto& [sub, handler] : handlers) {
      if (sub->parsed()) return (*handler)(flags, out, err);
    }
    err << "usage error: no subcommand\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "resource guard: " << e.what() << "\n";
    return kExitResource;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitValidation;
  } catch (const nlohmann::json::exception& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitValidation;
  }
}

}  // namespace rota::cli
