#include "pn/cli.hpp"

#include "cli_internal.hpp"
#include "pn/complexes.hpp"
#include "pn/errors.hpp"
#include "pn/homology.hpp"
#include "pn/partitions.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>

namespace pn {

namespace {

using cli::Json;

/// A resolved command: its canonical parameters (the cache key) and how to
/// compute the payload.
struct Request {
  Json params;
  std::function<Json()> compute;
  bool cacheable = true;
};

Json homology_rows(const EquivariantComplex& c, std::optional<std::uint64_t> mod, const Budget& budget) {
  Json rows = Json::array();
  if (c.dimension() < 0) {
    // Only the empty complex has reduced homology in degree -1.
    if (mod) {
      rows.push_back(Json{{"degree", -1}, {"dimension", 1}});
    } else {
      rows.push_back(Json{{"degree", -1}, {"group", cli::to_json(AbelianGroup::free(1))}});
    }
    return rows;
  }
  if (mod) {
    for (int d = 0; d <= c.dimension(); ++d) {
      rows.push_back(Json{{"degree", d}, {"dimension", homology_mod_p(c, d, *mod, true, budget)}});
    }
  } else {
    auto groups = homology_all(c, true, budget);
    for (std::size_t d = 0; d < groups.size(); ++d) {
      rows.push_back(Json{{"degree", d}, {"group", cli::to_json(groups[d])}});
    }
  }
  return rows;
}

Json f_vector_json(const EquivariantComplex& c) {
  Json f = Json::array();
  for (auto x : c.f_vector()) f.push_back(x);
  return f;
}

void write_file(const std::string& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream out(path);
  if (!out) throw_invalid("cannot open export file " + path);
  body(out);
  if (!out) throw_invalid("failed writing export file " + path);
}

IntegralRepresentation module_for(int n, bool twist, const ComputeOptions& options) {
  auto rep = extract_ln(n, options);
  return twist ? tensor_sign(rep) : rep;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partition complexes, symmetric group homology and Dyer-Lashof words", "pn"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_text = "text";
  std::string cache_dir;
  std::string budget_text;
  unsigned threads = 1;
  app.add_option("--format", format_text, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--cache-dir", cache_dir, "Result cache directory (PN_CACHE overrides)");
  app.add_option("--threads", threads, "Worker threads for linear algebra")->check(CLI::Range(1u, 256u));
  app.add_option("--budget", budget_text, "Resource budget, e.g. entries=5e7,bits=4096,seconds=120");

  ComputeOptions options;
  Request request;
  auto bind = [&](CLI::App* sub, std::function<Request()> make) {
    sub->fallthrough();
    sub->callback([&request, make] { request = make(); });
  };

  // lattice
  int lattice_n = 0;
  bool lattice_mobius = false, lattice_list = false;
  auto* lattice = app.add_subcommand("lattice", "Partition lattice of {1..n}");
  lattice->add_option("n", lattice_n)->required();
  lattice->add_flag("--mobius", lattice_mobius, "Moebius value between bottom and top");
  lattice->add_flag("--list", lattice_list, "List every partition");
  bind(lattice, [&] {
    Json params{{"command", "lattice"}, {"n", lattice_n}, {"mobius", lattice_mobius}, {"list", lattice_list}};
    return Request{params, [&] {
                     auto all = all_partitions(lattice_n);
                     Json j{{"n", lattice_n},
                            {"partitions", all.size()},
                            {"proper_partitions", all_partitions(lattice_n, PartitionBounds{false, false}).size()}};
                     if (lattice_mobius) {
                       const auto mu = mobius_partition_lattice(lattice_n);
                       j["mobius"] = mu;
                       j["abs_equals_factorial"] =
                           static_cast<std::uint64_t>(mu < 0 ? -mu : mu) == factorial(lattice_n - 1);
                     }
                     if (lattice_list) {
                       Json list = Json::array();
                       for (const auto& p : all) list.push_back(p.to_string());
                       j["elements"] = list;
                     }
                     return j;
                   }};
  });

  // complex kn / klambda
  auto* complex = app.add_subcommand("complex", "Partition complexes");
  complex->require_subcommand(1);
  complex->fallthrough();
  int kn_n = 0;
  bool kn_fvec = false, kn_homology = false;
  std::optional<std::uint64_t> kn_mod;
  std::string kn_export;
  auto* kn = complex->add_subcommand("kn", "The complex K_n");
  kn->add_option("n", kn_n)->required();
  auto* fvec_flag = kn->add_flag("--f-vector", kn_fvec, "Only the f-vector");
  kn->add_flag("--homology", kn_homology, "Reduced homology")->excludes(fvec_flag);
  kn->add_option("--mod", kn_mod, "Prime coefficient field for homology")->excludes(fvec_flag);
  kn->add_option("--export", kn_export, "Write the boundary matrices to a file");
  bind(kn, [&] {
    const bool homology_wanted = kn_homology || kn_mod.has_value();
    Json params{{"command", "complex kn"}, {"n", kn_n}, {"f_vector_only", kn_fvec}, {"homology", homology_wanted}};
    if (kn_mod) params["mod"] = *kn_mod;
    Request r{params, [&, homology_wanted] {
                auto c = k_n(kn_n, options);
                Json j{{"n", kn_n}, {"f_vector", f_vector_json(c)}};
                if (!kn_fvec) {
                  j["dimension"] = c.dimension();
                  j["reduced_euler_characteristic"] = c.reduced_euler_characteristic();
                }
                if (homology_wanted) {
                  j["coefficients"] = kn_mod ? "F_" + std::to_string(*kn_mod) : std::string("Z");
                  j["reduced_homology"] = homology_rows(c, kn_mod, options.budget);
                }
                if (!kn_export.empty()) {
                  write_file(kn_export, [&](std::ostream& os) { write_boundary_bundle(os, c); });
                  j["exported"] = kn_export;
                }
                return j;
              }};
    r.cacheable = kn_export.empty();
    return r;
  });

  std::string klambda_text;
  auto* klambda = complex->add_subcommand("klambda", "The complex K_lambda for a partition such as 1,2|3,4");
  klambda->add_option("partition", klambda_text)->required();
  bind(klambda, [&] {
    const auto lambda = SetPartition::parse(klambda_text);
    Json params{{"command", "complex klambda"}, {"lambda", lambda.to_string()}};
    return Request{params, [&, lambda] {
                     auto c = k_lambda(lambda, options);
                     Json sizes = Json::array();
                     for (const auto& b : lambda.blocks()) sizes.push_back(b.size());
                     return Json{{"lambda", lambda.to_string()},
                                 {"n", lambda.ground_size()},
                                 {"block_sizes", sizes},
                                 {"dimension", c.dimension()},
                                 {"f_vector", f_vector_json(c)},
                                 {"reduced_homology", homology_rows(c, std::nullopt, options.budget)}};
                   }};
  });

  // module extract
  auto* module = app.add_subcommand("module", "The module L_n");
  module->require_subcommand(1);
  module->fallthrough();
  int mod_n = 0;
  bool mod_character = false, mod_twist = false, mod_matrices = false;
  std::string mod_export;
  auto* extract = module->add_subcommand("extract", "Extract L_n from the top homology of K_n");
  extract->add_option("n", mod_n)->required();
  extract->add_flag("--character", mod_character, "Character on conjugacy classes");
  extract->add_flag("--sign-twist", mod_twist, "Tensor with the sign representation");
  extract->add_flag("--matrices", mod_matrices, "Include the generator matrices");
  extract->add_option("--export", mod_export, "Write the representation bundle to a file");
  bind(extract, [&] {
    Json params{{"command", "module extract"},
                {"n", mod_n},
                {"character", mod_character},
                {"sign_twist", mod_twist},
                {"matrices", mod_matrices}};
    Request r{params, [&] {
                const auto rep = module_for(mod_n, mod_twist, options);
                Json dets = Json::array();
                dets.push_back(cli::to_json(rep.transposition.determinant()));
                dets.push_back(cli::to_json(rep.cycle.determinant()));
                Json j{{"n", mod_n},
                       {"sign_twist", mod_twist},
                       {"dim", rep.dim},
                       {"basis", rep.basis_provenance},
                       {"relations_hold", satisfies_relations(rep)},
                       {"generator_determinants", dets}};
                if (mod_character) {
                  const auto chi = character(rep);
                  const auto hopf = character_via_hopf_trace(mod_n, mod_twist, options);
                  bool agree = chi.size() == hopf.size();
                  for (std::size_t i = 0; agree && i < chi.size(); ++i) agree = chi[i].value == hopf[i].value;
                  j["character"] = cli::to_json(chi);
                  j["hopf_trace_agrees"] = agree;
                }
                if (mod_matrices) {
                  j["generators"] = Json{{"(1 2)", cli::to_json(rep.transposition)},
                                         {"(1 2 ... n)", cli::to_json(rep.cycle)}};
                }
                if (!mod_export.empty()) {
                  write_file(mod_export, [&](std::ostream& os) { write_representation(os, rep); });
                  j["exported"] = mod_export;
                }
                return j;
              }};
    r.cacheable = mod_export.empty();
    return r;
  });

  // homology coinvariants / bar
  auto* homology_cmd = app.add_subcommand("homology", "Group homology of S_n with coefficients in L_n");
  homology_cmd->require_subcommand(1);
  homology_cmd->fallthrough();
  int co_n = 0;
  bool co_twist = false;
  auto* coinv = homology_cmd->add_subcommand("coinvariants", "H_0(S_n; L_n)");
  coinv->add_option("n", co_n)->required();
  coinv->add_flag("--sign-twist", co_twist, "Use L_n tensor sign");
  bind(coinv, [&] {
    Json params{{"command", "homology coinvariants"}, {"n", co_n}, {"sign_twist", co_twist}};
    return Request{params, [&] {
                     const auto rep = module_for(co_n, co_twist, options);
                     return Json{{"n", co_n},
                                 {"sign_twist", co_twist},
                                 {"module_dim", rep.dim},
                                 {"coinvariants", cli::to_json(coinvariants(rep, options.budget))}};
                   }};
  });
  int bar_n = 0, bar_degree = 0;
  bool bar_twist = false;
  std::optional<std::uint64_t> bar_mod;
  auto* bar = homology_cmd->add_subcommand("bar", "H_k(S_n; L_n) from the normalized bar complex");
  bar->add_option("n", bar_n)->required();
  bar->add_option("--degree", bar_degree)->required();
  bar->add_option("--mod", bar_mod, "Prime coefficient field");
  bar->add_flag("--sign-twist", bar_twist, "Use L_n tensor sign");
  bind(bar, [&] {
    Json params{{"command", "homology bar"}, {"n", bar_n}, {"degree", bar_degree}, {"sign_twist", bar_twist}};
    if (bar_mod) params["mod"] = *bar_mod;
    return Request{params, [&] {
                     const auto rep = module_for(bar_n, bar_twist, options);
                     Json j{{"n", bar_n},
                            {"sign_twist", bar_twist},
                            {"degree", bar_degree},
                            {"coefficients", bar_mod ? "F_" + std::to_string(*bar_mod) : std::string("Z")},
                            {"chain_rank", bar_chain_rank(rep, bar_degree)}};
                     if (bar_mod) {
                       j["dimension"] = bar_homology_mod_p(rep, bar_degree, *bar_mod, options.budget);
                     } else {
                       j["homology"] = cli::to_json(bar_homology(rep, bar_degree, options.budget));
                     }
                     return j;
                   }};
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Numerical checks of the structural results");
  verify->require_subcommand(1);
  verify->fallthrough();
  int cor3_max = 3, les4_max = 2, filt_n = 0;
  auto* cor3 = verify->add_subcommand("cor3", "H_i(S_3; L_3) against H_{i-2}(S_3; L_3 x sign)");
  cor3->add_option("--max-degree", cor3_max)->check(CLI::Range(0, 3));
  bind(cor3, [&] {
    return Request{Json{{"command", "verify cor3"}, {"max_degree", cor3_max}},
                   [&] { return cli::to_json(verify_l3_degree_shift(cor3_max, options)); }};
  });
  auto* cor4 = verify->add_subcommand("cor4", "Coinvariants of L_3 x sign against those of L_6");
  bind(cor4, [&] {
    return Request{Json{{"command", "verify cor4"}}, [&] { return cli::to_json(verify_l6_coinvariants(options)); }};
  });
  auto* les4 = verify->add_subcommand("les4", "H_i(S_2; L_2) against H_i(S_4; L_4)");
  les4->add_option("--max-degree", les4_max)->check(CLI::Range(0, 2));
  bind(les4, [&] {
    return Request{Json{{"command", "verify les4"}, {"max_degree", les4_max}},
                   [&] { return cli::to_json(verify_les_n4(les4_max, options)); }};
  });
  auto* filtration = verify->add_subcommand("filtration", "Euler characteristic identity for the fat diagonal");
  filtration->add_option("n", filt_n)->required();
  bind(filtration, [&] {
    return Request{Json{{"command", "verify filtration"}, {"n", filt_n}}, [&] {
                     const auto r = euler_filtration_check(filt_n, options);
                     return Json{{"n", r.n},
                                 {"subquotient_sum", r.subquotient_sum},
                                 {"target", r.target},
                                 {"agree", r.agree}};
                   }};
  });

  // dl
  auto* dl = app.add_subcommand("dl", "Dyer-Lashof word calculus");
  dl->require_subcommand(1);
  dl->fallthrough();
  std::uint64_t words_p = 0;
  int words_k = 0;
  std::int64_t words_dim = 0;
  auto* words = dl->add_subcommand("words", "Completely inadmissible words of length k in a dimension");
  words->add_option("p", words_p)->required();
  words->add_option("k", words_k)->required();
  words->add_option("--dim", words_dim)->required();
  bind(words, [&] {
    return Request{Json{{"command", "dl words"}, {"p", words_p}, {"k", words_k}, {"dim", words_dim}}, [&] {
                     const auto basis = enumerate_basis(words_p, words_k, words_dim);
                     Json list = Json::array();
                     for (const auto& w : basis) list.push_back(w.to_string());
                     return Json{{"p", words_p},
                                 {"k", words_k},
                                 {"dimension", words_dim},
                                 {"count", basis.size()},
                                 {"words", list}};
                   }};
  });
  std::uint64_t obs_n = 0;
  auto* obstruction = dl->add_subcommand("obstruction", "Verdict on H_{n-1}(S_n; L_n) for n = 2p^k");
  obstruction->add_option("n", obs_n)->required();
  bind(obstruction, [&] {
    return Request{Json{{"command", "dl obstruction"}, {"n", obs_n}},
                   [&] { return cli::to_json(obstruction_group(obs_n), obs_n); }};
  });

  // genus
  auto* genus = app.add_subcommand("genus", "Verdict on the Schwartz genus of the root-finding covering");
  genus->fallthrough();
  std::optional<std::uint64_t> genus_n;
  genus->add_option("n", genus_n);
  std::uint64_t table_max = 0, table_min = 1;
  auto* table = genus->add_subcommand("table", "Verdicts for a range of n");
  table->add_option("--max", table_max)->required();
  table->add_option("--min", table_min);
  bind(table, [&] {
    return Request{Json{{"command", "genus table"}, {"min", table_min}, {"max", table_max}}, [&] {
                     Json rows = Json::array();
                     for (const auto& v : genus_table(table_min, table_max, options.threads)) rows.push_back(cli::to_json(v));
                     return Json{{"min", table_min}, {"max", table_max}, {"rows", rows}};
                   }};
  });
  genus->callback([&] {
    if (genus->got_subcommand(table)) return;
    if (!genus_n) throw CLI::ValidationError("genus", "expected n or the table subcommand");
    request = Request{Json{{"command", "genus"}, {"n", *genus_n}}, [&] { return cli::to_json(classify(*genus_n)); }};
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    const auto format = cli::parse_format(format_text);
    if (!budget_text.empty()) options.budget = Budget::parse(budget_text);
    options.threads = threads;
    if (const char* env = std::getenv("PN_CACHE"); env != nullptr && *env != '\0') cache_dir = env;

    std::optional<cli::Cache> cache;
    if (!cache_dir.empty() && request.cacheable) cache.emplace(cache_dir);
    const auto key = cli::Cache::key(request.params);
    std::optional<Json> payload;
    if (cache) payload = cache->load(key);
    if (!payload) {
      payload = request.compute();
      if (cache) cache->store(key, *payload);
    }
    out << cli::render(*payload, format);
    return 0;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ResourceExhausted& e) {
    err << "resource budget exceeded: " << e.what() << '\n';
    return 3;
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 4;
  }
}

}  // namespace pn
