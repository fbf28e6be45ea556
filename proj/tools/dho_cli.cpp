// Command-line front end: bounds, yoshiara, verify, inner-dist, enumerate,
// search and beta.  Exit codes: 0 success, 2 invalid input, 3 enumeration
// too large.  Errors are reported as JSON on stderr.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "dho/beta.hpp"
#include "dho/io.hpp"

namespace {

using dho::io::Json;

std::uint64_t generator_cap() {
  if (const char* env = std::getenv("DHO_MAX_ENUM")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      dho::fail(dho::ErrorKind::InvalidArgument, "DHO_MAX_ENUM must be a positive integer");
    }
  }
  return dho::kDefaultGeneratorCap;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty())
    std::cout << text;
  else
    dho::io::write_file(out_path, text);
}

// Accepts a bare DualArc or a bundle {"arc": ..., "quadratic": ..., "bilinear": ...}.
Json load_bundle(const std::string& path) { return dho::io::parse(dho::io::read_file(path)); }

dho::DualArc arc_of(const Json& j) { return dho::io::arc_from_json(j.contains("arc") ? j.at("arc") : j); }

Json isotropy_report(const dho::DualArc& arc, const dho::FormSpec& form) {
  Json failing = Json::array();
  for (std::size_t i = 0; i < arc.size(); ++i) {
    if (!dho::is_totally_isotropic(form, arc[i])) failing.push_back(i);
  }
  const char* key = form.kind == dho::FormKind::Quadratic ? "totally_singular" : "totally_isotropic";
  return Json{{"kind", std::string(dho::to_string(form.kind))}, {key, failing.empty()}, {"failing_members", failing}};
}

int cmd_bounds(int n, std::uint64_t q) {
  dho::io::write_bound_table_csv(std::cout, dho::bound_table(n, q));
  return 0;
}

int cmd_yoshiara(int n, int h, const std::string& out) {
  const auto family = dho::yoshiara(n, h);
  Json bundle{{"arc", dho::io::to_json(family.arc)},
              {"quadratic", dho::io::to_json(family.quadratic)},
              {"bilinear", dho::io::to_json(family.bilinear)}};
  emit(out, dho::io::dump(bundle));
  return 0;
}

int cmd_verify(const std::string& path, const std::string& form_path) {
  const Json bundle = load_bundle(path);
  const dho::DualArc arc = arc_of(bundle);
  const dho::ArcReport report = dho::dual_arc_verify(arc);
  Json out = dho::io::to_json(report);
  out["size"] = arc.size();
  out["dho_size"] = dho::dho_size(static_cast<int>(arc.member_dim()), arc.field().order()).str();
  out["is_dho"] = report.is_dual_arc && dho::is_dho(arc, report);
  Json isotropy = Json::object();
  if (!form_path.empty()) {
    isotropy["form"] = isotropy_report(arc, dho::io::form_from_json(load_bundle(form_path)));
  } else {
    for (const char* key : {"quadratic", "bilinear"}) {
      if (bundle.contains(key)) isotropy[key] = isotropy_report(arc, dho::io::form_from_json(bundle.at(key)));
    }
  }
  out["isotropy"] = std::move(isotropy);
  std::cout << dho::io::dump(out);
  return 0;
}

int cmd_inner_dist(const std::string& path, std::uint64_t t) {
  const dho::DualArc arc = arc_of(load_bundle(path));
  dho::io::write_inner_distribution_csv(std::cout, dho::inner_distribution(arc), t);
  return 0;
}

int cmd_enumerate(const std::string& family, int n, std::uint64_t q) {
  const auto space = dho::polar_space(dho::polar_family_from_string(family), n, q);
  dho::io::write_generators(std::cout, dho::enumerate_generators(space, generator_cap()));
  return 0;
}

int cmd_search(const std::string& family, int n, std::uint64_t q, const std::string& mode, std::optional<std::size_t> size,
               std::optional<int> distance, unsigned workers, std::uint64_t budget, const std::string& out) {
  const auto space = dho::polar_space(dho::polar_family_from_string(family), n, q);
  dho::SearchOptions options;
  options.workers = workers;
  options.node_budget = budget;
  options.generator_cap = generator_cap();
  dho::SearchResult result;
  if (mode == "dual-arc") {
    options.size_cap = size;
    result = dho::max_dual_arc(space, options);
  } else if (mode == "exists") {
    if (!size) dho::fail(dho::ErrorKind::InvalidArgument, "--mode exists needs --size");
    result = dho::exists_dual_arc_of_size(space, *size, options);
  } else if (mode == "clique") {
    result = dho::max_distance_clique(space, distance.value_or(n - 1), options);
  } else {
    dho::fail(dho::ErrorKind::InvalidArgument, "unknown mode '" + mode + "'");
  }
  emit(out, dho::io::dump(dho::io::to_json(result)));
  return 0;
}

int cmd_beta(const std::string& path, const std::string& form_path) {
  const Json bundle = load_bundle(path);
  const dho::DualArc arc = arc_of(bundle);
  const dho::ArcReport report = dho::dual_arc_verify(arc);
  Json out{{"is_dual_arc", report.is_dual_arc}, {"is_dho", report.is_dual_arc && dho::is_dho(arc, report)}};

  const auto beta = dho::beta_from_arc(arc);
  out["bilinear"] = beta.has_value();
  if (beta) {
    const auto tr = dho::beta_transforms(*beta);
    out["is_symmetric"] = tr.is_symmetric;
    out["is_alternating"] = tr.is_alternating;
  }

  if (2 * arc.member_dim() == arc.ambient_dim()) {
    const dho::FormSpec polarity = form_path.empty() ? dho::split_symplectic_form(arc.field(), arc.member_dim())
                                                     : dho::io::form_from_json(load_bundle(form_path));
    out["polarity"] = form_path.empty() ? "split_symplectic" : form_path;
    out["doubly_dual"] = dho::doubly_dual_check(arc, polarity);
  }

  const auto inv = dho::find_invariant_alternating_form(arc);
  Json finder{{"found", inv.form.has_value()},
              {"solution_dim", inv.solution_basis.size()},
              {"exhaustive", inv.exhaustive},
              {"examined", inv.examined},
              {"shortfall", inv.shortfall}};
  if (inv.form) finder["form"] = dho::io::to_json(*inv.form);
  out["invariant_alternating_form"] = std::move(finder);
  std::cout << dho::io::dump(out);
  return 0;
}

int report_error(const std::string& kind, const std::string& message, int code) {
  std::cerr << Json{{"error", kind}, {"message", message}}.dump() << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dimensional dual arcs in classical polar spaces"};
  app.require_subcommand(1);

  int n = 0, h = 1;
  std::uint64_t q = 0, t = 1, budget = 1'000'000'000;
  std::string family, out, form_path, path, mode = "dual-arc";
  std::optional<std::size_t> size;
  std::optional<int> distance;
  unsigned workers = 1;

  auto* bounds = app.add_subcommand("bounds", "Even-rank dual arc bounds for the six classical families (CSV)");
  bounds->add_option("--n", n, "Even rank")->required();
  bounds->add_option("--q", q, "Prime power q")->required();

  auto* yosh = app.add_subcommand("yoshiara", "Write the Yoshiara family and its forms as JSON");
  yosh->add_option("--n", n, "Dimension n")->required();
  yosh->set_help_flag("--help", "Print this help message and exit");
  yosh->add_option("--h", h, "Exponent h, coprime to n")->required();
  yosh->add_option("--out", out, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check the dual arc axioms, DHO size and isotropy");
  verify->add_option("arc", path, "Arc JSON file")->required();
  verify->add_option("--form", form_path, "Form JSON file");

  auto* inner = app.add_subcommand("inner-dist", "Inner distribution and Vanhove sum (CSV)");
  inner->add_option("arc", path, "Arc JSON file")->required();
  inner->add_option("--t", t, "Second parameter t = q^e")->required();

  auto* enumerate = app.add_subcommand("enumerate", "Stream the generators of a polar space as JSON lines");
  enumerate->add_option("--family", family, "Q+, Q, Q-, W, H or Heven (or the full tag)")->required();
  enumerate->add_option("--n", n, "Rank")->required();
  enumerate->add_option("--q", q, "Prime power q (hermitian: field order is q^2)")->required();

  auto* search = app.add_subcommand("search", "Exhaustive dual arc / clique search");
  search->add_option("--family", family, "Q+, Q, Q-, W, H or Heven (or the full tag)")->required();
  search->add_option("--n", n, "Rank")->required();
  search->add_option("--q", q, "Prime power q")->required();
  search->add_option("--mode", mode, "dual-arc, exists or clique")->check(CLI::IsMember({"dual-arc", "exists", "clique"}));
  search->add_option("--size", size, "Target size (exists) or size cap (dual-arc)");
  search->add_option("--distance", distance, "Clique distance (default n-1)");
  search->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  search->add_option("--node-budget", budget, "Node budget");
  search->add_option("--out", out, "Output file (default stdout)");

  auto* beta = app.add_subcommand("beta", "Bilinear, symmetric, doubly dual and invariant form report");
  beta->add_option("--from", path, "Arc JSON file")->required();
  beta->add_option("--form", form_path, "Polarity form JSON file (default: split symplectic)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error("ValidationError", e.what(), 2);
  }

  try {
    if (*bounds) return cmd_bounds(n, q);
    if (*yosh) return cmd_yoshiara(n, h, out);
    if (*verify) return cmd_verify(path, form_path);
    if (*inner) return cmd_inner_dist(path, t);
    if (*enumerate) return cmd_enumerate(family, n, q);
    if (*search) return cmd_search(family, n, q, mode, size, distance, workers, budget, out);
    if (*beta) return cmd_beta(path, form_path);
  } catch (const dho::Error& e) {
    return report_error(std::string(dho::to_string(e.kind())), e.what(),
                        e.kind() == dho::ErrorKind::EnumerationTooLarge ? 3 : 2);
  }
  return 0;
}
