#pragma once

// File ingestion and command dispatch for the lieamk tool. Input is a single
// JSON document per algebra; rationals travel as strings ("p" or "p/q") so no
// value ever passes through floating point. Reports are built as JSON first
// and rendered to text from the same data, so --json mirrors the human
// output field for field.
//
// Exit codes: 0 success, 1 validation failure, 2 certificate/check failure,
// 3 input error.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lieamk/homology.hpp"

namespace lieamk {

namespace cli {

using nlohmann::json;

constexpr const char* kSchema = "lieamk/1";
constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitCheckFailed = 2;
constexpr int kExitInput = 3;

struct GroupActionSpec {
  FiniteGroup group;
  std::vector<Dense> generator_images;
};

struct ParsedInput {
  std::string path;
  LieAlgebra algebra;
  std::optional<std::vector<QVec>> levi_vectors;
  std::optional<GroupActionSpec> group_action;
};

namespace detail {

inline const json& field(const json& j, const char* key, const std::string& ctx) {
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(ctx + ": missing field '" + key + "'");
  return *it;
}

inline std::size_t index_field(const json& j, const char* key, std::size_t dim,
                               const std::string& ctx) {
  const json& v = field(j, key, ctx);
  if (!v.is_number_unsigned()) throw InputError(ctx + "." + key + ": expected an index");
  const std::size_t i = v.get<std::size_t>();
  if (i >= dim) throw InputError(ctx + "." + key + ": index " + std::to_string(i) +
                                 " out of range for dim " + std::to_string(dim));
  return i;
}

inline Rational rational_field(const json& v, const std::string& ctx) {
  if (!v.is_string()) throw InputError(ctx + ": rationals must be strings like \"2\" or \"-1/3\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const InputError& e) {
    throw InputError(ctx + ": " + e.what());
  }
}

inline QVec vector_field(const json& v, std::size_t dim, const std::string& ctx) {
  if (!v.is_array() || v.size() != dim)
    throw InputError(ctx + ": expected an array of " + std::to_string(dim) + " rational strings");
  QVec out;
  for (std::size_t i = 0; i < dim; ++i)
    out.push_back(rational_field(v[i], ctx + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace detail

inline ParsedInput parse_algebra_json(const json& j, const std::string& path) {
  using detail::field;

  const json& jname = field(j, "name", "input");
  const json& jdim = field(j, "dim", "input");
  const json& jbasis = field(j, "basis", "input");
  if (!jname.is_string()) throw InputError("input.name: expected a string");
  if (!jdim.is_number_unsigned() || jdim.get<std::size_t>() == 0)
    throw InputError("input.dim: expected a positive count");
  const std::size_t dim = jdim.get<std::size_t>();
  if (!jbasis.is_array() || jbasis.size() != dim)
    throw InputError("input.basis: expected " + std::to_string(dim) + " names");

  std::vector<std::string> names;
  for (const auto& b : jbasis) {
    if (!b.is_string()) throw InputError("input.basis: names must be strings");
    names.push_back(b.get<std::string>());
  }

  LieAlgebra L(jname.get<std::string>(), std::move(names));

  const json& jbr = field(j, "brackets", "input");
  if (!jbr.is_array()) throw InputError("input.brackets: expected an array");
  for (std::size_t r = 0; r < jbr.size(); ++r) {
    const std::string ctx = "brackets[" + std::to_string(r) + "]";
    const json& rec = jbr[r];
    if (!rec.is_object()) throw InputError(ctx + ": expected an object");
    const std::size_t i = detail::index_field(rec, "i", dim, ctx);
    const std::size_t jj = detail::index_field(rec, "j", dim, ctx);
    if (i >= jj)
      throw InputError(ctx + ": need i < j (antisymmetry stores each pair once), got i=" +
                       std::to_string(i) + " j=" + std::to_string(jj));
    const json& jco = detail::field(rec, "coeffs", ctx);
    if (!jco.is_object()) throw InputError(ctx + ".coeffs: expected an object");
    QVec c(dim, Rational(0));
    for (const auto& [key, value] : jco.items()) {
      std::size_t k = 0;
      try {
        std::size_t pos = 0;
        k = std::stoul(key, &pos);
        if (pos != key.size()) throw std::invalid_argument("trailing chars");
      } catch (const std::exception&) {
        throw InputError(ctx + ".coeffs: bad index key '" + key + "'");
      }
      if (k >= dim) throw InputError(ctx + ".coeffs: index " + key + " out of range");
      c[k] = detail::rational_field(value, ctx + ".coeffs." + key);
    }
    try {
      L.set_bracket(i, jj, std::move(c));
    } catch (const InputError& e) {
      throw InputError(ctx + ": " + e.what());
    }
  }

  ParsedInput out{path, std::move(L), std::nullopt, std::nullopt};
  const std::size_t n = out.algebra.dim();

  if (j.contains("levi") && j.contains("levi_vectors"))
    throw InputError("input: give either 'levi' indices or 'levi_vectors', not both");

  if (j.contains("levi")) {
    const json& jl = j["levi"];
    if (!jl.is_array()) throw InputError("input.levi: expected an array of basis indices");
    std::vector<QVec> vs;
    std::vector<bool> seen(n, false);
    for (std::size_t t = 0; t < jl.size(); ++t) {
      if (!jl[t].is_number_unsigned() || jl[t].get<std::size_t>() >= n)
        throw InputError("input.levi[" + std::to_string(t) + "]: bad basis index");
      const std::size_t i = jl[t].get<std::size_t>();
      if (seen[i]) throw InputError("input.levi: duplicate index " + std::to_string(i));
      seen[i] = true;
      vs.push_back(out.algebra.unit(i));
    }
    out.levi_vectors = std::move(vs);
  }

  if (j.contains("levi_vectors")) {
    const json& jl = j["levi_vectors"];
    if (!jl.is_array()) throw InputError("input.levi_vectors: expected an array of vectors");
    std::vector<QVec> vs;
    for (std::size_t t = 0; t < jl.size(); ++t)
      vs.push_back(detail::vector_field(jl[t], n, "input.levi_vectors[" + std::to_string(t) + "]"));
    out.levi_vectors = std::move(vs);
  }

  if (j.contains("group_action")) {
    const json& jg = j["group_action"];
    const std::string ctx = "group_action";
    GroupActionSpec spec;
    const json& jel = detail::field(jg, "elements", ctx);
    if (!jel.is_array() || jel.empty()) throw InputError(ctx + ".elements: expected names");
    for (const auto& e : jel) {
      if (!e.is_string()) throw InputError(ctx + ".elements: names must be strings");
      spec.group.elements.push_back(e.get<std::string>());
    }
    spec.group.name = jg.contains("name") && jg["name"].is_string() ? jg["name"].get<std::string>()
                                                                    : std::string("G");
    const std::size_t order = spec.group.elements.size();
    const json& jt = detail::field(jg, "table", ctx);
    if (!jt.is_array() || jt.size() != order) throw InputError(ctx + ".table: wrong shape");
    for (std::size_t a = 0; a < order; ++a) {
      const json& row = jt[a];
      if (!row.is_array() || row.size() != order) throw InputError(ctx + ".table: wrong shape");
      std::vector<std::size_t> tr;
      for (const auto& x : row) {
        if (!x.is_number_unsigned() || x.get<std::size_t>() >= order)
          throw InputError(ctx + ".table: entries must be element indices");
        tr.push_back(x.get<std::size_t>());
      }
      spec.group.table.push_back(std::move(tr));
    }
    spec.group.validate();

    const json& jm = detail::field(jg, "matrices", ctx);
    if (!jm.is_array() || jm.size() != order)
      throw InputError(ctx + ".matrices: need one matrix per element");
    for (std::size_t e = 0; e < order; ++e) {
      const json& mat = jm[e];
      const std::string mctx = ctx + ".matrices[" + std::to_string(e) + "]";
      if (!mat.is_array() || mat.size() != n) throw InputError(mctx + ": wrong shape");
      Dense d;
      for (std::size_t r = 0; r < n; ++r)
        d.push_back(detail::vector_field(mat[r], n, mctx + "[" + std::to_string(r) + "]"));
      spec.generator_images.push_back(std::move(d));
    }
    validate_group_action(spec.group, out.algebra, spec.generator_images);
    out.group_action = std::move(spec);
  }

  return out;
}

inline ParsedInput parse_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("parse error in '" + path + "': " + e.what());
  }
  return parse_algebra_json(j, path);
}

struct RunResult {
  int code = kExitOk;
  bool json_requested = false;
  json report;
  std::string text;
};

namespace detail {

inline json rational_vec_json(const QVec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

inline std::string join_names(const std::vector<std::string>& names, const char* sep) {
  std::string s;
  for (const auto& n : names) {
    if (!s.empty()) s += sep;
    s += n;
  }
  return s;
}

inline json validation_json(const ValidationReport& rep, const LieAlgebra& L) {
  json out;
  out["ok"] = rep.ok;
  out["violations"] = json::array();
  for (const auto& v : rep.violations) {
    json jv;
    jv["triple"] = {v.i, v.j, v.k};
    jv["names"] = {L.basis_names()[v.i], L.basis_names()[v.j], L.basis_names()[v.k]};
    jv["defect"] = rational_vec_json(v.defect);
    out["violations"].push_back(std::move(jv));
  }
  return out;
}

inline std::string mark(bool ok) { return ok ? "ok" : "FAILED"; }

/// Resolves the Levi subspace for obstruction/smash-check: the --levi flag
/// wins, then the file, then the forced cases (solvable -> zero, semisimple
/// -> everything). Mixed algebras must say which complement they mean.
inline Subspace resolve_levi(const ParsedInput& input, const std::optional<std::vector<std::size_t>>& flag) {
  const LieAlgebra& L = input.algebra;
  if (flag.has_value()) {
    std::vector<QVec> vs;
    std::vector<bool> seen(L.dim(), false);
    for (const std::size_t i : *flag) {
      if (i >= L.dim()) throw InputError("--levi: index " + std::to_string(i) + " out of range");
      if (seen[i]) throw InputError("--levi: duplicate index " + std::to_string(i));
      seen[i] = true;
      vs.push_back(L.unit(i));
    }
    return Subspace(L, std::move(vs));
  }
  if (input.levi_vectors.has_value()) return Subspace(L, *input.levi_vectors);
  const Classification c = classify(L);
  if (c.cls == AlgebraClass::solvable) return Subspace::zero(L);
  if (c.cls == AlgebraClass::semisimple) return Subspace::whole(L);
  throw InputError("mixed algebra: supply a Levi complement via --levi or the 'levi' field");
}

}  // namespace detail

inline RunResult run(const std::vector<std::string>& args) {
  RunResult result;

  CLI::App app{"exact kernel for Lie algebra smash products and homology obstructions"};
  app.require_subcommand(1);
  bool json_out = false;
  app.add_flag("--json", json_out, "emit a machine-readable report");

  std::string file;
  std::string coeffs = "trivial";
  std::string degree = "all";
  std::string levi_flag;
  std::size_t truncate_n = 4;

  CLI::App* c_validate = app.add_subcommand("validate", "check the Jacobi identity");
  c_validate->add_option("file", file, "algebra file")->required();

  CLI::App* c_classify = app.add_subcommand("classify", "solvable / semisimple / mixed + radical");
  c_classify->add_option("file", file, "algebra file")->required();

  CLI::App* c_homology = app.add_subcommand("homology", "Betti numbers of the standard complex");
  c_homology->add_option("file", file, "algebra file")->required();
  c_homology->add_option("--coeffs", coeffs, "coefficient module (trivial)");
  c_homology->add_option("--degree", degree, "single degree p, or 'all'");

  CLI::App* c_obstruction =
      app.add_subcommand("obstruction", "degree-k homology obstruction certificate");
  c_obstruction->add_option("file", file, "algebra file")->required();
  c_obstruction->add_option("--levi", levi_flag, "Levi basis indices i,j,k");
  c_obstruction->add_option("--truncate", truncate_n, "coefficient truncation degree");

  CLI::App* c_smash = app.add_subcommand("smash-check", "smash product identity checks");
  c_smash->add_option("file", file, "algebra file")->required();
  c_smash->add_option("--levi", levi_flag, "Levi basis indices i,j,k");
  c_smash->add_option("--truncate", truncate_n, "coefficient truncation degree");

  std::vector<const char*> argv;
  argv.push_back("lieamk");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    result.text = app.help();
    result.report = {{"schema", kSchema}, {"help", true}};
    return result;
  } catch (const CLI::ParseError& e) {
    result.code = kExitInput;
    result.text = std::string("error: ") + e.what();
    result.report = {{"schema", kSchema}, {"error", {{"kind", "input"}, {"message", e.what()}}}};
    return result;
  }

  result.json_requested = json_out;

  std::optional<std::vector<std::size_t>> levi_idx;
  if (!levi_flag.empty()) {
    std::vector<std::size_t> idx;
    std::stringstream ss(levi_flag);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        std::size_t pos = 0;
        idx.push_back(std::stoul(tok, &pos));
        if (pos != tok.size()) throw std::invalid_argument("trailing chars");
      } catch (const std::exception&) {
        result.code = kExitInput;
        result.text = "error: --levi expects comma-separated indices";
        result.report = {{"schema", kSchema},
                         {"error", {{"kind", "input"}, {"message", "bad --levi value"}}}};
        return result;
      }
    }
    levi_idx = std::move(idx);
  }

  json rep;
  rep["schema"] = kSchema;
  std::ostringstream text;

  try {
    const ParsedInput input = parse_algebra_file(file);
    const LieAlgebra& L = input.algebra;
    rep["input"] = file;
    rep["algebra"] = {{"name", L.name()}, {"dim", L.dim()}};

    const ValidationReport vrep = validate(L);

    if (c_validate->parsed()) {
      rep["command"] = "validate";
      rep["result"] = detail::validation_json(vrep, L);
      text << L.name() << ": jacobi " << detail::mark(vrep.ok) << "\n";
      for (const auto& v : vrep.violations)
        text << "  violated at (" << L.basis_names()[v.i] << ", " << L.basis_names()[v.j] << ", "
             << L.basis_names()[v.k] << ")\n";
      result.code = vrep.ok ? kExitOk : kExitValidation;
    } else if (!vrep.ok) {
      // every other command needs a genuine Lie algebra
      rep["command"] = "validate";
      rep["result"] = detail::validation_json(vrep, L);
      text << L.name() << ": jacobi FAILED; fix the structure constants first\n";
      result.code = kExitValidation;
    } else if (c_classify->parsed()) {
      rep["command"] = "classify";
      const Classification c = classify(L);
      json jr;
      jr["class"] = to_string(c.cls);
      jr["dim_radical"] = c.dim_radical;
      jr["radical_basis"] = json::array();
      for (const auto& v : c.radical.vectors())
        jr["radical_basis"].push_back(detail::rational_vec_json(v));
      rep["result"] = std::move(jr);
      text << L.name() << ": " << to_string(c.cls) << ", dim radical = " << c.dim_radical << "\n";
      result.code = kExitOk;
    } else if (c_homology->parsed()) {
      rep["command"] = "homology";
      if (coeffs != "trivial")
        throw InputError("--coeffs: only 'trivial' is supported, got '" + coeffs + "'");
      const TrivialModule M;
      json jr;
      jr["coefficients"] = coeffs;
      if (degree == "all") {
        const auto b = betti_table(L, M);
        jr["betti"] = b;
        rep["result"] = std::move(jr);
        text << L.name() << ": betti =";
        for (const auto x : b) text << " " << x;
        text << "\n";
      } else {
        std::size_t p = 0;
        try {
          std::size_t pos = 0;
          p = std::stoul(degree, &pos);
          if (pos != degree.size()) throw std::invalid_argument("trailing chars");
        } catch (const std::exception&) {
          throw InputError("--degree: expected a number or 'all', got '" + degree + "'");
        }
        if (p > L.dim()) throw InputError("--degree: " + degree + " exceeds dim " +
                                          std::to_string(L.dim()));
        const std::size_t b = betti(L, M, p);
        jr["degree"] = p;
        jr["betti"] = b;
        rep["result"] = std::move(jr);
        text << L.name() << ": b_" << p << " = " << b << "\n";
      }
      result.code = kExitOk;
    } else if (c_obstruction->parsed()) {
      rep["command"] = "obstruction";
      const Subspace h = detail::resolve_levi(input, levi_idx);
      const Certificate cert = obstruction_certificate(L, h, truncate_n);
      json jr;
      jr["k"] = cert.k;
      jr["dim_radical"] = cert.dim_radical;
      jr["truncation"] = cert.truncation;
      jr["vacuous"] = cert.vacuous;
      if (!cert.vacuous) {
        jr["eta"] = cert.eta_names;
        jr["checks"] = {{"c1_cycle", cert.c1_cycle},
                        {"c2_image_killed", cert.c2_image_killed},
                        {"c2_chains_checked", cert.c2_chains_checked},
                        {"c3_detects", cert.c3_detects},
                        {"solve_no_solution", cert.solve_no_solution},
                        {"consistent", cert.consistent}};
      }
      jr["pass"] = cert.pass;
      if (!cert.detail.empty()) jr["detail"] = cert.detail;
      rep["result"] = std::move(jr);

      if (cert.vacuous) {
        text << L.name() << ": solvable, no obstruction (k = 0)\n";
      } else {
        text << L.name() << ": k = " << cert.k << ", N = " << cert.truncation
             << ", eta = " << detail::join_names(cert.eta_names, "^") << "\n";
        text << "  C1 cycle:          " << detail::mark(cert.c1_cycle) << "\n";
        text << "  C2 image killed:   " << detail::mark(cert.c2_image_killed) << " ("
             << cert.c2_chains_checked << " chains)\n";
        text << "  C3 detects:        " << detail::mark(cert.c3_detects) << "\n";
        text << "  solve agrees:      " << detail::mark(cert.solve_no_solution && cert.consistent)
             << "\n";
        text << (cert.pass ? "  certificate: homology class nonzero at every tested truncation\n"
                           : "  certificate FAILED\n");
      }
      result.code = cert.pass ? kExitOk : kExitCheckFailed;
    } else if (c_smash->parsed()) {
      rep["command"] = "smash-check";
      json jr;
      jr["truncation"] = truncate_n;
      bool all_ok = true;

      if (input.group_action.has_value()) {
        const auto act = ModuleAlgebraAction::group_action(
            input.group_action->group, L, input.group_action->generator_images, truncate_n);
        const CheckReport ct = check_counit_tau(act);
        const RetractionReport rr = check_retraction(act);
        all_ok = ct.ok && rr.ok;
        jr["counit_tau"] = {{"ok", ct.ok}, {"checked", ct.checked}};
        json jids = json::array();
        for (const auto& id : rr.identities)
          jids.push_back({{"name", id.name}, {"ok", id.ok}, {"detail", id.detail}});
        jr["retraction"] = {{"ok", rr.ok}, {"identities", std::move(jids)}};
        text << L.name() << " with group " << input.group_action->group.name << ", N = "
             << truncate_n << "\n";
        text << "  counit-tau identity: " << detail::mark(ct.ok) << " (" << ct.checked
             << " pairs)\n";
        text << "  retraction:          " << detail::mark(rr.ok) << "\n";
        for (const auto& id : rr.identities)
          text << "    " << id.name << ": " << detail::mark(id.ok) << "\n";
      } else {
        const Subspace h = detail::resolve_levi(input, levi_idx);
        const LeviReport levi = verify_levi(L, h);
        if (!levi.ok) throw PreconditionError("Levi verification failed: " + levi.failure);
        const LeviSmashReport iso = levi_smash_iso_check(levi, truncate_n);
        const auto act =
            ModuleAlgebraAction::adjoint(*levi.adapted, levi.dim_radical, truncate_n);
        const CheckReport ct = check_counit_tau(act);
        all_ok = iso.ok && ct.ok;
        jr["levi_iso"] = {{"ok", iso.ok},
                          {"bijection_ok", iso.bijection_ok},
                          {"multiplicative_ok", iso.multiplicative_ok},
                          {"pairs_checked", iso.pairs_checked},
                          {"basis_size", iso.basis_size}};
        if (!iso.counterexample.empty()) jr["levi_iso"]["counterexample"] = iso.counterexample;
        jr["counit_tau"] = {{"ok", ct.ok}, {"checked", ct.checked}};
        text << L.name() << ": U(r) # U(h) vs U(g) at N = " << truncate_n << "\n";
        text << "  basis bijection:     " << detail::mark(iso.bijection_ok) << " ("
             << iso.basis_size << " monomials)\n";
        text << "  multiplicativity:    " << detail::mark(iso.multiplicative_ok) << " ("
             << iso.pairs_checked << " pairs)\n";
        text << "  counit-tau identity: " << detail::mark(ct.ok) << " (" << ct.checked
             << " pairs)\n";
      }
      rep["result"] = std::move(jr);
      result.code = all_ok ? kExitOk : kExitCheckFailed;
    }
  } catch (const InputError& e) {
    result.code = kExitInput;
    rep["error"] = {{"kind", "input"}, {"message", e.what()}};
    text.str("");
    text << "input error: " << e.what() << "\n";
  } catch (const TruncationOverflow& e) {
    result.code = kExitInput;
    rep["error"] = {{"kind", "truncation"},
                    {"message", e.what()},
                    {"needed_degree", e.needed_degree}};
    text.str("");
    text << "input error: " << e.what() << "; raise --truncate to at least "
         << e.needed_degree << "\n";
  } catch (const PreconditionError& e) {
    result.code = kExitValidation;
    rep["error"] = {{"kind", "precondition"}, {"message", e.what()}};
    text.str("");
    text << "validation error: " << e.what() << "\n";
  } catch (const InternalCheckError& e) {
    result.code = kExitCheckFailed;
    rep["error"] = {{"kind", "internal"}, {"message", e.what()}};
    text.str("");
    text << "internal check failed: " << e.what() << "\n";
  }

  result.report = std::move(rep);
  result.text = text.str();
  return result;
}

}  // namespace cli
}  // namespace lieamk
