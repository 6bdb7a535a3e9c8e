// poskit command-line front end: JSON in, JSON report out.
// Exit codes: 0 ok, 1 mathematical violation, 2 malformed input.

#include "poskit/acceptance.hpp"
#include "poskit/json_io.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

namespace {

using namespace poskit;

constexpr const char* kVersion = "0.1.0";

struct Outcome {
  bool ok = true;
  json payload = json::object();
};

// Shared state filled in by CLI11 before the selected handler runs.
struct Context {
  std::string input = "-";
  std::optional<std::uint64_t> seed;
  std::string command;

  std::uint64_t effective_seed() const {
    if (seed) return *seed;
    if (const char* env = std::getenv("POSKIT_SEED")) {
      try {
        std::size_t used = 0;
        const auto v = std::stoull(env, &used);
        if (used == std::string(env).size()) return v;
      } catch (const std::exception&) {
      }
      throw InputError("POSKIT_SEED: expected a non-negative integer");
    }
    return 0;
  }
};

json read_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("--input: cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("input: malformed JSON: ") + e.what());
  }
}

// A bare value, or the named field of an object.
const json& field(const json& j, const std::string& name) {
  if (j.is_object()) {
    if (!j.contains(name)) throw InputError(name + ": missing field");
    return j.at(name);
  }
  return j;
}

RatMatrix input_matrix(const json& j, const std::string& name = "matrix") {
  return matrix_from_json(field(j, name), name);
}

std::vector<std::size_t> parse_index_list(const std::string& text, const std::string& flag) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw InputError(flag + ": expected a comma-separated list of non-negative integers, got '" + text + "'");
    }
  }
  if (out.empty()) throw InputError(flag + ": empty list");
  return out;
}

json to_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

json to_json(const std::vector<std::vector<long>>& m) {
  json out = json::array();
  for (const auto& row : m) out.push_back(row);
  return out;
}

json matrices_to_json(const std::vector<RatMatrix>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(poskit::to_json(m));
  return out;
}

// ---- tp -------------------------------------------------------------------

Outcome tp_check(const Context& ctx) {
  const RatMatrix m = input_matrix(read_input(ctx.input));
  const bool tp = is_totally_positive(m);
  return {tp, {{"totally_positive", tp}, {"totally_nonnegative", is_totally_nonnegative(m)}}};
}

Outcome tp_u_check(const Context& ctx) {
  const RatMatrix u = input_matrix(read_input(ctx.input));
  const bool pos = is_U_positive(u);
  return {pos, {{"u_positive", pos}}};
}

Outcome tp_param(const Context& ctx) {
  const json in = read_input(ctx.input);
  if (!in.is_object()) throw InputError("input: expected an object with \"word\" and \"params\"");
  ReducedWord w;
  const json& word = field(in, "word");
  if (!word.is_array()) throw InputError("word: expected an array of letters");
  for (const auto& l : word) {
    if (!l.is_number_integer() || l.get<long>() < 1) throw InputError("word: letters are positive integers");
    w.letters.push_back(l.get<std::size_t>());
  }
  std::size_t max_letter = 0;
  for (auto l : w.letters) max_letter = std::max(max_letter, l);
  w.n = in.contains("n") ? in.at("n").get<std::size_t>() : max_letter + 1;
  if (max_letter >= w.n) throw InputError("word: letter " + std::to_string(max_letter) + " out of range for n");
  const json& params = field(in, "params");
  if (!params.is_array()) throw InputError("params: expected an array");
  std::vector<Rational> p;
  for (std::size_t i = 0; i < params.size(); ++i) p.push_back(rational_from_json(params[i], "params[" + std::to_string(i) + "]"));
  if (p.size() != w.letters.size()) throw InputError("params: count differs from word length");
  const RatMatrix m = param_F(w, p);
  return {true, {{"matrix", poskit::to_json(m)}, {"u_positive", is_U_positive(m)}}};
}

Outcome tp_whitney(const Context& ctx) {
  const RatMatrix m = input_matrix(read_input(ctx.input));
  const auto f = whitney_factorize(m);
  return {true,
          {{"lower", poskit::to_json(f.lower)},
           {"diag", poskit::to_json(f.diag)},
           {"upper", poskit::to_json(f.upper)},
           {"upper_u_positive", is_U_positive(f.upper)}}};
}

Outcome tp_spectrum(const Context& ctx, double tol) {
  if (!(tol > 0)) throw InputError("--tol: must be positive");
  const RatMatrix m = input_matrix(read_input(ctx.input));
  if (!m.square()) throw InputError("matrix: must be square");
  const bool ok = gk_spectrum_check(m, tol);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(to_eigen(m), false);
  json ev = json::array();
  for (const auto& z : solver.eigenvalues()) ev.push_back(json::array({z.real(), z.imag()}));
  return {ok, {{"distinct_positive_real", ok}, {"eigenvalues", ev}, {"tol", tol}}};
}

// ---- flags ----------------------------------------------------------------

std::vector<Flag> input_flags(const json& in, std::size_t count) {
  const json& fl = field(in, "flags");
  if (!fl.is_array() || fl.size() != count) throw InputError("flags: expected " + std::to_string(count) + " basis matrices");
  std::vector<Flag> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::string name = "flags[" + std::to_string(i) + "]";
    const RatMatrix b = matrix_from_json(fl[i], name);
    if (!b.square() || det(b) == 0) throw InputError(name + ": basis must be square and invertible");
    out.emplace_back(b);
  }
  for (const auto& f : out)
    if (f.dim() != out[0].dim()) throw InputError("flags: dimensions differ");
  return out;
}

RatMatrix input_unitriangular(const json& in) {
  const RatMatrix u = matrix_from_json(in.at("u"), "u");
  if (!is_unitriangular_upper(u)) throw InputError("u: must be upper unitriangular");
  return u;
}

// {"u": M} stands for the triple (F, E, uE); {"flags": [...]} is taken as given.
FlagTriple input_triple(const json& in, bool gw_order) {
  if (in.is_object() && in.contains("u")) {
    const RatMatrix u = input_unitriangular(in);
    const std::size_t n = u.rows();
    const Flag e = standard_descending(n), f = standard_ascending(n), ue = act(u, e);
    return gw_order ? FlagTriple{e, ue, f} : FlagTriple{f, e, ue};
  }
  auto fl = input_flags(in, 3);
  return {fl[0], fl[1], fl[2]};
}

Outcome flags_transverse(const Context& ctx) {
  const auto fl = input_flags(read_input(ctx.input), 2);
  const bool t = is_transverse(fl[0], fl[1]);
  return {t, {{"transverse", t}}};
}

Outcome flags_generic(const Context& ctx) {
  const bool g = is_generic(input_triple(read_input(ctx.input), false));
  return {g, {{"generic", g}}};
}

Outcome flags_ratio(const Context& ctx, const std::string& abc) {
  const auto v = parse_index_list(abc, "--abc");
  if (v.size() != 3) throw InputError("--abc: expected three entries a,b,c");
  const FlagTriple t = input_triple(read_input(ctx.input), false);
  const std::size_t n = t.first.dim();
  if (v[0] < 1 || v[1] < 1 || v[2] < 1 || v[0] + v[1] + v[2] != n)
    throw InputError("--abc: need a, b, c >= 1 with a + b + c = " + std::to_string(n));
  const Rational r = triple_ratio(t.first, t.second, t.third, v[0], v[1], v[2]);
  return {true, {{"abc", v}, {"ratio", to_string(r)}}};
}

Outcome flags_positive(const Context& ctx, const std::string& method) {
  const json in = read_input(ctx.input);
  if (method == "bd") {
    const bool p = is_BD_positive(input_triple(in, false));
    return {p, {{"method", "bd"}, {"positive", p}}};
  }
  const auto w = gw_witness(input_triple(in, true));
  json payload{{"method", "gw"}, {"positive", w.has_value()}};
  if (w) {
    payload["u"] = poskit::to_json(w->u);
    payload["signs"] = w->signs;
  }
  return {w.has_value(), payload};
}

// ---- maslov ---------------------------------------------------------------

std::vector<Lagrangian> input_lagrangians(const json& in, std::size_t count) {
  const json& ls = field(in, "lagrangians");
  if (!ls.is_array() || ls.size() != count) throw InputError("lagrangians: expected " + std::to_string(count) + " bases");
  std::vector<Lagrangian> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::string name = "lagrangians[" + std::to_string(i) + "]";
    const RatMatrix b = matrix_from_json(ls[i], name);
    if (b.rows() != 2 * b.cols() || rank(b) != b.cols() || !is_lagrangian(b))
      throw InputError(name + ": expected a full-rank 2n x n Lagrangian basis");
    out.emplace_back(b);
  }
  for (const auto& l : out)
    if (l.half_dim() != out[0].half_dim()) throw InputError("lagrangians: dimensions differ");
  return out;
}

Outcome maslov_index_cmd(const Context& ctx) {
  const auto l = input_lagrangians(read_input(ctx.input), 3);
  const long tau = maslov_index(l[0], l[1], l[2]);
  const auto sig = signature(kashiwara_gram(l[0], l[1], l[2]));
  return {true, {{"tau", tau}, {"signature", {sig.positive, sig.negative, sig.zero}}}};
}

Outcome maslov_normal_form(const Context& ctx) {
  const auto l = input_lagrangians(read_input(ctx.input), 3);
  const NormalForm nf = normal_form(l[0], l[1], l[2]);
  return {true,
          {{"tau", maslov_index(l[0], l[1], l[2])},
           {"k", nf.k},
           {"basis", poskit::to_json(nf.basis)},
           {"epsilon", nf.epsilon},
           {"weight", to_json(nf.weight)}}};
}

Outcome maslov_chain(const Context& ctx) {
  const auto l = input_lagrangians(read_input(ctx.input), 4);
  const long d = chain_rule_defect(l[0], l[1], l[2], l[3]);
  return {d == 0,
          {{"defect", d},
           {"tau_123", maslov_index(l[0], l[1], l[2])},
           {"tau_124", maslov_index(l[0], l[1], l[3])},
           {"tau_234", maslov_index(l[1], l[2], l[3])},
           {"tau_314", maslov_index(l[2], l[0], l[3])}}};
}

// ---- liealg / theta -------------------------------------------------------

struct FamilyOptions {
  std::string family = "so";
  std::size_t p = 2, q = 3, n = 3;

  LieAlgebraSpec spec() const {
    try {
      if (family == "sl") return LieAlgebraSpec::sl(n);
      if (family == "sp") return LieAlgebraSpec::sp(n);
      if (family == "so") return LieAlgebraSpec::so(p, q);
    } catch (const DomainError& e) {
      throw InputError(std::string("--family: ") + e.what());
    }
    throw InputError("--family: expected sl, sp or so");
  }
};

void add_family_options(CLI::App* cmd, FamilyOptions& f) {
  cmd->add_option("--family", f.family, "sl, sp or so")->capture_default_str();
  cmd->add_option("--p", f.p, "p for so(p,q)")->capture_default_str();
  cmd->add_option("--q", f.q, "q for so(p,q)")->capture_default_str();
  cmd->add_option("--n", f.n, "matrix size for sl(n); half size for sp(2n)")->capture_default_str();
}

json root_to_json(const RestrictedRoot& r) { return {{"coeffs", r.coeffs}, {"multiplicity", r.multiplicity}}; }

Outcome liealg_roots(const FamilyOptions& f) {
  const auto rd = restricted_roots(f.spec());
  json roots = json::array(), simple = json::array();
  for (const auto& r : rd.roots) roots.push_back(root_to_json(r));
  for (const auto& r : rd.simple) simple.push_back(root_to_json(r));
  return {true,
          {{"algebra", rd.spec.name()},
           {"dim", dim(rd.spec)},
           {"real_rank", rd.a_basis.size()},
           {"centralizer_dim", rd.zero_space_basis.size()},
           {"roots", roots},
           {"simple_roots", simple},
           {"cartan_matrix", to_json(cartan_matrix(rd))},
           {"dynkin", rd.dynkin},
           {"split", is_split(rd)}}};
}

Outcome liealg_killing(const Context& ctx, const FamilyOptions& f, bool pair) {
  const LieAlgebraSpec spec = f.spec();
  if (pair) {
    const json in = read_input(ctx.input);
    const RatMatrix x = input_matrix(in, "x"), y = input_matrix(in, "y");
    for (const auto* m : {&x, &y})
      if (m->rows() != spec.matrix_size() || m->cols() != spec.matrix_size() || !membership(*m, spec))
        throw InputError(std::string(m == &x ? "x" : "y") + ": not an element of " + spec.name());
    const Rational k = killing(x, y, spec), kad = killing_via_ad(x, y, spec);
    return {k == kad, {{"killing", to_string(k)}, {"killing_via_ad", to_string(kad)}}};
  }
  const auto basis = lie_basis(spec);
  const RatMatrix gram = killing_gram(basis, spec);
  const auto sig = signature(gram);
  return {true,
          {{"algebra", spec.name()},
           {"basis", matrices_to_json(basis)},
           {"gram", poskit::to_json(gram)},
           {"signature", {sig.positive, sig.negative, sig.zero}}}};
}

Outcome liealg_split(const Context& ctx, const FamilyOptions& f, bool element) {
  const LieAlgebraSpec spec = f.spec();
  json payload{{"algebra", spec.name()}, {"split", is_split(spec)}};
  if (element) {
    const RatMatrix x = input_matrix(read_input(ctx.input), "x");
    if (x.rows() != spec.matrix_size() || x.cols() != spec.matrix_size() || !membership(x, spec))
      throw InputError("x: not an element of " + spec.name());
    const auto parts = cartan_split(x, spec);
    payload["compact"] = poskit::to_json(parts.compact);
    payload["noncompact"] = poskit::to_json(parts.noncompact);
  }
  return {true, payload};
}

ThetaChoice parse_theta(const std::string& text, const RootDecomposition& rd) {
  if (text == "all") return ThetaChoice::all(rd);
  ThetaChoice t{parse_index_list(text, "--theta")};
  for (auto i : t.indices)
    if (i < 1 || i > rd.simple.size())
      throw InputError("--theta: index " + std::to_string(i) + " outside 1.." + std::to_string(rd.simple.size()));
  return t;
}

Outcome theta_check(const FamilyOptions& f, const std::string& theta_text) {
  const auto rd = restricted_roots(f.spec());
  const ThetaReport r = admits_theta_positive(rd, parse_theta(theta_text, rd));
  json reasons = json::array();
  for (const auto& b : r.reasons)
    reasons.push_back({{"index", b.index},
                       {"root", b.root},
                       {"multiplicity", b.multiplicity},
                       {"one_dimensional", b.one_dimensional},
                       {"even_cartan", b.even_cartan},
                       {"reason", b.reason}});
  json weights = json::array();
  for (const auto& w : r.weight_spaces) weights.push_back({{"weight", to_json(w.weight)}, {"dim", w.basis.size()}});
  return {r.admits,
          {{"algebra", rd.spec.name()},
           {"theta", r.theta.indices},
           {"admits", r.admits},
           {"reasons", reasons},
           {"dim_u_theta", r.u_theta_basis.size()},
           {"dim_l_theta", r.l_theta_basis.size()},
           {"dim_z_theta", r.z_theta_basis.size()},
           {"weight_spaces", weights},
           {"cone", r.cone}}};
}

Outcome theta_f1212(const std::vector<std::string>& args) {
  if (args.size() != 4) throw InputError("f1212: expected four rationals x v y w");
  std::vector<Rational> v;
  const char* names[] = {"x", "v", "y", "w"};
  for (std::size_t i = 0; i < 4; ++i) {
    try {
      v.push_back(parse_rational(args[i]));
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string(names[i]) + ": " + e.what());
    }
  }
  return {true, {{"matrix", poskit::to_json(so23_F1212(v[0], v[1], v[2], v[3]))}}};
}

Outcome theta_cone_test(const Context& ctx, const FamilyOptions& f, const std::string& theta_text, std::size_t trials,
                        double tol) {
  if (!(tol > 0)) throw InputError("--tol: must be positive");
  const auto rd = restricted_roots(f.spec());
  const ThetaChoice theta = parse_theta(theta_text, rd);
  const auto res = cone_invariance_sample(rd.spec, theta, trials, ctx.effective_seed(), tol);
  return {res.passed,
          {{"algebra", rd.spec.name()},
           {"theta", theta.indices},
           {"passed", res.passed},
           {"trials", res.trials},
           {"exact_trials", res.exact_trials},
           {"failures", res.failures}}};
}

// ---- siegel ---------------------------------------------------------------

Outcome siegel_act(const Context& ctx, const Tolerance& tol) {
  const json in = read_input(ctx.input);
  const RMatrix g = real_matrix_from_json(field(in, "g"), "g");
  const CMatrix z = complex_matrix_from_json(field(in, "z"), "z");
  if (g.rows() != g.cols() || g.rows() != 2 * z.rows() || z.rows() != z.cols())
    throw InputError("g: expected a 2n x 2n matrix for an n x n point z");
  const CMatrix w = mobius(g, z, tol);
  return {true, {{"result", poskit::to_json(w)}, {"in_siegel", in_siegel(w, tol)}}};
}

Outcome siegel_cayley(const Context& ctx, const Tolerance& tol, bool inverse_map) {
  const json in = read_input(ctx.input);
  if (inverse_map) {
    const CMatrix w = complex_matrix_from_json(field(in, "w"), "w");
    if (w.rows() != w.cols()) throw InputError("w: must be square");
    if (!in_bounded(w, tol)) throw PreconditionError("cayley_inv: W is not in the bounded domain");
    return {true, {{"result", poskit::to_json(cayley_inv(w, tol))}}};
  }
  const CMatrix z = complex_matrix_from_json(field(in, "z"), "z");
  if (z.rows() != z.cols()) throw InputError("z: must be square");
  if (!in_siegel(z, tol)) throw PreconditionError("cayley: Z is not in the Siegel space");
  const CMatrix w = cayley(z);
  return {true, {{"result", poskit::to_json(w)}, {"in_bounded", in_bounded(w, tol)}}};
}

Outcome siegel_classify(const Context& ctx, const Tolerance& tol) {
  const CMatrix w = complex_matrix_from_json(field(read_input(ctx.input), "w"), "w");
  if (w.rows() != w.cols()) throw InputError("w: must be square");
  const auto c = classify_bounded(w, tol);
  return {true, {{"position", to_string(c.position)}, {"rank", c.rank}}};
}

// ---- accept ---------------------------------------------------------------

Outcome accept(const Context& ctx, const std::string& only, double eps) {
  AcceptanceOptions opt;
  try {
    opt.tol = Tolerance(eps);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("--eps: ") + e.what());
  }
  opt.seed = ctx.effective_seed();
  opt.only = only;
  std::vector<CriterionResult> results;
  try {
    results = run_acceptance(opt);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("--only: ") + e.what());
  }
  json criteria = json::array();
  bool all = true;
  for (const auto& r : results) {
    criteria.push_back(
        {{"id", r.id}, {"name", r.name}, {"group", r.group}, {"passed", r.passed}, {"detail", r.detail}});
    all = all && r.passed;
  }
  return {all, {{"criteria", criteria}, {"all_passed", all}}};
}

json report(const Context& ctx, const std::string& status, json payload) {
  std::uint64_t seed = 0;
  try {
    seed = ctx.effective_seed();
  } catch (const InputError&) {
  }
  return {{"status", status},
          {"payload", std::move(payload)},
          {"provenance", {{"command", ctx.command}, {"seed", seed}, {"version", kVersion}}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact positivity computations: total positivity, flags, Maslov index, restricted roots, Siegel space"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Context ctx;
  std::function<Outcome()> handler;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc, bool reads_input) {
    CLI::App* cmd = parent->add_subcommand(name, desc);
    if (reads_input) cmd->add_option("--input,-i", ctx.input, "JSON input file, - for stdin")->capture_default_str();
    return cmd;
  };
  auto on = [&](CLI::App* cmd, std::function<Outcome()> f) {
    const std::string path = (cmd->get_parent() && cmd->get_parent() != &app ? cmd->get_parent()->get_name() + " " : "") +
                             cmd->get_name();
    cmd->callback([&, f, path] {
      ctx.command = path;
      handler = f;
    });
  };

  double tol = 1e-9;
  double eps = 1e-9;
  std::string abc = "1,1,1", method = "gw", theta = "all", cone_theta = "1", only;
  std::size_t trials = 100;
  bool pair = false, element = false, inverse_map = false;
  std::vector<std::string> f1212_args;
  FamilyOptions fam;

  auto* tp = app.add_subcommand("tp", "total positivity")->require_subcommand(1);
  on(leaf(tp, "check", "all minors positive", true), [&] { return tp_check(ctx); });
  on(leaf(tp, "u-check", "upper unitriangular positivity", true), [&] { return tp_u_check(ctx); });
  on(leaf(tp, "param", "product of generators along a word", true), [&] { return tp_param(ctx); });
  on(leaf(tp, "whitney", "lower * diagonal * upper factorization", true), [&] { return tp_whitney(ctx); });
  auto* spectrum = leaf(tp, "spectrum", "distinct positive real eigenvalues", true);
  spectrum->add_option("--tol", tol, "eigenvalue tolerance")->capture_default_str();
  on(spectrum, [&] { return tp_spectrum(ctx, tol); });

  auto* flags = app.add_subcommand("flags", "complete flags")->require_subcommand(1);
  on(leaf(flags, "transverse", "pairwise transversality", true), [&] { return flags_transverse(ctx); });
  on(leaf(flags, "generic", "genericity of a triple", true), [&] { return flags_generic(ctx); });
  auto* ratio = leaf(flags, "ratio", "triple ratio", true);
  ratio->add_option("--abc", abc, "a,b,c with a + b + c = n")->capture_default_str();
  on(ratio, [&] { return flags_ratio(ctx, abc); });
  auto* positive = leaf(flags, "positive", "positivity of a triple", true);
  positive->add_option("--method", method, "gw or bd")
      ->check(CLI::IsMember({"gw", "bd"}))
      ->capture_default_str();
  on(positive, [&] { return flags_positive(ctx, method); });

  auto* maslov = app.add_subcommand("maslov", "Lagrangian triples")->require_subcommand(1);
  on(leaf(maslov, "index", "Kashiwara index", true), [&] { return maslov_index_cmd(ctx); });
  on(leaf(maslov, "normal-form", "normal form of a transverse triple", true), [&] { return maslov_normal_form(ctx); });
  on(leaf(maslov, "chain", "cocycle defect of a quadruple", true), [&] { return maslov_chain(ctx); });

  auto* liealg = app.add_subcommand("liealg", "classical real Lie algebras")->require_subcommand(1);
  auto* roots = leaf(liealg, "roots", "restricted roots", false);
  add_family_options(roots, fam);
  on(roots, [&] { return liealg_roots(fam); });
  auto* killing_cmd = leaf(liealg, "killing", "Killing form", true);
  add_family_options(killing_cmd, fam);
  killing_cmd->add_flag("--pair", pair, "read {\"x\", \"y\"} and compare both formulas instead of the basis Gram matrix");
  on(killing_cmd, [&] { return liealg_killing(ctx, fam, pair); });
  auto* split = leaf(liealg, "split", "splitness; with --element, the Cartan split of x", true);
  add_family_options(split, fam);
  split->add_flag("--element", element, "read {\"x\"} and split it into compact and noncompact parts");
  on(split, [&] { return liealg_split(ctx, fam, element); });

  auto* theta_cmd = app.add_subcommand("theta", "Theta-positivity")->require_subcommand(1);
  auto* check = leaf(theta_cmd, "check", "admissibility of Theta", false);
  add_family_options(check, fam);
  check->add_option("--theta", theta, "comma-separated simple root indices, or all")->capture_default_str();
  on(check, [&] { return theta_check(fam, theta); });
  auto* f1212 = leaf(theta_cmd, "f1212", "F1212 product in SO(2,3)", false);
  f1212->add_option("values", f1212_args, "x v y w")->expected(4)->required();
  on(f1212, [&] { return theta_f1212(f1212_args); });
  auto* cone = leaf(theta_cmd, "cone-test", "seeded cone invariance trials", false);
  add_family_options(cone, fam);
  cone->add_option("--theta", cone_theta, "simple root indices (so(2,3): 1, sp(4): 2)")->capture_default_str();
  cone->add_option("--trials", trials, "number of trials")->capture_default_str();
  cone->add_option("--seed", ctx.seed, "random seed (default POSKIT_SEED or 0)");
  cone->add_option("--tol", tol, "numeric tolerance")->capture_default_str();
  on(cone, [&] { return theta_cone_test(ctx, fam, cone_theta, trials, tol); });

  auto* siegel = app.add_subcommand("siegel", "Siegel space and its bounded model")->require_subcommand(1);
  auto* act_cmd = leaf(siegel, "act", "g(Z) = (AZ + B)(CZ + D)^-1", true);
  act_cmd->add_option("--eps", eps, "tolerance")->capture_default_str();
  on(act_cmd, [&] { return siegel_act(ctx, Tolerance(eps)); });
  auto* cay = leaf(siegel, "cayley", "Cayley transform", true);
  cay->add_option("--eps", eps, "tolerance")->capture_default_str();
  cay->add_flag("--inverse", inverse_map, "map {\"w\"} back to the Siegel space");
  on(cay, [&] { return siegel_cayley(ctx, Tolerance(eps), inverse_map); });
  auto* classify = leaf(siegel, "classify", "interior, boundary of rank r, or Shilov", true);
  classify->add_option("--eps", eps, "tolerance")->capture_default_str();
  on(classify, [&] { return siegel_classify(ctx, Tolerance(eps)); });

  auto* acc = leaf(&app, "accept", "run the acceptance criteria", false);
  acc->add_option("--seed", ctx.seed, "random seed (default POSKIT_SEED or 0)");
  acc->add_option("--only", only, "exactmat, totpos, flags, maslov, liealg, theta or siegel");
  acc->add_option("--eps", eps, "tolerance")->capture_default_str();
  on(acc, [&] { return accept(ctx, only, eps); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const Outcome out = handler();
    std::cout << report(ctx, out.ok ? "ok" : "violation", out.payload).dump(2) << "\n";
    return out.ok ? 0 : 1;
  } catch (const PreconditionError& e) {
    std::cout << report(ctx, "violation", {{"reason", e.what()}}).dump(2) << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cout << report(ctx, "violation", {{"reason", e.what()}}).dump(2) << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cout << report(ctx, "error", {{"reason", e.what()}}).dump(2) << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: input: " << e.what() << "\n";
    std::cout << report(ctx, "error", {{"reason", e.what()}}).dump(2) << "\n";
    return 2;
  }
}
