// Command-line driver. Exit codes: 0 success, 2 parse/usage error,
// 3 mathematical inconsistency (failed verification, pole, singular solve).

#include "uqc/central.hpp"
#include "uqc/error.hpp"
#include "uqc/json_io.hpp"
#include "uqc/pairing.hpp"
#include "uqc/parse.hpp"
#include "uqc/rep.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace uqc;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_parse = 2;
constexpr int exit_math = 3;

struct UsageError : Error {
  using Error::Error;
};

struct Config {
  std::string format;  // empty: per-command default
  std::string q;
  std::string out;
  std::string rep;
  bool compare = false;
  bool parallel = false;
};

class Output {
public:
  explicit Output(const Config& cfg, const char* default_format) : cfg_(cfg) {
    format_ = cfg.format.empty() ? default_format : cfg.format;
  }
  const std::string& format() const { return format_; }
  std::ostream& stream() { return buf_; }
  void json(const nlohmann::json& j) { buf_ << j.dump(2) << '\n'; }

  void flush() {
    if (cfg_.out.empty()) {
      std::cout << buf_.str();
      return;
    }
    std::ofstream f(cfg_.out, std::ios::binary);
    if (!f)
      throw UsageError("cannot open output file " + cfg_.out);
    f << buf_.str();
  }

private:
  const Config& cfg_;
  std::string format_;
  std::ostringstream buf_;
};

std::optional<mpq_class> specialisation(const Config& cfg) {
  if (cfg.q.empty())
    return std::nullopt;
  mpq_class q0 = parse_rational(cfg.q);
  if (q0 == 0 || q0 == 1 || q0 == -1)
    throw UsageError("--q " + cfg.q + " is not allowed: q must avoid 0 and +-1 (normalization pole)");
  return q0;
}

void require_format(const Output& out, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (out.format() == f)
      return;
  throw UsageError("format '" + out.format() + "' is not supported by this command");
}

void emit_scalar(Output& out, const QRat& v, const Config& cfg) {
  require_format(out, {"text", "json", "csv"});
  auto q0 = specialisation(cfg);
  std::string exact = v.to_string();
  std::optional<std::string> special;
  if (q0)
    special = v.eval(*q0).get_str();
  if (out.format() == "json") {
    nlohmann::json j = {{"value", exact}};
    if (special)
      j["q0"] = q0->get_str(), j["specialized"] = *special;
    out.json(j);
  } else {
    out.stream() << (special ? *special : exact) << '\n';
  }
}

void emit_matrix(Output& out, const QMatrix& m, const Config& cfg) {
  auto q0 = specialisation(cfg);
  if (out.format() == "json") {
    out.json(q0 ? nlohmann::json{{"q0", q0->get_str()}, {"matrix", to_json(m.eval(*q0))}}
                : nlohmann::json{{"matrix", to_json(m)}});
  } else if (out.format() == "csv") {
    out.stream() << (q0 ? to_csv(m.eval(*q0)) : to_csv(m));
  } else {
    require_format(out, {"text"});
    if (q0) {
      for (const auto& row : m.eval(*q0)) {
        for (std::size_t j = 0; j < row.size(); ++j)
          out.stream() << (j ? "  " : "") << row[j].get_str();
        out.stream() << '\n';
      }
    } else {
      for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
          out.stream() << (j ? "  " : "") << m(i, j).to_string();
        out.stream() << '\n';
      }
    }
  }
}

Weight parse_root_weight(const std::string& text) {
  const Weight nu = parse_weight(text);
  try {
    words_of_weight(nu);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  return nu;
}

BorelElem parse_side_element(const std::string& text, Side side, const char* what) {
  BorelElem x = parse_element(text, side);
  if (x.side() != side)
    throw UsageError(std::string(what) + " must be a " +
                     (side == Side::plus ? "plus-side (e) element" : "minus-side (f) element"));
  return x;
}

int cmd_pair(const Config& cfg, const std::string& y, const std::string& x) {
  Output out(cfg, "text");
  emit_scalar(out, pair(parse_side_element(y, Side::minus, "first argument"),
                        parse_side_element(x, Side::plus, "second argument")),
              cfg);
  out.flush();
  return exit_ok;
}

int cmd_gram(const Config& cfg, const std::string& nu_text) {
  Output out(cfg, "json");
  const GramBlock g = gram(parse_root_weight(nu_text));
  if (out.format() == "json" && cfg.q.empty()) {
    out.json(to_json(g));
  } else if (out.format() == "text") {
    out.stream() << "nu " << g.nu.to_string() << "  rank " << g.rank << '\n';
    out.stream() << "words";
    for (const auto& w : g.plus_words)
      out.stream() << "  " << word_to_string(Side::plus, w);
    out.stream() << '\n';
    emit_matrix(out, g.matrix, cfg);
  } else {
    emit_matrix(out, g.matrix, cfg);
  }
  out.flush();
  return exit_ok;
}

int cmd_dual(const Config& cfg, const std::string& nu_text, const std::vector<std::string>& words) {
  Output out(cfg, "json");
  require_format(out, {"json", "text"});
  const Weight nu = parse_root_weight(nu_text);
  std::vector<Word> basis;
  for (const auto& w : words)
    basis.push_back(parse_word(w, Side::plus));
  const auto duals = dual_basis(nu, basis);
  if (out.format() == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& d : duals)
      arr.push_back(to_json(d));
    out.json({{"nu", to_json(nu)}, {"duals", arr}});
  } else {
    for (std::size_t i = 0; i < duals.size(); ++i)
      out.stream() << '(' << word_to_string(Side::plus, basis[i]) << ")* = " << duals[i].to_string()
                   << '\n';
  }
  out.flush();
  return exit_ok;
}

int cmd_serre_check(const Config& cfg) {
  Output out(cfg, "text");
  require_format(out, {"json", "text"});
  static const char* names[] = {"e quadratic", "e cubic", "f quadratic", "f cubic"};
  bool all = true;
  nlohmann::json arr = nlohmann::json::array();
  const auto serre = serre_elements();
  for (std::size_t i = 0; i < serre.size(); ++i) {
    const bool ok = default_pairing().in_radical(serre[i]);
    all = all && ok;
    arr.push_back({{"name", names[i]}, {"element", serre[i].to_string()}, {"in_radical", ok}});
    if (out.format() == "text")
      out.stream() << (ok ? "PASS " : "FAIL ") << names[i] << ": " << serre[i].to_string() << '\n';
  }
  if (out.format() == "json")
    out.json({{"serre", arr}, {"all_in_radical", all}});
  out.flush();
  return all ? exit_ok : exit_math;
}

int cmd_central(const Config& cfg) {
  Output out(cfg, "json");
  CentralOptions opts;
  opts.parallel = cfg.parallel;
  const CentralElem c = central_element(opts);
  if (!cfg.rep.empty()) {
    const QMatrix m = evaluate(c, representation(cfg.rep));
    if (auto s = m.scalar_value()) {
      emit_scalar(out, *s, cfg);
    } else {
      emit_matrix(out, m, cfg);
    }
    out.flush();
    return exit_ok;
  }
  require_format(out, {"json", "text"});
  std::optional<ComparisonReport> cmp;
  if (cfg.compare)
    cmp = compare_with_theorem(c);
  if (out.format() == "json") {
    nlohmann::json j = {{"element", to_json(c)}};
    if (cmp) {
      nlohmann::json blocks = nlohmann::json::array();
      for (const auto& b : cmp->blocks)
        blocks.push_back({{"k", to_json(b.k)}, {"nu", to_json(b.nu)}, {"equal", b.equal}});
      j["comparison"] = {{"verdict", cmp->verdict()},
                         {"evaluation16_equal", cmp->evaluation16_equal},
                         {"blockwise_equal", cmp->blockwise_equal},
                         {"blocks", blocks}};
    }
    out.json(j);
  } else {
    out.stream() << c.to_string();
    if (cmp)
      out.stream() << "verdict: " << cmp->verdict() << '\n';
  }
  out.flush();
  return cmp && !cmp->match() ? exit_math : exit_ok;
}

int cmd_verify(const Config& cfg) {
  Output out(cfg, "text");
  require_format(out, {"json", "text"});
  std::vector<std::string> names = {"dim4", "dim5", "dim16"};
  if (!cfg.rep.empty())
    names = {cfg.rep};
  bool all = true;
  nlohmann::json reps = nlohmann::json::array();
  const CentralElem thm = theorem_element();
  for (const auto& name : names) {
    const Representation r = representation(name);
    nlohmann::json rel = nlohmann::json::array();
    for (const auto& chk : relation_suite(r)) {
      all = all && chk.holds;
      rel.push_back({{"name", chk.name}, {"holds", chk.holds}});
      if (out.format() == "text")
        out.stream() << (chk.holds ? "PASS " : "FAIL ") << name << ": " << chk.name << '\n';
    }
    const QMatrix c = evaluate(thm, r);
    const bool central = centrality_check(c, r);
    all = all && central;
    nlohmann::json entry = {{"name", name}, {"dim", r.dim}, {"relations", rel}, {"central", central}};
    const auto scalar = c.scalar_value();
    entry["scalar"] = scalar ? nlohmann::json(scalar->to_string()) : nlohmann::json(nullptr);
    if (out.format() == "text") {
      out.stream() << (central ? "PASS " : "FAIL ") << name << ": theorem element commutes with generators\n";
      if (scalar)
        out.stream() << "     " << name << ": theorem element acts as " << scalar->to_string() << '\n';
    }
    reps.push_back(entry);
  }
  nlohmann::json j = {{"representations", reps}};
  if (cfg.rep.empty() || cfg.rep == "dim4") {
    const Rep4Extraction ex = derive_rep4(rep16());
    nlohmann::json map = nlohmann::json::array();
    for (const auto& [a, b] : ex.index_map)
      map.push_back({a, b});
    nlohmann::json weights = nlohmann::json::array();
    for (const auto& w : ex.rep.weights)
      weights.push_back(to_json(w));
    j["dim4_extraction"] = {{"index_map", map},
                            {"kronecker_order", ex.kronecker_order},
                            {"solutions", ex.solutions},
                            {"weights", weights}};
    if (out.format() == "text") {
      out.stream() << "dim4 extraction: " << ex.solutions << " consistent index map(s), "
                   << (ex.kronecker_order ? "Kronecker order" : "not Kronecker order") << "\n";
      out.stream() << "     position -> (a,b):";
      for (std::size_t p = 0; p < ex.index_map.size(); ++p)
        out.stream() << ' ' << p << "->(" << ex.index_map[p].first << ',' << ex.index_map[p].second << ')';
      out.stream() << '\n';
    }
  }
  j["all_passed"] = all;
  if (out.format() == "json")
    out.json(j);
  out.flush();
  return all ? exit_ok : exit_math;
}

int cmd_hamiltonian(const Config& cfg) {
  Output out(cfg, "json");
  const QMatrix h = hamiltonian();
  if (out.format() != "json" || !cfg.q.empty()) {
    emit_matrix(out, h, cfg);
    out.flush();
    return exit_ok;
  }
  nlohmann::json signs = nlohmann::json::array();
  for (const auto& s : sign_report(h, default_sign_samples()))
    signs.push_back({{"entry", {s.row, s.col}}, {"sign", s.sign}, {"q0", s.q0.get_str()}});
  out.json({{"matrix", to_json(h)},
            {"scale", hamiltonian_scale().to_string()},
            {"shift", hamiltonian_shift().to_string()},
            {"sign_report", signs}});
  out.flush();
  return exit_ok;
}

int cmd_solve_ab(const Config& cfg) {
  Output out(cfg, "text");
  require_format(out, {"json", "text"});
  const ABSolution s = solve_ab();
  if (out.format() == "json")
    out.json({{"A", s.a.to_string()}, {"B", s.b.to_string()}});
  else
    out.stream() << "A = " << s.a.to_string() << "\nB = " << s.b.to_string() << '\n';
  out.flush();
  return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for a central element of U_q(so5)"};
  app.require_subcommand(1);
  Config cfg;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--q", cfg.q, "Specialise q to a rational a/b");
    sub->add_option("--out", cfg.out, "Write output to this file");
  };

  std::string y, x, nu;
  std::vector<std::string> words;

  auto* pair_cmd = app.add_subcommand("pair", "Pair a minus-side element with a plus-side element");
  pair_cmd->add_option("y", y, "f-side element, e.g. \"f2 f1\"")->required();
  pair_cmd->add_option("x", x, "e-side element, e.g. \"e1 e2\"")->required();
  add_common(pair_cmd);

  auto* gram_cmd = app.add_subcommand("gram", "Gram matrix of all words of a weight");
  gram_cmd->add_option("nu", nu, "Weight a,b")->required();
  add_common(gram_cmd);

  auto* dual_cmd = app.add_subcommand("dual", "Dual basis of a set of e-words");
  dual_cmd->add_option("nu", nu, "Weight a,b")->required();
  dual_cmd->add_option("words", words, "Basis words, e.g. \"e2 e2 e1\" or 221")->required();
  add_common(dual_cmd);

  auto* serre_cmd = app.add_subcommand("serre-check", "Check the Serre elements lie in the pairing radical");
  add_common(serre_cmd);

  auto* central_cmd = app.add_subcommand("central", "Assemble the central element");
  central_cmd->add_flag("--compare", cfg.compare, "Compare with the closed-form element");
  central_cmd->add_flag("--parallel", cfg.parallel, "Assemble weight pairs concurrently");
  central_cmd->add_option("--rep", cfg.rep, "Evaluate in a representation")
      ->check(CLI::IsMember({"dim4", "dim5", "dim16"}));
  add_common(central_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Relation suites, centrality and dim4 extraction");
  verify_cmd->add_option("--rep", cfg.rep, "Restrict to one representation")
      ->check(CLI::IsMember({"dim4", "dim5", "dim16"}));
  add_common(verify_cmd);

  auto* ham_cmd = app.add_subcommand("hamiltonian", "Normalised 16x16 action of the central element");
  add_common(ham_cmd);

  auto* ab_cmd = app.add_subcommand("solve-ab", "Solve for A and B from the commutator conditions");
  add_common(ab_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_parse;
  }

  try {
    if (*pair_cmd)
      return cmd_pair(cfg, y, x);
    if (*gram_cmd)
      return cmd_gram(cfg, nu);
    if (*dual_cmd)
      return cmd_dual(cfg, nu, words);
    if (*serre_cmd)
      return cmd_serre_check(cfg);
    if (*central_cmd)
      return cmd_central(cfg);
    if (*verify_cmd)
      return cmd_verify(cfg);
    if (*ham_cmd)
      return cmd_hamiltonian(cfg);
    if (*ab_cmd)
      return cmd_solve_ab(cfg);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return exit_parse;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_parse;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_math;
  }
  return exit_parse;
}
