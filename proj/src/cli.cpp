#include "qsym/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qsym/bases.hpp"
#include "qsym/matrix.hpp"
#include "qsym/serialize.hpp"
#include "qsym/verify.hpp"

namespace qsym::cli {

QSpec QSpec::parse(const std::string& text) {
  QSpec spec;
  if (text == "symbolic") {
    spec.kind = Kind::symbolic;
    return spec;
  }
  if (text.rfind("rho:", 0) == 0) {
    spec.kind = Kind::root_of_unity;
    try {
      spec.p = std::stoi(text.substr(4));
    } catch (const std::exception&) {
      throw std::invalid_argument("q-spec: bad rho parameter in '" + text + "'");
    }
    if (spec.p < 1) throw std::invalid_argument("q-spec: rho parameter must be positive");
    return spec;
  }
  if (text.rfind("rational:", 0) == 0) {
    spec.kind = Kind::rational;
    spec.value = Rational::from_string(text.substr(9));
    return spec;
  }
  throw std::invalid_argument("q-spec: expected symbolic, rho:<p> or rational:<a>/<b>, got '" +
                              text + "'");
}

std::string QSpec::str() const {
  switch (kind) {
    case Kind::symbolic:
      return "symbolic";
    case Kind::root_of_unity:
      return "rho:" + std::to_string(p);
    case Kind::rational:
      return "rational:" + value.str();
  }
  return "symbolic";
}

namespace {

// Run fn with the scalar value of q in the ring the spec selects.
template <class Fn>
void with_ring(const QSpec& spec, Fn&& fn) {
  switch (spec.kind) {
    case QSpec::Kind::symbolic:
      fn(q_variable());
      return;
    case QSpec::Kind::root_of_unity:
      fn(rho(spec.p));
      return;
    case QSpec::Kind::rational:
      fn(spec.value);
      return;
  }
}

IndexSet parse_set(const std::string& text, int n) {
  std::vector<int> members;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    members.push_back(std::stoi(token));
  }
  return IndexSet::from_members(n, members);
}

Composition parse_composition(const std::string& text) {
  std::vector<int> parts;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    parts.push_back(std::stoi(token));
  }
  return Composition(std::move(parts));
}

void emit(const std::string& doc, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << doc;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::invalid_argument("cannot open output file '" + out_path + "'");
  f << doc;
}

struct Options {
  std::string basis = "L";
  int n = 0;
  int p = 0;
  std::string set_text;
  std::string comp_text;
  std::string q_text = "symbolic";
  int vars = 0;
  std::string format;
  std::string method = "direct";
  std::string out_path;
  std::string poset_path;
  std::string suite = "all";
  int max_n = 6;
  int max_p = 3;
  std::string exec_text = "openmp";
  bool timings = false;
  bool kernel = false;
};

Exec parse_exec(const std::string& text) {
  if (text == "serial") return Exec::serial;
  if (text == "openmp") return Exec::openmp;
  throw std::invalid_argument("exec: expected serial or openmp");
}

int command_expand(const Options& opt, std::ostream& out) {
  const QSpec spec = QSpec::parse(opt.q_text);
  const IndexSet set = parse_set(opt.set_text, opt.n);
  std::string doc;
  with_ring(spec, [&](const auto& q) {
    using R = std::decay_t<decltype(q)>;
    QSymElement<R> f;
    if (opt.basis == "L") {
      f = fundamental(opt.n, set, q);
    } else if (opt.basis == "eta") {
      f = eta(opt.n, set, q);
    } else if (opt.basis == "U") {
      const Composition alpha = opt.comp_text.empty()
                                    ? Composition(std::vector<int>(static_cast<size_t>(opt.n), 1))
                                    : parse_composition(opt.comp_text);
      if (alpha.length() != opt.n) throw std::invalid_argument("expand: composition length must equal n");
      f = universal(set, alpha, q);
    } else {
      throw std::invalid_argument("expand: basis must be L, eta or U");
    }
    if (opt.format == "text") {
      std::ostringstream os;
      for (const auto& [alpha, c] : f.terms()) os << "M" << alpha.str() << " " << scalar_str(c) << "\n";
      doc = os.str();
    } else {
      json j = qsym_to_json(f);
      j["q"] = spec.str();
      if (opt.vars > 0) j["realization"] = truncated_to_json(realize(f, opt.vars));
      doc = j.dump(2) + "\n";
    }
  });
  emit(doc, opt.out_path, out);
  return 0;
}

int command_matrix(const Options& opt, std::ostream& out) {
  const QSpec spec = QSpec::parse(opt.q_text);
  const Exec exec = parse_exec(opt.exec_text);
  std::string doc;
  with_ring(spec, [&](const auto& q) {
    using R = std::decay_t<decltype(q)>;
    ExactMatrix<R> m = opt.method == "recursive" ? transition_matrix_recursive(opt.n, q)
                                                 : transition_matrix_direct(opt.n, q, exec);
    if (opt.format == "json") {
      json j = matrix_to_json(m);
      j["n"] = opt.n;
      j["q"] = spec.str();
      doc = j.dump(2) + "\n";
    } else {
      doc = matrix_to_csv(m);
    }
  });
  emit(doc, opt.out_path, out);
  return 0;
}

int command_rank(const Options& opt, std::ostream& out) {
  const QSpec spec = opt.p > 0 ? QSpec{QSpec::Kind::root_of_unity, opt.p, Rational(0)}
                               : QSpec::parse(opt.q_text);
  const Exec exec = parse_exec(opt.exec_text);
  std::string doc;
  with_ring(spec, [&](const auto& q) {
    const auto m = transition_matrix_direct(opt.n, q, exec);
    const int r = rank(m, exec);
    const int nullity = m.cols() - r;
    int kernel_vectors = -1;
    if (opt.kernel) {
      if constexpr (FieldRing<std::decay_t<decltype(q)>>) {
        kernel_vectors = static_cast<int>(kernel_basis(m, exec).size());
      } else {
        throw std::invalid_argument("rank: kernel basis needs a field value of q");
      }
    }
    if (opt.format == "json") {
      json j{{"n", opt.n}, {"q", spec.str()}, {"rank", r}, {"nullity", nullity}};
      if (kernel_vectors >= 0) j["kernel_vectors"] = kernel_vectors;
      doc = j.dump(2) + "\n";
    } else {
      std::ostringstream os;
      os << "n=" << opt.n << " q=" << spec.str() << " rank=" << r << " nullity=" << nullity;
      if (kernel_vectors >= 0) os << " kernel_vectors=" << kernel_vectors;
      os << "\n";
      doc = os.str();
    }
  });
  emit(doc, opt.out_path, out);
  return 0;
}

int command_count(const Options& opt, std::ostream& out) {
  out << count_extended_peak_sets(opt.n, opt.p) << "\n";
  return 0;
}

int command_gamma(const Options& opt, std::ostream& out) {
  const QSpec spec = QSpec::parse(opt.q_text);
  const Exec exec = parse_exec(opt.exec_text);
  const LabelledWeightedPoset poset = poset_from_file(opt.poset_path);
  std::string doc;
  with_ring(spec, [&](const auto& q) {
    const auto g = gamma_q(poset, opt.vars, q, exec);
    json j = truncated_to_json(g);
    j["q"] = spec.str();
    j["poset"] = poset_to_json(poset);
    doc = j.dump(2) + "\n";
  });
  emit(doc, opt.out_path, out);
  return 0;
}

int command_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  const Exec exec = parse_exec(opt.exec_text);
  std::vector<verify::SuiteReport> reports;
  if (opt.suite == "all") {
    reports = verify::run_all(opt.max_n, opt.max_p, exec);
  } else {
    reports.push_back(verify::run_suite(opt.suite, opt.max_n, opt.max_p, exec));
  }
  std::string doc = opt.format == "json" ? verify::report_json(reports, opt.timings).dump(2) + "\n"
                                         : verify::report_text(reports, opt.timings);
  emit(doc, opt.out_path, out);
  if (!opt.timings) {
    double total = 0;
    for (const auto& r : reports) total += r.seconds;
    err << "verified in " << total << " s\n";
  }
  return verify::all_passed(reports) ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact computer algebra for q-deformed quasisymmetric functions"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* expand = app.add_subcommand("expand", "expand a basis element over the monomial basis");
  expand->add_option("--basis", opt.basis, "L, eta or U")->required();
  expand->add_option("--n", opt.n, "degree")->required()->check(CLI::Range(1, 16));
  expand->add_option("--set", opt.set_text, "index set, e.g. 1,3");
  expand->add_option("--composition", opt.comp_text, "weights for basis U, e.g. 1,2,1");
  expand->add_option("--q", opt.q_text, "symbolic | rho:<p> | rational:<a>/<b>");
  expand->add_option("--vars", opt.vars, "also realize in this many variables")->check(CLI::Range(0, 8));
  expand->add_option("--format", opt.format, "json (default) or text");
  expand->add_option("--out", opt.out_path, "write the document to a file");

  CLI::App* matrix = app.add_subcommand("matrix", "transition matrix between the q-fundamental and enriched q-monomial families");
  matrix->add_option("--n", opt.n, "degree")->required()->check(CLI::Range(1, 12));
  matrix->add_option("--q", opt.q_text, "symbolic | rho:<p> | rational:<a>/<b>");
  matrix->add_option("--method", opt.method, "direct (default) or recursive");
  matrix->add_option("--format", opt.format, "csv (default) or json");
  matrix->add_option("--exec", opt.exec_text, "openmp (default) or serial");
  matrix->add_option("--out", opt.out_path, "write the document to a file");

  CLI::App* rank_cmd = app.add_subcommand("rank", "exact rank and nullity of the transition matrix");
  rank_cmd->add_option("--n", opt.n, "degree")->required()->check(CLI::Range(1, 12));
  rank_cmd->add_option("--p", opt.p, "use q = rho_p")->check(CLI::Range(1, 8));
  rank_cmd->add_option("--q", opt.q_text, "symbolic | rho:<p> | rational:<a>/<b>");
  rank_cmd->add_flag("--kernel", opt.kernel, "also compute a kernel basis");
  rank_cmd->add_option("--format", opt.format, "text (default) or json");
  rank_cmd->add_option("--exec", opt.exec_text, "openmp (default) or serial");
  rank_cmd->add_option("--out", opt.out_path, "write the document to a file");

  CLI::App* count = app.add_subcommand("count", "number of p-extended peak sets");
  count->add_option("--n", opt.n, "ground set size")->required()->check(CLI::Range(0, 62));
  count->add_option("--p", opt.p, "run bound")->required()->check(CLI::Range(1, 16));

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force oracles");
  CLI::App* gamma = oracle->add_subcommand("gamma", "generating function of a labelled weighted poset");
  gamma->add_option("--poset", opt.poset_path, "poset JSON file")->required();
  gamma->add_option("--vars", opt.vars, "alphabet bound")->required()->check(CLI::Range(1, 6));
  gamma->add_option("--q", opt.q_text, "symbolic | rho:<p> | rational:<a>/<b>");
  gamma->add_option("--exec", opt.exec_text, "openmp (default) or serial");
  gamma->add_option("--out", opt.out_path, "write the document to a file");

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the verification suites");
  verify_cmd->add_option("--suite", opt.suite, "vanishing|dimension|counts|product|coproduct|gamma|binom|all");
  verify_cmd->add_option("--max-n", opt.max_n, "degree bound")->check(CLI::Range(1, 12));
  verify_cmd->add_option("--max-p", opt.max_p, "extended-peak bound")->check(CLI::Range(1, 6));
  verify_cmd->add_option("--format", opt.format, "text (default) or json");
  verify_cmd->add_option("--exec", opt.exec_text, "openmp (default) or serial");
  verify_cmd->add_flag("--timings", opt.timings, "embed timings in the document (breaks byte determinism)");
  verify_cmd->add_option("--out", opt.out_path, "write the document to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (expand->parsed()) return command_expand(opt, out);
    if (matrix->parsed()) return command_matrix(opt, out);
    if (rank_cmd->parsed()) return command_rank(opt, out);
    if (count->parsed()) return command_count(opt, out);
    if (oracle->parsed() && gamma->parsed()) return command_gamma(opt, out);
    if (verify_cmd->parsed()) return command_verify(opt, out, err);
    err << "usage error: missing subcommand\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace qsym::cli
