// Command-line front end for the qlds library.
//
// Exit status: 0 success, 2 singular input or unmet precondition, 3 parse or
// usage error, 1 anything else (e.g. an internal consistency check fired).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <qlds/qlds.hpp>

namespace {

using namespace qlds;

struct Options {
  std::string file;
  std::string backend;  // empty: per-command default
  std::size_t cap = kDefaultEnumerationCap;
  std::string anchor;
  std::string side = "right";
  std::string similarity;
  std::string matrix = "A";
  double t = 1.0;
};

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_json_text(ss.str());
}

template <typename T>
void header(Document& doc, const std::string& command, std::size_t n) {
  doc.add("command", command);
  doc.add("backend", std::string(to_string(ScalarTraits<T>::backend)));
  doc.add("n", std::to_string(n));
}

std::string yesno(bool b) { return b ? "true" : "false"; }

template <typename T>
void cmd_det(const Options& o, const ProblemFile<T>& f, Document& doc) {
  const Matrix<T>& a = f.problem.a;
  header<T>(doc, "det", a.rows());
  if (!o.anchor.empty()) {
    auto colon = o.anchor.find(':');
    if (colon == std::string::npos) throw ParseError("--anchor must be row:i or col:j");
    std::string kind = o.anchor.substr(0, colon);
    long idx = 0;
    try {
      idx = std::stol(o.anchor.substr(colon + 1));
    } catch (const std::exception&) {
      throw ParseError("--anchor index is not a number");
    }
    if (idx < 1 || static_cast<std::size_t>(idx) > a.rows())
      throw PreconditionError("--anchor index out of range");
    Quaternion<T> v;
    if (kind == "row")
      v = rdet(a, static_cast<std::size_t>(idx - 1), o.cap);
    else if (kind == "col")
      v = cdet(a, static_cast<std::size_t>(idx - 1), o.cap);
    else
      throw ParseError("--anchor kind must be 'row' or 'col'");
    doc.add("anchor", o.anchor);
    doc.add_quat("value", v);
    return;
  }
  bool herm = is_hermitian(a);
  doc.add("hermitian", yesno(herm));
  if (herm) doc.add_scalar("det", det_hermitian(a, o.cap));
  doc.add_scalar("ddet", ddet(a, o.cap));
}

template <typename T>
void cmd_inv(const Options& o, const ProblemFile<T>& f, Document& doc) {
  const Matrix<T>& a = f.problem.a;
  header<T>(doc, "inv", a.rows());
  bool herm = is_hermitian(a);
  doc.add("method", herm ? "hermitian" : "general");
  doc.add_matrix("inverse", herm ? inv_hermitian(a, o.cap) : inv_general(a, o.cap));
}

template <typename T>
void cmd_solve(const Options& o, const ProblemFile<T>& f, Document& doc) {
  const Matrix<T>& a = f.problem.a;
  header<T>(doc, "solve", a.rows());
  Side side = parse_side(o.side);
  QVector<T> b = f.problem.b.coeff(0);
  doc.add("side", to_string(side));
  doc.add("method", is_hermitian(a) ? "hermitian" : "general");
  doc.add_vector("x", side == Side::right ? cramer_right(a, b, CramerPath::automatic, o.cap)
                                          : cramer_left(a, b, CramerPath::automatic, o.cap));
}

template <typename T>
void cmd_drazin(const Options& o, const ProblemFile<T>& f, Document& doc) {
  const Matrix<T>& a = f.problem.a;
  header<T>(doc, "drazin", a.rows());
  DrazinResult<T> r = drazin_det(a, o.cap);
  doc.add("index", std::to_string(r.index));
  doc.add("rank", std::to_string(r.rank));
  doc.add_matrix("drazin", r.ad);
}

template <typename T>
std::string render_eigenvalues(const std::vector<StandardEigenvalue<T>>& ev) {
  QVector<T> v;
  for (const auto& e : ev) v.push_back(e.as_quaternion());
  return render_vector(v);
}

// Highest power first: t^3-13t^2+32t-20.
template <typename T>
std::string render_polynomial(const Polynomial<T>& p) {
  std::string out;
  for (std::size_t m = p.c.size(); m-- > 0;) {
    const T& c = p.c[m];
    if (ScalarTraits<T>::is_zero(c, 0.0)) continue;
    bool neg = c < 0;
    T mag = neg ? T(-c) : c;
    out += neg ? "-" : (out.empty() ? "" : "+");
    if (m == 0 || !detail::scalar_is_one(mag)) out += detail::render_scalar(mag);
    if (m > 0) out += "t";
    if (m > 1) out += "^" + std::to_string(m);
  }
  return out.empty() ? "0" : out;
}

template <typename T>
void cmd_eig(const Options& o, const ProblemFile<T>& f, Document& doc) {
  const Matrix<T>& n = f.problem.a;
  header<T>(doc, "eig-normal", n.rows());
  if (is_hermitian(n)) doc.add("charpoly", render_polynomial(char_poly_hermitian(n, o.cap)));
  SpectralDecomposition<T> sd = normal_diagonalize(n);
  doc.add("eigenvalues", render_eigenvalues(sd.eigenvalues));
  doc.add_matrix("U", sd.eigenvectors);
  doc.add_matrix("D", sd.diagonal);
  doc.add("unitary", yesno(sd.unitary));
  if (!o.similarity.empty()) {
    Json js = read_file(o.similarity);
    const char* key = js.contains("T") ? "T" : "A";
    if (!js.contains(key)) throw ParseError("similarity file lacks 'T'");
    Matrix<T> t = parse_matrix<T>(js.at(key), key);
    SpectralDecomposition<T> te = transported_eigs(t, n);
    doc.add_matrix("A", Matrix<T>(t * n * inverse_row_reduce(t)));
    doc.add_matrix("V", te.eigenvectors);
  }
}

template <typename T>
void cmd_exp(const Options&, const Json& j, Document& doc, double t) {
  // the exponential is always evaluated in binary64
  MatrixD a = parse_matrix<double>(j.at("A"), "A");
  header<T>(doc, "exp", a.rows());
  ExpResult r = mat_exp(a, t);
  doc.add_scalar("t", t);
  doc.add("method", "series");
  doc.add("scaling_steps", std::to_string(r.scaling_steps));
  doc.add_matrix("exp", r.value);
}

template <typename T>
ClosedFormSolution<T> solve_problem(const Options& o, const ProblemFile<T>& f, std::string& method,
                                    unsigned& index) {
  const LqdsProblem<T>& pr = f.problem;
  if (f.p && f.d) {
    method = "diagonalizable";
    std::optional<InitialCondition> init;
    if (pr.x0) init = InitialCondition{pr.t0.value_or(0.0), vector_cast<double>(*pr.x0)};
    return general_solution_diagonalizable(pr.side, pr.a, *f.p, *f.d, pr.b, init);
  }
  bool invertible = qrank(pr.a) == pr.a.rows();
  method = invertible ? "ansatz" : "drazin";
  if (!invertible) index = matrix_index(pr.a);
  return lqds_solve(pr, o.cap);
}

template <typename T>
void describe_solution(const ClosedFormSolution<T>& s, Document& doc) {
  PolynomialVector<T> poly = s.poly;
  poly.trim();
  doc.add("degree", std::to_string(poly.degree()));
  for (std::size_t m = 0; m < poly.coeffs.size(); ++m)
    doc.add_vector("C" + std::to_string(m), poly.coeffs[m]);
  if (!s.has_homogeneous()) {
    doc.add("homogeneous", "none");
    return;
  }
  doc.add("homogeneous", s.form == HomogeneousForm::fundamental ? "fundamental" : "exponential");
  doc.add_scalar("t0", s.t0);
  doc.add_vector("g", s.g);
}

template <typename T>
void cmd_lqds_solve(const Options& o, const ProblemFile<T>& f, Document& doc) {
  header<T>(doc, "lqds-solve", f.problem.a.rows());
  doc.add("side", to_string(f.problem.side));
  std::string method;
  unsigned index = 0;
  ClosedFormSolution<T> s = solve_problem(o, f, method, index);
  doc.add("method", method);
  if (index) doc.add("index", std::to_string(index));
  describe_solution(s, doc);
}

std::vector<double> default_samples(const std::vector<double>& given) {
  return given.empty() ? std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0} : given;
}

template <typename T>
void cmd_lqds_verify(const Options& o, const ProblemFile<T>& f, Document& doc) {
  header<T>(doc, "lqds-verify", f.problem.a.rows());
  doc.add("side", to_string(f.problem.side));
  ClosedFormSolution<T> s;
  if (f.solution) {
    s.side = f.problem.side;
    s.poly = *f.solution;
    doc.add("source", "file");
  } else {
    std::string method;
    unsigned index = 0;
    s = solve_problem(o, f, method, index);
    doc.add("source", method);
  }
  ResidualReport<T> r = residual(s, f.problem.a, f.problem.b, default_samples(f.samples));
  doc.add("check", r.exact ? "polynomial-identity" : "central-difference");
  if (r.exact) {
    doc.add("verified", yesno(r.zero));
    if (!r.zero) {
      doc.add("witness_power", std::to_string(r.witness_power));
      doc.add("witness_index", std::to_string(r.witness_index + 1));
      doc.add_quat("witness", r.witness);
    }
  } else {
    doc.add_scalar("max_residual", r.max_residual);
    doc.add("verified", yesno(r.max_residual <= 1e-6));
  }
}

template <typename T>
void cmd_oracle(const Options& o, const ProblemFile<T>& f, Document& doc) {
  header<T>(doc, "oracle", f.problem.a.rows());
  doc.add("side", to_string(f.problem.side));
  std::string method;
  unsigned index = 0;
  ClosedFormSolution<T> s = solve_problem(o, f, method, index);
  std::vector<double> grid = default_samples(f.samples);
  doc.add("method", method);
  doc.add("steps_per_point", "2000");
  doc.add_scalar("max_deviation", compare(s, f.problem, grid, 2000));
}

template <typename T>
std::string run(const std::string& command, const Options& o, Json j) {
  if (o.matrix != "A") {
    if (!j.is_object() || !j.contains(o.matrix))
      throw ParseError("input has no matrix '" + o.matrix + "'");
    j["A"] = j.at(o.matrix);
  }
  Document doc;
  if (command == "exp") {
    cmd_exp<T>(o, j, doc, o.t);
    return doc.str();
  }
  ProblemFile<T> f = parse_problem<T>(j);
  if (command == "det") cmd_det(o, f, doc);
  else if (command == "inv") cmd_inv(o, f, doc);
  else if (command == "solve") cmd_solve(o, f, doc);
  else if (command == "drazin") cmd_drazin(o, f, doc);
  else if (command == "eig-normal") cmd_eig(o, f, doc);
  else if (command == "lqds-solve") cmd_lqds_solve(o, f, doc);
  else if (command == "lqds-verify") cmd_lqds_verify(o, f, doc);
  else if (command == "oracle") cmd_oracle(o, f, doc);
  return doc.str();
}

std::string default_backend(const std::string& command, const Json& j) {
  if (j.is_object() && j.contains("backend") && j.at("backend").is_string())
    return j.at("backend").get<std::string>();
  return (command == "exp" || command == "oracle") ? "float" : "exact";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quaternion determinants, Drazin inverses and linear differential systems"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "problem or matrix file (JSON)")->required();
    sub->add_option("--backend", o.backend, "exact or float")
        ->check(CLI::IsMember({"exact", "float"}));
    sub->add_option("--cap", o.cap, "largest order for determinant expansions");
    sub->add_option("--matrix", o.matrix, "key of the matrix to operate on (default A)");
    return sub;
  };
  add_common(app.add_subcommand("det", "row/column, Hermitian and double determinants"))
      ->add_option("--anchor", o.anchor, "row:i or col:j (1-based)");
  add_common(app.add_subcommand("inv", "determinantal inverse"));
  add_common(app.add_subcommand("solve", "Cramer rule for A x = b or x A = b"))
      ->add_option("--side", o.side, "right or left")
      ->check(CLI::IsMember({"right", "left"}));
  add_common(app.add_subcommand("drazin", "index, rank and Drazin inverse"));
  add_common(app.add_subcommand("eig-normal", "standard eigenvalues of a normal matrix"))
      ->add_option("--similarity", o.similarity, "file holding T; reports A = T N T^-1");
  add_common(app.add_subcommand("exp", "matrix exponential e^{A t}"))
      ->add_option("--t", o.t, "time");
  add_common(app.add_subcommand("lqds-solve", "closed-form solution of the system"));
  add_common(app.add_subcommand("lqds-verify", "residual of a solution"));
  add_common(app.add_subcommand("oracle", "compare the closed form against RK4"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    Json j = read_file(o.file);
    std::string backend = o.backend.empty() ? default_backend(command, j) : o.backend;
    std::string out;
    if (backend == "exact")
      out = run<Rational>(command, o, j);
    else if (backend == "float")
      out = run<double>(command, o, j);
    else
      throw ParseError("backend must be 'exact' or 'float'");
    std::cout << out;
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const Json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const SingularError& e) {
    std::cerr << "singular: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
