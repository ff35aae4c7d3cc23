#include "geomqm/scenario.hpp"

#include "geomqm/bloch.hpp"
#include "geomqm/dynamics.hpp"
#include "geomqm/expectation.hpp"
#include "geomqm/interference.hpp"
#include "geomqm/spectral.hpp"
#include "geomqm/uncertainty.hpp"

#include <charconv>
#include <set>
#include <sstream>

namespace geomqm::scenario {

namespace {

// Asymmetry up to this bound is repaired by symmetrization (with a
// diagnostic warning); anything beyond is rejected. The strict library
// tolerance (1e-12) still decides whether a warning is emitted at all.
constexpr double kCliHermiticityTol = 1e-4;

[[noreturn]] void fail(const std::string& code, const std::string& msg) {
  throw ParseError(code, msg);
}

void check_fields(const Json& obj, const std::string& where,
                  const std::set<std::string>& allowed) {
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key))
      fail("unknown_field", "unknown field '" + key + "' in " + where);
}

double require_number(const Json& j, const std::string& where) {
  if (!j.is_number()) fail("invalid_value", where + " must be a number");
  return j.get<double>();
}

Complex parse_complex(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    fail("invalid_value", where + " must be a two-element [re, im] array");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

Vector parse_vector(const Json& j, Eigen::Index n, const std::string& where) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != n)
    fail("dimension_mismatch",
         where + " must be a length-" + std::to_string(n) + " vector");
  Vector v(n);
  for (Eigen::Index k = 0; k < n; ++k)
    v(k) = parse_complex(j[static_cast<std::size_t>(k)],
                         where + "[" + std::to_string(k) + "]");
  return v;
}

Matrix parse_matrix(const Json& j, Eigen::Index n, const std::string& where) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != n)
    fail("dimension_mismatch",
         where + " must be a " + std::to_string(n) + "-row matrix");
  Matrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
      fail("dimension_mismatch", where + " row " + std::to_string(r) +
                                     " must have " + std::to_string(n) +
                                     " entries");
    for (Eigen::Index c = 0; c < n; ++c)
      m(r, c) = parse_complex(row[static_cast<std::size_t>(c)],
                              where + "[" + std::to_string(r) + "][" +
                                  std::to_string(c) + "]");
  }
  return m;
}

Task parse_task(const Json& j) {
  if (!j.is_string()) fail("invalid_value", "task must be a string");
  std::string name = j.get<std::string>();
  if (name == "spectrum") return Task::Spectrum;
  if (name == "evolve") return Task::Evolve;
  if (name == "uncertainty") return Task::Uncertainty;
  if (name == "superpose") return Task::Superpose;
  if (name == "star") return Task::Star;
  if (name == "bloch") return Task::Bloch;
  fail("invalid_value", "unknown task '" + name + "'");
}

const char* task_name(Task task) {
  switch (task) {
    case Task::Spectrum: return "spectrum";
    case Task::Evolve: return "evolve";
    case Task::Uncertainty: return "uncertainty";
    case Task::Superpose: return "superpose";
    case Task::Star: return "star";
    case Task::Bloch: return "bloch";
  }
  return "?";
}

std::string require_name(const Json& params, const std::string& key) {
  if (!params.contains(key))
    fail("missing_field", "parameters." + key + " is required");
  if (!params[key].is_string())
    fail("invalid_value", "parameters." + key + " must be a name");
  return params[key].get<std::string>();
}

template <typename Map>
const typename Map::mapped_type& resolve(const Map& map,
                                         const std::string& name,
                                         const std::string& kind) {
  auto it = map.find(name);
  if (it == map.end())
    fail("unknown_reference", "unresolved " + kind + " name '" + name + "'");
  return it->second;
}

void validate_parameters(Scenario& s) {
  const Json& p = s.parameters;
  if (!p.is_object()) fail("invalid_value", "parameters must be an object");
  switch (s.task) {
    case Task::Spectrum: {
      check_fields(p, "parameters",
                   {"operator", "restarts", "step", "tol", "max_iters", "seed"});
      resolve(s.operators, require_name(p, "operator"), "operator");
      break;
    }
    case Task::Evolve: {
      check_fields(p, "parameters",
                   {"hamiltonian", "observables", "state", "times", "seed"});
      resolve(s.operators, require_name(p, "hamiltonian"), "operator");
      resolve(s.states, require_name(p, "state"), "state");
      if (p.contains("observables")) {
        if (!p["observables"].is_array())
          fail("invalid_value", "parameters.observables must be an array");
        for (const Json& name : p["observables"]) {
          if (!name.is_string())
            fail("invalid_value", "observable names must be strings");
          resolve(s.operators, name.get<std::string>(), "operator");
        }
      }
      if (!p.contains("times") || !p["times"].is_array() || p["times"].empty())
        fail("missing_field", "parameters.times must be a nonempty array");
      double prev = -std::numeric_limits<double>::infinity();
      for (const Json& t : p["times"]) {
        double val = require_number(t, "parameters.times entry");
        if (val <= prev)
          fail("invalid_value", "times must be strictly increasing");
        prev = val;
      }
      break;
    }
    case Task::Uncertainty: {
      check_fields(p, "parameters", {"pairs", "state", "seed"});
      resolve(s.states, require_name(p, "state"), "state");
      if (!p.contains("pairs") || !p["pairs"].is_array() || p["pairs"].empty())
        fail("missing_field", "parameters.pairs must be a nonempty array");
      for (const Json& pair : p["pairs"]) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
            !pair[1].is_string())
          fail("invalid_value", "each pair must be [A, B] operator names");
        resolve(s.operators, pair[0].get<std::string>(), "operator");
        resolve(s.operators, pair[1].get<std::string>(), "operator");
      }
      break;
    }
    case Task::Superpose: {
      check_fields(p, "parameters", {"rho1", "rho2", "fiducial", "p1", "seed"});
      resolve(s.states, require_name(p, "rho1"), "state");
      resolve(s.states, require_name(p, "rho2"), "state");
      resolve(s.states, require_name(p, "fiducial"), "state");
      if (!p.contains("p1"))
        fail("missing_field", "parameters.p1 is required");
      double p1 = require_number(p["p1"], "parameters.p1");
      if (p1 < 0.0 || p1 > 1.0)
        fail("invalid_value", "parameters.p1 must lie in [0, 1]");
      break;
    }
    case Task::Star: {
      check_fields(p, "parameters", {"s0", "s1", "s2", "seed"});
      for (const char* key : {"s0", "s1", "s2"}) {
        if (!p.contains(key))
          fail("missing_field", std::string("parameters.") + key +
                                    " is required");
        const Json& v = p[key];
        if (!v.is_array() || v.size() != 3)
          fail("invalid_value", std::string("parameters.") + key +
                                    " must be a 3-vector");
        double norm_sq = 0.0;
        for (const Json& c : v) {
          double x = require_number(c, "sphere point entry");
          norm_sq += x * x;
        }
        if (norm_sq == 0.0)
          fail("invalid_value", "sphere point must be nonzero");
      }
      break;
    }
    case Task::Bloch: {
      check_fields(p, "parameters", {"state", "pairs", "seed"});
      resolve(s.states, require_name(p, "state"), "state");
      if (p.contains("pairs")) {
        if (!p["pairs"].is_array())
          fail("invalid_value", "parameters.pairs must be an array");
        for (const Json& pair : p["pairs"]) {
          if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
              !pair[1].is_string())
            fail("invalid_value", "each pair must be [a, b] operator names");
          resolve(s.operators, pair[0].get<std::string>(), "operator");
          resolve(s.operators, pair[1].get<std::string>(), "operator");
        }
      }
      if (s.dimension != 2)
        fail("dimension_mismatch", "bloch task requires dimension 2");
      break;
    }
  }
  if (p.contains("seed") &&
      (!p["seed"].is_number_integer() || p["seed"].get<long long>() < 0))
    fail("invalid_value", "parameters.seed must be a nonnegative integer");
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail("syntax_error", e.what());
  }
  if (!doc.is_object()) fail("syntax_error", "scenario must be a JSON object");
  check_fields(doc, "scenario",
               {"task", "dimension", "operators", "states", "parameters"});
  if (!doc.contains("task")) fail("missing_field", "task is required");
  if (!doc.contains("dimension"))
    fail("missing_field", "dimension is required");
  if (!doc["dimension"].is_number_integer() ||
      doc["dimension"].get<long long>() < 1)
    fail("invalid_value", "dimension must be a positive integer");

  Scenario s;
  s.task = parse_task(doc["task"]);
  s.dimension = doc["dimension"].get<Eigen::Index>();

  if (doc.contains("operators")) {
    if (!doc["operators"].is_object())
      fail("invalid_value", "operators must be a name -> matrix map");
    for (const auto& [name, value] : doc["operators"].items()) {
      Matrix m = parse_matrix(value, s.dimension, "operator '" + name + "'");
      double defect = hermiticity_defect(m);
      if (defect > kCliHermiticityTol)
        fail("non_hermitian", "operator '" + name +
                                  "' exceeds the Hermiticity tolerance");
      HermitianOperator op(m, kCliHermiticityTol);
      if (op.was_symmetrized() && defect > HermitianOperator::kTolerance)
        s.warnings.push_back("operator '" + name +
                             "' symmetrized (Hermiticity defect " +
                             std::to_string(defect) + ")");
      s.operators.emplace(name, std::move(op));
    }
  }
  if (doc.contains("states")) {
    if (!doc["states"].is_object())
      fail("invalid_value", "states must be a name -> vector map");
    for (const auto& [name, value] : doc["states"].items()) {
      Vector v = parse_vector(value, s.dimension, "state '" + name + "'");
      if (v.norm() == 0.0)
        fail("invalid_value", "state '" + name + "' is the zero vector");
      s.states.emplace(name, PureState(std::move(v)));
    }
  }
  s.parameters = doc.value("parameters", Json::object());
  validate_parameters(s);
  return s;
}

namespace {

std::string format_double(double x) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), x,
                           std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

Json json_complex(const Complex& z) {
  return Json::array({z.real(), z.imag()});
}

Json json_matrix(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back(json_complex(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

std::uint64_t scenario_seed(const Scenario& s) {
  return s.parameters.value("seed", std::uint64_t{0});
}

Json run_spectrum(const Scenario& s) {
  const Json& p = s.parameters;
  const HermitianOperator& A =
      resolve(s.operators, p["operator"].get<std::string>(), "operator");
  spectral::SearchConfig cfg;
  cfg.restarts = p.value("restarts", 20 * static_cast<int>(s.dimension));
  cfg.step = p.value("step", 0.5);
  cfg.tol = p.value("tol", 1e-10);
  cfg.max_iters = p.value("max_iters", 20000);
  cfg.seed = scenario_seed(s);
  auto points = spectral::find_critical_points(A, cfg);
  if (points.empty())
    throw NumericalError("no restart converged within max_iters");
  Json values = Json::array(), residuals = Json::array(),
       multiplicities = Json::array();
  for (const auto& pt : points) {
    values.push_back(pt.value);
    residuals.push_back(pt.residual);
    multiplicities.push_back(pt.multiplicity_hint);
  }
  return Json{{"values", values},
              {"residuals", residuals},
              {"multiplicities", multiplicities}};
}

Json run_evolve(const Scenario& s, std::optional<std::string>& csv) {
  const Json& p = s.parameters;
  const HermitianOperator& H =
      resolve(s.operators, p["hamiltonian"].get<std::string>(), "operator");
  const PureState& psi0 =
      resolve(s.states, p["state"].get<std::string>(), "state");
  std::vector<std::string> names;
  std::vector<HermitianOperator> observables;
  if (p.contains("observables"))
    for (const Json& name : p["observables"]) {
      names.push_back(name.get<std::string>());
      observables.push_back(
          resolve(s.operators, names.back(), "operator"));
    }
  std::vector<double> times = p["times"].get<std::vector<double>>();
  dynamics::Trajectory traj =
      dynamics::expectation_trajectory(H, observables, psi0, times);

  Json jt = Json::array(), jv = Json::array();
  for (double t : traj.times) jt.push_back(t);
  for (const auto& row : traj.values) {
    Json jrow = Json::array();
    for (double v : row) jrow.push_back(v);
    jv.push_back(jrow);
  }

  std::ostringstream table;
  table << "t";
  for (const auto& name : names) table << ",e_" << name;
  table << "\n";
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    table << format_double(traj.times[k]);
    for (double v : traj.values[k]) table << "," << format_double(v);
    table << "\n";
  }
  csv = table.str();

  return Json{{"times", jt}, {"observables", names}, {"values", jv}};
}

Json run_uncertainty(const Scenario& s) {
  const Json& p = s.parameters;
  const PureState& psi =
      resolve(s.states, p["state"].get<std::string>(), "state");
  Json reports = Json::array();
  for (const Json& pair : p["pairs"]) {
    const HermitianOperator& A =
        resolve(s.operators, pair[0].get<std::string>(), "operator");
    const HermitianOperator& B =
        resolve(s.operators, pair[1].get<std::string>(), "operator");
    auto rep = uncertainty::schrodinger_check(A, B, psi);
    reports.push_back(Json{{"A", pair[0]},
                           {"B", pair[1]},
                           {"varA", rep.varA},
                           {"varB", rep.varB},
                           {"cov", rep.cov},
                           {"commutator_term", rep.commutator_term},
                           {"robertson_slack", rep.robertson_slack},
                           {"schrodinger_slack", rep.schrodinger_slack}});
  }
  return Json{{"reports", reports}};
}

Json run_superpose(const Scenario& s) {
  const Json& p = s.parameters;
  auto projector = [&](const char* key) {
    return DensityMatrix::projector(
        resolve(s.states, p[key].get<std::string>(), "state"));
  };
  DensityMatrix rho1 = projector("rho1");
  DensityMatrix rho2 = projector("rho2");
  interference::FiducialProjector P0(projector("fiducial"));
  DensityMatrix rho =
      interference::superpose(rho1, rho2, P0, p["p1"].get<double>());
  const Matrix& m = rho.matrix();
  double purity_defect = (m * m - m).cwiseAbs().maxCoeff();
  return Json{{"rho", json_matrix(m)},
              {"trace", m.trace().real()},
              {"purity_defect", purity_defect},
              {"pure", rho.is_pure()}};
}

Json run_star(const Scenario& s) {
  const Json& p = s.parameters;
  auto point = [&](const char* key) {
    Eigen::Vector3d v(p[key][0].get<double>(), p[key][1].get<double>(),
                      p[key][2].get<double>());
    return interference::SpherePoint(v.normalized());
  };
  interference::SpherePoint out =
      interference::star_compose(point("s0"), point("s1"), point("s2"));
  return Json{{"composed", Json::array({out.coords()(0), out.coords()(1),
                                        out.coords()(2)})}};
}

Json run_bloch(const Scenario& s) {
  const Json& p = s.parameters;
  const PureState& psi =
      resolve(s.states, p["state"].get<std::string>(), "state");
  BlochState y = bloch::state_to_bloch(psi);
  Json out{{"y", Json::array({y.y0, y.y1, y.y2, y.y3})},
           {"pure", y.is_pure()}};
  if (p.contains("pairs")) {
    Json evals = Json::array();
    for (const Json& pair : p["pairs"]) {
      PauliCoefficients a = bloch::decompose(
          resolve(s.operators, pair[0].get<std::string>(), "operator"));
      PauliCoefficients b = bloch::decompose(
          resolve(s.operators, pair[1].get<std::string>(), "operator"));
      evals.push_back(Json{
          {"a", pair[0]},
          {"b", pair[1]},
          {"e_a", bloch::pauli_expectation(a, y)},
          {"e_b", bloch::pauli_expectation(b, y)},
          {"commutator", bloch::commutator_function(a, b, y)},
          {"anticommutator", bloch::anticommutator_function(a, b, y)},
          {"G", bloch::bloch_tensor_eval(bloch::BlochTensorKind::G_rho, a, b,
                                         y)},
          {"Lambda", bloch::bloch_tensor_eval(
                         bloch::BlochTensorKind::Lambda_rho, a, b, y)}});
    }
    out["tensor_evaluations"] = evals;
  }
  return out;
}

}  // namespace

ResultDocument run(const Scenario& s) {
  ResultDocument result;
  Json outputs;
  switch (s.task) {
    case Task::Spectrum: outputs = run_spectrum(s); break;
    case Task::Evolve: outputs = run_evolve(s, result.csv); break;
    case Task::Uncertainty: outputs = run_uncertainty(s); break;
    case Task::Superpose: outputs = run_superpose(s); break;
    case Task::Star: outputs = run_star(s); break;
    case Task::Bloch: outputs = run_bloch(s); break;
  }
  Json warnings = Json::array();
  for (const auto& w : s.warnings) warnings.push_back(w);
  result.document = Json{
      {"task", task_name(s.task)},
      {"outputs", outputs},
      {"diagnostics",
       Json{{"warnings", warnings},
            {"seed", scenario_seed(s)},
            {"tolerances",
             Json{{"hermiticity", HermitianOperator::kTolerance},
                  {"spectrum_gradient", s.parameters.value("tol", 1e-10)}}}}}};
  return result;
}

namespace {

void serialize_value(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        out += Json(key).dump();
        out += ':';
        serialize_value(value, out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (std::size_t k = 0; k < j.size(); ++k) {
        if (k) out += ',';
        serialize_value(j[k], out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      break;
    default:
      out += j.dump();  // strings, integers, booleans, null
  }
}

}  // namespace

std::string serialize(const Json& j) {
  std::string out;
  serialize_value(j, out);
  out += '\n';
  return out;
}

}  // namespace geomqm::scenario
