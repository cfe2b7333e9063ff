#include "ordproj/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "ordproj/comparison.hpp"
#include "ordproj/document.hpp"
#include "ordproj/error.hpp"
#include "ordproj/matrix_order.hpp"
#include "ordproj/proj_isometry.hpp"
#include "ordproj/suite.hpp"

namespace ordproj {

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kParse = 2;
constexpr int kShape = 3;
constexpr int kUsage = 4;

const std::vector<std::string> kPredicates = {
    "self-adjoint",     "positive",         "normal",    "unitary",     "symmetry",   "order-projection",
    "partial-unitary",  "partial-symmetry", "partial-isometry", "isometry", "co-isometry", "orthogonal"};

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::ParseError: return kParse;
    case ErrorKind::ShapeError:
    case ErrorKind::ShapeMismatch:
    case ErrorKind::ModelMismatch:
    case ErrorKind::NotProjection:
    case ErrorKind::NotHermitian: return kShape;
    case ErrorKind::PreconditionViolated: return kUsage;
    default: return kFail;
  }
}

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(3) << x;
  return os.str();
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      throw Usage("not a size list: \"" + text + "\"");
    }
    if (used != item.size() || v == 0) throw Usage("not a size list: \"" + text + "\"");
    out.push_back(v);
  }
  if (out.empty()) throw Usage("empty size list");
  return out;
}

std::vector<std::vector<std::size_t>> parse_block_list(const std::string& text) {
  std::vector<std::vector<std::size_t>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) out.push_back(parse_sizes(item));
  if (out.empty()) throw Usage("empty block list");
  return out;
}

void emit(const json& doc, const std::string& out) {
  if (out.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    write_json_file(out, doc);
  }
}

struct Globals {
  double eps_eq = TolerancePolicy{}.eps_eq;
  double eps_psd = TolerancePolicy{}.eps_psd;
  std::string out;
  bool as_json = false;

  TolerancePolicy tol() const {
    TolerancePolicy t;
    t.eps_eq = eps_eq;
    t.eps_psd = eps_psd;
    try {
      t.validate();
    } catch (const Error& e) {
      throw Usage(e.what());
    }
    return t;
  }
};

Element load(const std::string& path, const Globals& g) { return element_from_document(read_json_file(path), g.tol()); }

int cmd_abs(const Globals& g, const std::string& input) {
  const Element v = load(input, g);
  json doc;
  doc["abs"] = element_to_document(abs_rect(v));
  doc["abs_adjoint"] = element_to_document(abs_rect(v.adjoint()));
  emit(doc, g.out);
  return kPass;
}

int cmd_check(const Globals& g, const std::string& input, const std::string& predicate, const std::string& other) {
  if (std::find(kPredicates.begin(), kPredicates.end(), predicate) == kPredicates.end())
    throw Usage("unknown predicate \"" + predicate + "\"");
  if (predicate == "orthogonal" && other.empty()) throw Usage("orthogonal needs --with");
  const Element v = load(input, g);

  bool holds = false;
  double residual = 0.0;
  std::vector<Label> labels;
  if (predicate == "orthogonal") {
    const Element w = load(other, g);
    require_same_shape(v, w, "check");
    holds = ortho_rect(v, w);
    labels.push_back({holds ? "orthogonal" : "not-orthogonal", 0.0});
  } else {
    const Classification c = classify(v);
    labels = c.labels;
    if (v.is_square() && is_self_adjoint(v)) labels.insert(labels.begin(), {"self-adjoint", 0.0});
    if (v.is_square() && is_positive(v)) labels.insert(labels.begin() + 1, {"positive", positivity_defect(v)});
    if (predicate == "order-projection" && v.is_square() && is_self_adjoint(v)) {
      try {
        residual = is_order_projection(SelfAdjoint(v)).residual();
        holds = true;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotProjection) throw;
        residual = e.residual();
      }
    } else {
      for (const auto& l : labels)
        if (l.name == predicate) {
          holds = true;
          residual = l.residual;
        }
      if (!holds && predicate != "self-adjoint" && predicate != "positive") residual = c.residual(predicate);
    }
  }

  if (g.as_json) {
    json j;
    j["predicate"] = predicate;
    j["holds"] = holds;
    j["residual"] = std::isfinite(residual) ? json(residual) : json("inf");
    json ls = json::array();
    for (const auto& l : labels) ls.push_back({{"label", l.name}, {"residual", l.residual}});
    j["labels"] = std::move(ls);
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& l : labels) std::cout << l.name << ", residual " << fmt(l.residual) << "\n";
    std::cout << predicate << ": " << (holds ? "holds" : "fails") << ", residual " << fmt(residual) << "\n";
  }
  return holds ? kPass : kFail;
}

json witness_document(const EquivalenceWitness& w) {
  json j = element_to_document(w.v.element());
  j["residual"] = w.residual;
  return j;
}

std::string ranks_text(const std::vector<std::size_t>& r) {
  std::string s = "(";
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? ", " : "") + std::to_string(r[i]);
  return s + ")";
}

int cmd_equiv(const Globals& g, const std::string& p_path, const std::string& q_path, const std::string& relation) {
  const Element pe = load(p_path, g);
  const Element qe = load(q_path, g);
  require_same_model(pe, qe, "equiv");
  const Projection p(pe);
  const Projection q(qe);
  json doc;
  try {
    if (relation == "mvn") {
      doc["witness"] = witness_document(equivalent(p, q));
    } else if (relation == "sub") {
      const auto s = subequivalent(p, q);
      doc["r"] = element_to_document(s.r);
      doc["witness"] = witness_document(s.inner);
      doc["p0"] = element_to_document(s.p0);
      doc["complement"] = witness_document(s.complement);
    } else {
      const auto u = unitarily_equivalent(p, q);
      doc["unitary"] = element_to_document(u.u);
      doc["witness"] = witness_document(u.v);
      doc["complement"] = witness_document(u.w);
    }
  } catch (const RankError& e) {
    std::cout << relation << ": fails, ranks " << ranks_text(e.lhs_ranks()) << " vs " << ranks_text(e.rhs_ranks())
              << "\n";
    return kFail;
  }
  emit(doc, g.out);
  if (!g.out.empty()) std::cout << relation << ": holds, witness written to " << g.out << "\n";
  return kPass;
}

int cmd_suite(const Globals& g, const std::string& id, std::uint64_t seed, std::size_t cases, const std::string& dims,
              const std::string& blocks, std::size_t threads) {
  if (!is_known_suite(id)) throw Usage("unknown suite \"" + id + "\"");
  SuiteOptions o;
  o.id = id;
  o.seed = seed;
  o.cases = cases;
  if (!dims.empty()) o.dims = parse_sizes(dims);
  if (!blocks.empty()) o.blocks = parse_block_list(blocks);
  o.tol = g.tol();
  o.threads = threads;
  const SuiteReport rep = run_suite(o);
  if (!g.out.empty()) write_json_file(g.out, rep.to_json());
  if (g.as_json) {
    std::cout << rep.to_json().dump(2) << "\n";
  } else {
    std::cout << rep.summary() << "\n";
  }
  return rep.ok() ? kPass : kFail;
}

int cmd_coverage(const Globals& g) {
  if (g.as_json) {
    json j = json::array();
    for (const auto& s : suite_catalog()) j.push_back({{"suite", s.id}, {"statement", s.statement}});
    std::cout << j.dump(2) << "\n";
    return kPass;
  }
  for (const auto& s : suite_catalog()) std::cout << std::left << std::setw(14) << s.id << s.statement << "\n";
  return kPass;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"Order-theoretic projections, partial isometries and their comparison"};
  app.require_subcommand(1);
  Globals g;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--eps-eq", g.eps_eq, "equality tolerance");
    sub->add_option("--eps-psd", g.eps_psd, "positivity tolerance");
    sub->add_option("--out", g.out, "output path");
    sub->add_flag("--json", g.as_json, "machine-readable output on stdout");
  };

  std::string input, second, predicate, other, relation = "mvn", suite_id, dims, blocks;
  std::uint64_t seed = 0;
  std::size_t cases = 200, threads = 1;

  auto* abs = app.add_subcommand("abs", "write |v| and |v*| of an element document");
  abs->add_option("input", input, "element document")->required();
  add_common(abs);

  auto* check = app.add_subcommand("check", "classify an element and test one predicate");
  check->add_option("input", input, "element document")->required();
  check->add_option("predicate", predicate, "predicate name")->required();
  check->add_option("--with", other, "second document for orthogonal");
  add_common(check);

  auto* equiv = app.add_subcommand("equiv", "decide a relation between two projections");
  equiv->add_option("p", input, "projection document")->required();
  equiv->add_option("q", second, "projection document")->required();
  equiv->add_option("--relation", relation, "mvn, sub or unitary")
      ->check(CLI::IsMember({"mvn", "sub", "unitary"}));
  add_common(equiv);

  auto* suite = app.add_subcommand("suite", "run a seeded suite");
  suite->add_option("id", suite_id, "suite id")->required();
  suite->add_option("--seed", seed, "master seed");
  suite->add_option("--cases", cases, "number of cases");
  suite->add_option("--dims", dims, "matrix sizes, e.g. 1,2,3");
  suite->add_option("--blocks", blocks, "block dimension lists, e.g. \"2;3;1,2\"");
  suite->add_option("--threads", threads, "worker threads, 0 for all cores");
  add_common(suite);

  auto* coverage = app.add_subcommand("coverage", "list every suite and the statement it exercises");
  coverage->add_flag("--json", g.as_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*abs) return cmd_abs(g, input);
    if (*check) return cmd_check(g, input, predicate, other);
    if (*equiv) return cmd_equiv(g, input, second, relation);
    if (*suite) return cmd_suite(g, suite_id, seed, cases, dims, blocks, threads);
    if (*coverage) return cmd_coverage(g);
  } catch (const Usage& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code(e);
  }
  return kUsage;
}

}  // namespace ordproj
