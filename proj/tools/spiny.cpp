// Command-line front end for the spiny library.

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spiny/analysis.hpp"
#include "spiny/constructors.hpp"
#include "spiny/document.hpp"
#include "spiny/enumeration.hpp"
#include "spiny/error.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;
using namespace spiny;

namespace {

struct Report {
  std::string command;
  Json facts = Json::array();
  std::vector<std::string> notes;

  void add(const std::string& name, Json value, const std::string& basis = "") {
    Json f;
    f["name"] = name;
    f["value"] = std::move(value);
    if (!basis.empty()) f["basis"] = basis;
    facts.push_back(std::move(f));
  }

  void print(bool json) const {
    if (json) {
      Json out;
      out["command"] = command;
      out["status"] = "ok";
      out["facts"] = facts;
      out["notes"] = notes;
      std::cout << out.dump(2) << "\n";
      return;
    }
    for (const auto& n : notes) std::cout << "note: " << n << "\n";
    for (const auto& f : facts) {
      const Json& v = f["value"];
      std::cout << f["name"].get<std::string>() << ": "
                << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
};

const char* kDimensionBasis = "top degree of a nondegenerate simplex";
const char* kPBasis = "largest number of nonidentity edges out of one object; bounds the dimension";
const char* kSpinyBasis = "standard spine evaluation injective up to the dimension";
const char* kGroupoidBasis = "Segal maps bijective and truncation at least p";

std::vector<std::string> names_of(const EdgeStructure& E, const std::vector<ObjectId>& objs) {
  std::vector<std::string> out;
  for (ObjectId o : objs) out.push_back(E.object_name(o));
  return out;
}

std::vector<std::string> nonidentity_names(const TruncatedSymSet& X) {
  std::vector<std::string> out;
  for (EdgeId f = 0; f < X.edges().num_edges(); ++f) {
    if (!X.edges().is_identity(f)) out.push_back(X.edges().edge_name(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string matrix_string(const TruncatedSymSet& X, const SimplexMatrix& x) {
  return x.to_string(X.edges());
}

void write_symset(const std::string& path, const TruncatedSymSet& X, const std::string& provenance) {
  save_document(path, Document{kFormatVersion, X, provenance, {}});
}

template <class T>
T load_kind(const std::string& path, Report& report) {
  Document doc = load_document(path);
  for (auto& n : doc.notes) report.notes.push_back(n);
  auto* p = std::get_if<T>(&doc.payload);
  if (!p) throw InvalidInput(path + ": unexpected kind '" + doc.kind() + "'");
  return std::move(*p);
}

void describe(Report& r, const TruncatedSymSet& X) {
  r.add("objects", X.edges().num_objects());
  r.add("edges", X.edges().num_edges());
  r.add("truncation", X.truncation());
  if (!X.empty()) r.add("dimension", dimension(X), kDimensionBasis);
}

void prepare_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw InvalidInput("cannot create directory '" + dir + "': " + ec.message());
}

std::string numbered(const std::string& dir, const std::string& stem, std::size_t i) {
  std::ostringstream os;
  os << stem << "_" << std::setw(4) << std::setfill('0') << i << ".json";
  return (fs::path(dir) / os.str()).string();
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_input: return 1;
    case ErrorKind::precondition: return 2;
    case ErrorKind::internal: return 3;
  }
  return 3;
}

const char* kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_input: return "invalid_input";
    case ErrorKind::precondition: return "precondition_violation";
    case ErrorKind::internal: return "internal_failure";
  }
  return "internal_failure";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite partial groups and partial groupoids as truncated symmetric sets"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Print a machine-readable report");
  app.add_flag("--seedless-deterministic", "Deterministic mode (always on)");

  Report report;
  std::function<void()> action;
  std::string bare;

  std::string file, file2, out, dir;
  int degree_n = 0;
  std::size_t index = 0;
  int ez_degree = -1;
  bool strict = false;
  bool count = false;
  bool list = false;
  int card = 0;
  int cap = kDefaultEnumerationCap;

  auto* validate_cmd = app.add_subcommand("validate", "Load a file and check every axiom");
  validate_cmd->add_option("FILE", file)->required();
  validate_cmd->callback([&] {
    action = [&] {
      Document doc = load_document(file);
      report.notes = doc.notes;
      report.add("kind", doc.kind());
      if (auto* X = std::get_if<TruncatedSymSet>(&doc.payload)) {
        describe(report, *X);
        std::vector<std::size_t> counts;
        for (int n = 0; n <= X->truncation(); ++n) counts.push_back(X->nondegenerate_count(n));
        report.add("nondegenerate_counts", counts);
      }
      report.add("valid", true, "closure under all maps of degree at most the truncation");
    };
  });

  auto* info_cmd = app.add_subcommand("info", "Dimension, p, spininess and groupoid status");
  info_cmd->add_option("FILE", file)->required();
  info_cmd->callback([&] {
    action = [&] {
      const auto X = load_kind<TruncatedSymSet>(file, report);
      const auto profile = analyze(X);
      report.add("objects", X.edges().num_objects());
      report.add("edges", X.edges().num_edges());
      report.add("truncation", X.truncation());
      if (profile.dimension) report.add("dimension", *profile.dimension, kDimensionBasis);
      report.add("p", profile.p_invariant, kPBasis);
      Json nx = Json::object();
      for (ObjectId o = 0; o < X.edges().num_objects(); ++o) nx[X.edges().object_name(o)] = profile.n_x[o];
      report.add("n_x", nx);
      report.add("spiny", profile.spiny, kSpinyBasis);
      report.add("groupoid", profile.groupoid.groupoid(), kGroupoidBasis);
      report.add("groupoid_reason", profile.groupoid.explanation());
      report.add("group", profile.group, "reduced groupoid");
      Json comps = Json::array();
      for (const auto& c : profile.components) comps.push_back(names_of(X.edges(), c));
      report.add("components", comps, "zig-zags of edges");
      report.add("nondegenerate_counts", profile.nondegenerate_counts);
    };
  });

  auto* skeleton_cmd = app.add_subcommand("skeleton", "Write the n-skeleton");
  skeleton_cmd->add_option("FILE", file)->required();
  skeleton_cmd->add_option("-n", degree_n, "Skeleton degree")->required();
  skeleton_cmd->add_option("-o,--output", out)->required();
  skeleton_cmd->callback([&] {
    action = [&] {
      const auto X = load_kind<TruncatedSymSet>(file, report);
      const auto S = skeleton(X, degree_n);
      write_symset(out, S, "skeleton " + std::to_string(degree_n) + " of " + file);
      describe(report, S);
      report.add("output", out);
    };
  });

  auto* ez_cmd = app.add_subcommand("ez", "Eilenberg-Zilber decomposition of one simplex");
  ez_cmd->add_option("FILE", file)->required();
  ez_cmd->add_option("--simplex", index, "Index into the sorted simplices of the chosen degree")->required();
  ez_cmd->add_option("--degree", ez_degree, "Degree (defaults to the truncation)");
  ez_cmd->callback([&] {
    action = [&] {
      const auto X = load_kind<TruncatedSymSet>(file, report);
      const int n = ez_degree < 0 ? X.truncation() : ez_degree;
      if (n > X.truncation()) {
        throw PreconditionViolation("degree " + std::to_string(n) + " exceeds the truncation " +
                                    std::to_string(X.truncation()));
      }
      const auto all = X.simplices(n);
      if (index >= all.size()) {
        throw PreconditionViolation("simplex index " + std::to_string(index) + " out of range; W_" +
                                    std::to_string(n) + " has " + std::to_string(all.size()) +
                                    " simplices");
      }
      const SimplexMatrix& x = all[index];
      const auto ez = ez_decompose(X, x);
      report.add("degree", n);
      report.add("simplex", matrix_string(X, x));
      report.add("degenerate", is_degenerate(X, x), "some off-diagonal entry is an identity");
      report.add("base", matrix_string(X, ez.base));
      report.add("surjection", ez.surjection.to_string(), "classes of the identity relation");
    };
  });

  auto* nerve_group_cmd = app.add_subcommand("nerve-group", "Nerve of a group table");
  nerve_group_cmd->add_option("TABLE", file)->required();
  nerve_group_cmd->add_option("-o,--output", out)->required();
  nerve_group_cmd->callback([&] {
    action = [&] {
      const auto G = load_kind<GroupTable>(file, report);
      const auto X = nerve_of_group(G);
      write_symset(out, X, "nerve of the group in " + fs::path(file).filename().string());
      describe(report, X);
      report.add("order", G.order(), "dimension of a group nerve is |G| - 1");
      report.add("output", out);
    };
  });

  auto* nerve_groupoid_cmd = app.add_subcommand("nerve-groupoid", "Nerve of a groupoid presentation");
  nerve_groupoid_cmd->add_option("PRES", file)->required();
  nerve_groupoid_cmd->add_option("-o,--output", out)->required();
  nerve_groupoid_cmd->callback([&] {
    action = [&] {
      const auto P = load_kind<GroupoidPresentation>(file, report);
      const auto X = nerve_of_groupoid(P);
      write_symset(out, X, "nerve of the groupoid in " + fs::path(file).filename().string());
      describe(report, X);
      report.add("p", p_invariant(X).p, kPBasis);
      report.add("output", out);
    };
  });

  auto* transporter_cmd = app.add_subcommand("transporter", "Transporter groupoid of a group and subgroups");
  transporter_cmd->add_option("SPEC", file)->required();
  transporter_cmd->add_option("-o,--output", out)->required();
  transporter_cmd->add_flag("--strict-delta", strict, "Reject a collection not closed under conjugation");
  transporter_cmd->callback([&] {
    action = [&] {
      const auto spec = load_kind<TransporterSpec>(file, report);
      const auto closed = close_under_conjugation(spec);
      const auto X = transporter_groupoid(spec, strict);
      for (const auto& P : closed.added) {
        std::string name = "{";
        for (std::size_t i = 0; i < P.size(); ++i) name += (i ? "," : "") + spec.group.name(P[i]);
        report.notes.push_back("added conjugate subgroup " + name + "}");
      }
      write_symset(out, X, "transporter groupoid of " + fs::path(file).filename().string());
      describe(report, X);
      report.add("formula_dimension", transporter_dimension_formula(spec),
                 "max over P of |P^G| * |N_G(P)|, minus one");
      report.add("output", out);
    };
  });

  auto* product_cmd = app.add_subcommand("product", "Cartesian product");
  product_cmd->add_option("A", file)->required();
  product_cmd->add_option("B", file2)->required();
  product_cmd->add_option("-o,--output", out)->required();
  product_cmd->callback([&] {
    action = [&] {
      const auto A = load_kind<TruncatedSymSet>(file, report);
      const auto B = load_kind<TruncatedSymSet>(file2, report);
      const auto X = product(A, B);
      write_symset(out, X, "product of " + fs::path(file).filename().string() + " and " +
                               fs::path(file2).filename().string());
      const int n = dimension(A);
      const int m = dimension(B);
      report.add("factor_dimensions", {n, m});
      describe(report, X);
      report.add("expected_dimension", n * m + n + m, "nm + n + m for factors of dimensions n and m");
      report.add("output", out);
    };
  });

  auto* wedge_cmd = app.add_subcommand("wedge", "One-point union of two partial groups");
  wedge_cmd->add_option("A", file)->required();
  wedge_cmd->add_option("B", file2)->required();
  wedge_cmd->add_option("-o,--output", out)->required();
  wedge_cmd->callback([&] {
    action = [&] {
      const auto A = load_kind<TruncatedSymSet>(file, report);
      const auto B = load_kind<TruncatedSymSet>(file2, report);
      const auto X = wedge(A, B);
      write_symset(out, X, "wedge of " + fs::path(file).filename().string() + " and " +
                               fs::path(file2).filename().string());
      describe(report, X);
      report.add("spiny", true, kSpinyBasis);
      report.add("output", out);
    };
  });

  auto* decompose_cmd = app.add_subcommand("decompose", "Split a partial group into wedge factors");
  decompose_cmd->add_option("FILE", file)->required();
  decompose_cmd->add_option("-o,--output", dir, "Directory for the factors");
  decompose_cmd->callback([&] {
    action = [&] {
      const auto X = load_kind<TruncatedSymSet>(file, report);
      const auto factors = wedge_decompose(X);
      report.add("factor_count", factors.size(), "co-occurrence of edges in simplices");
      Json list = Json::array();
      for (std::size_t i = 0; i < factors.size(); ++i) {
        Json f;
        f["edges"] = nonidentity_names(factors[i]);
        f["dimension"] = dimension(factors[i]);
        list.push_back(std::move(f));
      }
      report.add("factors", list);
      if (!dir.empty()) {
        prepare_dir(dir);
        for (std::size_t i = 0; i < factors.size(); ++i) {
          write_symset(numbered(dir, "factor", i), factors[i],
                       "wedge factor " + std::to_string(i) + " of " + fs::path(file).filename().string());
        }
      }
    };
  });

  auto* subgroups_cmd = app.add_subcommand("subgroups", "Im-partial subgroups of a partial group");
  subgroups_cmd->add_option("FILE", file)->required();
  auto* count_flag = subgroups_cmd->add_flag("--count", count, "Print the number only");
  auto* list_flag = subgroups_cmd->add_flag("--list", list, "Write every subgroup to a directory");
  count_flag->excludes(list_flag);
  subgroups_cmd->add_option("-o,--output", dir, "Output directory for --list");
  subgroups_cmd->callback([&] {
    action = [&] {
      const auto X = load_kind<TruncatedSymSet>(file, report);
      if (list) {
        if (dir.empty()) throw InvalidInput("--list needs -o DIR");
        const auto subs = impartial_subgroups(X);
        prepare_dir(dir);
        for (std::size_t i = 0; i < subs.size(); ++i) {
          write_symset(numbered(dir, "subgroup", i), subs[i].to_symset(),
                       "im-partial subgroup " + std::to_string(i) + " of " + fs::path(file).filename().string());
        }
        report.add("count", subs.size(), "nonempty symmetric subsets");
        report.add("output", dir);
      } else {
        const auto n = count_impartial_subgroups(X);
        report.add("count", n, "nonempty symmetric subsets");
        if (!json) bare = std::to_string(n);
      }
    };
  });

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Partial groups of a given cardinality up to isomorphism");
  enumerate_cmd->add_option("--card", card, "Number of edges, identity included")->required();
  enumerate_cmd->add_option("--cap", cap, "Largest cardinality allowed");
  enumerate_cmd->add_option("-o,--output", dir)->required();
  enumerate_cmd->callback([&] {
    action = [&] {
      const auto classes = enumerate_partial_groups(card, cap);
      prepare_dir(dir);
      Json list = Json::array();
      for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto& X = classes[i].representative;
        write_symset(numbered(dir, "class", i), X, "class key " + classes[i].key);
        Json c;
        c["key"] = classes[i].key;
        c["dimension"] = dimension(X);
        c["group"] = is_group(X);
        list.push_back(std::move(c));
      }
      report.add("count", classes.size(), "isomorphism classes");
      report.add("classes", list);
      report.add("output", dir);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  report.command = app.get_subcommands().front()->get_name();

  try {
    action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (json) {
      Json out;
      out["command"] = report.command;
      out["status"] = kind_name(e.kind());
      out["error"] = e.what();
      std::cout << out.dump(2) << "\n";
    }
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  if (!bare.empty()) {
    std::cout << bare << "\n";
  } else {
    report.print(json);
  }
  return 0;
}
