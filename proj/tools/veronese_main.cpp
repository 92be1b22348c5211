// Batch front end: parse an ideal document, run one analysis, print a report.
// Exit codes: 0 affirmative/success, 1 negative verdict, 2 error.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "veronese/betti.hpp"
#include "veronese/document.hpp"
#include "veronese/formulas.hpp"
#include "veronese/geometry.hpp"
#include "veronese/linearity.hpp"
#include "veronese/ring.hpp"

using nlohmann::json;
using namespace veronese;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

struct Common {
  std::string path;
  long long field = -1;  // -1 = unset, fall back to env then default
  std::string grading = "total";
  bool json_out = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("document", c.path, "ideal document (JSON file, or - for stdin)")->required();
  cmd->add_option("--field", c.field, "coefficient field: a prime, or 0 for exact rationals");
  cmd->add_option("--grading", c.grading, "Betti table grading")
      ->check(CLI::IsMember({"fine", "block", "total"}));
  cmd->add_flag("--json", c.json_out, "emit a JSON report");
}

bool is_prime_ll(long long p) {
  if (p < 2) return false;
  for (long long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

Field resolve_field(long long flag_value) {
  long long p = 32003;
  if (const char* env = std::getenv("VERONESE_FIELD")) {
    std::string s(env);
    size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      throw SpecError("VERONESE_FIELD must be an integer, got '" + s + "'");
    }
    if (used != s.size()) throw SpecError("VERONESE_FIELD must be an integer, got '" + s + "'");
    p = v;
  }
  if (flag_value >= 0) p = flag_value;
  if (p != 0 && !is_prime_ll(p))
    throw SpecError("field characteristic must be a prime or 0, got " + std::to_string(p));
  return Field{p};
}

IdealDocument load_document(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return parse_document(buf.str());
  }
  return parse_document_file(path);
}

Grading grading_of(const std::string& name) {
  if (name == "fine") return Grading::fine;
  if (name == "block") return Grading::block;
  return Grading::total;
}

json table_json(const BettiTable& t) {
  json rows = json::array();
  for (const auto& [key, rank] : t.entries) rows.push_back(json{key.first, key.second, rank});
  return rows;
}

std::string degree_text(const std::vector<int>& deg) {
  if (deg.size() == 1) return std::to_string(deg[0]);
  std::string out = "(";
  for (size_t i = 0; i < deg.size(); ++i) out += (i ? "," : "") + std::to_string(deg[i]);
  return out + ")";
}

void print_table_text(const BettiTable& t) {
  for (const auto& [key, rank] : t.entries)
    std::cout << "beta_{" << key.first << ", " << degree_text(key.second) << "} = " << rank
              << "\n";
  if (!t.entries.empty())
    std::cout << "pdim " << t.pdim() << "  regularity " << t.regularity() << "\n";
}

std::string poly_text(const Poly& p) {
  if (p.empty()) return "0";
  std::string out;
  for (const auto& [deg, coeff] : p) {
    BigInt c = coeff;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (c < 0) c = -c;
    const bool unit_coeff = c == 1 && deg != 0;
    if (!unit_coeff) out += c.str();
    if (deg > 0) {
      if (!unit_coeff) out += "*";
      out += "t";
      if (deg > 1) out += "^" + std::to_string(deg);
    }
  }
  return out;
}

json poly_json(const Poly& p) {
  json rows = json::array();
  for (const auto& [deg, coeff] : p) rows.push_back(json{deg, coeff.str()});
  return rows;
}

void emit(const json& report, const Common& c) {
  if (c.json_out) std::cout << report.dump(2) << "\n";
}

std::vector<std::string> formatted_gens(const MonomialIdeal& ideal) {
  std::vector<std::string> out;
  out.reserve(ideal.gens().size());
  for (const auto& g : ideal.gens()) out.push_back(ideal.ring().format(g));
  return out;
}

// ---- subcommand bodies ------------------------------------------------

int run_build(const Common& c) {
  IdealDocument doc = load_document(c.path);
  MonomialIdeal ideal = build_ideal(doc);
  const char* payload = doc.veronese ? "veronese"
                        : doc.gens   ? "gens"
                        : doc.fatpoint_mults ? "fatpoints"
                                             : "complex";
  json report;
  report["command"] = "build";
  report["ring"]["blocks"] = doc.ring.blocks();
  report["ring"]["names"] = doc.ring.names();
  report["payload"] = payload;
  report["ngens"] = ideal.ngens();
  report["gens"] = formatted_gens(ideal);
  if (c.json_out) {
    emit(report, c);
    return kExitYes;
  }
  std::cout << "ring: blocks [";
  for (size_t i = 0; i < doc.ring.blocks().size(); ++i)
    std::cout << (i ? "," : "") << doc.ring.blocks()[i];
  std::cout << "], variables";
  for (const auto& name : doc.ring.names()) std::cout << " " << name;
  std::cout << "\npayload: " << payload << "\nminimal generators (" << ideal.ngens() << "):\n";
  for (const auto& g : formatted_gens(ideal)) std::cout << "  " << g << "\n";
  return kExitYes;
}

BettiTable formula_table(const IdealDocument& doc) {
  if (doc.veronese) {
    const auto& pieces = doc.veronese->pieces;
    if (pieces.size() == 1) {
      return betti_power_formula(static_cast<int>(pieces[0].support.size()), pieces[0].power);
    }
    if (pieces.size() == 2) {
      return betti_two_veronese(pieces[0].support, pieces[1].support, pieces[0].power,
                                pieces[1].power);
    }
    throw SpecError("closed forms cover one or two pieces, document has " +
                    std::to_string(pieces.size()));
  }
  if (doc.fatpoint_mults) {
    const auto& mults = *doc.fatpoint_mults;
    std::vector<int> dims;
    for (int sz : doc.ring.blocks()) dims.push_back(sz - 1);
    if (mults.size() == 1) {
      int support = 0;
      for (int d : dims) support += d;
      return betti_power_formula(support, mults[0]);
    }
    if (mults.size() == 2) return betti_two_fat_points(dims, mults[0], mults[1]);
    throw SpecError("closed forms cover at most two points, document has " +
                    std::to_string(mults.size()));
  }
  throw SpecError("no closed form for this payload; use --oracle");
}

int run_betti(const Common& c, bool formula, bool oracle) {
  if (formula == oracle) throw SpecError("pick exactly one of --formula and --oracle");
  IdealDocument doc = load_document(c.path);
  json report;
  report["command"] = "betti";
  report["route"] = formula ? "formula" : "oracle";
  BettiTable table;
  if (formula) {
    if (c.grading != "total")
      throw SpecError("closed-form tables are total-graded; drop --grading " + c.grading);
    table = formula_table(doc);
    report["grading"] = "total";
  } else {
    MonomialIdeal ideal = build_ideal(doc);
    table = betti_fine(ideal, resolve_field(c.field));
    Grading target = grading_of(c.grading);
    table = coarsen(table, target, doc.ring);
    report["grading"] = c.grading;
  }
  report["table"] = table_json(table);
  if (!table.entries.empty()) {
    report["pdim"] = table.pdim();
    report["regularity"] = table.regularity();
  }
  if (c.json_out) {
    emit(report, c);
    return kExitYes;
  }
  std::cout << "route: " << (formula ? "formula" : "oracle") << "\n";
  print_table_text(table);
  return kExitYes;
}

int run_cwl(const Common& c) {
  IdealDocument doc = load_document(c.path);
  MonomialIdeal ideal = build_ideal(doc);
  CwlReport rep = is_componentwise_linear(ideal, resolve_field(c.field));
  json report;
  report["command"] = "cwl";
  report["verdict"] = rep.verdict;
  report["min_degree"] = rep.min_degree;
  report["regularity"] = rep.regularity;
  json comps = json::array();
  for (const auto& [d, ok] : rep.components) comps.push_back(json{d, ok});
  report["components"] = comps;
  if (c.json_out) {
    emit(report, c);
    return rep.verdict ? kExitYes : kExitNo;
  }
  std::cout << "componentwise linear: " << (rep.verdict ? "yes" : "no") << "\n";
  for (const auto& [d, ok] : rep.components)
    std::cout << "  component " << d << ": " << (ok ? "linear" : "not linear") << "\n";
  return rep.verdict ? kExitYes : kExitNo;
}

json witness_json(const Ring& ring, const ExchangeWitness& w) {
  json out;
  out["u"] = ring.format(w.u);
  out["v"] = ring.format(w.v);
  out["variable"] = w.var_i + 1;
  out["variable_name"] = ring.names()[static_cast<size_t>(w.var_i)];
  json tried = json::array();
  for (const auto& [j, candidate] : w.tried)
    tried.push_back(json{j + 1, ring.format(candidate)});
  out["tried"] = tried;
  return out;
}

void print_witness_text(const Ring& ring, const ExchangeWitness& w) {
  std::cout << "witness: u = " << ring.format(w.u) << ", v = " << ring.format(w.v)
            << ", variable " << ring.names()[static_cast<size_t>(w.var_i)] << "\n";
  for (const auto& [j, candidate] : w.tried)
    std::cout << "  tried " << ring.names()[static_cast<size_t>(j)] << ": "
              << ring.format(candidate) << " not in the ideal\n";
}

int run_polymatroidal(const Common& c, int degree, bool has_degree, bool all) {
  if (has_degree == all) throw SpecError("pick exactly one of --degree and --all");
  IdealDocument doc = load_document(c.path);
  MonomialIdeal ideal = build_ideal(doc);
  json report;
  report["command"] = "polymatroidal";
  bool verdict = true;
  json entries = json::array();
  std::vector<int> degrees;
  if (has_degree) {
    degrees.push_back(degree);
  } else {
    const int alpha = ideal.min_gen_degree();
    const int reg = betti_fine(ideal, resolve_field(c.field)).regularity();
    for (int d = alpha; d <= reg; ++d) degrees.push_back(d);
    report["min_degree"] = alpha;
    report["regularity"] = reg;
  }
  std::optional<std::pair<int, ExchangeWitness>> first_witness;
  for (int d : degrees) {
    PolymatroidalResult res = is_polymatroidal(degree_component(ideal, d));
    json entry;
    entry["degree"] = d;
    entry["verdict"] = res.verdict;
    if (res.witness) {
      entry["witness"] = witness_json(doc.ring, *res.witness);
      if (!first_witness) first_witness = {d, *res.witness};
    }
    if (res.reason) entry["reason"] = *res.reason;
    entries.push_back(entry);
    verdict = verdict && res.verdict;
  }
  report["components"] = entries;
  report["verdict"] = verdict;
  if (c.json_out) {
    emit(report, c);
    return verdict ? kExitYes : kExitNo;
  }
  for (const auto& entry : entries)
    std::cout << "(I_" << entry["degree"].get<int>() << ") polymatroidal: "
              << (entry["verdict"].get<bool>() ? "yes" : "no") << "\n";
  if (first_witness) print_witness_text(doc.ring, first_witness->second);
  return verdict ? kExitYes : kExitNo;
}

int run_linear_quotients(const Common& c) {
  IdealDocument doc = load_document(c.path);
  MonomialIdeal ideal = build_ideal(doc);
  LinearQuotientsSearch search = search_linear_quotients(ideal);
  json report;
  report["command"] = "linear-quotients";
  report["determined"] = search.determined;
  const bool found = search.certificate && search.certificate->verdict;
  report["verdict"] = found;
  if (found) {
    const auto& cert = *search.certificate;
    json order = json::array();
    for (const auto& g : cert.ordered_gens) order.push_back(doc.ring.format(g));
    report["order"] = order;
    // one entry per generator; the first is always empty
    json steps = json::array();
    steps.push_back(json::array());
    for (const auto& step : cert.colon_steps) {
      json vars = json::array();
      for (const auto& m : step) vars.push_back(doc.ring.format(m));
      steps.push_back(vars);
    }
    report["colon_steps"] = steps;
  }
  if (c.json_out) {
    emit(report, c);
    return found ? kExitYes : kExitNo;
  }
  if (found) {
    const auto& cert = *search.certificate;
    std::cout << "linear quotients: found\n";
    for (size_t i = 0; i < cert.ordered_gens.size(); ++i) {
      std::cout << "  " << i + 1 << ". " << doc.ring.format(cert.ordered_gens[i]) << "  colon:";
      if (i == 0 || cert.colon_steps[i - 1].empty()) {
        std::cout << " -";
      } else {
        for (const auto& m : cert.colon_steps[i - 1]) std::cout << " " << doc.ring.format(m);
      }
      std::cout << "\n";
    }
  } else if (search.determined) {
    std::cout << "linear quotients: none (every degree-respecting order fails)\n";
  } else {
    std::cout << "linear quotients: undetermined (generator count above the exhaustive cap)\n";
  }
  return found ? kExitYes : kExitNo;
}

int run_split(const Common& c) {
  IdealDocument doc = load_document(c.path);
  if (!doc.veronese || doc.veronese->pieces.size() != 2)
    throw SpecError("split needs a document with exactly two veronese pieces");
  auto pieces = doc.veronese->pieces;
  if (pieces[0].power < pieces[1].power) std::swap(pieces[0], pieces[1]);
  MonomialIdeal ideal = veronese_ideal(doc.ring, *doc.veronese);
  SplitPair pair = build_UV_split(doc.ring, pieces[0].support, pieces[1].support,
                                  pieces[0].power, pieces[1].power);
  SplitCheck check = verify_splitting(ideal, pair);
  const bool identity = splitting_betti_identity(ideal, pair, resolve_field(c.field));
  json report;
  report["command"] = "split";
  report["U"] = formatted_gens(pair.U);
  report["V"] = formatted_gens(pair.V);
  report["intersection"] = formatted_gens(pair.intersection);
  json images = json::array();
  for (const auto& im : pair.images)
    images.push_back(json{{"w", doc.ring.format(im.w)},
                          {"phi", doc.ring.format(im.phi)},
                          {"psi", doc.ring.format(im.psi)}});
  report["images"] = images;
  report["splitting_ok"] = check.ok;
  report["exhaustive"] = check.exhaustive;
  report["subsets_checked"] = check.subsets_checked;
  if (!check.failure.empty()) report["failure"] = check.failure;
  report["betti_additivity"] = identity;
  report["verdict"] = check.ok && identity;
  if (c.json_out) {
    emit(report, c);
    return check.ok && identity ? kExitYes : kExitNo;
  }
  auto print_ideal = [&](const char* label, const MonomialIdeal& part) {
    std::cout << label << ":";
    for (const auto& g : formatted_gens(part)) std::cout << " " << g;
    std::cout << "\n";
  };
  print_ideal("U", pair.U);
  print_ideal("V", pair.V);
  print_ideal("intersection", pair.intersection);
  for (const auto& im : pair.images)
    std::cout << "  w = " << doc.ring.format(im.w) << "  phi = " << doc.ring.format(im.phi)
              << "  psi = " << doc.ring.format(im.psi) << "\n";
  std::cout << "splitting: " << (check.ok ? "ok" : "failed")
            << (check.exhaustive ? " (exhaustive over " : " (sampled over ")
            << check.subsets_checked << " subsets)\n";
  std::cout << "betti additivity: " << (identity ? "ok" : "failed") << "\n";
  return check.ok && identity ? kExitYes : kExitNo;
}

int run_dual(const Common& c) {
  IdealDocument doc = load_document(c.path);
  MonomialIdeal ideal = build_ideal(doc);
  MonomialIdeal dual = alexander_dual(ideal);
  json report;
  report["command"] = "dual";
  report["ngens"] = dual.ngens();
  report["gens"] = formatted_gens(dual);
  if (c.json_out) {
    emit(report, c);
    return kExitYes;
  }
  std::cout << "dual generators (" << dual.ngens() << "):\n";
  for (const auto& g : formatted_gens(dual)) std::cout << "  " << g << "\n";
  return kExitYes;
}

int run_seqcm(const Common& c) {
  IdealDocument doc = load_document(c.path);
  if (!doc.nonfaces) throw SpecError("seqcm needs a document with a complex payload");
  SimplicialComplexSpec spec(doc.ring.nvars(), *doc.nonfaces);
  const bool verdict = is_sequentially_cm(spec, resolve_field(c.field));
  json report;
  report["command"] = "seqcm";
  report["verdict"] = verdict;
  if (c.json_out) {
    emit(report, c);
    return verdict ? kExitYes : kExitNo;
  }
  std::cout << "sequentially Cohen-Macaulay: " << (verdict ? "yes" : "no") << "\n";
  return verdict ? kExitYes : kExitNo;
}

int run_mult_bound(const Common& c) {
  IdealDocument doc = load_document(c.path);
  MonomialIdeal ideal = build_ideal(doc);
  MultBoundReport rep = multiplicity_upper_bound_check(ideal, resolve_field(c.field));
  json report;
  report["command"] = "mult-bound";
  report["multiplicity"] = rep.mult.str();
  report["codim"] = rep.codim;
  report["max_shifts"] = rep.max_shifts;
  report["lhs"] = rep.lhs.str();
  report["rhs"] = rep.rhs.str();
  report["verdict"] = rep.holds;
  if (c.json_out) {
    emit(report, c);
    return rep.holds ? kExitYes : kExitNo;
  }
  std::cout << "multiplicity e = " << rep.mult << "\ncodim c = " << rep.codim << "\nmax shifts:";
  for (int m : rep.max_shifts) std::cout << " " << m;
  std::cout << "\nbound: e * c! = " << rep.lhs << (rep.holds ? " <= " : " > ")
            << rep.rhs << " = prod of max shifts: " << (rep.holds ? "holds" : "fails") << "\n";
  return rep.holds ? kExitYes : kExitNo;
}

int run_hilbert(const Common& c) {
  IdealDocument doc = load_document(c.path);
  MonomialIdeal ideal = build_ideal(doc);
  HilbertSummary summary = hilbert_summary(ideal);
  json report;
  report["command"] = "hilbert";
  report["numerator"] = poly_json(summary.numerator);
  report["codim"] = summary.codim;
  report["multiplicity"] = summary.mult.str();
  if (c.json_out) {
    emit(report, c);
    return kExitYes;
  }
  std::cout << "numerator: " << poly_text(summary.numerator) << "\ncodim: " << summary.codim
            << "\nmultiplicity: " << summary.mult << "\n";
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"analyses of intersections of variable-power ideals"};
  app.require_subcommand(1);

  Common c_build, c_betti, c_cwl, c_poly, c_lq, c_split, c_dual, c_seqcm, c_mult, c_hilb;
  bool betti_formula = false, betti_oracle = false;
  int poly_degree = 0;
  bool poly_all = false;

  add_common(app.add_subcommand("build", "parse a document and list the minimal generators"),
             c_build);
  CLI::App* betti = app.add_subcommand("betti", "graded Betti table");
  add_common(betti, c_betti);
  betti->add_flag("--formula", betti_formula, "closed-form route (two pieces or two points)");
  betti->add_flag("--oracle", betti_oracle, "homological route");
  add_common(app.add_subcommand("cwl", "componentwise linearity"), c_cwl);
  CLI::App* poly = app.add_subcommand("polymatroidal", "exchange property of components");
  add_common(poly, c_poly);
  CLI::Option* poly_degree_opt =
      poly->add_option("--degree", poly_degree, "check the component of this degree");
  poly->add_flag("--all", poly_all, "check every component between min degree and regularity");
  add_common(app.add_subcommand("linear-quotients", "search for a linear-quotient order"), c_lq);
  add_common(app.add_subcommand("split", "two-piece splitting with certificates"), c_split);
  add_common(app.add_subcommand("dual", "Alexander dual of a squarefree ideal"), c_dual);
  add_common(app.add_subcommand("seqcm", "sequential Cohen-Macaulayness of a complex"), c_seqcm);
  add_common(app.add_subcommand("mult-bound", "multiplicity upper bound check"), c_mult);
  add_common(app.add_subcommand("hilbert", "Hilbert series numerator and multiplicity"), c_hilb);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (app.got_subcommand("build")) return run_build(c_build);
    if (app.got_subcommand("betti")) return run_betti(c_betti, betti_formula, betti_oracle);
    if (app.got_subcommand("cwl")) return run_cwl(c_cwl);
    if (app.got_subcommand("polymatroidal"))
      return run_polymatroidal(c_poly, poly_degree, poly_degree_opt->count() > 0, poly_all);
    if (app.got_subcommand("linear-quotients")) return run_linear_quotients(c_lq);
    if (app.got_subcommand("split")) return run_split(c_split);
    if (app.got_subcommand("dual")) return run_dual(c_dual);
    if (app.got_subcommand("seqcm")) return run_seqcm(c_seqcm);
    if (app.got_subcommand("mult-bound")) return run_mult_bound(c_mult);
    if (app.got_subcommand("hilbert")) return run_hilbert(c_hilb);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  std::cerr << "error: unknown command\n";
  return kExitError;
}
