// Command-line front end: reads Seifert data files, runs analyses, and
// emits deterministic text or JSON reports.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dknot/json_io.hpp"

namespace {

using namespace dknot;

enum class Format { text, json };

struct Options {
  Format format = Format::text;
  std::string out_path;  // empty = stdout
  long k_max = 24;
  long m_max = 10000;
};

void emit(const Options& opt, const std::string& report) {
  if (opt.out_path.empty()) {
    std::cout << report;
    return;
  }
  std::ofstream out(opt.out_path, std::ios::binary);
  if (!out) throw Error("cannot open output file: " + opt.out_path);
  out << report;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string rat_matrix_text(const RatMatrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ", ";
      out << rat_to_string(m.at(i, j));
    }
    out << "]\n";
  }
  return out.str();
}

std::string int_matrix_text(const IntMatrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ", ";
      out << m.at(i, j).get_str();
    }
    out << "]\n";
  }
  return out.str();
}

std::string laurent_matrix_text(const IntLaurentMatrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ", ";
      out << m.at(i, j).to_string();
    }
    out << "]\n";
  }
  return out.str();
}

std::string qf_matrix_text(const QfMatrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ", ";
      out << m.at(i, j).to_string();
    }
    out << "]\n";
  }
  return out.str();
}

int run_validate(const Options& opt, const std::string& file) {
  SeifertData s = load_seifert_file(file);
  ValidityReport r = validate(s);
  std::string report;
  if (opt.format == Format::json) {
    report = render_report(validity_to_json(r));
  } else {
    std::ostringstream out;
    out << "r_nondegenerate: " << yes_no(r.r_nondegenerate) << "\n"
        << "tau_integral: " << yes_no(r.tau_integral) << "\n"
        << "mu_integral: " << yes_no(r.mu_integral) << "\n"
        << "dimension_ok: " << yes_no(r.dimension_ok) << "\n"
        << "is_sphere_matrix: " << yes_no(r.is_sphere_matrix) << "\n";
    if (r.verdict) {
      out << "verdict: valid\n";
    } else {
      out << "verdict: invalid (" << r.failure_reason() << ")\n";
    }
    report = out.str();
  }
  emit(opt, report);
  return r.verdict ? 0 : 3;
}

int run_alexander(const Options& opt, const std::string& file) {
  SeifertData s = load_seifert_file(file);
  SimilarityClass alex = alexander_polynomial(s);
  if (opt.format == Format::json) {
    Json j = Json::object();
    j["alexander"] = laurent_to_json(alex.rep);
    j["ring"] = alex.ring == Ring::integer ? "integer" : "rational";
    j["text"] = alex.to_string();
    emit(opt, render_report(j));
  } else {
    emit(opt, alex.to_string() + "\n");
  }
  return 0;
}

std::string obstruction_text(const ObstructionReport& r) {
  std::ostringstream out;
  out << "dim_even: " << yes_no(r.dim_even) << "\n";
  out << "signature_zero: "
      << (r.signature_zero ? yes_no(*r.signature_zero) : std::string("n/a"))
      << "\n";
  out << "fox_milnor: " << yes_no(r.fox_milnor) << "\n";
  out << "det_at_minus_one_square: " << yes_no(r.det_at_minus_one_square)
      << "\n";
  out << "verdict: " << r.verdict_string() << "\n";
  return out.str();
}

int run_obstruct(const Options& opt, const std::string& file) {
  SeifertData s = load_seifert_file(file);
  ObstructionReport r = obstruction_suite(s);
  emit(opt, opt.format == Format::json ? render_report(obstruction_to_json(r))
                                       : obstruction_text(r));
  return 0;
}

int run_cobordant(const Options& opt, const std::string& file_a,
                  const std::string& file_b) {
  SeifertData a = load_seifert_file(file_a);
  SeifertData b = load_seifert_file(file_b);
  ObstructionReport r = cobordant_obstructions(a, b);
  emit(opt, opt.format == Format::json ? render_report(obstruction_to_json(r))
                                       : obstruction_text(r));
  return 0;
}

int run_s_reduce(const Options& opt, const std::string& file) {
  SeifertData s = load_seifert_file(file);
  ReduceResult r = reduce_to_nonsingular(s);
  if (opt.format == Format::json) {
    Json j = Json::object();
    j["zero_module"] = r.zero_module;
    j["nonsingular"] = qseifert_to_json(r.nonsingular);
    j["trace"] = trace_to_json(r.trace);
    emit(opt, render_report(j));
  } else {
    std::ostringstream out;
    out << "zero_module: " << yes_no(r.zero_module) << "\n";
    out << "moves: " << r.trace.moves.size() << "\n";
    out << "nonsingular theta ("
        << r.nonsingular.dim() << "x" << r.nonsingular.dim() << "):\n"
        << rat_matrix_text(r.nonsingular.theta);
    emit(opt, out.str());
  }
  return 0;
}

int run_replay(const Options& opt, const std::string& file) {
  MoveTrace trace = load_trace_file(file);
  QSeifert end = replay(trace);
  if (opt.format == Format::json) {
    Json j = Json::object();
    j["replayed"] = true;
    j["end"] = qseifert_to_json(end);
    emit(opt, render_report(j));
  } else {
    std::ostringstream out;
    out << "replayed: yes\n"
        << "end theta (" << end.dim() << "x" << end.dim() << "):\n"
        << rat_matrix_text(end.theta);
    emit(opt, out.str());
  }
  return 0;
}

int run_blanchfield(const Options& opt, const std::string& file) {
  SeifertData s = load_seifert_file(file);
  BlanchfieldForm b = blanchfield_form(s);
  if (opt.format == Format::json) {
    emit(opt, render_report(blanchfield_to_json(b)));
  } else {
    std::ostringstream out;
    out << "presentation:\n" << laurent_matrix_text(b.presentation);
    out << "pairing:\n" << qf_matrix_text(b.pairing);
    emit(opt, out.str());
  }
  return 0;
}

int run_trace_form(const Options& opt, const std::string& file) {
  SeifertData s = load_seifert_file(file);
  RatMatrix t = trace_form(blanchfield_form(s));
  if (opt.format == Format::json) {
    Json j = Json::object();
    j["trace_form"] = matrix_to_json(t);
    emit(opt, render_report(j));
  } else {
    emit(opt, rat_matrix_text(t));
  }
  return 0;
}

int run_farber_levine(const Options& opt, const std::string& file) {
  SeifertData s = load_seifert_file(file);
  FlBounds bounds;
  bounds.k_max = opt.k_max;
  bounds.m_max = opt.m_max;
  FiniteTorsionModule mod = torsion_module(s, bounds);
  FLPairingTable table = fl_pairing(s, mod);
  if (opt.format == Format::json) {
    Json j = Json::object();
    j["module"] = torsion_module_to_json(mod);
    j["pairing"] = pairing_table_to_json(table);
    emit(opt, render_report(j));
  } else {
    std::ostringstream out;
    out << "group order: " << mod.group_order().get_str() << "\n";
    out << "invariant factors: [";
    for (std::size_t i = 0; i < mod.smith_diagonal.size(); ++i) {
      if (i) out << ", ";
      out << mod.smith_diagonal[i].get_str();
    }
    out << "]\n";
    out << "exponent m: " << mod.m_exponent.get_str() << "\n";
    out << "t-order k: " << mod.t_order << "\n";
    out << "t-action:\n" << int_matrix_text(mod.t_action);
    out << "pairing table (values in Q/Z):\n" << rat_matrix_text(table.values);
    emit(opt, out.str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic calculator for Seifert-matrix invariants of "
               "disk and sphere knots"};
  app.require_subcommand(1);

  Options opt;
  std::string format_name = "text";
  app.add_option("--format", format_name, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", opt.out_path, "Write the report to PATH");
  app.add_option("--k-max", opt.k_max, "Stabilization bound for t-power quotients");
  app.add_option("--m-max", opt.m_max, "Largest permitted module exponent");

  std::string file_a, file_b;
  auto* c_validate =
      app.add_subcommand("validate", "Check the disk-knot matrix conditions");
  c_validate->add_option("file", file_a, "Seifert data file")->required();
  auto* c_alexander =
      app.add_subcommand("alexander", "Alexander polynomial (unit-normalized)");
  c_alexander->add_option("file", file_a, "Seifert data file")->required();
  auto* c_obstruct =
      app.add_subcommand("obstruct", "Obstructions to null-cobordance");
  c_obstruct->add_option("file", file_a, "Seifert data file")->required();
  auto* c_cobordant =
      app.add_subcommand("cobordant", "Obstructions to cobordance of two knots");
  c_cobordant->add_option("file_a", file_a, "First Seifert data file")
      ->required();
  c_cobordant->add_option("file_b", file_b, "Second Seifert data file")
      ->required();
  auto* c_reduce = app.add_subcommand(
      "s-reduce", "Reduce to a nonsingular representative by recorded moves");
  c_reduce->add_option("file", file_a, "Seifert data file")->required();
  auto* c_replay =
      app.add_subcommand("replay", "Replay a recorded move trace and verify it");
  c_replay->add_option("file", file_a, "Move trace file")->required();
  auto* c_blanchfield = app.add_subcommand(
      "blanchfield", "Presentation and pairing matrices of the knot module");
  c_blanchfield->add_option("file", file_a, "Seifert data file")->required();
  auto* c_trace_form = app.add_subcommand(
      "trace-form", "Trace of the pairing matrix (rational scalar form)");
  c_trace_form->add_option("file", file_a, "Seifert data file")->required();
  auto* c_fl = app.add_subcommand(
      "farber-levine", "Finite torsion module and its linking pairing");
  c_fl->add_option("file", file_a, "Seifert data file")->required();

  // Allow the global flags to appear after the subcommand as well.
  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (format_name == "json") opt.format = Format::json;

  try {
    if (c_validate->parsed()) return run_validate(opt, file_a);
    if (c_alexander->parsed()) return run_alexander(opt, file_a);
    if (c_obstruct->parsed()) return run_obstruct(opt, file_a);
    if (c_cobordant->parsed()) return run_cobordant(opt, file_a, file_b);
    if (c_reduce->parsed()) return run_s_reduce(opt, file_a);
    if (c_replay->parsed()) return run_replay(opt, file_a);
    if (c_blanchfield->parsed()) return run_blanchfield(opt, file_a);
    if (c_trace_form->parsed()) return run_trace_form(opt, file_a);
    if (c_fl->parsed()) return run_farber_levine(opt, file_a);
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const InvalidCandidate& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const BoundExceeded& e) {
    std::cerr << e.what() << "\n";
    return 4;
  } catch (const InfiniteModule& e) {
    std::cerr << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 2;
}
