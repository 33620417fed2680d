#include "dknot/json_io.hpp"

#include <fstream>
#include <sstream>

namespace dknot {

namespace {

std::string int_to_string(const Int& v) { return v.get_str(); }

Json rat_entry(const Rat& v) { return rat_to_string(v); }

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return parse_int(j.get<std::string>());
  throw ParseError("expected an integer");
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(Int(static_cast<long>(j.get<long long>())));
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw ParseError("expected an integer or \"p/q\" string");
}

std::vector<Rat> rat_vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  std::vector<Rat> v;
  for (const auto& e : j) v.push_back(rat_from_json(e));
  return v;
}

Json rat_vector_to_json(const std::vector<Rat>& v) {
  Json a = Json::array();
  for (const Rat& e : v) a.push_back(rat_entry(e));
  return a;
}

Parity parity_from_json(const Json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "odd") return Parity::odd;
    if (s == "even") return Parity::even;
  }
  throw ParseError("n_parity must be \"odd\" or \"even\"");
}

const char* parity_name(Parity p) {
  return p == Parity::odd ? "odd" : "even";
}

template <typename C>
Json laurent_json(const LaurentPoly<C>& p,
                  std::string (*coeff_str)(const C&)) {
  Json j = Json::object();
  for (const auto& [exp, coef] : p.coeffs()) {
    j[std::to_string(exp)] = coeff_str(coef);
  }
  return j;
}

std::string rat_coeff_str(const Rat& v) { return rat_to_string(v); }

}  // namespace

Json laurent_to_json(const IntLaurent& p) {
  return laurent_json<Int>(p, +[](const Int& v) { return v.get_str(); });
}

Json laurent_to_json(const RatLaurent& p) {
  return laurent_json<Rat>(p, +[](const Rat& v) { return rat_to_string(v); });
}

Json rational_function_to_json(const RationalFunction& f) {
  Json j = Json::object();
  j["num"] = laurent_to_json(f.num());
  j["den"] = laurent_to_json(f.den());
  return j;
}

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Int& v = m.at(i, j);
      if (v.fits_slong_p()) {
        row.push_back(static_cast<long long>(v.get_si()));
      } else {
        row.push_back(v.get_str());
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Json matrix_to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_entry(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json seifert_to_json(const SeifertData& s) {
  Json j = Json::object();
  j["n_parity"] = parity_name(s.n_parity);
  j["theta"] = matrix_to_json(s.theta);
  return j;
}

Json qseifert_to_json(const QSeifert& s) {
  Json j = Json::object();
  j["n_parity"] = parity_name(s.n_parity);
  j["theta"] = matrix_to_json(s.theta);
  return j;
}

Json move_to_json(const Move& m) {
  Json j = Json::object();
  std::visit(
      [&](const auto& mv) {
        using T = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<T, CongruenceMove>) {
          j["kind"] = "congruence";
          j["p"] = matrix_to_json(mv.p);
          j["ring"] = mv.ring == Ring::integer ? "integer" : "rational";
        } else if constexpr (std::is_same_v<T, RowEnlargeMove>) {
          j["kind"] = "row_enlarge";
          j["x"] = rat_entry(mv.x);
          j["u"] = rat_vector_to_json(mv.u);
          j["v"] = rat_vector_to_json(mv.v);
        } else if constexpr (std::is_same_v<T, ColEnlargeMove>) {
          j["kind"] = "col_enlarge";
          j["x"] = rat_entry(mv.x);
          j["v"] = rat_vector_to_json(mv.v);
          j["u"] = rat_vector_to_json(mv.u);
        } else if constexpr (std::is_same_v<T, RowReduceMove>) {
          j["kind"] = "row_reduce";
        } else if constexpr (std::is_same_v<T, ColReduceMove>) {
          j["kind"] = "col_reduce";
        } else if constexpr (std::is_same_v<T, SurgeryEnlargeMove>) {
          j["kind"] = "surgery_enlarge";
          j["eta"] = rat_vector_to_json(mv.eta);
          j["xi"] = rat_vector_to_json(mv.xi);
          j["x"] = rat_entry(mv.x);
          j["x_prime"] = rat_entry(mv.x_prime);
          j["y"] = rat_entry(mv.y);
        }
      },
      m);
  return j;
}

Json trace_to_json(const MoveTrace& t) {
  Json j = Json::object();
  j["start"] = qseifert_to_json(t.start);
  Json moves = Json::array();
  for (const Move& m : t.moves) moves.push_back(move_to_json(m));
  j["moves"] = std::move(moves);
  j["end"] = qseifert_to_json(t.end);
  return j;
}

Json validity_to_json(const ValidityReport& r) {
  Json j = Json::object();
  j["r_nondegenerate"] = r.r_nondegenerate;
  j["tau_integral"] = r.tau_integral;
  j["mu_integral"] = r.mu_integral;
  j["dimension_ok"] = r.dimension_ok;
  j["is_sphere_matrix"] = r.is_sphere_matrix;
  j["verdict"] = r.verdict;
  if (!r.verdict) j["failure_reason"] = r.failure_reason();
  return j;
}

Json obstruction_to_json(const ObstructionReport& r) {
  Json j = Json::object();
  j["dim_even"] = r.dim_even;
  if (r.signature_zero.has_value()) {
    j["signature_zero"] = *r.signature_zero;
  } else {
    j["signature_zero"] = nullptr;
  }
  j["fox_milnor"] = r.fox_milnor;
  j["det_at_minus_one_square"] = r.det_at_minus_one_square;
  j["verdict"] = r.verdict_string();
  return j;
}

Json blanchfield_to_json(const BlanchfieldForm& b) {
  Json j = Json::object();
  j["n_parity"] = parity_name(b.n_parity);
  Json pres = Json::array();
  for (std::size_t i = 0; i < b.presentation.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < b.presentation.cols(); ++c) {
      row.push_back(laurent_to_json(b.presentation.at(i, c)));
    }
    pres.push_back(std::move(row));
  }
  j["presentation"] = std::move(pres);
  Json pairing = Json::array();
  for (std::size_t i = 0; i < b.pairing.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < b.pairing.cols(); ++c) {
      row.push_back(rational_function_to_json(b.pairing.at(i, c)));
    }
    pairing.push_back(std::move(row));
  }
  j["pairing"] = std::move(pairing);
  return j;
}

Json torsion_module_to_json(const FiniteTorsionModule& m) {
  Json j = Json::object();
  Json diag = Json::array();
  for (const Int& d : m.smith_diagonal) diag.push_back(int_to_string(d));
  j["smith_diagonal"] = std::move(diag);
  j["t_action"] = matrix_to_json(m.t_action);
  j["m_exponent"] = int_to_string(m.m_exponent);
  j["t_order"] = m.t_order;
  j["order"] = int_to_string(m.group_order());
  return j;
}

Json pairing_table_to_json(const FLPairingTable& t) {
  Json j = Json::object();
  Json orders = Json::array();
  for (const Int& d : t.orders) orders.push_back(int_to_string(d));
  j["orders"] = std::move(orders);
  j["values"] = matrix_to_json(t.values);
  return j;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
}

namespace {

IntMatrix int_matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("theta must be an array of rows");
  std::size_t rows = j.size();
  std::size_t cols = rows == 0 ? 0 : j.at(0).size();
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& row = j.at(i);
    if (!row.is_array() || row.size() != cols) {
      throw ParseError("matrix rows must all have the same length");
    }
    for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = int_from_json(row.at(c));
  }
  if (rows != cols) throw ParseError("matrix must be square");
  return m;
}

RatMatrix rat_matrix_from_json(const Json& j, bool require_square) {
  if (!j.is_array()) throw ParseError("expected an array of rows");
  std::size_t rows = j.size();
  std::size_t cols = rows == 0 ? 0 : j.at(0).size();
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& row = j.at(i);
    if (!row.is_array() || row.size() != cols) {
      throw ParseError("matrix rows must all have the same length");
    }
    for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = rat_from_json(row.at(c));
  }
  if (require_square && rows != cols) throw ParseError("matrix must be square");
  return m;
}

const Json& require_field(const Json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) {
    throw ParseError(std::string("missing field \"") + name + "\"");
  }
  return *it;
}

}  // namespace

SeifertData seifert_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("Seifert data must be a JSON object");
  SeifertData s;
  s.n_parity = parity_from_json(require_field(j, "n_parity"));
  s.theta = int_matrix_from_json(require_field(j, "theta"));
  return s;
}

QSeifert qseifert_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("Seifert data must be a JSON object");
  QSeifert s;
  s.n_parity = parity_from_json(require_field(j, "n_parity"));
  s.theta = rat_matrix_from_json(require_field(j, "theta"), true);
  return s;
}

Move move_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("move must be a JSON object");
  std::string kind = require_field(j, "kind").get<std::string>();
  if (kind == "congruence") {
    CongruenceMove m;
    m.p = rat_matrix_from_json(require_field(j, "p"), true);
    std::string ring = require_field(j, "ring").get<std::string>();
    if (ring == "integer") {
      m.ring = Ring::integer;
    } else if (ring == "rational") {
      m.ring = Ring::rational;
    } else {
      throw ParseError("ring must be \"integer\" or \"rational\"");
    }
    return m;
  }
  if (kind == "row_enlarge") {
    RowEnlargeMove m;
    m.x = rat_from_json(require_field(j, "x"));
    m.u = rat_vector_from_json(require_field(j, "u"));
    m.v = rat_vector_from_json(require_field(j, "v"));
    return m;
  }
  if (kind == "col_enlarge") {
    ColEnlargeMove m;
    m.x = rat_from_json(require_field(j, "x"));
    m.v = rat_vector_from_json(require_field(j, "v"));
    m.u = rat_vector_from_json(require_field(j, "u"));
    return m;
  }
  if (kind == "row_reduce") return RowReduceMove{};
  if (kind == "col_reduce") return ColReduceMove{};
  if (kind == "surgery_enlarge") {
    SurgeryEnlargeMove m;
    m.eta = rat_vector_from_json(require_field(j, "eta"));
    m.xi = rat_vector_from_json(require_field(j, "xi"));
    m.x = rat_from_json(require_field(j, "x"));
    m.x_prime = rat_from_json(require_field(j, "x_prime"));
    m.y = rat_from_json(require_field(j, "y"));
    return m;
  }
  throw ParseError("unknown move kind \"" + kind + "\"");
}

MoveTrace trace_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("trace must be a JSON object");
  MoveTrace t;
  t.start = qseifert_from_json(require_field(j, "start"));
  const Json& moves = require_field(j, "moves");
  if (!moves.is_array()) throw ParseError("moves must be an array");
  for (const auto& m : moves) t.moves.push_back(move_from_json(m));
  t.end = qseifert_from_json(require_field(j, "end"));
  return t;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

SeifertData load_seifert_file(const std::string& path) {
  return seifert_from_json(parse_json_text(read_file(path)));
}

MoveTrace load_trace_file(const std::string& path) {
  return trace_from_json(parse_json_text(read_file(path)));
}

std::string render_report(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace dknot
