#include "nilcoh/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace nilcoh {

namespace {

Int int_from_json(const Json& j, const std::string& what) {
  if (j.is_number_integer())
    return Int(j.get<long long>());
  if (j.is_string())
    return parse_int(j.get<std::string>());
  throw InputError(what + ": expected an integer or decimal string");
}

Rat rat_from_json(const Json& j, const std::string& what) {
  if (j.is_number_integer())
    return Rat(j.get<long long>());
  if (j.is_string())
    return parse_rat(j.get<std::string>());
  throw InputError(what + ": expected a rational string \"p/q\"");
}

std::vector<Int> int_vector_from_json(const Json& j, const std::string& what) {
  if (!j.is_array())
    throw InputError(what + ": expected an array");
  std::vector<Int> out;
  out.reserve(j.size());
  for (const auto& v : j)
    out.push_back(int_from_json(v, what));
  return out;
}

Json int_vector_to_json(std::span<const Int> v) {
  Json out = Json::array();
  for (const Int& x : v)
    out.push_back(x.str());
  return out;
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& what) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw InputError("malformed JSON in " + what);
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path);
}

Json element_to_json(const GroupElement& r) {
  Json j;
  j["n"] = r.rank();
  j["coords"] = int_vector_to_json(r.coords());
  return j;
}

GroupElement element_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("coords"))
    throw InputError("group element: expected {\"n\":..., \"coords\":[...]}");
  int n = j["n"].get<int>();
  std::vector<Int> coords = int_vector_from_json(j["coords"], "group element coords");
  if (coords.size() != static_cast<std::size_t>(n) + central_dim(n))
    throw InputError("group element: coordinate vector has wrong length");
  return GroupElement(n, std::move(coords));
}

Json exponent_to_json(const CircleExponent& x) {
  Json j;
  j["rat"] = rat_str_wire(x.rational_part());
  Json irr = Json::object();
  for (const auto& [name, coeff] : x.irrational_parts())
    irr[name] = rat_str_wire(coeff);
  j["irr"] = irr;
  return j;
}

CircleExponent exponent_from_json(const Json& j) {
  if (j.is_string() || j.is_number_integer())
    return CircleExponent(rat_from_json(j, "exponent"));
  if (!j.is_object())
    throw InputError("circle exponent: expected {\"rat\":\"p/q\", \"irr\":{...}}");
  Rat rat(0);
  if (j.contains("rat"))
    rat = rat_from_json(j["rat"], "exponent rational part");
  std::map<std::string, Rat> irr;
  if (j.contains("irr")) {
    if (!j["irr"].is_object())
      throw InputError("circle exponent: \"irr\" must map symbols to rationals");
    for (const auto& [name, coeff] : j["irr"].items())
      irr[name] = rat_from_json(coeff, "coefficient of '" + name + "'");
  }
  return CircleExponent(std::move(rat), std::move(irr));
}

Json params_to_json(const CocycleParams& params) {
  Json j;
  j["n"] = params.rank();
  j["basis"] = params.basis().symbols();
  Json list = Json::array();
  for (const FreeIndex& idx : free_param_indices(params.rank())) {
    const CircleExponent& value = params.free_entry(idx.i, idx.j, idx.k);
    if (value == CircleExponent())
      continue;
    Json entry;
    entry["i"] = idx.i;
    entry["j"] = idx.j;
    entry["k"] = idx.k;
    entry["t"] = exponent_to_json(value);
    list.push_back(entry);
  }
  j["params"] = list;
  return j;
}

CocycleParams params_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n"))
    throw InputError("parameter file: expected an object with \"n\"");
  int n = j["n"].get<int>();
  if (n < 1)
    throw InputError("parameter file: rank must be >= 1");
  std::vector<std::string> symbols;
  if (j.contains("basis")) {
    if (!j["basis"].is_array())
      throw InputError("parameter file: \"basis\" must be an array of names");
    for (const auto& s : j["basis"])
      symbols.push_back(s.get<std::string>());
  }
  CocycleParams params(n, IrrationalBasis(symbols));
  if (!j.contains("params"))
    return params;
  if (!j["params"].is_array())
    throw InputError("parameter file: \"params\" must be an array");
  std::set<std::tuple<int, int, int>> seen;
  for (const auto& entry : j["params"]) {
    if (!entry.is_object() || !entry.contains("i") || !entry.contains("j") ||
        !entry.contains("k") || !entry.contains("t"))
      throw InputError("parameter entry: expected {\"i\",\"j\",\"k\",\"t\"}");
    int i = entry["i"].get<int>();
    int jj = entry["j"].get<int>();
    int kk = entry["k"].get<int>();
    if (!(1 <= jj && jj < kk && kk <= n))
      throw InputError("parameter entry: (" + std::to_string(jj) + "," +
                       std::to_string(kk) + ") is not a central pair for rank " +
                       std::to_string(n));
    if (i > kk)
      throw InputError("parameter entry: index i = " + std::to_string(i) +
                       " exceeds k = " + std::to_string(kk) +
                       "; entries with i > k are derived and may not be set");
    if (i < 1)
      throw InputError("parameter entry: index i must be >= 1");
    if (!seen.insert({i, jj, kk}).second)
      throw InputError("parameter entry: duplicate index (" + std::to_string(i) +
                       ",(" + std::to_string(jj) + "," + std::to_string(kk) + "))");
    CircleExponent value = exponent_from_json(entry["t"]);
    for (const auto& [name, coeff] : value.irrational_parts())
      if (!params.basis().contains(name))
        throw InputError("parameter entry uses symbol '" + name +
                         "' missing from the basis");
    params.set(i, jj, kk, std::move(value));
  }
  return params;
}

CocycleParams load_params_file(const std::string& path) {
  return params_from_json(load_json_file(path));
}

Json matrix_to_json(const IntegerMatrix& m) {
  // explicit shape: a plain row list cannot represent 0 x c
  Json j;
  j["shape"] = Json::array({m.rows(), m.cols()});
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back(m.at(r, c).str());
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

IntegerMatrix matrix_from_json(const Json& j) {
  const Json* rows_json = &j;
  std::size_t rows = 0, cols = 0;
  bool shaped = false;
  if (j.is_object()) {
    if (!j.contains("shape") || !j.contains("rows") || !j["shape"].is_array() ||
        j["shape"].size() != 2)
      throw InputError("matrix: expected {\"shape\":[r,c],\"rows\":[...]} or an array");
    rows = j["shape"][0].get<std::size_t>();
    cols = j["shape"][1].get<std::size_t>();
    rows_json = &j["rows"];
    shaped = true;
  }
  if (!rows_json->is_array())
    throw InputError("matrix: expected an array of rows");
  if (shaped && rows_json->size() != rows)
    throw InputError("matrix: row count does not match shape");
  if (!shaped)
    rows = rows_json->size();
  std::vector<Int> data;
  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<Int> row = int_vector_from_json((*rows_json)[r], "matrix row");
    if (r == 0 && !shaped)
      cols = row.size();
    else if (row.size() != cols)
      throw InputError("matrix: ragged rows");
    data.insert(data.end(), row.begin(), row.end());
  }
  return IntegerMatrix(rows, cols, std::move(data));
}

IntegerMatrix load_matrix_file(const std::string& path) {
  return matrix_from_json(load_json_file(path));
}

Json lattice_to_json(const LatticeBasis& basis) {
  Json rows = Json::array();
  for (const auto& row : basis.rows())
    rows.push_back(int_vector_to_json(row));
  return rows;
}

namespace {

LatticeBasis lattice_from_json(const Json& j, std::size_t dim) {
  if (!j.is_array())
    throw InputError("lattice basis: expected an array of rows");
  std::vector<std::vector<Int>> rows;
  for (const auto& row : j) {
    std::vector<Int> v = int_vector_from_json(row, "lattice row");
    if (v.size() != dim)
      throw InputError("lattice basis: row has wrong dimension");
    rows.push_back(std::move(v));
  }
  return LatticeBasis(dim, std::move(rows));
}

}  // namespace

Json certificate_to_json(const SimplicityCertificate& cert) {
  Json j;
  j["n"] = cert.n;
  j["verdict"] = cert.simple ? "simple" : "not_simple";
  j["center_rank"] = cert.center_rank();
  j["center"] = "C(T^" + std::to_string(cert.center_rank()) + ")";
  j["s_basis"] = lattice_to_json(cert.s_basis);
  j["witness"] = int_vector_to_json(cert.witness);
  Json proof;
  proof["symbols"] = cert.symbol_order;
  proof["symbol_matrix"] = matrix_to_json(cert.symbol_matrix);
  Json snf;
  snf["U"] = matrix_to_json(cert.symbol_snf.U);
  snf["D"] = matrix_to_json(cert.symbol_snf.D);
  snf["V"] = matrix_to_json(cert.symbol_snf.V);
  proof["symbol_snf"] = snf;
  proof["symbol_kernel"] = lattice_to_json(cert.symbol_kernel);
  proof["preimage_numerators"] = matrix_to_json(cert.preimage_numerators);
  proof["preimage_denominator"] = cert.preimage_denominator.str();
  j["proof"] = proof;
  return j;
}

SimplicityCertificate certificate_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("verdict") ||
      !j.contains("s_basis") || !j.contains("witness") || !j.contains("proof"))
    throw InputError("certificate: missing required fields");
  SimplicityCertificate cert;
  cert.n = j["n"].get<int>();
  if (cert.n < 1)
    throw InputError("certificate: rank must be >= 1");
  std::string verdict = j["verdict"].get<std::string>();
  if (verdict != "simple" && verdict != "not_simple")
    throw InputError("certificate: verdict must be \"simple\" or \"not_simple\"");
  cert.simple = verdict == "simple";
  const std::size_t m = central_dim(cert.n);
  cert.s_basis = lattice_from_json(j["s_basis"], m);
  cert.witness = int_vector_from_json(j["witness"], "witness");
  if (!cert.witness.empty() && cert.witness.size() != m)
    throw InputError("certificate: witness has wrong dimension");
  const Json& proof = j["proof"];
  if (!proof.is_object())
    throw InputError("certificate: \"proof\" must be an object");
  if (proof.contains("symbols"))
    for (const auto& s : proof["symbols"])
      cert.symbol_order.push_back(s.get<std::string>());
  cert.symbol_matrix = matrix_from_json(proof["symbol_matrix"]);
  cert.symbol_snf.U = matrix_from_json(proof["symbol_snf"]["U"]);
  cert.symbol_snf.D = matrix_from_json(proof["symbol_snf"]["D"]);
  cert.symbol_snf.V = matrix_from_json(proof["symbol_snf"]["V"]);
  cert.symbol_kernel = lattice_from_json(proof["symbol_kernel"], m);
  cert.preimage_numerators = matrix_from_json(proof["preimage_numerators"]);
  cert.preimage_denominator =
      int_from_json(proof["preimage_denominator"], "preimage denominator");
  return cert;
}

Json report_to_json(const Report& report) {
  Json j;
  j["title"] = report.title;
  j["pass"] = report.all_pass();
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json entry;
    entry["name"] = c.name;
    entry["pass"] = c.pass;
    if (!c.detail.empty())
      entry["detail"] = c.detail;
    checks.push_back(entry);
  }
  j["checks"] = checks;
  return j;
}

}  // namespace nilcoh
