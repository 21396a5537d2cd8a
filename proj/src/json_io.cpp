#include "matgeg/json_io.hpp"

#include "matgeg/errors.hpp"

namespace matgeg {

json to_json(const RatFunc& f) { return f.to_string(); }

RatFunc ratfunc_from_json(const json& j) {
  if (j.is_string()) return RatFunc::parse(j.get<std::string>());
  if (j.is_number_integer()) return RatFunc(j.get<long>());
  throw ParseError("expected a rational function string, got " + j.dump());
}

json to_json(const Mat& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.size(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.size(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat mat_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  const std::size_t n = j.size();
  Mat m(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != n) throw ParseError("matrix must be square");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = ratfunc_from_json(j[r][c]);
  }
  return m;
}

json to_json(const MatPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
  return json{{"size", p.size()}, {"coeffs", std::move(coeffs)}};
}

MatPoly matpoly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("size") || !j.contains("coeffs")) throw ParseError("MatPoly needs size and coeffs");
  const std::size_t n = j.at("size").get<std::size_t>();
  std::vector<Mat> coeffs;
  for (const auto& c : j.at("coeffs")) {
    Mat m = mat_from_json(c);
    if (m.size() != n) throw SizeMismatch("MatPoly coefficient has the wrong size");
    coeffs.push_back(std::move(m));
  }
  return MatPoly(n, std::move(coeffs));
}

json to_json(const DiffOp& d) {
  json coeffs = json::array();
  for (const auto& c : d.coeffs()) coeffs.push_back(to_json(c));
  return json{{"order", d.is_zero() ? -1 : d.order()}, {"coeffs", std::move(coeffs)}};
}

DiffOp diffop_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs")) throw ParseError("DiffOp needs coeffs");
  std::vector<MatPoly> coeffs;
  std::size_t n = j.value("size", std::size_t{2});
  for (const auto& c : j.at("coeffs")) coeffs.push_back(matpoly_from_json(c));
  if (!coeffs.empty()) n = coeffs.front().size();
  for (const auto& c : coeffs)
    if (c.size() != n) throw SizeMismatch("DiffOp coefficients of different sizes");
  DiffOp d(n, std::move(coeffs));
  if (j.contains("order") && j.at("order").get<int>() != (d.is_zero() ? -1 : d.order()))
    throw ParseError("declared order does not match the coefficients");
  return d;
}

json to_json(const UniPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

json to_json(const SpanDecomp& s) {
  json table = json::array();
  for (const auto& [key, c] : s.table) table.push_back({{"i", key.first}, {"j", key.second}, {"coeff", to_json(c)}});
  return json{{"const", to_json(s.const_term)}, {"table", std::move(table)}};
}

json to_json(const CenterDecomp& c) { return json{{"p", to_json(c.p_poly)}, {"q", to_json(c.q_poly)}}; }

json to_json(const AlgElem& x) {
  return json{{"I", to_json(x.m[0])}, {"BB", to_json(x.m[1])}, {"B", to_json(x.m[2])}, {"BA", to_json(x.m[3])}};
}

json to_json(const Bindings& b) {
  json o = json::object();
  for (const auto& [v, q] : b) o[std::string(var_name(v))] = to_string(q);
  return o;
}

}  // namespace matgeg
