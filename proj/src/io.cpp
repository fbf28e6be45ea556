#include "dho/io.hpp"

#include <fstream>
#include <sstream>

namespace dho::io {

namespace {

template <class T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::ParseError, std::string("missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("bad value for '") + key + "': " + e.what());
  }
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, Eigen::Index cols, const Field& f) {
  if (!j.is_array()) fail(ErrorKind::ParseError, "matrix must be an array of rows");
  Matrix m(static_cast<Eigen::Index>(j.size()), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json& row = j[i];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      fail(ErrorKind::ParseError, "matrix row has the wrong length");
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!row[c].is_number_integer() || row[c].get<std::int64_t>() < 0 || row[c].get<std::uint64_t>() >= f.order()) {
        fail(ErrorKind::ParseError, "matrix entry is not a valid element index");
      }
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = row[c].get<Elem>();
    }
  }
  return m;
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

}  // namespace

Json to_json(const Field& f) {
  return Json{{"p", f.characteristic()}, {"k", f.degree()}, {"modulus", f.modulus()}};
}

Field field_from_json(const Json& j) {
  return Field::make(get<std::uint32_t>(j, "p"), get<std::uint32_t>(j, "k"),
                     get<std::vector<std::uint32_t>>(j, "modulus"));
}

Json to_json(const Subspace& s) {
  return Json{{"field", to_json(s.field())}, {"ambient_dim", s.ambient_dim()}, {"basis", matrix_to_json(s.basis())}};
}

Subspace subspace_from_json(const Json& j) {
  const Field f = field_from_json(get<Json>(j, "field"));
  const auto n = get<Eigen::Index>(j, "ambient_dim");
  if (n < 0) fail(ErrorKind::ParseError, "negative ambient dimension");
  Matrix basis = matrix_from_json(get<Json>(j, "basis"), n, f);
  return Subspace::from_canonical(f, std::move(basis));
}

Json to_json(const FormSpec& form) {
  return Json{{"kind", std::string(to_string(form.kind))},
              {"field", to_json(form.field)},
              {"ambient_dim", form.ambient_dim},
              {"gram", matrix_to_json(form.gram)},
              {"quad_coeffs", vector_to_json(form.quad_coeffs)},
              {"conj_exponent", form.conj_exponent}};
}

FormSpec form_from_json(const Json& j) {
  FormSpec form;
  form.kind = form_kind_from_string(get<std::string>(j, "kind"));
  form.field = field_from_json(get<Json>(j, "field"));
  form.ambient_dim = get<Eigen::Index>(j, "ambient_dim");
  form.gram = matrix_from_json(get<Json>(j, "gram"), form.ambient_dim, form.field);
  const auto coeffs = get<std::vector<Elem>>(j, "quad_coeffs");
  form.quad_coeffs = Vector(static_cast<Eigen::Index>(coeffs.size()));
  for (std::size_t i = 0; i < coeffs.size(); ++i) form.quad_coeffs(static_cast<Eigen::Index>(i)) = coeffs[i];
  form.conj_exponent = get<int>(j, "conj_exponent");
  validate(form);
  return form;
}

Json to_json(const DualArc& arc) {
  Json members = Json::array();
  for (const auto& s : arc.members()) members.push_back(to_json(s));
  return Json{{"field", to_json(arc.field())},
              {"ambient_dim", arc.ambient_dim()},
              {"member_dim", arc.member_dim()},
              {"members", std::move(members)}};
}

DualArc arc_from_json(const Json& j) {
  const Field f = field_from_json(get<Json>(j, "field"));
  const auto n = get<Eigen::Index>(j, "ambient_dim");
  const auto member_dim = get<Eigen::Index>(j, "member_dim");
  const Json members = get<Json>(j, "members");
  if (!members.is_array() || members.empty()) fail(ErrorKind::ParseError, "members must be a nonempty array");
  std::vector<Subspace> out;
  for (const auto& m : members) {
    Subspace s = subspace_from_json(m);
    if (!(s.field() == f) || s.ambient_dim() != n || s.dim() != member_dim) {
      fail(ErrorKind::HeterogeneousMembers, "member does not match the declared field or dimensions");
    }
    out.push_back(std::move(s));
  }
  return DualArc(std::move(out));
}

Json to_json(const ArcReport& report) {
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    Json item{{"kind", v.kind == Violation::Kind::PairDimension ? "pair_dimension" : "shared_point"},
              {"indices", v.indices}};
    if (v.kind == Violation::Kind::PairDimension) item["intersection_dim"] = v.intersection_dim;
    violations.push_back(std::move(item));
  }
  return Json{{"is_dual_arc", report.is_dual_arc}, {"violations", std::move(violations)}};
}

Json to_json(const PolarSpace& space) {
  return Json{{"family", std::string(to_string(space.family))},
              {"notation", notation(space)},
              {"rank", space.rank},
              {"q", space.base_q},
              {"s", space.s},
              {"t", space.t}};
}

Json to_json(const SearchResult& r) {
  Json out{{"space", to_json(r.space)}, {"mode", std::string(to_string(r.mode))}};
  if (r.mode == SearchMode::DistanceClique) out["target_distance"] = r.target_distance;
  if (r.mode == SearchMode::Existence) {
    out["target_size"] = r.target_size;
    out["found"] = r.found;
  }
  out["max_size_found"] = r.max_size_found;
  out["witness"] = r.witness.empty() ? Json(nullptr) : to_json(DualArc(r.witness));
  out["exhaustive"] = r.exhaustive;
  out["nodes"] = r.nodes;
  out["seconds"] = r.seconds;
  out["generators"] = r.generators;
  out["min_vanhove_sum"] = r.min_vanhove_sum ? Json(to_string(*r.min_vanhove_sum)) : Json(nullptr);
  out["certificate"] = r.certificate;
  return out;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::ParseError, e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
  out << contents;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_generators(std::ostream& out, const GeneratorSet& set) {
  for (const auto& g : set.generators) out << to_json(g).dump() << '\n';
}

void write_bound_table_csv(std::ostream& out, const std::vector<BoundRow>& rows) {
  out << "family,parameters,e,derived_bound,paper_table_bound,dho_size,excluded,discrepancy\n";
  for (const auto& r : rows) {
    const std::string printed = r.table_value ? r.table_value->str() : r.table_expression;
    out << r.notation << ",\"" << r.parameters << "\"," << r.e << ',' << r.derived_bound.str() << ',' << printed << ','
        << r.dho_size.str() << ',' << (r.excluded ? "true" : "false") << ',' << (r.discrepancy ? "true" : "false")
        << '\n';
  }
}

void write_inner_distribution_csv(std::ostream& out, const InnerDistribution& dist, std::uint64_t t) {
  out << "quantity,value\n";
  for (std::size_t i = 0; i < dist.a.size(); ++i) out << "a_" << i << ',' << to_string(dist.a[i]) << '\n';
  out << "vanhove_sum_t" << t << ',' << to_string(vanhove_sum(dist, t)) << '\n';
}

}  // namespace dho::io
