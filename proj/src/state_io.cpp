#include "qmana/state_io.hpp"

#include <fstream>

namespace qmana {

namespace {

nlohmann::json pair(cplx z) { return nlohmann::json::array({z.real(), z.imag()}); }

cplx read_pair(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw Error(ErrorKind::Parse, "expected [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

nlohmann::json to_json(const PureVector& psi, const std::vector<int>& dims) {
  nlohmann::json data = nlohmann::json::array();
  for (Eigen::Index i = 0; i < psi.dim(); ++i) data.push_back(pair(psi.amplitudes()[i]));
  return {{"dims", dims}, {"kind", "pure"}, {"data", data}};
}

nlohmann::json to_json(const DensityState& rho) {
  nlohmann::json data = nlohmann::json::array();
  for (Eigen::Index r = 0; r < rho.size(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < rho.size(); ++c) row.push_back(pair(rho.matrix()(r, c)));
    data.push_back(row);
  }
  return {{"dims", rho.dims()}, {"kind", "mixed"}, {"data", data}};
}

LoadedState state_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dims") || !j.contains("kind") || !j.contains("data"))
    throw Error(ErrorKind::Parse, "state JSON needs dims, kind and data");
  std::vector<int> dims;
  try {
    dims = j.at("dims").get<std::vector<int>>();
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorKind::Parse, "dims must be a list of integers");
  }
  const auto& data = j.at("data");
  if (!data.is_array()) throw Error(ErrorKind::Parse, "data must be an array");
  const std::string kind = j.at("kind").is_string() ? j.at("kind").get<std::string>() : "";
  if (kind == "pure") {
    ComplexVector v(static_cast<Eigen::Index>(data.size()));
    for (std::size_t i = 0; i < data.size(); ++i) v[static_cast<Eigen::Index>(i)] = read_pair(data[i]);
    PureVector psi(v);
    return {psi, psi.projector(dims)};
  }
  if (kind == "mixed") {
    const auto n = static_cast<Eigen::Index>(data.size());
    ComplexMatrix m(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
      const auto& row = data[static_cast<std::size_t>(r)];
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
        throw Error(ErrorKind::Parse, "mixed data must be a square array of rows");
      for (Eigen::Index c = 0; c < n; ++c) m(r, c) = read_pair(row[static_cast<std::size_t>(c)]);
    }
    return {std::nullopt, DensityState(dims, m)};
  }
  throw Error(ErrorKind::Parse, "kind must be \"pure\" or \"mixed\"");
}

LoadedState load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
  return state_from_json(j);
}

}  // namespace qmana
