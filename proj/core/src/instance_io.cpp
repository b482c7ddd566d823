#include "pgw/instance_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace pgw {

using nlohmann::json;

namespace {

BitVec parse_bits(const json& j, std::size_t n, const char* what) {
  const auto s = j.get<std::string>();
  if (s.size() != n)
    throw std::invalid_argument(std::string(what) + " bit string has length " +
                                std::to_string(s.size()) + ", expected " + std::to_string(n));
  return BitVec::from_string(s);
}

}  // namespace

std::string instance_to_json(const Instance& inst) {
  json j;
  j["n"] = inst.n();
  json terms = json::array();
  for (const auto& t : inst.op.terms()) {
    json jt;
    jt["x"] = t.pauli.x().to_string();
    jt["z"] = t.pauli.z().to_string();
    jt["coeff"] = t.coeff;
    if (t.group) jt["group"] = *t.group;
    terms.push_back(std::move(jt));
  }
  j["terms"] = std::move(terms);
  j["norm_upper_bound"] = inst.op.norm_override() ? json(*inst.op.norm_override()) : json(nullptr);
  j["flags"] = {{"real_symmetric", inst.flags.real_symmetric},
                {"commuting_1d", inst.flags.commuting_1d},
                {"window_width", inst.flags.window_width ? json(*inst.flags.window_width) : json(nullptr)}};
  j["seed"] = inst.seed ? json(*inst.seed) : json(nullptr);
  j["metadata"] = json::object();
  for (const auto& [k, v] : inst.metadata) j["metadata"][k] = v;
  return j.dump(2) + "\n";
}

Instance instance_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed instance JSON: ") + e.what());
  }
  try {
    const auto n = j.at("n").get<std::size_t>();
    Instance inst{PauliOperator(n), {}, std::nullopt, {}};
    for (const auto& jt : j.at("terms")) {
      PauliString p(parse_bits(jt.at("x"), n, "x"), parse_bits(jt.at("z"), n, "z"));
      const double c = jt.at("coeff").get<double>();
      if (c == 0.0) throw std::invalid_argument("term " + p.label() + " has zero coefficient");
      if (inst.op.contains(p)) throw std::invalid_argument("duplicate term " + p.label());
      std::optional<int> g;
      if (jt.contains("group") && !jt["group"].is_null()) g = jt["group"].get<int>();
      inst.op.add(p, c, g);
    }
    if (j.contains("norm_upper_bound") && !j["norm_upper_bound"].is_null())
      inst.op.set_norm_upper_bound(j["norm_upper_bound"].get<double>());
    if (j.contains("flags")) {
      const auto& f = j["flags"];
      inst.flags.real_symmetric = f.value("real_symmetric", false);
      inst.flags.commuting_1d = f.value("commuting_1d", false);
      if (f.contains("window_width") && !f["window_width"].is_null())
        inst.flags.window_width = f["window_width"].get<int>();
    }
    if (j.contains("seed") && !j["seed"].is_null()) inst.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("metadata"))
      for (const auto& [k, v] : j["metadata"].items())
        inst.metadata[k] = v.is_string() ? v.get<std::string>() : v.dump();
    validate(inst);
    return inst;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed instance JSON: ") + e.what());
  }
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

void save_instance(const Instance& inst, const std::filesystem::path& path) {
  write_text(path, instance_to_json(inst));
}

Instance load_instance(const std::filesystem::path& path) {
  return instance_from_json(read_text(path));
}

std::string kronecker_spec_to_json(const KroneckerSpec& spec) {
  json j;
  j["kind"] = "kronecker";
  j["repetitions"] = spec.repetitions;
  j["normalize"] = spec.normalize;
  json fs = json::array();
  for (const auto& a : spec.factors) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < a.cols(); ++c) row.push_back(a(r, c));
      rows.push_back(std::move(row));
    }
    fs.push_back(std::move(rows));
  }
  j["factors"] = std::move(fs);
  return j.dump(2) + "\n";
}

KroneckerSpec kronecker_spec_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    if (j.value("kind", "") != "kronecker") throw std::invalid_argument("not a Kronecker spec");
    KroneckerSpec spec;
    spec.repetitions = j.at("repetitions").get<int>();
    spec.normalize = j.value("normalize", true);
    for (const auto& rows : j.at("factors")) {
      const auto d = static_cast<Eigen::Index>(rows.size());
      Eigen::MatrixXd a(d, d);
      for (Eigen::Index r = 0; r < d; ++r) {
        if (rows[static_cast<std::size_t>(r)].size() != rows.size())
          throw std::invalid_argument("Kronecker factor is not square");
        for (Eigen::Index c = 0; c < d; ++c)
          a(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].get<double>();
      }
      spec.factors.push_back(std::move(a));
    }
    return spec;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed Kronecker spec: ") + e.what());
  }
}

std::variant<Instance, KroneckerSpec> load_any(const std::filesystem::path& path) {
  const auto text = read_text(path);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  if (j.is_object() && j.value("kind", "") == "kronecker") return kronecker_spec_from_json(text);
  return instance_from_json(text);
}

ConstraintSet load_constraints(const std::filesystem::path& path) {
  try {
    const json j = json::parse(read_text(path));
    const auto n = j.at("n").get<std::size_t>();
    ConstraintSet s(n);
    for (const auto& z : j.at("z")) s.add(parse_bits(z, n, "constraint"));
    return s;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed constraint file: ") + e.what());
  }
}

std::string constraints_to_json(const ConstraintSet& s) {
  json j;
  j["n"] = s.n();
  j["z"] = json::array();
  for (const auto& z : s.z_strings()) j["z"].push_back(z.to_string());
  return j.dump(2) + "\n";
}

}  // namespace pgw
