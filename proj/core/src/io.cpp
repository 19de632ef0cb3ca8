#include "rdmap/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "rdmap/errors.hpp"

namespace rdmap::io {

namespace {

namespace mk = multiplier_kind;

template <typename T>
T get_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad field '") + key + "': " + e.what());
  }
}

}  // namespace

Json to_json(const GroupDescriptor& g) {
  switch (g.kind()) {
    case GroupKind::kFree:
      return {{"kind", "free"}, {"rank", g.parameter()}};
    case GroupKind::kFreeAbelian:
      return {{"kind", "free-abelian"}, {"rank", g.parameter()}};
    case GroupKind::kCyclic:
      return {{"kind", "cyclic"}, {"order", g.parameter()}};
  }
  return {};
}

GroupDescriptor group_from_json(const Json& j) {
  if (j.is_string()) return GroupDescriptor::parse(j.get<std::string>());
  const auto kind = get_field<std::string>(j, "kind");
  try {
    if (kind == "free") return GroupDescriptor::free(get_field<int>(j, "rank"));
    if (kind == "free-abelian") return GroupDescriptor::free_abelian(get_field<int>(j, "rank"));
    if (kind == "cyclic") return GroupDescriptor::cyclic(get_field<std::int64_t>(j, "order"));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  throw ParseError("unknown group kind '" + kind + "'");
}

Json to_json(const GroupDescriptor& g, const GroupElement& x) {
  switch (g.kind()) {
    case GroupKind::kFree:
      return free_word_string(g, x);
    case GroupKind::kFreeAbelian:
      validate(g, x);
      return x.payload();
    case GroupKind::kCyclic:
      validate(g, x);
      return x.payload().front();
  }
  return {};
}

GroupElement element_from_json(const GroupDescriptor& g, const Json& j) {
  try {
    switch (g.kind()) {
      case GroupKind::kFree:
        if (!j.is_string()) throw ParseError("free group element must be a string");
        return make_free_word(g, j.get<std::string>());
      case GroupKind::kFreeAbelian:
        if (!j.is_array()) throw ParseError("free abelian element must be an integer array");
        return make_vector(g, j.get<std::vector<std::int64_t>>());
      case GroupKind::kCyclic:
        if (!j.is_number_integer()) throw ParseError("cyclic element must be an integer");
        return make_residue(g, j.get<std::int64_t>());
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad element encoding: ") + e.what());
  } catch (const GroupMismatch& e) {
    throw ParseError(e.what());
  }
  throw ParseError("unknown group kind");
}

Json terms_to_json(const GroupRingElement& f) {
  Json terms = Json::array();
  for (const auto& [x, c] : f.terms()) {
    terms.push_back({{"elem", to_json(f.group(), x)}, {"re", c.real()}, {"im", c.imag()}});
  }
  return terms;
}

GroupRingElement terms_from_json(const GroupDescriptor& g, const Json& terms) {
  if (!terms.is_array()) throw ParseError("'terms' must be an array");
  GroupRingElement f(g);
  for (const auto& t : terms) {
    const GroupElement x = element_from_json(g, t.contains("elem") ? t.at("elem") : Json());
    const double re = t.contains("re") ? get_field<double>(t, "re") : 0.0;
    const double im = t.contains("im") ? get_field<double>(t, "im") : 0.0;
    f.add(x, Complex(re, im));
  }
  return f;
}

Json to_json(const GroupRingElement& f) {
  return {{"group", to_json(f.group())}, {"terms", terms_to_json(f)}};
}

GroupRingElement ring_element_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("group")) throw ParseError("element JSON needs 'group'");
  const GroupDescriptor g = group_from_json(j.at("group"));
  return terms_from_json(g, j.contains("terms") ? j.at("terms") : Json::array());
}

Json to_json(const KernelMatrix& k) {
  Json j;
  if (k.group) {
    j["group"] = to_json(*k.group);
    Json points = Json::array();
    for (const auto& p : k.points) points.push_back(to_json(*k.group, p));
    j["points"] = std::move(points);
  }
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < k.entries.rows(); ++i) {
    for (Eigen::Index jj = 0; jj < k.entries.cols(); ++jj) entries.push_back(k.entries(i, jj));
  }
  j["entries"] = std::move(entries);
  return j;
}

KernelMatrix kernel_from_json(const Json& j) {
  const auto flat = get_field<std::vector<double>>(j, "entries");
  auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(flat.size()))));
  if (static_cast<std::size_t>(n * n) != flat.size()) {
    throw ParseError("kernel entries must have n*n values");
  }
  KernelMatrix k;
  if (j.contains("group")) {
    k.group = group_from_json(j.at("group"));
    for (const auto& p : j.value("points", Json::array())) {
      k.points.push_back(element_from_json(*k.group, p));
    }
  }
  if (j.contains("points") && static_cast<Eigen::Index>(j.at("points").size()) != n) {
    throw ParseError("kernel point count does not match entries");
  }
  k.entries.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index jj = 0; jj < n; ++jj) k.entries(i, jj) = flat[i * n + jj];
  }
  if (!(k.entries.array() == k.entries.transpose().array()).all()) {
    throw ParseError("kernel matrix must be symmetric");
  }
  return k;
}

Json to_json(const Multiplier& phi, const GroupDescriptor& g) {
  if (const auto* t = std::get_if<mk::Table>(&phi.kind())) {
    return {{"kind", "table"}, {"terms", terms_to_json(t->values)}};
  }
  if (const auto* h = std::get_if<mk::Heat>(&phi.kind())) {
    return {{"kind", "heat"}, {"r", h->r}};
  }
  if (const auto* h = std::get_if<mk::TruncatedHeat>(&phi.kind())) {
    return {{"kind", "truncated"}, {"r", h->r}, {"n", h->n}};
  }
  const auto& s = std::get<mk::Scaled>(phi.kind());
  if (const auto* h = std::get_if<mk::TruncatedHeat>(&s.inner->kind())) {
    return {{"kind", "scaled"}, {"r", h->r}, {"n", h->n}, {"U", s.scale}};
  }
  return {{"kind", "scaled"}, {"U", s.scale}, {"inner", to_json(*s.inner, g)}};
}

Multiplier multiplier_from_json(const GroupDescriptor& g, const Json& j) {
  const auto kind = get_field<std::string>(j, "kind");
  try {
    if (kind == "table") return Multiplier::table(terms_from_json(g, j.value("terms", Json::array())));
    if (kind == "heat") return Multiplier::heat(get_field<double>(j, "r"));
    if (kind == "truncated") {
      return Multiplier::truncated_heat(get_field<double>(j, "r"), get_field<Length>(j, "n"));
    }
    if (kind == "scaled") {
      const double scale = get_field<double>(j, "U");
      if (j.contains("inner")) return Multiplier::scaled(multiplier_from_json(g, j.at("inner")), scale);
      return Multiplier::scaled(
          Multiplier::truncated_heat(get_field<double>(j, "r"), get_field<Length>(j, "n")), scale);
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  throw ParseError("unknown multiplier kind '" + kind + "'");
}

Json to_json(const RdParams& rd) { return {{"C", rd.C}, {"s", rd.s}}; }

Json to_json(const NormBracket& b) {
  return {{"lower", b.lower},
          {"upper", b.upper},
          {"lower_ball_radius", b.lower_ball_radius},
          {"iterations", b.iterations},
          {"achieved_tolerance", b.achieved_tolerance},
          {"converged", b.converged}};
}

Json to_json(const CnVerdict& v) {
  Json j{{"passed", v.passed}, {"max_mean_zero_eigenvalue", v.max_mean_zero_eigenvalue}};
  if (v.witness) {
    j["witness"] = std::vector<double>(v.witness->data(), v.witness->data() + v.witness->size());
    j["witness_value"] = v.witness_value;
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json to_json(const PsdVerdict& v) {
  return {{"passed", v.passed}, {"min_eigenvalue", v.min_eigenvalue}};
}

Json to_json(const ConvergenceRow& row) {
  return {{"r", row.r},
          {"n", row.n},
          {"U", row.U},
          {"K_n", row.K_n},
          {"defect_lower", row.defect_lower},
          {"defect_upper", row.defect_upper},
          {"runtime_ms", row.runtime_ms}};
}

Json to_json(const std::vector<ConvergenceRow>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) out.push_back(to_json(row));
  return out;
}

Json to_json(const RdSampleReport& report, const GroupDescriptor& g) {
  Json samples = Json::array();
  for (const auto& rec : report.records) {
    samples.push_back({{"lower", rec.lower},
                       {"sobolev", rec.sobolev},
                       {"ratio", rec.ratio},
                       {"passed", rec.passed}});
  }
  Json j{{"group", to_json(g)},
         {"rd", to_json(report.rd)},
         {"passed", report.passed},
         {"max_ratio", report.max_ratio},
         {"worst_index", report.worst_index},
         {"samples", std::move(samples)}};
  j["worst_element"] = report.worst_element ? terms_to_json(*report.worst_element) : Json();
  return j;
}

Json to_json(const LemmaSampleReport& report) {
  Json samples = Json::array();
  for (const auto& rec : report.records) {
    samples.push_back({{"lower", rec.lower}, {"bound", rec.bound}, {"passed", rec.passed}});
  }
  return {{"passed", report.passed}, {"max_ratio", report.max_ratio}, {"samples", samples}};
}

std::string format_double(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

std::string to_csv(const std::vector<ConvergenceRow>& rows) {
  std::string out = kConvergenceCsvHeader;
  out += '\n';
  for (const auto& row : rows) {
    out += format_double(row.r) + ',' + std::to_string(row.n) + ',' + format_double(row.U) + ',' +
           format_double(row.K_n) + ',' + format_double(row.defect_lower) + ',' +
           format_double(row.defect_upper) + ',' + format_double(row.runtime_ms) + '\n';
  }
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Json load_json(const std::string& path_or_inline) {
  const auto first = path_or_inline.find_first_not_of(" \t\r\n");
  if (first != std::string::npos &&
      (path_or_inline[first] == '{' || path_or_inline[first] == '[')) {
    return parse_json(path_or_inline);
  }
  std::ifstream in(path_or_inline);
  if (!in) throw ParseError("cannot open " + path_or_inline);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

}  // namespace rdmap::io
