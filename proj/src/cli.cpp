#include "dstrig/cli.hpp"

#include <cmath>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "dstrig/svg.hpp"
#include "dstrig/verify.hpp"

namespace dstrig::cli {

using nlohmann::json;

namespace {

json vec_json(const Vec3& v) { return json::array({v(0), v(1), v(2)}); }

json header(const char* command) {
  return {{"schema", kSchemaVersion}, {"signature", kSignature}, {"command", command}};
}

void add_metadata(json& report, const TriangleDocument& doc) {
  if (doc.name) report["name"] = *doc.name;
  if (doc.seed) report["seed"] = *doc.seed;
}

void report_error(std::ostream& err, const std::string& what) { err << "dstrig: " << what << '\n'; }

// Reads every document, or reports the parse failure and returns nullopt.
std::optional<std::vector<TriangleDocument>> load(std::istream& in, std::ostream& err) {
  try {
    auto docs = read_documents(in);
    if (docs.empty()) {
      report_error(err, "no input documents");
      return std::nullopt;
    }
    return docs;
  } catch (const DocumentError& e) {
    report_error(err, e.what());
    return std::nullopt;
  }
}

// Applies fn to each document, printing one JSON line per success. The
// exit code is the largest code among the failures.
template <typename Fn>
int for_each_document(std::istream& in, std::ostream& out, std::ostream& err, Fn fn) {
  const auto docs = load(in, err);
  if (!docs) return kInvalidInput;
  int code = kOk;
  for (std::size_t i = 0; i < docs->size(); ++i) {
    const std::string where = docs->size() > 1 ? "document " + std::to_string(i + 1) + ": " : "";
    try {
      out << fn((*docs)[i]).dump() << '\n';
    } catch (const DocumentError& e) {
      report_error(err, where + e.what());
      code = std::max<int>(code, kInvalidInput);
    } catch (const Error& e) {
      report_error(err, where + e.what());
      code = std::max(code, exit_code_for(e));
    }
  }
  return code;
}

}  // namespace

TriangleDocument parse_document(const json& j) {
  if (!j.is_object()) throw DocumentError("document must be a JSON object");
  if (j.contains("schema") && j["schema"] != kSchemaVersion) {
    throw DocumentError("unsupported schema " + j["schema"].dump() + ", expected " + std::to_string(kSchemaVersion));
  }
  if (j.contains("signature") && j["signature"] != kSignature) {
    throw DocumentError("signature must be \"-++\" (x0 is time), got " + j["signature"].dump());
  }
  if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].size() != 3) {
    throw DocumentError("\"vertices\" must be an array of three rows");
  }
  TriangleDocument doc;
  for (int r = 0; r < 3; ++r) {
    const json& row = j["vertices"][r];
    if (!row.is_array() || row.size() != 3) {
      throw DocumentError("row " + std::to_string(r + 1) + " must have three components (x0, x1, x2)");
    }
    for (int c = 0; c < 3; ++c) {
      if (!row[c].is_number()) throw DocumentError("row " + std::to_string(r + 1) + " has a non-numeric entry");
      doc.vertices[r](c) = row[c].get<double>();
    }
    if (!doc.vertices[r].allFinite()) throw DocumentError("row " + std::to_string(r + 1) + " is not finite");
    const double n2 = mink_norm2(doc.vertices[r]);
    if (std::abs(n2 - 1) > kUnitTol) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "row " << r + 1 << " is off the de Sitter quadric: <v,v> = " << n2 << ", expected 1 within "
          << kUnitTol;
      throw DocumentError(msg.str());
    }
  }
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw DocumentError("\"name\" must be a string");
    doc.name = j["name"].get<std::string>();
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) throw DocumentError("\"seed\" must be a non-negative integer");
    doc.seed = j["seed"].get<std::uint64_t>();
  }
  return doc;
}

std::vector<TriangleDocument> read_documents(std::istream& in) {
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::vector<TriangleDocument> docs;
  const json whole = json::parse(text, nullptr, false);
  if (!whole.is_discarded()) {
    if (whole.is_array()) {
      for (const auto& d : whole) docs.push_back(parse_document(d));
    } else {
      docs.push_back(parse_document(whole));
    }
    return docs;
  }
  std::istringstream lines(text);
  std::string line;
  int number = 0;
  while (std::getline(lines, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const json j = json::parse(line, nullptr, false);
    if (j.is_discarded()) throw DocumentError("line " + std::to_string(number) + " is not valid JSON");
    docs.push_back(parse_document(j));
  }
  return docs;
}

json to_json(const TriangleDocument& doc) {
  json j = {{"schema", kSchemaVersion}, {"signature", kSignature}};
  if (doc.name) j["name"] = *doc.name;
  if (doc.seed) j["seed"] = *doc.seed;
  j["vertices"] = json::array({vec_json(doc.vertices[0]), vec_json(doc.vertices[1]), vec_json(doc.vertices[2])});
  return j;
}

std::array<DeSitterPoint, 3> points_of(const TriangleDocument& doc) {
  return {DeSitterPoint(doc.vertices[0]), DeSitterPoint(doc.vertices[1]), DeSitterPoint(doc.vertices[2])};
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::NonFinite:
    case ErrorCode::NotOnQuadric:
    case ErrorCode::InvalidArgument:
      return kInvalidInput;
    case ErrorCode::DegenerateTriangle:
    case ErrorCode::CoincidentPoints:
      return kDegenerate;
    case ErrorCode::NonContractible:
      return kNonContractible;
    case ErrorCode::NullEdge:
    case ErrorCode::ImpossibleEdge:
    case ErrorCode::UnsupportedTriangleType:
    case ErrorCode::UnsupportedKind:
    case ErrorCode::NoPolarTriangle:
    case ErrorCode::BoundaryCase:
      return kUnsupported;
    case ErrorCode::ExhaustedAttempts:
      return kExhausted;
    default:
      return kFailure;
  }
}

json classify_report(const TriangleDocument& doc) {
  const auto p = points_of(doc);
  const TriangleClass cls = classify_triangle(p[0], p[1], p[2]);

  json report = header("classify");
  add_metadata(report, doc);
  report["kind"] = to_string(cls.kind);
  report["edge_counts"] = {cls.edge_counts.space_like, cls.edge_counts.time_like, cls.edge_counts.light_like};
  report["proper_name"] = to_string(cls.proper_name);
  if (cls.proper_name == ProperName::Spatiolateral) {
    report["contractible"] = cls.contractible ? json(*cls.contractible) : json(nullptr);
  }
  report["area_supported"] = has_non_null_edges(cls.proper_name) &&
                             (cls.proper_name != ProperName::Spatiolateral || cls.contractible == true);

  json edges = json::array();
  for (int j = 0; j < 3; ++j) {
    const auto [k, l] = other_vertices(j);
    const GeodesicSegment seg = classify_segment(p[k], p[l]);
    json e = {{"opposite_vertex", j + 1},
              {"endpoints", {k + 1, l + 1}},
              {"inner_product", mink_inner(p[k].vec(), p[l].vec())},
              {"segment", to_string(seg.kind)}};
    const bool traced = seg.kind == SegmentKind::EllipsePart || seg.kind == SegmentKind::HyperbolaPart;
    e["length"] = traced ? json(seg.separation) : json(nullptr);
    edges.push_back(e);
  }
  report["edges"] = edges;

  if (has_non_null_edges(cls.proper_name)) {
    const DeSitterTriangle tri = build_triangle(p[0], p[1], p[2]);
    const PolarTriangle polar = polar_triangle(tri);
    json tags = json::array();
    json verts = json::array();
    for (int j = 0; j < 3; ++j) {
      tags.push_back(to_string(polar.tags[j]));
      verts.push_back(vec_json(polar.vertices[j]));
    }
    report["polar"] = {{"vertices", verts}, {"tags", tags}, {"kind", to_string(polar.kind)}};
    if (cls.proper_name == ProperName::Spatiolateral) {
      report["triangle_inequality"] = satisfies_triangle_inequality(tri);
    }
  }
  return report;
}

json area_report(const TriangleDocument& doc, const AreaOptions& options) {
  const auto p = points_of(doc);
  const TriangleClass cls = classify_triangle(p[0], p[1], p[2]);
  if (cls.kind == TriangleKind::Impossible) {
    throw Error(ErrorCode::ImpossibleEdge, "impossible triangle: at least one edge is empty");
  }
  if (!has_non_null_edges(cls.proper_name)) {
    throw Error(ErrorCode::UnsupportedTriangleType,
                "no area formula for a " + std::string(to_string(cls.proper_name)) + " triangle (light-like edges)");
  }
  const DeSitterTriangle tri = build_triangle(p[0], p[1], p[2]);
  const AreaResult area = girard_area(tri);

  json report = header("area");
  add_metadata(report, doc);
  report["proper_name"] = to_string(cls.proper_name);
  report["formula_used"] = formula_token(area.formula_used);
  report["distinguished_vertex"] = area.distinguished_vertex + 1;
  report["relabeling"] = {area.relabeling[0] + 1, area.relabeling[1] + 1, area.relabeling[2] + 1};
  report["real_area"] = area.real_area;
  report["area_from_products"] = girard_area_from_products(tri);
  report["complex_area"] = {{"re", area.complex_area.real()}, {"im", area.complex_area.imag()}};
  json angles = json::array();
  for (int j = 0; j < 3; ++j) {
    const auto& phi = area.angles.phi[j];
    angles.push_back({{"vertex", j + 1},
                      {"theta", area.angles.theta[j]},
                      {"phi", {{"re", phi.value.real()}, {"im", phi.value.imag()}, {"branch", to_string(phi.branch)}}}});
  }
  report["angles"] = angles;

  if (options.oracle) {
    oracle::IntegrationOptions io;
    io.workers = 0;
    const oracle::OracleResult o = oracle::integrate_area(tri, options.grid, io);
    const double discrepancy = std::abs(o.area - area.real_area);
    const double tolerance = std::max(oracle::kOracleFloor, oracle::kOracleErrorFactor * o.est_error);
    report["oracle"] = {{"area", o.area},
                        {"est_error", o.est_error},
                        {"grid", {o.grid_s, o.grid_t}},
                        {"refinements", o.refinements},
                        {"apex", o.apex + 1},
                        {"discrepancy", discrepancy},
                        {"tolerance", tolerance},
                        {"agrees", discrepancy <= tolerance}};
  }
  return report;
}

int run_classify(std::istream& in, std::ostream& out, std::ostream& err) {
  return for_each_document(in, out, err, [](const TriangleDocument& d) { return classify_report(d); });
}

int run_area(std::istream& in, std::ostream& out, std::ostream& err, const AreaOptions& options) {
  if (options.grid < 8) {
    report_error(err, "--grid must be at least 8");
    return kInvalidInput;
  }
  return for_each_document(in, out, err, [&](const TriangleDocument& d) { return area_report(d, options); });
}

int run_random(const RandomOptions& options, std::ostream& out, std::ostream& err) {
  const auto target = proper_name_from_string(options.type);
  if (!target) {
    report_error(err, "unknown triangle type \"" + options.type + "\"");
    return kInvalidInput;
  }
  if (options.count < 1) {
    report_error(err, "--count must be at least 1");
    return kInvalidInput;
  }
  try {
    oracle::TriangleGenerator gen({options.seed, *target, options.u_max});
    for (int i = 0; i < options.count; ++i) {
      const auto p = gen.next_vertices();
      TriangleDocument doc{{p[0].vec(), p[1].vec(), p[2].vec()},
                           options.type + "-" + std::to_string(options.seed) + "-" + std::to_string(i + 1),
                           options.seed};
      out << to_json(doc).dump() << '\n';
    }
  } catch (const Error& e) {
    std::string what = e.what();
    if (e.code() == ErrorCode::ExhaustedAttempts && !has_non_null_edges(*target)) {
      what += " (triangles with light-like edges have probability zero under continuous sampling)";
    }
    report_error(err, what);
    return exit_code_for(e);
  }
  return kOk;
}

int run_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
  if (options.trials < 1) {
    report_error(err, "--trials must be at least 1");
    return kInvalidInput;
  }
  if (options.grid < 8) {
    report_error(err, "--grid must be at least 8");
    return kInvalidInput;
  }
  std::vector<ProperName> targets;
  if (options.type == "all") {
    targets = {ProperName::Spatiolateral, ProperName::Tempolateral, ProperName::Chorosceles,
               ProperName::Chronosceles};
  } else {
    const auto t = proper_name_from_string(options.type);
    if (!t || !has_non_null_edges(*t)) {
      report_error(err, "--type must be one of spatiolateral, tempolateral, chorosceles, chronosceles, all");
      return kInvalidInput;
    }
    targets = {*t};
  }

  oracle::VerifyOptions vo;
  vo.grid = options.grid;
  vo.corrupt_normals = options.corrupt_normals;

  json summary = header("verify");
  summary["seed"] = options.seed;
  summary["trials"] = options.trials;
  summary["grid"] = options.grid;
  json types = json::array();
  bool passed = true;
  int code = kOk;
  for (ProperName target : targets) {
    json entry = {{"type", to_string(target)}};
    try {
      const oracle::VerifyReport r = oracle::verify_type(target, options.trials, options.seed, vo);
      json invariants = json::array();
      for (const auto& t : r.invariants) {
        invariants.push_back({{"name", t.name}, {"checked", t.checked}, {"passed", t.passed}, {"worst", t.worst}});
      }
      entry["invariants"] = invariants;
      entry["oracle_nonconvergent"] = r.oracle_nonconvergent;
      entry["passed"] = r.all_passed();
      json failures = json::array();
      for (std::size_t i = 0; i < r.failures.size() && i < 20; ++i) failures.push_back(r.failures[i]);
      entry["failures"] = failures;
      entry["failure_count"] = r.failures.size();
      if (!r.all_passed()) {
        passed = false;
        code = std::max<int>(code, kFailure);
      }
    } catch (const Error& e) {
      entry["passed"] = false;
      entry["error"] = e.what();
      passed = false;
      code = std::max(code, std::max<int>(kFailure, exit_code_for(e)));
    }
    types.push_back(entry);
  }
  summary["types"] = types;
  summary["passed"] = passed;
  out << summary.dump(2) << '\n';
  if (!passed) report_error(err, "verification failed");
  return code;
}

int run_plot(std::istream& in, std::ostream& svg, std::ostream& err, const PlotOptions& options) {
  const auto docs = load(in, err);
  if (!docs) return kInvalidInput;
  if (docs->size() != 1) {
    report_error(err, "plot takes exactly one document");
    return kInvalidInput;
  }
  if (options.samples < 2) {
    report_error(err, "--samples must be at least 2");
    return kInvalidInput;
  }
  try {
    svg << render_svg(points_of(docs->front()), options.samples);
  } catch (const Error& e) {
    report_error(err, e.what());
    return exit_code_for(e);
  }
  return kOk;
}

}  // namespace dstrig::cli
