#pragma once

// Command implementations behind the `dstrig` executable. Each run_*
// function returns the process exit code.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "dstrig/girard.hpp"

namespace dstrig::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kInvalidInput = 2,
  kDegenerate = 3,
  kNonContractible = 4,
  kUnsupported = 5,
  kExhausted = 6,
};

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kSignature = "-++";

/// Input document: three vertex rows (x0, x1, x2) on the de Sitter quadric.
struct TriangleDocument {
  std::array<Vec3, 3> vertices;
  std::optional<std::string> name;
  std::optional<std::uint64_t> seed;
};

class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

TriangleDocument parse_document(const nlohmann::json& j);
/// Accepts one JSON document, a JSON array of documents, or JSON Lines.
std::vector<TriangleDocument> read_documents(std::istream& in);
nlohmann::json to_json(const TriangleDocument& doc);
std::array<DeSitterPoint, 3> points_of(const TriangleDocument& doc);

int exit_code_for(const Error& e);

nlohmann::json classify_report(const TriangleDocument& doc);

struct AreaOptions {
  bool oracle = false;
  int grid = 64;
};
nlohmann::json area_report(const TriangleDocument& doc, const AreaOptions& options);

struct RandomOptions {
  std::string type;
  std::uint64_t seed = 1;
  int count = 1;
  double u_max = 2.0;
};

struct VerifyOptions {
  std::string type = "all";
  int trials = 50;
  std::uint64_t seed = 7;
  int grid = 64;
  bool corrupt_normals = false;
};

struct PlotOptions {
  int samples = 64;
};

int run_classify(std::istream& in, std::ostream& out, std::ostream& err);
int run_area(std::istream& in, std::ostream& out, std::ostream& err, const AreaOptions& options);
int run_random(const RandomOptions& options, std::ostream& out, std::ostream& err);
int run_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);
int run_plot(std::istream& in, std::ostream& svg, std::ostream& err, const PlotOptions& options);

}  // namespace dstrig::cli
