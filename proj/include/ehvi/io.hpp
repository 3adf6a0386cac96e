#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ehvi/benchmark.hpp"
#include "ehvi/bo.hpp"
#include "ehvi/ehvi.hpp"

namespace ehvi {

// Malformed JSON or a document that does not follow the request schema.
class ParseError : public Error {
public:
    using Error::Error;
};

// {"m": int, "maximize": bool, "reference": [f64], "front": [[f64]],
//  "mean": [f64], "stddev": [f64], "algorithm": string}
// Values are in the user's orientation. "maximize" defaults to false and
// "algorithm" to "auto"; "mean"/"stddev" may be absent (a bare front file).
struct ComputeRequest {
    ProblemFrame frame;
    std::vector<ObjectiveVector> front;
    std::optional<GaussianBelief> belief;
    Algorithm algorithm = Algorithm::automatic;

    Front validated_front() const { return validate_front(frame, front); }
    // Belief mapped to the internal convention; ParseError when absent.
    GaussianBelief internal_belief() const;
};

ComputeRequest parse_request(const nlohmann::json& doc);
ComputeRequest parse_request_text(const std::string& text);
ComputeRequest read_request_file(const std::string& path);

nlohmann::json request_to_json(const ComputeRequest& request);
nlohmann::json front_to_json(const GeneratedFront& front);

// Doubles with 17 significant digits.
std::string format_number(double x);

void write_benchmark_csv(std::ostream& os, const std::vector<BenchmarkRecord>& records);
void write_summary_csv(std::ostream& os, const std::vector<BenchSummary>& rows);

// Columns: seed, arm, iteration, candidate, x0..x{d-1}, f0..f{m-1},
// hypervolume, acquisition_time_ms.
void write_bo_csv(std::ostream& os, std::uint64_t seed, const std::string& arm,
                  const std::vector<BoRunRecord>& records, bool header = true);

}  // namespace ehvi
