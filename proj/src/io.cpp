#include "ehvi/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace ehvi {

namespace {

using nlohmann::json;

std::vector<double> numbers(const json& doc, const char* key) {
    if (!doc.contains(key)) throw ParseError(std::string("request is missing \"") + key + "\"");
    const json& arr = doc.at(key);
    if (!arr.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array of numbers");
    std::vector<double> out;
    for (const auto& v : arr) {
        if (!v.is_number()) throw ParseError(std::string("\"") + key + "\" must contain only numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

}  // namespace

GaussianBelief ComputeRequest::internal_belief() const {
    if (!belief) throw ParseError("request has no \"mean\"/\"stddev\" belief");
    return to_internal(frame, *belief);
}

ComputeRequest parse_request(const json& doc) {
    if (!doc.is_object()) throw ParseError("request must be a JSON object");
    const std::vector<double> reference = numbers(doc, "reference");
    if (doc.contains("m")) {
        if (!doc.at("m").is_number_integer()) throw ParseError("\"m\" must be an integer");
        if (doc.at("m").get<std::int64_t>() != static_cast<std::int64_t>(reference.size())) {
            throw ParseError("\"m\" does not match the reference length");
        }
    }
    bool maximize = false;
    if (doc.contains("maximize")) {
        if (!doc.at("maximize").is_boolean()) throw ParseError("\"maximize\" must be a boolean");
        maximize = doc.at("maximize").get<bool>();
    }
    std::vector<ObjectiveVector> front;
    if (doc.contains("front")) {
        const json& pts = doc.at("front");
        if (!pts.is_array()) throw ParseError("\"front\" must be an array of points");
        for (const auto& p : pts) {
            if (!p.is_array()) throw ParseError("every front point must be an array");
            ObjectiveVector v;
            for (const auto& x : p) {
                if (!x.is_number()) throw ParseError("front coordinates must be numbers");
                v.push_back(x.get<double>());
            }
            if (v.size() != reference.size()) throw ParseError("front point length differs from the reference");
            front.push_back(std::move(v));
        }
    }

    try {
        ComputeRequest req{ProblemFrame(reference, maximize ? Orientation::maximize : Orientation::minimize),
                           std::move(front), std::nullopt, Algorithm::automatic};
        if (doc.contains("mean") || doc.contains("stddev")) {
            std::vector<double> mean = numbers(doc, "mean");
            std::vector<double> stddev = numbers(doc, "stddev");
            if (mean.size() != reference.size() || stddev.size() != reference.size()) {
                throw ParseError("\"mean\" and \"stddev\" must match the reference length");
            }
            req.belief.emplace(std::move(mean), std::move(stddev));
        }
        if (doc.contains("algorithm")) {
            if (!doc.at("algorithm").is_string()) throw ParseError("\"algorithm\" must be a string");
            req.algorithm = parse_algorithm(doc.at("algorithm").get<std::string>());
        }
        return req;
    } catch (const ParseError&) {
        throw;
    } catch (const DimensionError& e) {
        throw ParseError(e.what());
    } catch (const ParameterError& e) {
        throw ParseError(e.what());
    }
}

ComputeRequest parse_request_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse_request(doc);
}

ComputeRequest read_request_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open request file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_request_text(buf.str());
}

json request_to_json(const ComputeRequest& request) {
    json doc;
    doc["m"] = request.frame.objectives();
    doc["maximize"] = request.frame.orientation() == Orientation::maximize;
    doc["reference"] = request.frame.reference();
    doc["front"] = request.front;
    if (request.belief) {
        doc["mean"] = request.belief->mean();
        doc["stddev"] = request.belief->stddev();
    }
    doc["algorithm"] = to_string(request.algorithm);
    return doc;
}

json front_to_json(const GeneratedFront& front) {
    json doc;
    doc["m"] = front.frame.objectives();
    doc["maximize"] = front.frame.orientation() == Orientation::maximize;
    doc["reference"] = front.frame.reference();
    doc["front"] = front.points;
    doc["seed"] = front.seed;
    return doc;
}

std::string format_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_benchmark_csv(std::ostream& os, const std::vector<BenchmarkRecord>& records) {
    os << "algorithm,m,n,seed,repetition,ehvi,time_ns,work\n";
    for (const auto& r : records) {
        os << to_string(r.algorithm) << ',' << r.m << ',' << r.n << ',' << r.seed << ',' << r.repetition << ','
           << format_number(r.ehvi) << ',' << r.time_ns << ',' << r.work << '\n';
    }
}

void write_summary_csv(std::ostream& os, const std::vector<BenchSummary>& rows) {
    os << "algorithm,m,n,records,mean_time_ns,stddev_time_ns,mean_work,max_work\n";
    for (const auto& s : rows) {
        os << to_string(s.algorithm) << ',' << s.m << ',' << s.n << ',' << s.records << ','
           << format_number(s.mean_time_ns) << ',' << format_number(s.stddev_time_ns) << ','
           << format_number(s.mean_work) << ',' << s.max_work << '\n';
    }
}

void write_bo_csv(std::ostream& os, std::uint64_t seed, const std::string& arm, const std::vector<BoRunRecord>& records,
                  bool header) {
    if (records.empty()) return;
    const std::size_t d = records.front().design.size();
    const std::size_t m = records.front().objectives.size();
    if (header) {
        os << "seed,arm,iteration,candidate";
        for (std::size_t k = 0; k < d; ++k) os << ",x" << k;
        for (std::size_t j = 0; j < m; ++j) os << ",f" << j;
        os << ",hypervolume,acquisition_time_ms\n";
    }
    for (const auto& r : records) {
        os << seed << ',' << arm << ',' << r.iteration << ',' << r.candidate;
        for (double x : r.design) os << ',' << format_number(x);
        for (double y : r.objectives) os << ',' << format_number(y);
        os << ',' << format_number(r.hypervolume) << ',' << format_number(r.acquisition_time_ms) << '\n';
    }
}

}  // namespace ehvi
