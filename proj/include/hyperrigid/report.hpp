#pragma once

#include <string>

#include "hyperrigid/measure.hpp"
#include "hyperrigid/verify.hpp"
#include "hyperrigid/wotsot.hpp"

namespace hyperrigid {

/// Round to 12 significant digits; report values pass through this before
/// serialization so identical runs emit byte-identical files.
double round_sig(double v, int digits = 12);
std::string format_sig(double v, int digits = 12);

std::string body_report_json(const ConvexBody& body, Vec2 offset);

std::string partition_report_json(const Partition& partition);
std::string partition_report_csv(const Partition& partition);

std::string bound_report_json(const BoundReport& rep);
std::string bound_report_csv(const BoundReport& rep);

std::string chain_report_json(const ChainReport& rep, double tol);

std::string verify_report_json(const std::vector<verify::SuiteResult>& suites,
                               std::uint64_t seed);

std::string deviation_report_json(const DeviationResult& res, std::uint64_t seed);

std::string wotsot_report_json(const std::vector<WotSotRow>& control,
                               const std::vector<WotSotRow>& symmetry);
std::string wotsot_report_csv(const std::vector<WotSotRow>& control,
                              const std::vector<WotSotRow>& symmetry);

/// Boundary samples (t, x, y) for plot emission.
std::string boundary_csv(const ConvexBody& body, int samples);

OperatorMeasure measure_from_json(const std::string& text);
std::string measure_to_json(const OperatorMeasure& m);

}  // namespace hyperrigid
