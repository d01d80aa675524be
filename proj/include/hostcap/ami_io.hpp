#pragma once

#include <span>
#include <string>
#include <vector>

#include "hostcap/evaluation.hpp"
#include "hostcap/load_model.hpp"

namespace hostcap {

// AMI CSV schema: transformer_id,date,p00,...,p95 with average-kW readings.
// The companion metadata CSV carries transformer_id,capacity_kw,
// customer_count. Loading groups rows by transformer (sorted by id, dates
// sorted within); duplicate (id, date) rows and malformed lines are errors
// that name the offending line.
std::vector<Transformer> load_ami_csv(const std::string& ami_path,
                                      const std::string& metadata_path);

void write_ami_csv(std::span<const Transformer> transformers,
                   const std::string& path);
void write_metadata_csv(std::span<const Transformer> transformers,
                        const std::string& path);

std::map<std::string, int> load_customer_counts(const std::string& metadata_path);

void write_records_csv(std::span<const EvaluationRecord> records,
                       const std::string& path);
std::vector<EvaluationRecord> load_records_csv(const std::string& path);

}  // namespace hostcap
