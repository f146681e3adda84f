#pragma once

// JSON views of the library types: object keys are sorted (nlohmann default)
// and big integers are emitted as decimal strings, so serialized output is
// stable enough to diff against golden files.

#include <vector>

#include "json.hpp"
#include "plethysm/asymptotics.hpp"
#include "plethysm/oracle.hpp"
#include "plethysm/partition.hpp"
#include "plethysm/pieri.hpp"
#include "plethysm/tensor.hpp"
#include "plethysm/weintraub.hpp"

namespace plethysm {

nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const BigInt& b);  // decimal string
nlohmann::json to_json(const TensorVector& v);
nlohmann::json to_json(const SymVector& v);
nlohmann::json to_json(const PieriTableau& t);
nlohmann::json to_json(const std::vector<StepRecord>& log);
nlohmann::json to_json(const SymbolicTableau& st);
nlohmann::json to_json(const HighestWeightReport& r);
nlohmann::json to_json(const QCertificate& q);
nlohmann::json to_json(const DecompositionTable& t);
nlohmann::json to_json(const StabilizationRow& row);

}  // namespace plethysm
