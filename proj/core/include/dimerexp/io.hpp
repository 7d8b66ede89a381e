#pragma once

#include <string>
#include <vector>

#include "dimerexp/lambda.hpp"
#include "dimerexp/mayer.hpp"

namespace dimerexp {

/// One evaluated point attached to a lambda report.
struct EvalRecord {
    std::string p;
    std::string value;
    std::string truncation_proxy;
};

// Machine formats keep every rational as decimal num/den strings; nothing
// is ever rounded. Key order and layout are fixed, so equal inputs give
// byte-identical output.

std::string mayer_to_json(const MayerTable& t);
MayerTable mayer_from_json(const std::string& text);
std::string mayer_to_csv(const MayerTable& t);
std::string mayer_to_text(const MayerTable& t);

std::string lambda_to_json(const LambdaExpansion& e, const std::vector<EvalRecord>& evals = {});
LambdaExpansion lambda_from_json(const std::string& text);
std::string lambda_to_csv(const LambdaExpansion& e, const std::vector<EvalRecord>& evals = {});
std::string lambda_to_text(const LambdaExpansion& e, const std::vector<EvalRecord>& evals = {});

} // namespace dimerexp
