#pragma once

#include "mvcrys/gallery.hpp"

#include <json.hpp>
#include <cstdint>
#include <string>
#include <vector>

namespace mvcrys {

struct SuiteEntry {
    DatumPtr datum;
    RatVec lambda;  // coroot coordinates
};

// Dominant lambda = sum m_i omega_i^vee of height <= max_height for A1, A2, A3, B2,
// plus the fundamental coweights of G2.
std::vector<SuiteEntry> desk_suite(const Rational& max_height = Rational(4));
std::vector<SuiteEntry> dominant_coweights(const DatumPtr& d, const Rational& max_height);

struct AcceptanceOptions {
    std::uint64_t seed = 7;
    Exec exec = Exec::parallel;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string summary;
    nlohmann::json detail;
    double seconds = 0;
};

constexpr int kCriteria = 12;

CriterionResult run_criterion(int id, const AcceptanceOptions& opt);
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt, const std::vector<int>& ids = {});

nlohmann::json to_json(const CriterionResult& r);
std::string human_line(const CriterionResult& r);

}  // namespace mvcrys
