#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ptcurves/distribution_stats.hpp"
#include "ptcurves/lemma_verifiers.hpp"
#include "ptcurves/moment_model.hpp"

namespace ptcurves::io {

// CSV rows carry no trailing newline. Rationals are written as "num/den";
// reals as 17 significant digits.

std::string join_ints(const std::vector<u64>& v, char sep = ';');
std::vector<std::string> split(const std::string& s, char sep);

// p,d,s,a,b,I_start,I_len,J_start,J_len,count,main_term,defect,bound,defect_over_bound
std::string pattern_header();
std::string pattern_row(const PlaneCurve& c, const PatternSpec& spec, const CyclicInterval& i,
                        const CyclicInterval& j, const PatternDefect& r);
nlohmann::json pattern_json(const PlaneCurve& c, const PatternSpec& spec, const CyclicInterval& i,
                            const CyclicInterval& j, const PatternDefect& r);

// p,curve,k,H,J_start,J_len,M_k,M_k_decimal,model,model_decimal,defect,defect_decimal,
// thm3_bound,defect_over_bound,cor3_bound
std::string moment_header();
std::string moment_row(const PlaneCurve& c, const MomentSpec& spec, const MomentReport& r);
nlohmann::json moment_json(const PlaneCurve& c, const MomentSpec& spec, const MomentReport& r);

// p,curve,H,J_start,J_len,h,count
std::string histogram_header();
std::vector<std::string> histogram_rows(const PlaneCurve& c, const CyclicInterval& j, const BoxCountHistogram& hist);

// p,curve,H,N,mean_model,var_model,ks_binomial,ks_normal,m1,m2,m3,m4
std::string summary_header();
std::string summary_row(const PlaneCurve& c, const BoxCountHistogram& hist, const DistributionReport& r);
nlohmann::json distribution_json(const PlaneCurve& c, const CyclicInterval& j, const BoxCountHistogram& hist,
                                 const DistributionReport& r, bool with_histogram);

// p,object,box,count,main_term,defect,bound,ratio,t
std::string weil_header();
std::string box_text(std::span<const CyclicInterval> box);
std::string weil_row(u64 p, const std::string& object, std::span<const CyclicInterval> box, const DefectRecord& r);
nlohmann::json weil_json(u64 p, const std::string& object, std::span<const CyclicInterval> box,
                         const DefectRecord& r);

// trial,x,M
std::string translate_header();
std::string translate_row(const TranslateCounterexample& ce);

} // namespace ptcurves::io
