#include "ptcurves/report_io.hpp"

#include <sstream>

namespace ptcurves::io {

namespace {

std::string num(double v) { return to_decimal17(v); }

class Row {
public:
    template <class T>
    Row& operator<<(const T& v) {
        if (!first_) os_ << ',';
        first_ = false;
        os_ << v;
        return *this;
    }
    std::string str() const { return os_.str(); }

private:
    std::ostringstream os_;
    bool first_ = true;
};

} // namespace

std::string join_ints(const std::vector<u64>& v, char sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(std::move(cur));
    return out;
}

std::string pattern_header() {
    return "p,d,s,a,b,I_start,I_len,J_start,J_len,count,main_term,defect,bound,defect_over_bound";
}

std::string pattern_row(const PlaneCurve& c, const PatternSpec& spec, const CyclicInterval& i,
                        const CyclicInterval& j, const PatternDefect& r) {
    Row row;
    row << c.p() << c.degree() << spec.s() << join_ints(spec.a()) << join_ints(spec.b()) << i.start() << i.length()
        << j.start() << j.length() << r.count << to_fraction_string(r.main_term) << to_fraction_string(r.defect)
        << num(r.bound) << num(r.ratio);
    return row.str();
}

nlohmann::json pattern_json(const PlaneCurve& c, const PatternSpec& spec, const CyclicInterval& i,
                            const CyclicInterval& j, const PatternDefect& r) {
    return {{"p", c.p()},
            {"d", c.degree()},
            {"s", spec.s()},
            {"a", spec.a()},
            {"b", spec.b()},
            {"I", {{"start", i.start()}, {"length", i.length()}}},
            {"J", {{"start", j.start()}, {"length", j.length()}}},
            {"count", r.count},
            {"main_term", to_fraction_string(r.main_term)},
            {"defect", to_fraction_string(r.defect)},
            {"bound", r.bound},
            {"defect_over_bound", r.ratio}};
}

std::string moment_header() {
    return "p,curve,k,H,J_start,J_len,M_k,M_k_decimal,model,model_decimal,defect,defect_decimal,"
           "thm3_bound,defect_over_bound,cor3_bound";
}

std::string moment_row(const PlaneCurve& c, const MomentSpec& spec, const MomentReport& r) {
    Row row;
    row << c.p() << c.poly().to_text() << spec.k << spec.h << spec.j.start() << spec.j.length()
        << to_fraction_string(r.m_k) << to_decimal17(r.m_k) << to_fraction_string(r.model) << to_decimal17(r.model)
        << to_fraction_string(r.defect) << to_decimal17(r.defect) << num(r.thm3_bound) << num(r.ratio)
        << num(r.cor3_bound);
    return row.str();
}

nlohmann::json moment_json(const PlaneCurve& c, const MomentSpec& spec, const MomentReport& r) {
    return {{"p", c.p()},
            {"curve", c.poly().to_text()},
            {"k", spec.k},
            {"H", spec.h},
            {"J", {{"start", spec.j.start()}, {"length", spec.j.length()}}},
            {"M_k", to_fraction_string(r.m_k)},
            {"M_k_decimal", to_double(r.m_k)},
            {"model", to_fraction_string(r.model)},
            {"model_decimal", to_double(r.model)},
            {"defect", to_fraction_string(r.defect)},
            {"defect_decimal", to_double(r.defect)},
            {"thm3_bound", r.thm3_bound},
            {"defect_over_bound", r.ratio},
            {"cor3_bound", r.cor3_bound},
            {"condition_one", r.condition_one}};
}

std::string histogram_header() { return "p,curve,H,J_start,J_len,h,count"; }

std::vector<std::string> histogram_rows(const PlaneCurve& c, const CyclicInterval& j, const BoxCountHistogram& hist) {
    std::vector<std::string> rows;
    const std::string curve = c.poly().to_text();
    for (std::size_t v = 0; v < hist.counts.size(); ++v) {
        Row row;
        row << hist.p << curve << hist.h << j.start() << j.length() << v << hist.counts[v];
        rows.push_back(row.str());
    }
    return rows;
}

std::string summary_header() { return "p,curve,H,N,mean_model,var_model,ks_binomial,ks_normal,m1,m2,m3,m4"; }

std::string summary_row(const PlaneCurve& c, const BoxCountHistogram& hist, const DistributionReport& r) {
    Row row;
    row << hist.p << c.poly().to_text() << hist.h << hist.n << to_fraction_string(r.mean_model)
        << to_fraction_string(r.var_model) << num(r.ks_binomial) << (r.ks_normal ? num(*r.ks_normal) : "NA");
    for (const auto& m : r.sample_moments) row << to_fraction_string(m);
    return row.str();
}

nlohmann::json distribution_json(const PlaneCurve& c, const CyclicInterval& j, const BoxCountHistogram& hist,
                                 const DistributionReport& r, bool with_histogram) {
    nlohmann::json out = {{"p", hist.p},
                          {"curve", c.poly().to_text()},
                          {"H", hist.h},
                          {"J", {{"start", j.start()}, {"length", j.length()}}},
                          {"N", hist.n},
                          {"mean_model", to_fraction_string(r.mean_model)},
                          {"var_model", to_fraction_string(r.var_model)},
                          {"ks_binomial", r.ks_binomial},
                          {"ks_normal", r.ks_normal ? nlohmann::json(*r.ks_normal) : nlohmann::json(nullptr)}};
    nlohmann::json moments = nlohmann::json::array();
    for (const auto& m : r.sample_moments) moments.push_back(to_fraction_string(m));
    out["sample_moments"] = moments;
    if (with_histogram) out["histogram"] = hist.counts;
    return out;
}

std::string weil_header() { return "p,object,box,count,main_term,defect,bound,ratio,t"; }

std::string box_text(std::span<const CyclicInterval> box) {
    std::string out;
    for (std::size_t k = 0; k < box.size(); ++k) {
        if (k) out += 'x';
        out += box[k].to_string();
    }
    return out;
}

std::string weil_row(u64 p, const std::string& object, std::span<const CyclicInterval> box, const DefectRecord& r) {
    Row row;
    row << p << object << box_text(box) << r.count << to_fraction_string(r.main_term) << to_fraction_string(r.defect)
        << num(r.bound) << num(r.ratio) << r.t;
    return row.str();
}

nlohmann::json weil_json(u64 p, const std::string& object, std::span<const CyclicInterval> box,
                         const DefectRecord& r) {
    return {{"p", p},
            {"object", object},
            {"box", box_text(box)},
            {"count", r.count},
            {"main_term", to_fraction_string(r.main_term)},
            {"defect", to_fraction_string(r.defect)},
            {"bound", r.bound},
            {"ratio", r.ratio},
            {"t", r.t}};
}

std::string translate_header() { return "trial,x,M"; }

std::string translate_row(const TranslateCounterexample& ce) {
    Row row;
    row << ce.trial << join_ints(ce.x) << join_ints(ce.m);
    return row.str();
}

} // namespace ptcurves::io
