#include "fktree/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fktree {

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string edges_json(const TreeWithBoundary& t) {
    std::string out = "[";
    bool first = true;
    for (const auto& [u, v] : t.edges()) {
        if (!first) out += ',';
        first = false;
        out += '[' + std::to_string(u) + ',' + std::to_string(v) + ']';
    }
    return out + ']';
}

std::string move_json(const TraceMove& mv) {
    switch (mv.kind) {
        case TraceMove::Kind::Switch:
            return "{\"kind\":\"switch\",\"v1\":" + std::to_string(mv.sw.v1) +
                   ",\"u1\":" + std::to_string(mv.sw.u1) +
                   ",\"v2\":" + std::to_string(mv.sw.v2) +
                   ",\"u2\":" + std::to_string(mv.sw.u2) + "}";
        case TraceMove::Kind::Shift:
            return "{\"kind\":\"shift\",\"u\":" + std::to_string(mv.sh.u) +
                   ",\"v1\":" + std::to_string(mv.sh.v1) +
                   ",\"v2\":" + std::to_string(mv.sh.v2) + "}";
        case TraceMove::Kind::Noop:
            return "{\"kind\":\"noop\",\"v1\":" + std::to_string(mv.noop_parent) +
                   ",\"v2\":" + std::to_string(mv.noop_child) + "}";
    }
    return "{}";
}

}  // namespace

std::string format_double17(double x) {
    if (std::isinf(x)) return x > 0 ? "null" : "-1e999";  // no JSON literal for infinities
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string eigenpair_to_json(const DirichletEigenpair& pair) {
    std::string out = "{\"lambda\":" + format_double17(pair.lambda);
    out += ",\"gap\":" + format_double17(pair.gap);
    out += ",\"residual\":" + format_double17(pair.residual);
    out += ",\"f\":[";
    for (size_t i = 0; i < pair.f.size(); ++i) {
        if (i) out += ',';
        out += format_double17(pair.f[i]);
    }
    return out + "]}";
}

std::string trace_to_json(const RearrangeTrace& trace) {
    std::string out = "{\"initial_edges\":" + edges_json(trace.initial);
    out += ",\"final_edges\":" + edges_json(trace.final_tree);
    out += ",\"f\":[";
    for (size_t i = 0; i < trace.f.size(); ++i) {
        if (i) out += ',';
        out += format_double17(trace.f[i]);
    }
    out += "],\"initial_rayleigh\":" + format_double17(trace.initial_rayleigh);
    out += ",\"effective_moves\":" + std::to_string(trace.effective_moves());
    out += ",\"steps\":[";
    for (size_t i = 0; i < trace.steps.size(); ++i) {
        const TraceStep& s = trace.steps[i];
        if (i) out += ',';
        out += "{\"move\":" + move_json(s.move);
        out += ",\"rayleigh\":" + format_double17(s.rayleigh);
        out += ",\"in_class\":" + std::string(s.in_class ? "true" : "false") + "}";
    }
    return out + "]}";
}

std::string census_to_json(const ClassCensus& census) {
    std::string out = "[";
    for (size_t i = 0; i < census.entries.size(); ++i) {
        const CensusEntry& e = census.entries[i];
        if (i) out += ',';
        bool is_argmin = std::find(census.argmin.begin(), census.argmin.end(),
                                   static_cast<int>(i)) != census.argmin.end();
        out += "{\"canonical_code\":\"" + json_escape(e.code) + "\"";
        out += ",\"lambda\":" + format_double17(e.lambda);
        out += ",\"is_argmin\":" + std::string(is_argmin ? "true" : "false") + "}";
    }
    return out + "]";
}

std::string census_to_csv(const ClassCensus& census) {
    std::string out = "canonical_code,lambda,is_argmin\n";
    for (size_t i = 0; i < census.entries.size(); ++i) {
        const CensusEntry& e = census.entries[i];
        bool is_argmin = std::find(census.argmin.begin(), census.argmin.end(),
                                   static_cast<int>(i)) != census.argmin.end();
        out += e.code + ',' + format_double17(e.lambda) + ',' + (is_argmin ? "1" : "0") + '\n';
    }
    return out;
}

std::string report_to_json(const VerifyReport& report) {
    std::string out = "{\"theorem\":\"" + json_escape(report.theorem) + "\"";
    out += ",\"max_n\":" + std::to_string(report.max_n);
    out += ",\"all_pass\":" + std::string(report.all_pass ? "true" : "false");
    out += ",\"instances\":[";
    for (size_t i = 0; i < report.instances.size(); ++i) {
        const VerifyInstance& inst = report.instances[i];
        if (i) out += ',';
        out += "{\"class\":\"" + json_escape(inst.class_desc) + "\"";
        out += ",\"pass\":" + std::string(inst.pass ? "true" : "false");
        out += ",\"lambda_min\":" + format_double17(inst.lambda_min);
        out += ",\"minimizer_code\":\"" + json_escape(inst.minimizer_code) + "\"";
        out += ",\"constructed_code\":\"" + json_escape(inst.constructed_code) + "\"";
        if (!inst.note.empty()) out += ",\"note\":\"" + json_escape(inst.note) + "\"";
        out += "}";
    }
    return out + "]}";
}

std::string comparison_to_json(const DegreeSequence& pi_a, const DegreeSequence& pi_b,
                               const SequenceComparison& cmp, double lambda_a, double lambda_b) {
    std::string out = "{\"pi_a\":\"" + json_escape(pi_a.to_string()) + "\"";
    out += ",\"pi_b\":\"" + json_escape(pi_b.to_string()) + "\"";
    out += ",\"a_leq_b\":" + std::string(cmp.leq ? "true" : "false");
    if (!cmp.leq) out += ",\"witness_rank\":" + std::to_string(cmp.witness);
    out += ",\"lambda_slo_star_a\":" + format_double17(lambda_a);
    out += ",\"lambda_slo_star_b\":" + format_double17(lambda_b);
    return out + "}";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

}  // namespace fktree
