#include "hypertriplet/report.hpp"

#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace hypertriplet {

namespace {

using nlohmann::json;

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

json result_json(const TripletResult& r) {
    const RegionPartition p = to_partition(r.regions);
    return json{
        {"schema", "hypertriplet/result/1"},
        {"variant", variant_name(r.variant)},
        {"labels", {r.labels[0], r.labels[1], r.labels[2]}},
        {"ranks", {r.ranks.x, r.ranks.y, r.ranks.z}},
        {"partition", {p.a, p.b, p.c, p.ab, p.ac, p.bc, p.abc}},
        {"weight", weight_string(r.weight)},
        {"weight_num", r.weight.num},
        {"weight_den", r.weight.den},
        {"weight_value", weight_value(r.weight)},
    };
}

}  // namespace

void write_results(std::ostream& out, std::span<const TripletResult> results, OutputFormat fmt) {
    if (fmt == OutputFormat::jsonl) {
        for (const auto& r : results) out << result_json(r).dump() << '\n';
        return;
    }
    out << "variant\tlabel_a\tlabel_b\tlabel_c\trank_a\trank_b\trank_c"
           "\tn_a\tn_b\tn_c\tn_ab\tn_ac\tn_bc\tn_abc\tweight\tweight_num\tweight_den\tweight_value\n";
    for (const auto& r : results) {
        const RegionPartition p = to_partition(r.regions);
        out << variant_name(r.variant) << '\t' << r.labels[0] << '\t' << r.labels[1] << '\t'
            << r.labels[2] << '\t' << r.ranks.x << '\t' << r.ranks.y << '\t' << r.ranks.z << '\t'
            << p.a << '\t' << p.b << '\t' << p.c << '\t' << p.ab << '\t' << p.ac << '\t' << p.bc
            << '\t' << p.abc << '\t' << weight_string(r.weight) << '\t' << r.weight.num << '\t'
            << r.weight.den << '\t' << fmt_double(weight_value(r.weight)) << '\n';
    }
}

void write_entropy(std::ostream& out, std::span<const EntropyRow> rows, OutputFormat fmt) {
    if (fmt == OutputFormat::jsonl) {
        for (const auto& r : rows) {
            json j{
                {"schema", "hypertriplet/entropy/1"},
                {"labels", {r.labels[0], r.labels[1], r.labels[2]}},
                {"ranks", {r.ranks.x, r.ranks.y, r.ranks.z}},
                {"weight", weight_string(r.weight)},
                {"weight_value", weight_value(r.weight)},
                {"target_bits", r.target.bits},
                {"target_normalized", r.target.normalized},
                {"grouped_bits", r.grouped.bits},
                {"grouped_normalized", r.grouped.normalized},
            };
            out << j.dump() << '\n';
        }
        return;
    }
    out << "label_a\tlabel_b\tlabel_c\tweight\tweight_value\ttarget_bits\ttarget_normalized"
           "\tgrouped_bits\tgrouped_normalized\n";
    for (const auto& r : rows)
        out << r.labels[0] << '\t' << r.labels[1] << '\t' << r.labels[2] << '\t'
            << weight_string(r.weight) << '\t' << fmt_double(weight_value(r.weight)) << '\t'
            << fmt_double(r.target.bits) << '\t' << fmt_double(r.target.normalized) << '\t'
            << fmt_double(r.grouped.bits) << '\t' << fmt_double(r.grouped.normalized) << '\n';
}

void write_census_tsv(std::ostream& out, const CensusReport& report) {
    out << "class_id\tcanonical_pattern_bits\tclosed_flag\tcount\n";
    const auto classes = motif_classes();
    for (const auto& cls : classes)
        out << cls.id << '\t' << pattern_string(Pattern{cls.canonical}) << '\t'
            << (cls.closed ? 1 : 0) << '\t' << report.class_counts[static_cast<std::size_t>(cls.id)]
            << '\n';
    out << "# connected_triplets\t" << report.connected_triplets << '\n';
    out << "# degenerate_triplets\t" << report.degenerate_triplets << '\n';
    out << "# max_edge_size\t";
    if (report.max_edge_size)
        out << *report.max_edge_size;
    else
        out << "none";
    out << '\n';
    out << "# edges_filtered\t" << report.edges_filtered << '\n';
}

std::string census_json(const CensusReport& report) {
    json classes = json::array();
    for (const auto& cls : motif_classes()) {
        classes.push_back(json{
            {"class_id", cls.id},
            {"canonical_pattern_bits", pattern_string(Pattern{cls.canonical})},
            {"closed", cls.closed},
            {"duplicate_forced", cls.duplicate_forced},
            {"count", report.class_counts[static_cast<std::size_t>(cls.id)]},
        });
    }
    json j{
        {"schema", "hypertriplet/census/1"},
        {"classes", std::move(classes)},
        {"connected_triplets", report.connected_triplets},
        {"degenerate_triplets", report.degenerate_triplets},
        {"edges_filtered", report.edges_filtered},
    };
    if (report.max_edge_size)
        j["max_edge_size"] = *report.max_edge_size;
    else
        j["max_edge_size"] = nullptr;
    return j.dump(2) + "\n";
}

std::string components_json(const ComponentSet& comps, const CanonicalHypergraph& h) {
    json arr = json::array();
    for (std::size_t i = 0; i < comps.components.size(); ++i) {
        json members = json::array();
        for (EdgeId e : comps.components[i])
            members.push_back(h.g.edge_labels[static_cast<std::size_t>(e)]);
        arr.push_back(json{
            {"component_id", i},
            {"size", comps.components[i].size()},
            {"members", std::move(members)},
        });
    }
    json j{{"schema", "hypertriplet/components/1"}, {"components", std::move(arr)}};
    return j.dump(2) + "\n";
}

std::string stats_json(const HypergraphStats& s) {
    json j{
        {"schema", "hypertriplet/stats/1"},
        {"nodes", s.node_count},
        {"edges", s.edge_count},
        {"degree_sum", s.degree_sum},
        {"max_edge_size", s.max_edge_size},
    };
    return j.dump() + "\n";
}

}  // namespace hypertriplet
