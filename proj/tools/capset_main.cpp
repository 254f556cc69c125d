#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "capset/caps.hpp"
#include "capset/errors.hpp"
#include "capset/gf3.hpp"
#include "capset/group_reports.hpp"
#include "capset/groups.hpp"
#include "capset/io.hpp"
#include "capset/linear.hpp"
#include "capset/orbits.hpp"
#include "capset/parallel.hpp"
#include "capset/partitions.hpp"
#include "capset/render.hpp"
#include "capset/report.hpp"
#include "capset/verify.hpp"

using namespace capset;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

void write_file_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot write " + tmp);
        out << content;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::invalid_argument("cannot rename " + tmp + " to " + path);
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_file_atomic(out_path, content);
}

struct CommonOpts {
    int jobs = default_jobs();
    int dim = 4;
    std::string out;
};

int cmd_verify(const std::string& depth_str, int jobs, uint64_t seed, const std::string& out) {
    auto outcome = verify_all(depth_from_string(depth_str), jobs, seed);
    emit(out, outcome.report.to_json().dump(2) + "\n");
    for (const auto& m : outcome.mismatches) std::cerr << "mismatch: " << m << "\n";
    return outcome.pass() ? kExitOk : kExitMismatch;
}

int cmd_enumerate(int dim, int anchor, const std::string& format, long long limit,
                  const std::string& out, int jobs) {
    const Geometry& g = Geometry::of(dim);
    std::vector<PointSet> caps;
    if (anchor >= 0) {
        if (dim != 4) throw CLI::ValidationError("--anchor requires --dim 4");
        if (anchor >= g.num_points()) throw CLI::ValidationError("--anchor outside the universe");
        caps = caps_with_anchor(g, anchor);
    } else {
        caps = enumerate_maximal_caps(g, jobs);
    }
    if (limit >= 0 && static_cast<long long>(caps.size()) > limit) caps.resize(limit);

    std::ostringstream os;
    if (format == "jsonl") {
        write_caps_jsonl(os, caps);
    } else if (format == "binary") {
        int width = caps.empty() ? max_cap_size(g) : caps.front().size();
        write_caps_binary(os, g, width, caps);
    } else if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : caps) arr.push_back(pointset_to_json(c));
        os << arr.dump() << "\n";
    } else {
        throw CLI::ValidationError("--format must be json, jsonl or binary");
    }
    emit(out, os.str());
    return kExitOk;
}

int cmd_classify(const std::string& cap_file, int dim, int jobs, const std::string& out) {
    const Geometry& g = Geometry::of(dim);
    PointSet s = load_cap_file(g, cap_file);
    if (!is_cap(g, s)) throw std::invalid_argument("input is not a cap");
    auto dc = classify_disjoint_caps(g, s, jobs);
    Report rep;
    rep.command = "classify";
    rep.parameters = {{"dim", dim}, {"cap", pointset_to_json(s)}};
    rep.results = {{"prop3_5_disjoint", dc.caps.size()},
                   {"one", dc.one},
                   {"two", dc.two},
                   {"six", dc.six}};
    rep.worker_count = jobs;
    emit(out, rep.to_json().dump(2) + "\n");
    return kExitOk;
}

int cmd_stabilize(const std::string& cap_file, int dim, const std::string& ambient_str,
                  bool with_elements, const std::string& out) {
    const Geometry& g = Geometry::of(dim);
    PointSet s = load_cap_file(g, cap_file);
    Ambient ambient = ambient_str == "aff" ? Ambient::Aff : Ambient::GL;
    auto elems = setwise_stabilizer(g, s, ambient);
    MatrixGroup grp = make_group(g, elems);
    Report rep;
    rep.command = "stabilize";
    rep.parameters = {{"dim", dim}, {"ambient", ambient_str}, {"cap", pointset_to_json(s)}};
    rep.results = {{"order", grp.order()}};
    if (grp.order() <= 4096) rep.results["fingerprint"] = fingerprint_to_json(fingerprint(grp));
    if (with_elements) rep.results["group"] = group_to_json(g, grp, false);
    emit(out, rep.to_json().dump(2) + "\n");
    return kExitOk;
}

int cmd_partitions(const std::string& cap_file, int dim, int jobs, long long limit,
                   bool count_anchor0, const std::string& out) {
    const Geometry& g = Geometry::of(dim);
    Report rep;
    rep.command = "partitions";
    rep.worker_count = jobs;
    if (count_anchor0) {
        if (dim != 4) throw CLI::ValidationError("--count-anchor0 requires --dim 4");
        auto census = count_partitions_anchor0(g, jobs);
        rep.parameters = {{"dim", dim}, {"count_anchor0", true}};
        rep.results = {{"sec3_anchor0_partitions", census.total},
                       {"derived_e1_anchor0", census.e1},
                       {"derived_e2_anchor0", census.e2}};
        emit(out, rep.to_json().dump(2) + "\n");
        return kExitOk;
    }
    PointSet s = load_cap_file(g, cap_file);
    auto dc = classify_disjoint_caps(g, s, jobs);
    auto sp = partitions_containing(g, s, dc, jobs);
    rep.parameters = {{"dim", dim}, {"cap", pointset_to_json(s)}};
    nlohmann::json parts = nlohmann::json::array();
    long long emitted = 0;
    for (const auto& p : sp.parts) {
        if (limit >= 0 && emitted >= limit) break;
        parts.push_back(partition_to_json(g, p));
        ++emitted;
    }
    rep.results = {{"prop3_5_partitions", sp.parts.size()},
                   {"prop3_7_e1", sp.e1},
                   {"prop3_7_e2", sp.e2},
                   {"partitions", parts}};
    emit(out, rep.to_json().dump(2) + "\n");
    return kExitOk;
}

int cmd_groups(const std::string& partition_file, int jobs, const std::string& out) {
    const Geometry& g = Geometry::of(4);
    Partition4 p = load_partition_file(g, partition_file);
    // reference cap: the lexicographically least block
    PointSet s = p.blocks[0];
    auto stab = make_group(g, setwise_stabilizer(
                                  g, s, p.anchor == 0 ? Ambient::GL : Ambient::Aff));
    auto blockwise = blockwise_partition_stabilizer(g, stab, p);
    auto collection = partition_collection_stabilizer(g, stab, p);
    auto ps = pair_structure(g, p);
    PointSet partner;
    for (auto [x, y] : ps.pairs)
        if (x == 0 || y == 0) partner = p.blocks[x == 0 ? y : x];
    auto pairstab = subgroup_fixing_set(g, stab, partner);
    Report rep;
    rep.command = "groups";
    rep.worker_count = jobs;
    rep.parameters = {{"partition", partition_to_json(g, p)}};
    auto [bd1, bd2] = det_split(g, blockwise);
    rep.results = {{"stabilizer_order", stab.order()},
                   {"blockwise_order", blockwise.order()},
                   {"blockwise_det_split", {bd1, bd2}},
                   {"collection_order", collection.order()},
                   {"setwise_order", pairstab.order()},
                   {"class", ps.counts[0] == 1 ? "E1" : "E2"},
                   {"blockwise_fingerprint", fingerprint_to_json(fingerprint(blockwise))}};
    emit(out, rep.to_json().dump(2) + "\n");
    return kExitOk;
}

int cmd_canon(bool check, const std::string& fixture, const std::string& out) {
    const Geometry& g = Geometry::of(4);
    PointSet s = canonical_cap(g);
    if (check) {
        if (s.to_indices() != canonical_cap_fixture()) {
            std::cerr << "mismatch: recomputed canonical cap differs from the built-in fixture\n";
            return kExitMismatch;
        }
        if (!fixture.empty()) {
            PointSet from_file = load_cap_file(g, fixture);
            if (!(from_file == s)) {
                std::cerr << "mismatch: " << fixture << " differs from the recomputed cap\n";
                return kExitMismatch;
            }
        }
    }
    emit(out, cap_to_json(g, s).dump(2) + "\n");
    return kExitOk;
}

int cmd_render(const std::string& cap_file, const std::string& partition_file, int dim,
               const std::string& svg_out) {
    const Geometry& g = Geometry::of(dim);
    std::vector<PointSet> blocks;
    int anchor = -1;
    if (!partition_file.empty()) {
        Partition4 p = load_partition_file(Geometry::of(4), partition_file);
        blocks.assign(p.blocks.begin(), p.blocks.end());
        anchor = p.anchor;
    } else {
        PointSet s = load_cap_file(g, cap_file);
        blocks.push_back(s);
        if ((g.n() == 2 || g.n() == 4) && is_cap(g, s) && s.size() == max_cap_size(g))
            anchor = anchor_of(g, s).anchor;
    }
    const Geometry& gr = partition_file.empty() ? g : Geometry::of(4);
    std::cout << render_ascii(gr, blocks, anchor);
    if (!svg_out.empty()) write_file_atomic(svg_out, render_svg(gr, blocks, anchor));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"capset: maximal caps and cap partitions of AG(n,3), n <= 4"};
    app.require_subcommand(1);

    int jobs = default_jobs();
    app.add_option("--jobs,-j", jobs, "worker threads (default: CAPSET_JOBS or hardware)")
        ->check(CLI::PositiveNumber);

    // verify
    auto* verify = app.add_subcommand("verify", "run the verification suite");
    std::string depth = "full";
    uint64_t seed = 0;
    std::string verify_out;
    verify->add_option("--depth", depth, "quick, full or deep")
        ->check(CLI::IsMember({"quick", "full", "deep"}));
    verify->add_option("--seed", seed, "seed for the sampled checks");
    verify->add_option("--out", verify_out, "write the JSON report here");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "stream maximal caps");
    int dim = 4, anchor = -1;
    long long limit = -1;
    std::string format = "jsonl", enum_out;
    enumerate->add_option("--dim", dim, "dimension (1..4)")->check(CLI::Range(1, 4));
    enumerate->add_option("--anchor", anchor, "restrict to caps with this anchor (n = 4)");
    enumerate->add_option("--format", format, "json, jsonl or binary")
        ->check(CLI::IsMember({"json", "jsonl", "binary"}));
    enumerate->add_option("--limit", limit, "emit at most this many caps");
    enumerate->add_option("--out", enum_out, "output file (default: stdout)");

    // classify
    auto* classify = app.add_subcommand("classify", "completability census of a cap");
    std::string cap_file, classify_out;
    int cdim = 4;
    classify->add_option("--cap-file", cap_file, "cap JSON file")->required();
    classify->add_option("--dim", cdim, "dimension")->check(CLI::Range(1, 4));
    classify->add_option("--out", classify_out, "output file");

    // stabilize
    auto* stabilize = app.add_subcommand("stabilize", "setwise stabilizer of a point set");
    std::string stab_file, ambient = "gl", stab_out;
    int sdim = 4;
    bool with_elements = false;
    stabilize->add_option("--cap-file", stab_file, "cap JSON file")->required();
    stabilize->add_option("--dim", sdim, "dimension")->check(CLI::Range(1, 4));
    stabilize->add_option("--ambient", ambient, "gl or aff")
        ->check(CLI::IsMember({"gl", "aff"}));
    stabilize->add_flag("--with-elements", with_elements, "include the element list");
    stabilize->add_option("--out", stab_out, "output file");

    // partitions
    auto* partitions = app.add_subcommand("partitions", "partitions containing a cap");
    std::string part_cap_file, part_out;
    int pdim = 4;
    long long plimit = -1;
    bool count_anchor0 = false;
    partitions->add_option("--cap-file", part_cap_file, "cap JSON file");
    partitions->add_option("--dim", pdim, "dimension")->check(CLI::Range(1, 4));
    partitions->add_option("--limit", plimit, "emit at most this many partition records");
    partitions->add_flag("--count-anchor0", count_anchor0,
                         "count every anchor-0 partition instead");
    partitions->add_option("--out", part_out, "output file");

    // groups
    auto* groups = app.add_subcommand("groups", "stabilizer structure of a partition");
    std::string partition_file, groups_out;
    groups->add_option("--partition", partition_file, "partition JSON file")->required();
    groups->add_option("--out", groups_out, "output file");

    // canon
    auto* canon = app.add_subcommand("canon", "the canonical cap S");
    bool canon_check = false;
    std::string canon_fixture, canon_out;
    canon->add_flag("--check", canon_check, "re-derive and compare against the fixture");
    canon->add_option("--fixture", canon_fixture, "also compare against this cap file");
    canon->add_option("--out", canon_out, "output file");

    // render
    auto* render = app.add_subcommand("render", "ASCII/SVG grid rendering");
    std::string render_cap, render_partition, svg_out;
    int rdim = 4;
    render->add_option("--cap-file", render_cap, "cap JSON file");
    render->add_option("--partition", render_partition, "partition JSON file");
    render->add_option("--dim", rdim, "dimension for --cap-file")->check(CLI::Range(1, 4));
    render->add_option("--svg", svg_out, "write an SVG rendering here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) return cmd_verify(depth, jobs, seed, verify_out);
        if (*enumerate) return cmd_enumerate(dim, anchor, format, limit, enum_out, jobs);
        if (*classify) return cmd_classify(cap_file, cdim, jobs, classify_out);
        if (*stabilize) return cmd_stabilize(stab_file, sdim, ambient, with_elements, stab_out);
        if (*partitions) {
            if (!count_anchor0 && part_cap_file.empty())
                throw CLI::ValidationError("partitions needs --cap-file or --count-anchor0");
            if (count_anchor0 && !part_cap_file.empty())
                throw CLI::ValidationError("--count-anchor0 conflicts with --cap-file");
            return cmd_partitions(part_cap_file, pdim, jobs, plimit, count_anchor0, part_out);
        }
        if (*groups) return cmd_groups(partition_file, jobs, groups_out);
        if (*canon) return cmd_canon(canon_check, canon_fixture, canon_out);
        if (*render) {
            if (render_cap.empty() == render_partition.empty())
                throw CLI::ValidationError("render needs exactly one of --cap-file, --partition");
            return cmd_render(render_cap, render_partition, rdim, svg_out);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitUsage;
}
