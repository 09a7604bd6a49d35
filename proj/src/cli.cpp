#include "weylk/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "json.hpp"
#include "weylk/error.hpp"
#include "weylk/group_cache.hpp"
#include "weylk/report.hpp"
#include "weylk/sectors_ktheory.hpp"
#include "weylk/torus_fixed.hpp"

namespace weylk::cli {

namespace {

namespace el = exact_linalg;
namespace sk = sectors_ktheory;
namespace tf = torus_fixed;

using class_table::ClassFixture;
using el::Int;
using el::IntMatrix;
using report::Json;
using root_system::GroupElement;
using root_system::RootSystem;
using tf::Side;
using weyl_group::ConjugacyClass;
using weyl_group::Group;

constexpr const char* kCommands[] = {"classes", "fixed-sets", "duality", "sectors",
                                     "ktheory", "power-map", "verify-all", "dump"};

struct SplitMix {
    std::uint64_t state;
    explicit SplitMix(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

// Index-parallel loop; results must be written to pre-sized slots so the
// output order never depends on the schedule. The first exception wins.
void parallel_for(int jobs, std::size_t n, const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> bail{false};
    std::exception_ptr first;
    std::mutex mu;
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            std::size_t i;
            while (!bail.load(std::memory_order_relaxed) &&
                   (i = next.fetch_add(1)) < n) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(mu);
                    if (!first) first = std::current_exception();
                    bail.store(true, std::memory_order_relaxed);
                }
            }
        });
    for (auto& th : pool) th.join();
    if (first) std::rethrow_exception(first);
}

// Collects "row <row> field <field>" mismatch records; the first one is what
// the exit-2 diagnostic names.
struct Checker {
    std::vector<std::string> failures;

    bool expect(bool ok, const std::string& row, const std::string& field,
                const std::string& expected, const std::string& got) {
        if (!ok)
            failures.push_back("row " + row + " field " + field + ": expected " + expected +
                               ", got " + got);
        return ok;
    }
    bool passed() const { return failures.empty(); }
};

std::string int_str(const Int& v) { return v.get_str(); }

Json int_list_json(const std::vector<Int>& v) {
    Json arr = Json::array();
    for (const Int& x : v) arr.push_back(x.get_si());
    return arr;
}

Json element_json(const GroupElement& g) {
    Json arr = Json::array();
    for (int i = 0; i < g.dim(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < g.dim(); ++j) row.push_back(g.at(i, j));
        arr.push_back(std::move(row));
    }
    return arr;
}

std::string list_str(const std::vector<Int>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i].get_str();
    }
    return out + "]";
}

std::string list_str(const std::vector<long>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + "]";
}

std::string matrix_str(const std::vector<std::vector<Int>>& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += ",";
        out += list_str(m[i]);
    }
    return out + "]";
}

// ---------------------------------------------------------------------------
// Shared run context: root system, optionally the enumerated group and the
// per-class centraliser inputs, with memos so verify-all computes each stage
// once.

struct SectorRowData {
    std::string label;
    Side side = Side::root;
    std::vector<Int> betti;
    Int euler;
    long components = 0;
    long orbit_count = 0;
};

struct Context {
    RunConfig cfg;
    RootSystem rs;
    bool is_e6 = false;
    std::string cache_state = "none"; // none | hit | miss

    std::optional<Group> group;
    std::vector<ConjugacyClass> classes;
    std::vector<sk::ClassInput> inputs;
    bool have_group = false;
    bool have_inputs = false;
    std::map<Side, std::vector<SectorRowData>> sector_memo;

    void ensure_group() {
        if (have_group) return;
        std::optional<group_cache::CachedGroup> cached;
        if (!cfg.cache.empty()) cached = group_cache::load(cfg.cache, rs);
        if (cached) {
            group.emplace(std::move(cached->group));
            classes = std::move(cached->classes);
            cache_state = "hit";
        } else {
            group.emplace(weyl_group::enumerate(rs));
            classes = weyl_group::conjugacy_classes(*group);
            if (!cfg.cache.empty()) {
                group_cache::save(cfg.cache, *group, classes);
                cache_state = "miss";
            }
        }
        have_group = true;
    }

    void ensure_inputs() {
        if (have_inputs) return;
        if (is_e6) {
            inputs = sk::e6_class_inputs(rs);
        } else {
            ensure_group();
            inputs = sk::class_inputs(*group, classes);
        }
        have_inputs = true;
    }

    const sk::ClassInput* input_of(const std::string& label) const {
        for (const auto& in : inputs)
            if (in.label == label) return &in;
        return nullptr;
    }

    // Per-class sector rows on one side, order = inputs order, parallel over
    // classes, memoized for the sectors -> ktheory hand-off in verify-all.
    const std::vector<SectorRowData>& sector_rows(Side side) {
        auto it = sector_memo.find(side);
        if (it != sector_memo.end()) return it->second;
        ensure_inputs();
        std::vector<SectorRowData> rows(inputs.size());
        parallel_for(cfg.jobs, inputs.size(), [&](std::size_t i) {
            const sk::ClassInput& in = inputs[i];
            const sk::SectorReport rep = sk::sector_betti(in.w, in.label, side, in.z);
            SectorRowData row;
            row.label = in.label;
            row.side = side;
            row.betti = rep.betti;
            row.euler = rep.euler;
            row.components = tf::analyze_fixed_set(in.w, side).component_count();
            row.orbit_count = rep.betti.empty() ? 0 : rep.betti.front().get_si();
            rows[i] = std::move(row);
        });
        return sector_memo.emplace(side, std::move(rows)).first->second;
    }
};

std::vector<Side> selected_sides(const RunConfig& cfg) {
    if (cfg.side == "root") return {Side::root};
    if (cfg.side == "weight") return {Side::weight};
    return {Side::root, Side::weight};
}

IntMatrix load_cartan_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read Cartan file: " + path);
    Json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw Error("Cartan file is not valid JSON: " + path + " (" + e.what() + ")");
    }
    const Json& m = doc.is_object() && doc.contains("cartan") ? doc.at("cartan") : doc;
    if (!m.is_array() || m.empty()) throw Error("Cartan file must hold a square integer matrix");
    const int n = static_cast<int>(m.size());
    IntMatrix c(n, n);
    for (int i = 0; i < n; ++i) {
        if (!m[i].is_array() || static_cast<int>(m[i].size()) != n)
            throw Error("Cartan file must hold a square integer matrix");
        for (int j = 0; j < n; ++j) c.at(i, j) = m[i][j].get<long>();
    }
    return c;
}

Context make_context(const RunConfig& cfg) {
    Context ctx;
    ctx.cfg = cfg;
    if (cfg.cartan.empty()) {
        ctx.rs = root_system::e6();
        ctx.is_e6 = true;
    } else {
        const IntMatrix c = load_cartan_file(cfg.cartan);
        ctx.rs = root_system::from_cartan(c);
        ctx.is_e6 = c == root_system::e6_cartan();
    }
    return ctx;
}

std::optional<std::string> validate(const RunConfig& cfg) {
    bool known = false;
    for (const char* c : kCommands) known = known || cfg.command == c;
    if (!known) return "unknown command '" + cfg.command + "'";
    if (cfg.side != "root" && cfg.side != "weight" && cfg.side != "both")
        return "--side must be root, weight or both";
    if (cfg.format != "json" && cfg.format != "md" && cfg.format != "csv")
        return "--format must be json, md or csv";
    if (cfg.jobs < 1) return "--jobs must be >= 1";
    if (cfg.sample < 1) return "--sample must be >= 1";
    return std::nullopt;
}

// Writes the rendered report to cfg.out or the default stream; diagnostics
// for nonzero exits go to err.
int emit(const Context& ctx, const Json& doc, const Checker& chk, std::ostream& out,
         std::ostream& err, bool emit_report) {
    if (emit_report) {
        const std::string text = report::render(doc, ctx.cfg.format);
        if (!ctx.cfg.out.empty()) {
            std::ofstream f(ctx.cfg.out, std::ios::binary | std::ios::trunc);
            if (!f) throw Error("cannot open output file: " + ctx.cfg.out);
            f << text;
            if (!f) throw Error("cannot write output file: " + ctx.cfg.out);
        } else {
            out << text;
        }
    }
    if (!chk.passed()) {
        err << "verification mismatch: " << chk.failures.front();
        if (chk.failures.size() > 1)
            err << " (+" << chk.failures.size() - 1 << " more)";
        err << '\n';
        return 2;
    }
    return 0;
}

std::string row_status(const Checker& chk, std::size_t before) {
    if (chk.failures.size() == before) return "ok";
    const std::string& first = chk.failures[before];
    const auto f = first.find("field ");
    const auto c = first.find(':', f);
    return "mismatch:" + first.substr(f + 6, c - f - 6);
}

// ---------------------------------------------------------------------------
// classes

int cmd_classes(Context& ctx, const std::vector<ClassFixture>& expectations, std::ostream& out,
                std::ostream& err, bool emit_report) {
    ctx.ensure_group();
    const Group& g = *ctx.group;
    Checker chk;
    Json rows = Json::array();

    if (!expectations.empty() && !ctx.is_e6)
        throw Error("expectation tables apply to the E6 system only");

    if (!expectations.empty()) {
        chk.expect(g.order() == 51840, "(group)", "group_order", "51840",
                   std::to_string(g.order()));
        chk.expect(ctx.classes.size() == expectations.size(), "(group)", "class_count",
                   std::to_string(expectations.size()), std::to_string(ctx.classes.size()));

        for (const ClassFixture& f : expectations) {
            const std::size_t before = chk.failures.size();
            const ConjugacyClass* cls = nullptr;
            for (const ConjugacyClass& c : ctx.classes)
                if (c.carter_type == f.label) cls = &c;
            Json row;
            row["carter_type"] = f.label;
            row["word"] = f.word;
            row["structure"] = f.structure;
            if (!chk.expect(cls != nullptr, f.label, "class", "present", "absent")) {
                row["status"] = row_status(chk, before);
                rows.push_back(std::move(row));
                continue;
            }

            GroupElement w = GroupElement::identity(ctx.rs.rank());
            bool parsed = true;
            try {
                w = root_system::parse_word(ctx.rs, f.word);
            } catch (const WordSyntaxError& e) {
                parsed = false;
                chk.expect(false, f.label, "word", "parseable", e.what());
            }
            if (parsed) {
                const std::uint32_t wi = g.index_of(w);
                const bool member = std::binary_search(cls->members.begin(), cls->members.end(), wi);
                chk.expect(member, f.label, "word", "representative of " + std::string(f.label),
                           "element outside the class");
            }

            auto sorted = [](std::vector<std::pair<int, int>> v) {
                std::sort(v.begin(), v.end());
                return v;
            };
            chk.expect(sorted(cls->eigenvalue_orders) == sorted(f.eigenvalue_orders), f.label,
                       "eigenvalues", f.eigenvalues,
                       report::spectrum_display(cls->eigenvalue_orders));
            chk.expect(cls->centraliser_order == static_cast<unsigned long>(f.centraliser_order),
                       f.label, "centraliser_order", std::to_string(f.centraliser_order),
                       std::to_string(cls->centraliser_order));
            chk.expect(cls->element_order == f.element_order, f.label, "element_order",
                       std::to_string(f.element_order), std::to_string(cls->element_order));
            chk.expect(cls->size() * cls->centraliser_order == g.order(), f.label, "class_size",
                       "|W| / |Z(w)|", std::to_string(cls->size()));

            // Elementary part: the frozen generators close to a subgroup of the
            // centraliser with the tabulated order and index.
            std::vector<std::uint32_t> egens;
            bool egood = parsed;
            for (const char* gw : f.elementary_generators) {
                try {
                    const GroupElement ge = root_system::parse_word(ctx.rs, gw);
                    if (parsed && !(ge * w == w * ge)) {
                        chk.expect(false, f.label, "elementary_generators",
                                   "generators centralising the representative",
                                   std::string(gw) + " does not commute");
                        egood = false;
                    }
                    egens.push_back(g.index_of(ge));
                } catch (const Error& e) {
                    chk.expect(false, f.label, "elementary_generators", "parseable generators",
                               e.what());
                    egood = false;
                }
            }
            long eorder = 0;
            if (egood) {
                eorder = static_cast<long>(weyl_group::subgroup_generated(g, egens).elements.size());
                chk.expect(eorder == f.elementary_order, f.label, "elementary_order",
                           std::to_string(f.elementary_order), std::to_string(eorder));
                if (eorder > 0)
                    chk.expect(f.centraliser_order / eorder == f.elementary_index &&
                                   f.centraliser_order % eorder == 0,
                               f.label, "elementary_index", std::to_string(f.elementary_index),
                               std::to_string(f.centraliser_order / eorder));
            }

            row["eigenvalues"] = f.eigenvalues;
            row["class_size"] = cls->size();
            row["centraliser_order"] = cls->centraliser_order;
            row["element_order"] = cls->element_order;
            std::string egdisplay;
            for (std::size_t i = 0; i < f.elementary_generators.size(); ++i) {
                if (i) egdisplay += ", ";
                egdisplay += f.elementary_generators[i];
            }
            row["elementary_generators"] = egdisplay;
            row["elementary_order"] = eorder;
            row["elementary_index"] = f.elementary_index;
            row["status"] = row_status(chk, before);
            rows.push_back(std::move(row));
        }
    } else {
        std::size_t covered = 0;
        for (const ConjugacyClass& c : ctx.classes) {
            const std::size_t before = chk.failures.size();
            covered += c.size();
            chk.expect(c.size() * c.centraliser_order == g.order(), c.carter_type, "class_size",
                       "|W| / |Z(w)|", std::to_string(c.size()));
            Json row;
            row["carter_type"] = c.carter_type;
            row["word"] = "";
            row["structure"] = "";
            row["eigenvalues"] = report::spectrum_display(c.eigenvalue_orders);
            row["class_size"] = c.size();
            row["centraliser_order"] = c.centraliser_order;
            row["element_order"] = c.element_order;
            row["elementary_generators"] = "";
            row["elementary_order"] = 0;
            row["elementary_index"] = 0;
            row["status"] = row_status(chk, before);
            rows.push_back(std::move(row));
        }
        chk.expect(covered == g.order(), "(group)", "class_partition", std::to_string(g.order()),
                   std::to_string(covered));
    }

    Json doc;
    doc["command"] = "classes";
    doc["group_order"] = g.order();
    doc["class_count"] = ctx.classes.size();
    doc["cache"] = ctx.cache_state;
    doc["rows"] = std::move(rows);
    doc["status"] = chk.passed() ? "pass" : "fail";
    return emit(ctx, doc, chk, out, err, emit_report);
}

// ---------------------------------------------------------------------------
// fixed-sets

int cmd_fixed_sets(Context& ctx, std::ostream& out, std::ostream& err, bool emit_report) {
    ctx.ensure_inputs();
    const std::vector<Side> sides = selected_sides(ctx.cfg);

    struct Slot {
        tf::FixedSetReport rep;
    };
    std::vector<Slot> slots(ctx.inputs.size() * sides.size());
    parallel_for(ctx.cfg.jobs, slots.size(), [&](std::size_t k) {
        const sk::ClassInput& in = ctx.inputs[k / sides.size()];
        const Side side = sides[k % sides.size()];
        slots[k].rep = tf::fixed_set_report(ctx.rs, in.w, in.label, side, in.z);
    });

    Checker chk;
    Json rows = Json::array();
    Json ramified = Json::array();
    for (std::size_t i = 0; i < ctx.inputs.size(); ++i) {
        const sk::ClassInput& in = ctx.inputs[i];
        const ClassFixture* f = ctx.is_e6 ? class_table::find(in.label) : nullptr;
        long root_components = -1, root_orbits = -1;
        for (std::size_t s = 0; s < sides.size(); ++s) {
            const tf::FixedSetReport& rep = slots[i * sides.size() + s].rep;
            const std::string rowid = in.label + "/" + tf::side_name(rep.side);
            const std::size_t before = chk.failures.size();
            const long components =
                [&] {
                    long c = 1;
                    for (const Int& d : rep.invariant_factors) c *= d.get_si();
                    return c;
                }();

            if (f != nullptr) {
                chk.expect(rep.torus_dim == f->torus_dim, rowid, "torus_dim",
                           std::to_string(f->torus_dim), std::to_string(rep.torus_dim));
                std::vector<long> got;
                for (const Int& d : rep.invariant_factors) got.push_back(d.get_si());
                chk.expect(got == f->invariant_factors, rowid, "invariant_factors",
                           list_str(f->invariant_factors), list_str(got));
                chk.expect(rep.ramified == f->ramified, rowid, "ramified",
                           f->ramified ? "true" : "false", rep.ramified ? "true" : "false");
                chk.expect(rep.orbit_count == f->orbit_count, rowid, "orbit_count",
                           std::to_string(f->orbit_count), std::to_string(rep.orbit_count));
            } else if (rep.side == Side::weight && root_components >= 0) {
                // Cross-side agreement (the dual fixed sets are isomorphic).
                chk.expect(components == root_components, rowid, "components",
                           std::to_string(root_components), std::to_string(components));
                chk.expect(rep.orbit_count == root_orbits, rowid, "orbit_count",
                           std::to_string(root_orbits), std::to_string(rep.orbit_count));
            }
            if (rep.side == Side::root) {
                root_components = components;
                root_orbits = rep.orbit_count;
                if (rep.ramified) ramified.push_back(in.label);
            }

            Json row;
            row["carter_type"] = in.label;
            row["word"] = f != nullptr ? f->word : "";
            row["side"] = tf::side_name(rep.side);
            row["torus_dim"] = rep.torus_dim;
            row["invariant_factors"] = int_list_json(rep.invariant_factors);
            Json creps = Json::array();
            for (const tf::TorusPoint& p : rep.component_representatives)
                creps.push_back(report::rational_vector_json(p.coords));
            row["component_representatives"] = std::move(creps);
            row["fixed_set"] = report::fixed_set_display(rep.torus_dim, rep.invariant_factors);
            row["components"] = components;
            row["orbit_count"] = rep.orbit_count;
            row["ramified"] = rep.ramified;
            row["status"] = row_status(chk, before);
            rows.push_back(std::move(row));
        }
    }

    Json doc;
    doc["command"] = "fixed-sets";
    doc["side"] = ctx.cfg.side;
    doc["rows"] = std::move(rows);
    if (std::find(sides.begin(), sides.end(), Side::root) != sides.end())
        doc["ramified_classes"] = std::move(ramified);
    doc["status"] = chk.passed() ? "pass" : "fail";
    return emit(ctx, doc, chk, out, err, emit_report);
}

// ---------------------------------------------------------------------------
// duality

int cmd_duality(Context& ctx, std::ostream& out, std::ostream& err, bool emit_report) {
    ctx.ensure_inputs();
    Checker chk;

    std::vector<tf::PairingReport> reps(ctx.inputs.size());
    std::vector<char> projector_ok(ctx.inputs.size(), 1);
    parallel_for(ctx.cfg.jobs, ctx.inputs.size(), [&](std::size_t i) {
        const sk::ClassInput& in = ctx.inputs[i];
        reps[i] = tf::verify_duality(in.w, in.label, in.z);
        if (!reps[i].vacuous)
            projector_ok[i] = tf::projector_identity_holds(ctx.rs, in.w) ? 1 : 0;
    });

    Json rows = Json::array();
    Json notices = Json::array();
    for (std::size_t i = 0; i < ctx.inputs.size(); ++i) {
        const sk::ClassInput& in = ctx.inputs[i];
        const tf::PairingReport& rep = reps[i];
        const std::size_t before = chk.failures.size();
        Json row;
        row["carter_type"] = in.label;
        row["skipped"] = rep.vacuous;
        if (rep.vacuous) {
            notices.push_back("identity class " + in.label +
                              " skipped: the pairing is vacuous (nothing to pair)");
            row["mu"] = "0";
            row["component_group"] = "1";
            row["pairing"] = Json::array();
            row["well_defined"] = true;
            row["nondegenerate"] = true;
            row["equivariant"] = true;
            row["status"] = "ok";
            rows.push_back(std::move(row));
            continue;
        }

        chk.expect(rep.invariants_match, in.label, "invariants_match", "true", "false");
        chk.expect(rep.well_defined, in.label, "well_defined", "true", "false");
        chk.expect(rep.nondegenerate, in.label, "nondegenerate", "true", "false");
        chk.expect(rep.equivariant, in.label, "equivariant", "true", "false");
        chk.expect(projector_ok[i] != 0, in.label, "projector_identity", "true", "false");

        if (const ClassFixture* f = ctx.is_e6 ? class_table::find(in.label) : nullptr) {
            chk.expect(rep.mu == f->mu, in.label, "mu", std::to_string(f->mu), int_str(rep.mu));
            std::vector<long> got;
            for (const Int& o : rep.orders) got.push_back(o.get_si());
            chk.expect(got == f->invariant_factors, in.label, "component_orders",
                       list_str(f->invariant_factors), list_str(got));
            std::vector<std::vector<Int>> want;
            for (const auto& r : f->pairing) want.emplace_back(r.begin(), r.end());
            chk.expect(rep.matrix == want, in.label, "pairing", matrix_str(want),
                       matrix_str(rep.matrix));
        }

        row["mu"] = int_str(rep.mu);
        row["component_group"] = report::fixed_set_display(0, rep.orders);
        Json pm = Json::array();
        for (const auto& r : rep.matrix) pm.push_back(int_list_json(r));
        row["pairing"] = std::move(pm);
        row["well_defined"] = rep.well_defined;
        row["nondegenerate"] = rep.nondegenerate;
        row["equivariant"] = rep.equivariant;
        row["status"] = row_status(chk, before);
        rows.push_back(std::move(row));
    }

    // Minor-gcd sweep: the product of the invariant factors of I - w equals
    // the gcd of the rank-sized minors, on both sides with the same value.
    std::vector<GroupElement> sweep;
    std::string mode;
    if (ctx.is_e6) {
        mode = "sample";
        const auto sp = root_system::special_elements(ctx.rs);
        for (const auto& in : ctx.inputs)
            if (!in.w.is_identity()) sweep.push_back(in.w);
        SplitMix rng(0xe6e6e6e6u);
        for (long t = 0; t < ctx.cfg.sample; ++t) {
            GroupElement w = GroupElement::identity(ctx.rs.rank());
            const int len = 5 + static_cast<int>(rng.next() % 12);
            for (int i = 0; i < len; ++i) w = w * sp.s[rng.next() % 7];
            if (!w.is_identity()) sweep.push_back(w);
        }
    } else {
        mode = "full";
        ctx.ensure_group();
        for (const GroupElement& w : ctx.group->elements)
            if (!w.is_identity()) sweep.push_back(w);
    }
    std::vector<std::string> sweep_fail(sweep.size());
    parallel_for(ctx.cfg.jobs, sweep.size(), [&](std::size_t i) {
        Int value[2];
        int s = 0;
        for (const Side side : {Side::root, Side::weight}) {
            const tf::FixedSetData fs = tf::analyze_fixed_set(sweep[i], side);
            Int prod = 1;
            for (const Int& d : fs.snf.invariant_factors) prod *= d;
            const Int gcd = el::gcd_minors(fs.A, fs.rank);
            if (gcd != prod) {
                sweep_fail[i] = std::string("minor gcd ") + gcd.get_str() +
                                " != invariant factor product " + prod.get_str() + " on the " +
                                tf::side_name(side) + " side";
                return;
            }
            value[s++] = prod;
        }
        if (value[0] != value[1])
            sweep_fail[i] = "component group orders differ across sides: " + value[0].get_str() +
                            " vs " + value[1].get_str();
    });
    for (std::size_t i = 0; i < sweep.size(); ++i)
        if (!sweep_fail[i].empty()) {
            chk.expect(false, "(sweep element " + std::to_string(i) + ")", "minor_gcd",
                       "minor-gcd equality on both sides", sweep_fail[i]);
            break;
        }

    // The worked example: I - M and I - M^T both have 4x4 minor gcd 4.
    const IntMatrix example = IntMatrix::from_rows({{-1, 1, 0, 0, 0, -1},
                                                    {0, 1, 0, 0, 0, -2},
                                                    {0, 1, -1, 1, 0, -2},
                                                    {0, 0, 0, 1, 0, -2},
                                                    {0, 0, 0, 1, -1, -1},
                                                    {0, 0, 0, 0, 0, -1}});
    const IntMatrix iMinusM = IntMatrix::identity(6) - example;
    const Int eg = el::gcd_minors(iMinusM, 4);
    const Int egT = el::gcd_minors(iMinusM.transpose(), 4);
    chk.expect(eg == 4 && egT == 4, "(example)", "example_minor_gcd", "4",
               eg.get_str() + "/" + egT.get_str());

    Json doc;
    doc["command"] = "duality";
    doc["rows"] = std::move(rows);
    doc["notices"] = std::move(notices);
    Json sw;
    sw["mode"] = mode;
    sw["requested"] = ctx.cfg.sample;
    sw["checked"] = sweep.size();
    sw["status"] = std::all_of(sweep_fail.begin(), sweep_fail.end(),
                               [](const std::string& s) { return s.empty(); })
                       ? "pass"
                       : "fail";
    doc["sweep"] = std::move(sw);
    doc["example_minor_gcd"] = eg.get_str();
    doc["status"] = chk.passed() ? "pass" : "fail";
    return emit(ctx, doc, chk, out, err, emit_report);
}

// ---------------------------------------------------------------------------
// sectors / ktheory

Json sector_row_json(const SectorRowData& r, const std::string& status) {
    Json row;
    row["carter_type"] = r.label;
    row["side"] = tf::side_name(r.side);
    row["betti"] = int_list_json(r.betti);
    row["euler"] = r.euler.get_si();
    row["components"] = r.components;
    row["orbit_count"] = r.orbit_count;
    row["status"] = status;
    return row;
}

void check_sector_rows(Context& ctx, Checker& chk, const std::vector<Side>& sides,
                       Json& rows_out) {
    const bool both = sides.size() == 2;
    for (std::size_t i = 0; i < ctx.inputs.size(); ++i) {
        for (const Side side : sides) {
            const SectorRowData& r = ctx.sector_rows(side)[i];
            const std::string rowid = r.label + "/" + tf::side_name(r.side);
            const std::size_t before = chk.failures.size();
            if (const ClassFixture* f = ctx.is_e6 ? class_table::find(r.label) : nullptr) {
                std::vector<long> got;
                for (const Int& b : r.betti) got.push_back(b.get_si());
                chk.expect(got == f->betti, rowid, "betti", list_str(f->betti), list_str(got));
                chk.expect(r.orbit_count == f->orbit_count, rowid, "orbit_count",
                           std::to_string(f->orbit_count), std::to_string(r.orbit_count));
            } else {
                chk.expect(!r.betti.empty() && r.betti.front() == r.orbit_count, rowid, "betti",
                           "b0 = centraliser orbit count", list_str(r.betti));
            }
            if (both && side == Side::weight) {
                const SectorRowData& root = ctx.sector_rows(Side::root)[i];
                chk.expect(r.betti == root.betti, rowid, "betti",
                           "equal Betti vectors on both sides", list_str(r.betti));
                chk.expect(r.orbit_count == root.orbit_count, rowid, "orbit_count",
                           std::to_string(root.orbit_count), std::to_string(r.orbit_count));
            }
            rows_out.push_back(sector_row_json(r, row_status(chk, before)));
        }
    }
}

int cmd_sectors(Context& ctx, std::ostream& out, std::ostream& err, bool emit_report) {
    ctx.ensure_inputs();
    const std::vector<Side> sides = selected_sides(ctx.cfg);
    Checker chk;
    Json rows = Json::array();
    check_sector_rows(ctx, chk, sides, rows);

    Json doc;
    doc["command"] = "sectors";
    doc["side"] = ctx.cfg.side;
    doc["rows"] = std::move(rows);
    doc["note"] = "sector comparison across the two forms is consistent at cohomology level";
    doc["status"] = chk.passed() ? "pass" : "fail";
    return emit(ctx, doc, chk, out, err, emit_report);
}

int cmd_ktheory(Context& ctx, std::ostream& out, std::ostream& err, bool emit_report) {
    ctx.ensure_inputs();
    const std::vector<Side> sides = selected_sides(ctx.cfg);
    Checker chk;
    Json rows = Json::array();
    check_sector_rows(ctx, chk, sides, rows);

    Json totals;
    for (const Side side : sides) {
        Int k0 = 0, k1 = 0;
        for (const SectorRowData& r : ctx.sector_rows(side))
            for (std::size_t k = 0; k < r.betti.size(); ++k)
                (k % 2 == 0 ? k0 : k1) += r.betti[k];
        Json t;
        t["k0"] = k0.get_si();
        t["k1"] = k1.get_si();
        totals[tf::side_name(side)] = std::move(t);

        if (ctx.is_e6) {
            const auto [e0, e1] = class_table::e6_ktheory_expected();
            const std::string rowid = std::string("(totals/") + tf::side_name(side) + ")";
            chk.expect(k0 == e0, rowid, "k0", std::to_string(e0), k0.get_str());
            chk.expect(k1 == e1, rowid, "k1", std::to_string(e1), k1.get_str());
        }
    }
    if (sides.size() == 2) {
        const Json& r = totals["root"];
        const Json& w = totals["weight"];
        chk.expect(r == w, "(totals)", "sides_agree", r.dump(), w.dump());
    }

    Json doc;
    doc["command"] = "ktheory";
    doc["side"] = ctx.cfg.side;
    doc["totals"] = std::move(totals);
    doc["agree"] = sides.size() == 2 ? Json(doc["totals"]["root"] == doc["totals"]["weight"])
                                     : Json(true);
    doc["rows"] = std::move(rows);
    doc["note"] = "sector comparison across the two forms is consistent at cohomology level";
    doc["status"] = chk.passed() ? "pass" : "fail";
    return emit(ctx, doc, chk, out, err, emit_report);
}

// ---------------------------------------------------------------------------
// power-map

int cmd_power_map(Context& ctx, std::ostream& out, std::ostream& err, bool emit_report) {
    ctx.ensure_group();
    ctx.ensure_inputs();
    const std::vector<weyl_group::PowerMapEntry> entries =
        weyl_group::power_class_map(*ctx.group, ctx.classes);

    // In-text power relations for the E6 table, keyed (class, k).
    static const std::map<std::pair<std::string, long>, std::string> kNamedEdges = {
        {{"D4[a1]", 2}, "A1^4"}, {{"E6[a2]", 2}, "A2^3"},  {{"D4", 3}, "A1^4"},
        {{"E6", 2}, "E6[a2]"},   {{"E6", 3}, "D4[a1]"},    {{"E6", 4}, "A2^3"},
        {{"E6[a1]", 3}, "A2^3"}, {{"D5", 2}, "D4[a1]"},    {{"A5xA1", 2}, "A2^2"},
        {{"A5xA1", 3}, "A1^4"},
    };

    Checker chk;
    Json rows = Json::array();
    std::size_t named_seen = 0;
    for (const auto& e : entries) {
        const ConjugacyClass& src = ctx.classes[e.cls];
        const ConjugacyClass& dst = ctx.classes[e.power_cls];
        const std::string rowid = src.carter_type + " k=" + std::to_string(e.k);
        const std::size_t before = chk.failures.size();

        const auto named = kNamedEdges.find({src.carter_type, e.k});
        if (ctx.is_e6 && named != kNamedEdges.end()) {
            ++named_seen;
            chk.expect(dst.carter_type == named->second, rowid, "power_type", named->second,
                       dst.carter_type);
        }
        chk.expect(dst.centraliser_order % src.centraliser_order == 0, rowid,
                   "centraliser_inclusion", "|Z(w)| divides |Z(w^k)|",
                   std::to_string(src.centraliser_order) + " !| " +
                       std::to_string(dst.centraliser_order));

        // Z_W(w) must centralise w^k elementwise.
        bool inclusion = true;
        if (const sk::ClassInput* in = ctx.input_of(src.carter_type)) {
            const GroupElement p = in->w.power(e.k);
            for (const GroupElement& z : in->z)
                if (!(z * p == p * z)) {
                    inclusion = false;
                    break;
                }
        }
        chk.expect(inclusion, rowid, "centraliser_inclusion",
                   "every centraliser element commutes with w^k", "commutation failure");

        Json row;
        row["carter_type"] = src.carter_type;
        row["k"] = e.k;
        row["power_type"] = dst.carter_type;
        row["centraliser_inclusion"] = inclusion;
        row["status"] = row_status(chk, before);
        rows.push_back(std::move(row));
    }
    if (ctx.is_e6)
        chk.expect(named_seen == kNamedEdges.size(), "(edges)", "named_edges",
                   std::to_string(kNamedEdges.size()), std::to_string(named_seen));

    Json doc;
    doc["command"] = "power-map";
    doc["rows"] = std::move(rows);
    doc["status"] = chk.passed() ? "pass" : "fail";
    return emit(ctx, doc, chk, out, err, emit_report);
}

// ---------------------------------------------------------------------------
// dump

int cmd_dump(Context& ctx, std::ostream& out, std::ostream& err, bool emit_report) {
    ctx.ensure_group();
    Checker chk;

    Json doc;
    doc["command"] = "dump";
    doc["rank"] = ctx.rs.rank();
    doc["cartan"] = report::int_matrix_json(ctx.rs.cartan);
    Json sroots = Json::array();
    for (const auto& r : ctx.rs.simple_roots) sroots.push_back(r);
    doc["simple_roots"] = std::move(sroots);
    Json roots = Json::array();
    for (const auto& r : ctx.rs.all_roots) roots.push_back(r);
    doc["roots"] = std::move(roots);
    doc["root_count"] = ctx.rs.all_roots.size();

    if (ctx.is_e6) {
        const auto sp = root_system::special_elements(ctx.rs);
        Json specials;
        for (int i = 0; i < 7; ++i) specials["s" + std::to_string(i)] = element_json(sp.s[i]);
        specials["T"] = element_json(sp.T);
        specials["u1"] = element_json(sp.u1);
        specials["u2"] = element_json(sp.u2);
        specials["u3"] = element_json(sp.u3);
        doc["special_elements"] = std::move(specials);
    }

    doc["group_order"] = ctx.group->order();
    doc["cache"] = ctx.cache_state;
    Json rows = Json::array();
    for (const ConjugacyClass& c : ctx.classes) {
        Json row;
        row["carter_type"] = c.carter_type;
        row["class_size"] = c.size();
        row["centraliser_order"] = c.centraliser_order;
        row["element_order"] = c.element_order;
        row["representative"] = c.representative;
        rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    doc["status"] = "pass";
    return emit(ctx, doc, chk, out, err, emit_report);
}

// ---------------------------------------------------------------------------
// verify-all

int cmd_verify_all(Context& ctx, std::ostream& out, std::ostream& err) {
    struct Suite {
        const char* name;
        std::function<int()> fn;
    };
    // Dependency order: the class table underpins every later stage; sectors
    // feed the K-theory totals.
    const Suite suites[] = {
        {"classes",
         [&] {
             return cmd_classes(ctx, ctx.is_e6 ? class_table::e6_classes()
                                               : std::vector<ClassFixture>{},
                                out, err, false);
         }},
        {"fixed-sets", [&] { return cmd_fixed_sets(ctx, out, err, false); }},
        {"duality", [&] { return cmd_duality(ctx, out, err, false); }},
        {"sectors", [&] { return cmd_sectors(ctx, out, err, false); }},
        {"ktheory", [&] { return cmd_ktheory(ctx, out, err, false); }},
        {"power-map", [&] { return cmd_power_map(ctx, out, err, false); }},
    };

    Json rows = Json::array();
    std::string first_failure;
    int aggregate = 0;
    for (const Suite& s : suites) {
        const auto t0 = std::chrono::steady_clock::now();
        int code;
        try {
            code = s.fn();
        } catch (const Error& e) {
            err << "error in suite " << s.name << ": " << e.what() << '\n';
            code = 1;
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
        err << "timing: " << s.name << " " << ms << " ms"
            << (ctx.cache_state == "hit" && std::string(s.name) == "classes" ? " (cache hit)"
                                                                             : "")
            << '\n';
        Json row;
        row["name"] = s.name;
        row["exit_code"] = code;
        row["status"] = code == 0 ? "pass" : "fail";
        rows.push_back(std::move(row));
        if (code != 0 && first_failure.empty()) first_failure = s.name;
        if (code != 0) aggregate = std::max(aggregate, code);
    }

    Json doc;
    doc["command"] = "verify-all";
    doc["rows"] = std::move(rows);
    doc["first_failure"] = first_failure;
    doc["status"] = aggregate == 0 ? "pass" : "fail";
    Checker none;
    const int emit_code = emit(ctx, doc, none, out, err, true);
    return aggregate != 0 ? aggregate : emit_code;
}

} // namespace

int run_classes(const RunConfig& cfg, const std::vector<ClassFixture>& expectations,
                std::ostream& out, std::ostream& err) {
    try {
        if (const auto usage = validate(cfg)) {
            err << "usage error: " << *usage << '\n';
            return 1;
        }
        Context ctx = make_context(cfg);
        return cmd_classes(ctx, expectations, out, err, true);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (const auto usage = validate(cfg)) {
            err << "usage error: " << *usage << '\n';
            return 1;
        }
        Context ctx = make_context(cfg);
        if (cfg.command == "classes")
            return cmd_classes(ctx,
                               ctx.is_e6 ? class_table::e6_classes() : std::vector<ClassFixture>{},
                               out, err, true);
        if (cfg.command == "fixed-sets") return cmd_fixed_sets(ctx, out, err, true);
        if (cfg.command == "duality") return cmd_duality(ctx, out, err, true);
        if (cfg.command == "sectors") return cmd_sectors(ctx, out, err, true);
        if (cfg.command == "ktheory") return cmd_ktheory(ctx, out, err, true);
        if (cfg.command == "power-map") return cmd_power_map(ctx, out, err, true);
        if (cfg.command == "dump") return cmd_dump(ctx, out, err, true);
        return cmd_verify_all(ctx, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace weylk::cli
