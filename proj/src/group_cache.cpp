#include "weylk/group_cache.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "weylk/error.hpp"

namespace weylk::group_cache {

namespace {

using exact_linalg::IntMatrix;
using nlohmann::json;
using root_system::GroupElement;
using root_system::RootSystem;
using weyl_group::ConjugacyClass;
using weyl_group::Group;

std::uint64_t fnv1a(std::uint64_t h, const std::string& s) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

} // namespace

std::string content_hash(const IntMatrix& cartan) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    h = fnv1a(h, kCacheVersion);
    std::ostringstream os;
    os << cartan.rows() << 'x' << cartan.cols() << ':';
    for (int i = 0; i < cartan.rows(); ++i)
        for (int j = 0; j < cartan.cols(); ++j) os << cartan.at(i, j).get_str() << ',';
    h = fnv1a(h, os.str());
    std::ostringstream hex;
    hex << std::hex << h;
    return "fnv1a:" + hex.str();
}

void save(const std::string& path, const Group& g, const std::vector<ConjugacyClass>& classes) {
    json doc;
    doc["version"] = kCacheVersion;
    doc["hash"] = content_hash(g.rs.cartan);
    doc["rank"] = g.rs.rank();
    doc["generators"] = g.generators;

    json elems = json::array();
    for (const GroupElement& e : g.elements) {
        std::vector<int> flat;
        flat.reserve(static_cast<std::size_t>(e.dim()) * e.dim());
        for (int i = 0; i < e.dim(); ++i)
            for (int j = 0; j < e.dim(); ++j) flat.push_back(e.at(i, j));
        elems.push_back(std::move(flat));
    }
    doc["elements"] = std::move(elems);

    json cls = json::array();
    for (const ConjugacyClass& c : classes) {
        json o;
        o["carter_type"] = c.carter_type;
        o["representative"] = c.representative;
        o["members"] = c.members;
        json eo = json::array();
        for (const auto& [d, m] : c.eigenvalue_orders) eo.push_back(json::array({d, m}));
        o["eigenvalue_orders"] = std::move(eo);
        o["centraliser_order"] = c.centraliser_order;
        o["element_order"] = c.element_order;
        cls.push_back(std::move(o));
    }
    doc["classes"] = std::move(cls);

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cannot open cache file for writing: " + path);
    out << doc.dump() << '\n';
    if (!out) throw CacheError("cannot write cache file: " + path);
}

std::optional<CachedGroup> load(const std::string& path, const RootSystem& rs) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt; // absent: caller enumerates and saves

    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw CacheError("cache file is not valid JSON: " + path + " (" + e.what() + ")");
    }

    try {
        if (doc.at("version").get<std::string>() != kCacheVersion) return std::nullopt;
        if (doc.at("hash").get<std::string>() != content_hash(rs.cartan)) return std::nullopt;

        const int n = doc.at("rank").get<int>();
        if (n != rs.rank()) return std::nullopt;

        CachedGroup out;
        out.group.rs = rs;
        out.group.generators = doc.at("generators").get<std::vector<std::uint32_t>>();

        const json& elems = doc.at("elements");
        out.group.elements.reserve(elems.size());
        std::uint32_t idx = 0;
        for (const auto& flat : elems) {
            if (flat.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
                throw CacheError("cache element has wrong dimension: " + path);
            IntMatrix m(n, n);
            std::size_t k = 0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m.at(i, j) = flat[k++].get<long>();
            GroupElement e = GroupElement::from_matrix(m);
            out.group.index.emplace(e.canonical_key(), idx++);
            out.group.elements.push_back(std::move(e));
        }
        if (out.group.elements.empty() || !out.group.elements.front().is_identity())
            throw CacheError("cache element list does not start with the identity: " + path);

        for (const auto& o : doc.at("classes")) {
            ConjugacyClass c;
            c.carter_type = o.at("carter_type").get<std::string>();
            c.representative = o.at("representative").get<std::uint32_t>();
            c.members = o.at("members").get<std::vector<std::uint32_t>>();
            for (const auto& dm : o.at("eigenvalue_orders"))
                c.eigenvalue_orders.emplace_back(dm.at(0).get<int>(), dm.at(1).get<int>());
            c.centraliser_order = o.at("centraliser_order").get<unsigned long>();
            c.element_order = o.at("element_order").get<int>();
            out.classes.push_back(std::move(c));
        }

        std::size_t covered = 0;
        for (const auto& c : out.classes) covered += c.members.size();
        if (covered != out.group.elements.size())
            throw CacheError("cache class partition does not cover the group: " + path);
        return out;
    } catch (const json::exception& e) {
        throw CacheError("cache document is malformed: " + path + " (" + e.what() + ")");
    }
}

} // namespace weylk::group_cache
