#include "umemura/cache.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "umemura/errors.hpp"
#include "umemura/poly_io.hpp"

namespace umemura {

namespace {

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (const unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string checksum_polys(const std::vector<BiPoly>& polys) {
    std::string cat;
    for (const auto& p : polys) cat += bipoly_to_json_string(p);
    return fnv1a_hex(cat);
}

SigmaMethod method_from_name(const std::string& name) {
    if (name == "recurrence") return SigmaMethod::recurrence;
    if (name == "hankel") return SigmaMethod::hankel;
    if (name == "cached") return SigmaMethod::cached;
    throw CorruptCache("cache: unknown method tag '" + name + "'");
}

}  // namespace

std::string cache_to_json_string(const UmemuraCache& cache) {
    nlohmann::ordered_json doc;
    doc["version"] = kCacheVersion;
    doc["r"] = cache.r_value ? cache.r_value->str_fraction() : "sym";
    auto entries = nlohmann::ordered_json::array();
    for (const auto& p : cache.entries) entries.push_back(bipoly_to_json(p));
    doc["entries"] = std::move(entries);
    auto sigmas = nlohmann::ordered_json::array();
    auto methods = nlohmann::ordered_json::array();
    std::vector<BiPoly> sigma_list;
    // sigma table must be contiguous from 0 to serialize positionally
    int expected = 0;
    for (const auto& [n, poly] : cache.sigma) {
        if (n != expected)
            throw CorruptCache("cache: sigma table has a gap at n = " + std::to_string(expected));
        ++expected;
        sigmas.push_back(bipoly_to_json(poly));
        sigma_list.push_back(poly);
        auto tag = cache.method.find(n);
        methods.push_back(tag == cache.method.end() ? "cached" : sigma_method_name(tag->second));
    }
    doc["sigmas"] = std::move(sigmas);
    doc["methods"] = std::move(methods);
    doc["checksums"] = {{"entries", checksum_polys(cache.entries)},
                        {"sigmas", checksum_polys(sigma_list)}};
    return doc.dump(2) + "\n";
}

UmemuraCache cache_from_json_string(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw CorruptCache(std::string("cache: unparsable document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("version"))
        throw CorruptCache("cache: missing version field");
    if (!doc["version"].is_number_integer() || doc["version"].get<int>() != kCacheVersion)
        throw VersionMismatch("cache: version " + doc["version"].dump() + ", expected " +
                              std::to_string(kCacheVersion));
    UmemuraCache cache;
    try {
        const std::string r_text = doc.at("r").get<std::string>();
        if (r_text != "sym") cache.r_value = Rational::from_string(r_text);
        for (const auto& p : doc.at("entries")) cache.entries.push_back(bipoly_from_json(p));
        const auto& sigmas = doc.at("sigmas");
        const auto& methods = doc.at("methods");
        if (methods.size() != sigmas.size())
            throw CorruptCache("cache: methods/sigmas length mismatch");
        int n = 0;
        for (const auto& p : sigmas) {
            cache.sigma.emplace(n, bipoly_from_json(p));
            cache.method.emplace(n, method_from_name(methods[static_cast<std::size_t>(n)]
                                                         .get<std::string>()));
            ++n;
        }
        cache.max_n = n - 1;
        std::vector<BiPoly> sigma_list;
        for (const auto& [idx, poly] : cache.sigma) sigma_list.push_back(poly);
        const auto& sums = doc.at("checksums");
        if (sums.at("entries").get<std::string>() != checksum_polys(cache.entries) ||
            sums.at("sigmas").get<std::string>() != checksum_polys(sigma_list))
            throw CorruptCache("cache: checksum failure");
    } catch (const VersionMismatch&) {
        throw;
    } catch (const CorruptCache&) {
        throw;
    } catch (const std::exception& e) {
        throw CorruptCache(std::string("cache: malformed document: ") + e.what());
    }
    return cache;
}

void cache_store(const UmemuraCache& cache, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cache_store: cannot open '" + path + "'");
    out << cache_to_json_string(cache);
    if (!out) throw std::runtime_error("cache_store: write failed for '" + path + "'");
}

UmemuraCache cache_load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cache_load: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return cache_from_json_string(buf.str());
}

UmemuraCache cache_merge(UmemuraCache base, const UmemuraCache& update) {
    const bool same_r = (!base.r_value && !update.r_value) ||
                        (base.r_value && update.r_value && *base.r_value == *update.r_value);
    if (!same_r) throw CorruptCache("cache_merge: r modes differ");
    for (std::size_t i = 0; i < update.entries.size(); ++i) {
        if (i < base.entries.size()) {
            if (base.entries[i] != update.entries[i])
                throw CorruptCache("cache_merge: entry a_" + std::to_string(i) +
                                   " differs from the cached value");
        } else {
            base.entries.push_back(update.entries[i]);
        }
    }
    for (const auto& [n, poly] : update.sigma) {
        auto it = base.sigma.find(n);
        if (it != base.sigma.end()) {
            if (it->second != poly)
                throw CorruptCache("cache_merge: sigma_" + std::to_string(n) +
                                   " differs from the cached value");
        } else {
            base.sigma.emplace(n, poly);
            auto tag = update.method.find(n);
            base.method.emplace(n, tag == update.method.end() ? SigmaMethod::cached
                                                              : tag->second);
        }
    }
    base.max_n = base.sigma.empty() ? -1 : base.sigma.rbegin()->first;
    return base;
}

}  // namespace umemura
