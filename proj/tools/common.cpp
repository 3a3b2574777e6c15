#include "common.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace rqmf_cli {

int thread_count() {
    if (const char* env = std::getenv("RQMF_THREADS"); env && *env) {
        const int n = std::atoi(env);
        if (n >= 1) return std::min(n, 64);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return std::clamp(static_cast<int>(hw), 1, 8);
}

void atomic_write(const std::filesystem::path& path, const std::string& contents) {
    namespace fs = std::filesystem;
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    const fs::path tmp = path.string() + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << contents;
        if (!out.good()) throw std::runtime_error("short write to " + tmp.string());
    }
    fs::rename(tmp, path);
}

void load_zero_cache(const std::filesystem::path& dir) {
    const auto file = dir / "qzeros.json";
    std::ifstream in(file);
    if (!in) return;  // cold cache is not an error
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception&) {
        return;  // corrupt cache: ignore, it will be rewritten
    }
    std::vector<rqmf::mathieu::ZeroCacheEntry> entries;
    for (const auto& e : doc.value("entries", nlohmann::json::array())) {
        if (!e.contains("family") || !e.contains("n") || !e.contains("m") ||
            !e.contains("xi0") || !e.contains("q")) {
            continue;
        }
        entries.push_back({e["family"].get<int>(), e["n"].get<int>(), e["m"].get<int>(),
                           e["xi0"].get<double>(), e["q"].get<double>()});
    }
    rqmf::mathieu::import_zero_cache(entries);
}

void save_zero_cache(const std::filesystem::path& dir) {
    nlohmann::json doc;
    doc["schema"] = "rqmf-qzero-cache/1";
    auto& arr = doc["entries"] = nlohmann::json::array();
    for (const auto& e : rqmf::mathieu::export_zero_cache()) {
        arr.push_back({{"family", e.family},
                       {"n", e.n},
                       {"m", e.m},
                       {"xi0", e.xi0},
                       {"q", e.q_root}});
    }
    atomic_write(dir / "qzeros.json", doc.dump(1));
}

}  // namespace rqmf_cli
