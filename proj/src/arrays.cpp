#include "cphi6/arrays.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

#include "cphi6/appendix.hpp"
#include "cphi6/ints.hpp"
#include "cphi6/modeq.hpp"
#include "cphi6/series.hpp"

namespace fs = std::filesystem;

namespace cphi6 {

namespace {

void validate_key(char array, long k, long m) {
    if (array != 'a' && array != 'b')
        throw series_error("array must be 'a' or 'b'");
    if (k < -1)
        throw series_error("rows with k < -1 are not computable here: "
                           "both recurrences only extend k upward");
    if (m < 0) throw series_error("array row needs m >= 0");
}

std::string cache_name(char array, long k, long m, long cap) {
    return std::string(1, array) + "_k" + std::to_string(k) + "_m" +
           std::to_string(m) + "_D" + std::to_string(cap) + ".json";
}

} // namespace

ArrayProvider::ArrayProvider(long cap, std::string cache_dir)
    : cap_(cap), cache_dir_(std::move(cache_dir)) {
    if (cap_ < 13)
        throw series_error("degree cap too small to hold the base rows");
    if (!cache_dir_.empty()) fs::create_directories(cache_dir_);
}

RowProvenance ArrayProvider::provenance(long k, long m) {
    if (k >= -1 && k <= 1 && m <= 2) return RowProvenance::base;
    if (k >= -1 && k <= 1) return RowProvenance::m_recurrence;
    return RowProvenance::k_recurrence;
}

const TPoly &ArrayProvider::row(char array, long k, long m) {
    std::lock_guard<std::mutex> lock(mtx_);
    const TPoly &p = row_locked(array, k, m);
    persist_locked(array, k, m, p);
    return p;
}

mpz_class ArrayProvider::value(char array, long k, long m, long n) {
    if (n > cap_)
        throw series_error("entry index exceeds the provider's degree cap");
    std::lock_guard<std::mutex> lock(mtx_);
    const TPoly &p = row_locked(array, k, m);
    persist_locked(array, k, m, p);
    return p.coeff(n);
}

/* store_cached stats the file each time; per-row dedup keeps value() calls
   in tight loops from hammering the filesystem. */
void ArrayProvider::persist_locked(char array, long k, long m, const TPoly &p) {
    if (cache_dir_.empty()) return;
    if (!stored_.insert(Key{array, k, m}).second) return;
    store_cached(array, k, m, p);
}

const TPoly &ArrayProvider::row_locked(char array, long k, long m) {
    validate_key(array, k, m);
    const Key key{array, k, m};
    auto it = rows_.find(key);
    if (it != rows_.end()) return it->second;

    TPoly p;
    if (!load_cached(array, k, m, p)) p = compute(array, k, m);
    check_row(array, k, m, p);
    return rows_.emplace(key, std::move(p)).first->second;
}

TPoly ArrayProvider::compute(char array, long k, long m) {
    if (k <= 1 && m <= 2)
        return tp_from(row_to_poly(find_appendix_row(array, k, m)).c, cap_);

    if (k <= 1) {
        /* climb m in steps of 1; each new row uses the previous three */
        for (long mm = 0; mm <= 2; ++mm) row_locked(array, k, mm);
        for (long mm = 3; mm <= m; ++mm) {
            const Key key{array, k, mm};
            if (rows_.count(key)) continue;
            TPoly p;
            p.cap = cap_;
            for (int j = 0; j < 3; ++j) {
                const TPoly &prev = row_locked(array, k, mm - 3 + j);
                p = tp_add(p, tp_mul(m_multiplier(j), prev, cap_));
            }
            check_row(array, k, mm, p);
            rows_.emplace(key, std::move(p));
        }
        return rows_.at(Key{array, k, m});
    }

    /* climb k at fixed m; row(k) uses rows k-3, k-2, k-1 */
    for (long kk = -1; kk <= 1; ++kk) row_locked(array, kk, m);
    for (long kk = 2; kk <= k; ++kk) {
        const Key key{array, kk, m};
        if (rows_.count(key)) continue;
        TPoly p;
        p.cap = cap_;
        for (int j = 0; j < 3; ++j) {
            const TPoly &prev = row_locked(array, kk - 3 + j, m);
            p = tp_add(p, tp_mul(k_multiplier(j), prev, cap_));
        }
        check_row(array, kk, m, p);
        rows_.emplace(key, std::move(p));
    }
    return rows_.at(Key{array, k, m});
}

void ArrayProvider::check_row(char array, long k, long m, const TPoly &p) const {
    const long order_num = (array == 'a') ? k - 3 : k - 1;
    const long order = ceil_div(order_num, 3);
    for (const auto &[n, v] : p.c) {
        if (n < order)
            throw series_error("array row " + std::string(1, array) + "(k=" +
                               std::to_string(k) + ",m=" + std::to_string(m) +
                               ") has a nonzero entry at n=" + std::to_string(n) +
                               " below its order bound " + std::to_string(order));
        const long bound_num = (array == 'a') ? 2 * n - k + 3 : 2 * n - k + 2;
        const long bound = floor_div(bound_num, 3);
        if (bound > 0 && !(val3(v) >= bound))
            throw series_error("array row " + std::string(1, array) + "(k=" +
                               std::to_string(k) + ",m=" + std::to_string(m) +
                               ") violates the 3-adic bound at n=" +
                               std::to_string(n) + ": val3 = " + val3(v).str() +
                               " < " + std::to_string(bound));
    }
}

bool ArrayProvider::load_cached(char array, long k, long m, TPoly &out) const {
    if (cache_dir_.empty()) return false;
    fs::path path = fs::path(cache_dir_) / cache_name(array, k, m, cap_);
    if (!fs::exists(path)) {
        /* a file written under a larger cap serves this one by truncation */
        const std::string prefix = std::string(1, array) + "_k" +
                                   std::to_string(k) + "_m" + std::to_string(m) +
                                   "_D";
        long best = -1;
        std::error_code ec;
        for (const auto &entry : fs::directory_iterator(cache_dir_, ec)) {
            const std::string name = entry.path().filename().string();
            if (name.rfind(prefix, 0) != 0) continue;
            if (name.size() <= prefix.size() + 5) continue;
            if (name.substr(name.size() - 5) != ".json") continue;
            try {
                const long d = std::stol(
                    name.substr(prefix.size(),
                                name.size() - prefix.size() - 5));
                if (d > cap_ && (best == -1 || d < best)) {
                    best = d;
                    path = entry.path();
                }
            } catch (const std::exception &) {
                continue;
            }
        }
        if (best == -1) return false;
    }

    try {
        std::ifstream in(path);
        if (!in) return false;
        nlohmann::json doc = nlohmann::json::parse(in);
        if (doc.at("array").get<std::string>() != std::string(1, array) ||
            doc.at("k").get<long>() != k || doc.at("m").get<long>() != m)
            return false;
        TPoly p;
        p.cap = cap_;
        for (const auto &[key, val] : doc.at("values").items())
            p.set(std::stol(key), mpz_class(val.get<std::string>()));
        out = std::move(p);
        return true;
    } catch (const std::exception &) {
        return false; /* unreadable cache entries are recomputed */
    }
}

void ArrayProvider::store_cached(char array, long k, long m,
                                 const TPoly &p) const {
    if (cache_dir_.empty()) return;
    const fs::path path = fs::path(cache_dir_) / cache_name(array, k, m, cap_);
    std::error_code ec;
    if (fs::exists(path, ec)) return;

    nlohmann::json values = nlohmann::json::object();
    for (const auto &[n, v] : p.c) values[std::to_string(n)] = v.get_str();
    nlohmann::json doc{{"array", std::string(1, array)},
                       {"k", k},
                       {"m", m},
                       {"values", values}};

    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream outf(tmp);
        if (!outf) return;
        outf << doc.dump(1) << '\n';
    }
    fs::rename(tmp, path, ec);
    if (ec) fs::remove(tmp, ec);
}

} // namespace cphi6
