#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "peelmap/exact.hpp"

namespace peelmap {

// Krikun's closed form for the number tau_p(n,0) of rooted type-I
// triangulations of the p-gon:
//   tau_p(n,0) = p(2p)!/(p!)^2 * 4^{n-p+1} (3n-p+1)!! / ((n-p+2)! (n+p+1)!!)
// with (-1)!! = 0!! = 1 so that n = p-2 is covered.
inline Int tau_planar_polygon(long n, long p) {
    if (p < 1) throw domain_error("tau_planar_polygon: p must be >= 1");
    if (n < p - 2) throw domain_error("tau_planar_polygon: need n >= p-2");
    if (2 * n - p + 2 < 0) throw domain_error("tau_planar_polygon: negative triangle count");
    Rat r = Rat(Int(p) * factorial(2 * p)) / Rat(factorial(p) * factorial(p));
    long e = n - p + 1;
    if (e >= 0)
        r *= int_pow(4, static_cast<unsigned long>(e));
    else
        r /= int_pow(4, static_cast<unsigned long>(-e));
    r *= double_factorial(3 * n - p + 1);
    r /= factorial(n - p + 2);
    r /= double_factorial(n + p + 1);
    return to_integer(r, "tau_planar_polygon");
}

// Number of triangulations of genus g with 2n faces carrying a spanning tree,
// via the bijection with matched precubic unicellular maps:
//   tilde_tau(n,g) = Cat(n+1-2g) (8n-4g+2)(4n-2g)! / (12^g g! (2n-4g+2)! (2n-g)!).
inline Int tilde_tau(long n, long g) {
    if (g < 0 || n + 1 - 2 * g < 0) throw domain_error("tilde_tau: need n+1-2g >= 0");
    Rat r = Rat(catalan(n + 1 - 2 * g) * Int(8 * n - 4 * g + 2) * factorial(4 * n - 2 * g));
    r /= int_pow(12, static_cast<unsigned long>(g));
    r /= factorial(g);
    r /= factorial(2 * n - 4 * g + 2);
    r /= factorial(2 * n - g);
    return to_integer(r, "tilde_tau");
}

enum class Provenance { Formula, Recursion, Oracle };

inline const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::Formula: return "formula";
        case Provenance::Recursion: return "recursion";
        case Provenance::Oracle: return "oracle";
    }
    return "?";
}

struct CountKey {
    long n = 0;
    long g = 0;
    std::vector<int> p;  // boundary perimeters, stored sorted (counts are symmetric)

    CountKey() = default;
    CountKey(long n_, long g_, std::vector<int> p_ = {}) : n(n_), g(g_), p(std::move(p_)) {
        std::sort(p.begin(), p.end());
    }
    friend bool operator<(const CountKey& a, const CountKey& b) {
        return std::tie(a.n, a.g, a.p) < std::tie(b.n, b.g, b.p);
    }
    friend bool operator==(const CountKey& a, const CountKey& b) {
        return a.n == b.n && a.g == b.g && a.p == b.p;
    }
};

struct CountEntry {
    Int value;
    Provenance provenance = Provenance::Formula;
};

// Persisted exact table of tau(n,g), tau_p(n,g,...) values. The provenance
// flag keeps oracle-pinned entries distinguishable from recursion output.
class CountTable {
  public:
    static constexpr int kSchemaVersion = 1;

    bool contains(const CountKey& k) const { return entries_.count(k) != 0; }
    const CountEntry* find(const CountKey& k) const {
        auto it = entries_.find(k);
        return it == entries_.end() ? nullptr : &it->second;
    }
    void put(const CountKey& k, Int value, Provenance prov) {
        entries_[k] = CountEntry{std::move(value), prov};
    }
    std::size_t size() const { return entries_.size(); }
    const std::map<CountKey, CountEntry>& entries() const { return entries_; }

    nlohmann::json to_json() const {
        nlohmann::json out;
        out["schema_version"] = kSchemaVersion;
        out["entries"] = nlohmann::json::array();
        for (const auto& [k, e] : entries_) {
            nlohmann::json row;
            row["n"] = k.n;
            row["g"] = k.g;
            row["p"] = k.p;
            row["count"] = e.value.get_str();
            row["provenance"] = provenance_name(e.provenance);
            out["entries"].push_back(row);
        }
        return out;
    }

    static CountTable from_json(const nlohmann::json& j) {
        if (j.at("schema_version").get<int>() != kSchemaVersion)
            throw domain_error("count table: unknown schema version");
        CountTable t;
        for (const auto& row : j.at("entries")) {
            CountKey k(row.at("n").get<long>(), row.at("g").get<long>(),
                       row.at("p").get<std::vector<int>>());
            std::string prov = row.at("provenance").get<std::string>();
            Provenance pr = prov == "oracle"      ? Provenance::Oracle
                            : prov == "recursion" ? Provenance::Recursion
                                                  : Provenance::Formula;
            t.put(k, Int(row.at("count").get<std::string>()), pr);
        }
        return t;
    }

    void save(const std::string& path) const {
        std::ofstream out(path);
        out << to_json().dump(1) << "\n";
    }
    static CountTable load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw domain_error("count table: cannot open " + path);
        nlohmann::json j;
        in >> j;
        return from_json(j);
    }

    std::string to_csv() const {
        std::ostringstream out;
        out << "n,g,p,count,provenance\n";
        for (const auto& [k, e] : entries_) {
            out << k.n << "," << k.g << ",";
            for (std::size_t i = 0; i < k.p.size(); ++i) out << (i ? " " : "") << k.p[i];
            out << "," << e.value.get_str() << "," << provenance_name(e.provenance) << "\n";
        }
        return out.str();
    }

  private:
    std::map<CountKey, CountEntry> entries_;
};

// Goulden-Jackson recursion for tau(n,g), the number of rooted type-I
// triangulations of genus g with 2n faces:
//   tau(n,g) = 4/(n+1) [ n(3n-2)(3n-4) tau(n-2,g-1)
//                        + sum_{i+j=n-2, h+k=g} (3i+2)(3j+2) tau(i,h) tau(j,k) ].
// The printed recursion carries no initial conditions; the seeds
// tau(-1,0) = -1/2 and tau(0,0) = 1 (with tau = 0 whenever n < 2g-1
// otherwise) are the unique rational pair reproducing the brute-force
// counts, which the oracle tests pin down.
class GouldenJackson {
  public:
    Int tau(long n, long g, CountTable* table = nullptr) {
        if (n < 1 || g < 0) throw domain_error("tau: need n >= 1, g >= 0");
        Rat v = rec(n, g);
        Int out = to_integer(v, "tau_GJ");
        if (out < 0) throw domain_error("tau_GJ produced a negative count");
        if (table) table->put(CountKey(n, g), out, Provenance::Recursion);
        return out;
    }

  private:
    Rat rec(long n, long g) {
        if (g < 0 || n < -1) return 0;
        if (n == -1) return g == 0 ? Rat(-1, 2) : Rat(0);
        if (n == 0) return g == 0 ? Rat(1) : Rat(0);
        if (n < 2 * g - 1) return 0;
        auto key = std::make_pair(n, g);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        Rat acc = Rat(Int(n) * Int(3 * n - 2) * Int(3 * n - 4)) * rec(n - 2, g - 1);
        for (long i = -1; i <= n - 1; ++i) {
            long j = n - 2 - i;
            if (j < -1) break;
            for (long h = 0; h <= g; ++h) {
                Rat a = rec(i, h);
                if (a == 0) continue;
                Rat b = rec(j, g - h);
                if (b == 0) continue;
                acc += Rat(Int(3 * i + 2) * Int(3 * j + 2)) * a * b;
            }
        }
        Rat out = Rat(4) / Rat(n + 1) * acc;
        memo_.emplace(key, out);
        return out;
    }

    struct PairHash {
        std::size_t operator()(const std::pair<long, long>& p) const {
            return std::hash<long>()(p.first * 1315423911L + p.second);
        }
    };
    std::unordered_map<std::pair<long, long>, Rat, PairHash> memo_;
};

inline Int tau_gj(long n, long g) {
    GouldenJackson gj;
    return gj.tau(n, g);
}

}  // namespace peelmap
