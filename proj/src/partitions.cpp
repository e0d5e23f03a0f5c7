#include "expcon/partitions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace expcon {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw BadComposition("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw BadComposition("partition parts must be weakly decreasing");
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::of_composition(const Composition& pi) {
    std::vector<int> p(pi);
    for (int x : p)
        if (x <= 0) throw BadComposition("composition parts must be positive");
    std::sort(p.begin(), p.end(), std::greater<>());
    return Partition(std::move(p));
}

std::string Partition::to_string() const {
    return composition_to_string(parts_);
}

Partition Partition::parse(const std::string& s) {
    return Partition::of_composition(parse_composition(s));
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw Error("partitions_of requires n >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    // descending lexicographic: always place the largest admissible part first
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

int n_stat(const Partition& lambda) {
    int s = 0;
    const auto& p = lambda.parts();
    for (std::size_t i = 0; i < p.size(); ++i) s += static_cast<int>(i) * p[i];
    return s;
}

Partition conjugate(const Partition& lambda) {
    if (lambda.empty()) return lambda;
    std::vector<int> c(lambda.parts()[0], 0);
    for (int p : lambda.parts())
        for (int j = 0; j < p; ++j) ++c[j];
    return Partition(std::move(c));
}

bool dominates(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw SizeMismatch("dominance needs equal-size partitions");
    int a = 0, b = 0;
    int len = std::max(lambda.length(), mu.length());
    for (int i = 0; i < len; ++i) {
        a += lambda.part(i);
        b += mu.part(i);
        if (a < b) return false;
    }
    return true;
}

namespace {

void check_cell(const Partition& lambda, int row, int col) {
    if (row < 1 || row > lambda.length() || col < 1 || col > lambda.part(row - 1))
        throw CellOutOfRange("cell (" + std::to_string(row) + "," + std::to_string(col) +
                             ") outside partition " + lambda.to_string());
}

} // namespace

int arm(const Partition& lambda, int row, int col) {
    check_cell(lambda, row, col);
    return lambda.part(row - 1) - col;
}

int leg(const Partition& lambda, int row, int col) {
    check_cell(lambda, row, col);
    return conjugate(lambda).part(col - 1) - row;
}

namespace {

// Horizontal-strip recursion over the content, memoized per (shape, #values).
long kostka_rec(const std::vector<int>& shape, const std::vector<int>& content, std::size_t k,
                std::map<std::pair<std::vector<int>, std::size_t>, long>& memo) {
    if (k == 0) return shape.empty() ? 1 : 0;
    auto key = std::make_pair(shape, k);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int strip = content[k - 1];
    long total = 0;
    // enumerate sub-shapes mu <= shape with shape/mu a horizontal strip of size `strip`
    std::vector<int> mu(shape);
    auto rec = [&](auto&& self, std::size_t row, int left) -> void {
        if (row == shape.size()) {
            if (left == 0) {
                std::vector<int> trimmed(mu);
                while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
                total += kostka_rec(trimmed, content, k - 1, memo);
            }
            return;
        }
        int lo_bound = row + 1 < shape.size() ? shape[row + 1] : 0; // mu_row >= shape_{row+1}
        int hi = shape[row];
        for (int v = hi; v >= lo_bound && hi - v <= left; --v) {
            // horizontal strip: mu_row >= shape_{row+1} guarantees column-strictness
            mu[row] = v;
            self(self, row + 1, left - (hi - v));
        }
        mu[row] = shape[row];
    };
    rec(rec, 0, strip);
    memo[key] = total;
    return total;
}

} // namespace

long kostka(const Partition& lambda, const Partition& pi) {
    if (lambda.size() != pi.size()) throw SizeMismatch("kostka needs |lambda| = |pi|");
    static std::mutex mtx;
    static std::map<std::pair<std::vector<int>, std::vector<int>>, long> cache;
    auto key = std::make_pair(lambda.parts(), pi.parts());
    {
        std::lock_guard lock(mtx);
        auto hit = cache.find(key);
        if (hit != cache.end()) return hit->second;
    }
    std::map<std::pair<std::vector<int>, std::size_t>, long> memo;
    long v = kostka_rec(lambda.parts(), pi.parts(), pi.parts().size(), memo);
    std::lock_guard lock(mtx);
    cache[key] = v;
    return v;
}

std::vector<Composition> compositions_of(int n) {
    std::vector<Composition> out;
    Composition cur;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = rest; p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p);
            cur.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

std::string composition_to_string(const Composition& pi) {
    std::string s;
    for (std::size_t i = 0; i < pi.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(pi[i]);
    }
    return s;
}

Composition parse_composition(const std::string& s) {
    Composition out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t caret = item.find('^');
        try {
            if (caret != std::string::npos) {
                int part = std::stoi(item.substr(0, caret));
                int mult = std::stoi(item.substr(caret + 1));
                if (mult < 0) throw ParseError("negative multiplicity in '" + s + "'");
                for (int i = 0; i < mult; ++i) out.push_back(part);
            } else {
                out.push_back(std::stoi(item));
            }
        } catch (const std::invalid_argument&) {
            throw ParseError("bad partition/composition string '" + s + "'");
        } catch (const std::out_of_range&) {
            throw ParseError("bad partition/composition string '" + s + "'");
        }
    }
    if (out.empty()) throw ParseError("empty partition/composition string '" + s + "'");
    return out;
}

} // namespace expcon
