#include "expcon/symgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace expcon {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1])
            throw Error("not a permutation in one-line notation");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

Permutation Permutation::simple(int n, int i) {
    if (i < 1 || i > n - 1) throw IndexOutOfRange("simple reflection index out of range");
    Permutation w = identity(n);
    std::swap(w.images_[i - 1], w.images_[i]);
    return w;
}

bool Permutation::is_identity() const {
    for (int x = 1; x <= n(); ++x)
        if (images_[x - 1] != x) return false;
    return true;
}

std::string Permutation::to_string() const {
    auto word = reduced_word(*this);
    if (word.empty()) return "1";
    std::string s;
    for (std::size_t k = 0; k < word.size(); ++k) {
        if (k) s += ' ';
        s += 's' + std::to_string(word[k]);
    }
    return s;
}

Permutation compose(const Permutation& u, const Permutation& v) {
    if (u.n() != v.n()) throw RankMismatch("composing permutations of different rank");
    std::vector<int> im(u.n());
    for (int x = 1; x <= u.n(); ++x) im[x - 1] = u(v(x));
    return Permutation(std::move(im));
}

Permutation inverse(const Permutation& w) {
    std::vector<int> im(w.n());
    for (int x = 1; x <= w.n(); ++x) im[w(x) - 1] = x;
    return Permutation(std::move(im));
}

int length(const Permutation& w) {
    int inv = 0;
    for (int i = 1; i <= w.n(); ++i)
        for (int j = i + 1; j <= w.n(); ++j)
            if (w(i) > w(j)) ++inv;
    return inv;
}

std::pair<Permutation, int> apply_simple(const Permutation& w, int i, Side side) {
    if (i < 1 || i > w.n() - 1) throw IndexOutOfRange("simple reflection index out of range");
    std::vector<int> im = w.images();
    int delta;
    if (side == Side::right) {
        // w s_i swaps positions i, i+1
        delta = im[i - 1] < im[i] ? +1 : -1;
        std::swap(im[i - 1], im[i]);
    } else {
        // s_i w swaps values i, i+1
        const Permutation winv = inverse(w);
        delta = winv(i) < winv(i + 1) ? +1 : -1;
        for (auto& v : im) {
            if (v == i)
                v = i + 1;
            else if (v == i + 1)
                v = i;
        }
    }
    return {Permutation(std::move(im)), delta};
}

Partition cycle_type(const Permutation& w) {
    std::vector<bool> seen(w.n(), false);
    std::vector<int> cycles;
    for (int x = 1; x <= w.n(); ++x) {
        if (seen[x - 1]) continue;
        int len = 0, y = x;
        do {
            seen[y - 1] = true;
            y = w(y);
            ++len;
        } while (y != x);
        cycles.push_back(len);
    }
    std::sort(cycles.begin(), cycles.end(), std::greater<>());
    return Partition(std::move(cycles));
}

std::vector<int> reduced_word(const Permutation& w) {
    std::vector<int> word;
    Permutation cur = w;
    Permutation id = Permutation::identity(w.n());
    while (!(cur == id)) {
        Permutation curinv = inverse(cur);
        for (int i = 1; i <= w.n() - 1; ++i) {
            if (curinv(i) > curinv(i + 1)) { // l(s_i cur) < l(cur)
                word.push_back(i);
                cur = apply_simple(cur, i, Side::left).first;
                break;
            }
        }
    }
    return word; // w = s_{word[0]} s_{word[1]} ...
}

Permutation min_class_rep(const Partition& nu) {
    int n = nu.size();
    Permutation w = Permutation::identity(n);
    int offset = 0;
    for (int part : nu.parts()) {
        for (int a = offset + 1; a <= offset + part - 1; ++a)
            w = compose(w, Permutation::simple(n, a));
        offset += part;
    }
    return w;
}

std::vector<Permutation> young_subgroup(const Composition& pi) {
    int n = 0;
    for (int p : pi) {
        if (p <= 0) throw BadComposition("composition parts must be positive");
        n += p;
    }
    std::vector<Permutation> result{Permutation::identity(n)};
    int offset = 0;
    for (int p : pi) {
        // all rearrangements inside the block [offset+1, offset+p]
        std::vector<int> block(p);
        std::iota(block.begin(), block.end(), offset + 1);
        std::vector<Permutation> grown;
        do {
            for (const Permutation& base : result) {
                std::vector<int> im = base.images();
                for (int j = 0; j < p; ++j) im[offset + j] = block[j];
                grown.emplace_back(std::move(im));
            }
        } while (std::next_permutation(block.begin(), block.end()));
        result = std::move(grown);
        offset += p;
    }
    std::sort(result.begin(), result.end());
    return result;
}

QTLaurent poincare(const Composition& pi) {
    QTLaurent sum;
    for (const Permutation& w : young_subgroup(pi)) sum.add_term(length(w), 0, 1);
    return sum;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(im);
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

std::vector<Permutation> canonical_class_order(int n) {
    std::vector<Permutation> all = all_permutations(n);
    std::map<Partition, std::vector<Permutation>> by_class;
    for (const auto& w : all) by_class[cycle_type(w)].push_back(w);
    std::vector<Permutation> out;
    for (const Partition& nu : partitions_of(n)) {
        auto& cls = by_class.at(nu);
        std::stable_sort(cls.begin(), cls.end(), [](const Permutation& a, const Permutation& b) {
            int la = length(a), lb = length(b);
            if (la != lb) return la > lb;
            return a < b;
        });
        out.insert(out.end(), cls.begin(), cls.end());
    }
    return out;
}

Permutation parse_permutation(const std::string& s, int n) {
    std::stringstream ss(s);
    std::string tok;
    std::vector<std::string> tokens;
    while (ss >> tok) tokens.push_back(tok);
    if (tokens.empty()) throw ParseError("empty permutation string");
    bool word_form = false;
    for (const auto& t : tokens)
        if (t[0] == 's') word_form = true;
    if (word_form) {
        Permutation w = Permutation::identity(n);
        for (const auto& t : tokens) {
            if (t[0] != 's') throw ParseError("mixed generator/one-line notation in '" + s + "'");
            int i = std::stoi(t.substr(1));
            w = compose(w, Permutation::simple(n, i));
        }
        return w;
    }
    if (tokens.size() == 1 && tokens[0] == "1") return Permutation::identity(n);
    std::vector<int> im;
    for (const auto& t : tokens) im.push_back(std::stoi(t));
    if (static_cast<int>(im.size()) != n)
        throw ParseError("one-line notation of wrong length in '" + s + "'");
    return Permutation(std::move(im));
}

} // namespace expcon
