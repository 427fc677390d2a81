#include "kbinom/nfa_equiv.hpp"

#include <algorithm>
#include <functional>

namespace kbinom {

LayeredNfa::LayeredNfa(Word w, Order k) : word_(std::move(w)), k_(k.value()) {}

std::vector<LayeredNfa::State> LayeredNfa::states() const {
    std::vector<State> result;
    result.reserve(state_count());
    result.push_back(initial());
    for (std::size_t j = 1; j <= k_; ++j) {
        for (std::size_t i = 1; i <= length(); ++i) result.push_back({i, j});
    }
    result.push_back(error());
    return result;
}

bool LayeredNfa::is_final(State s) const noexcept {
    return s.layer >= 1 && s.layer <= k_ && s.position <= length() && s.position >= s.layer;
}

std::vector<LayeredNfa::State> LayeredNfa::successors(State s, char a) const {
    std::vector<State> result;
    if (s != error() && s.layer < k_) {
        for (std::size_t l = s.position + 1; l <= length(); ++l) {
            if (word_.text()[l - 1] == a) result.push_back({l, s.layer + 1});
        }
    }
    if (result.empty()) result.push_back(error());
    return result;
}

namespace {

// to(l) = [w[l] = a] * sum_{i < l} from(i) for l = 1..n; from(0) is the
// count at the state feeding position 0 (the initial state) of the source layer.
template <class From, class To>
void advance_layer(std::string_view w, char a, From from, To to) {
    BigInt running = from(0);
    for (std::size_t l = 1; l <= w.size(); ++l) {
        if (w[l - 1] == a) {
            to(l) = running;
        } else {
            to(l) = 0;
        }
        running += from(l);
    }
}

}  // namespace

BigCount LayeredNfa::count_accepting_paths(const Word& x) const {
    if (x.empty() || x.size() > k_) return 0;
    const std::size_t n = length();
    // Paths labelled by a prefix of length d all end in layer d.
    std::vector<BigInt> layer(n + 1, BigInt(0));
    std::vector<BigInt> next(n + 1, BigInt(0));
    layer[0] = 1;
    for (char a : x.text()) {
        advance_layer(
            word_.text(), a, [&](std::size_t i) -> const BigInt& { return layer[i]; },
            [&](std::size_t l) -> BigInt& { return next[l]; });
        next[0] = 0;
        std::swap(layer, next);
    }
    BigCount total = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        if (is_final({i, x.size()})) total += layer[i];
    }
    return total;
}

bool PathCountVector::is_zero() const {
    return std::all_of(counts.begin(), counts.end(), [](const BigInt& c) { return c.is_zero(); });
}

AutomatonPair::AutomatonPair(const Word& w1, const Word& w2, Order k)
    : AutomatonPair(common_alphabet(w1, w2), k) {}

AutomatonPair::AutomatonPair(WordPair words, Order k)
    : first_(std::move(words.first), k),
      second_(std::move(words.second), k),
      k_(k.value()),
      n1_(first_.length()),
      n2_(second_.length()) {}

std::size_t AutomatonPair::index(int side, LayeredNfa::State s) const {
    if (s.layer == 0) return side == 0 ? 0 : 1;
    std::size_t block = 2 + (s.layer - 1) * (n1_ + n2_);
    return side == 0 ? block + s.position - 1 : block + n1_ + s.position - 1;
}

PathCountVector AutomatonPair::initial() const {
    PathCountVector p{std::string(), std::vector<BigInt>(dimension(), BigInt(0))};
    p.counts[0] = 1;
    p.counts[1] = 1;
    return p;
}

PathCountVector AutomatonPair::propagate(const PathCountVector& p, char a) const {
    PathCountVector out{p.label + a, std::vector<BigInt>(dimension(), BigInt(0))};
    static const BigInt zero = 0;
    for (int side = 0; side < 2; ++side) {
        const LayeredNfa& nfa = side == 0 ? first_ : second_;
        for (std::size_t j = 0; j < k_; ++j) {
            auto from = [&](std::size_t i) -> const BigInt& {
                if (j == 0) return i == 0 ? p.counts[index(side, {0, 0})] : zero;
                return i == 0 ? zero : p.counts[index(side, {i, j})];
            };
            // Layers without paths stay zero.
            bool any = false;
            for (std::size_t i = 0; i <= nfa.length() && !any; ++i) any = !from(i).is_zero();
            if (!any) continue;
            advance_layer(nfa.word().text(), a, from, [&](std::size_t l) -> BigInt& {
                return out.counts[index(side, {l, j + 1})];
            });
        }
    }
    return out;
}

BigInt AutomatonPair::accepted_first(const PathCountVector& p) const {
    BigInt total = 0;
    for (std::size_t j = 1; j <= k_; ++j) {
        for (std::size_t i = j; i <= n1_; ++i) total += p.counts[index(0, {i, j})];
    }
    return total;
}

BigInt AutomatonPair::accepted_second(const PathCountVector& p) const {
    BigInt total = 0;
    for (std::size_t j = 1; j <= k_; ++j) {
        for (std::size_t i = j; i <= n2_; ++i) total += p.counts[index(1, {i, j})];
    }
    return total;
}

namespace {

void make_primitive(std::vector<BigInt>& v, std::size_t lo, std::size_t hi) {
    BigInt g = 0;
    for (std::size_t c = lo; c < hi; ++c) {
        if (!v[c].is_zero()) {
            g = g.is_zero() ? abs(v[c]) : boost::multiprecision::gcd(g, v[c]);
            if (g == 1) return;
        }
    }
    if (g > 1) {
        for (std::size_t c = lo; c < hi; ++c) v[c] /= g;
    }
}

std::pair<std::size_t, std::size_t> support(const std::vector<BigInt>& v) {
    std::size_t lo = 0;
    while (lo < v.size() && v[lo].is_zero()) ++lo;
    if (lo == v.size()) return {0, 0};
    std::size_t hi = v.size();
    while (v[hi - 1].is_zero()) --hi;
    return {lo, hi};
}

}  // namespace

void BasisList::reduce(std::vector<BigInt>& v) const {
    auto [lo, hi] = support(v);
    if (lo == hi) return;
    for (const Row& row : rows_) {
        if (row.pivot < lo || row.pivot >= hi || v[row.pivot].is_zero()) continue;
        // v <- (r_p / g) v - (v_p / g) r keeps everything integral and zeroes v_p.
        BigInt g = boost::multiprecision::gcd(row.values[row.pivot], v[row.pivot]);
        BigInt scale_v = row.values[row.pivot] / g;
        BigInt scale_r = v[row.pivot] / g;
        lo = std::min(lo, row.lo);
        hi = std::max(hi, row.hi);
        for (std::size_t c = lo; c < hi; ++c) {
            if (row.values[c].is_zero()) {
                if (!v[c].is_zero()) v[c] *= scale_v;
            } else {
                v[c] = scale_v * v[c] - scale_r * row.values[c];
            }
        }
        make_primitive(v, lo, hi);
    }
}

bool BasisList::is_in_span(const PathCountVector& p) const {
    std::vector<BigInt> v = p.counts;
    reduce(v);
    return support(v).first == support(v).second;
}

bool BasisList::insert(const PathCountVector& p) {
    std::vector<BigInt> v = p.counts;
    reduce(v);
    auto [lo, hi] = support(v);
    if (lo == hi) return false;
    make_primitive(v, lo, hi);
    rows_.push_back(Row{std::move(v), lo, lo, hi});
    members_.push_back(p);
    return true;
}

PathVerdict path_equivalent(const Word& w1, const Word& w2, Order k) {
    const AutomatonPair pair(w1, w2, k);
    const std::string& letters = pair.alphabet().symbols();
    BasisList basis;
    PathVerdict verdict{true, std::nullopt};

    // Depth-first, letters in alphabet order: prefixes come before their
    // extensions, so words are visited in lexicographic order.
    std::function<bool(const PathCountVector&)> explore = [&](const PathCountVector& p) {
        ++verdict.words_explored;
        verdict.longest_explored = std::max(verdict.longest_explored, p.label.size());
        if (!basis.insert(p)) return false;
        if (pair.accepted_first(p) != pair.accepted_second(p)) {
            verdict.equivalent = false;
            verdict.witness = p.label;
            return true;
        }
        for (char a : letters) {
            if (explore(pair.propagate(p, a))) return true;
        }
        return false;
    };
    explore(pair.initial());
    verdict.basis_size = basis.size();
    return verdict;
}

}  // namespace kbinom
