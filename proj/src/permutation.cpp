#include "permclass/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace permclass {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
    const int n = size();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : values_) {
        if (v < 1 || v > n) {
            throw std::invalid_argument("value " + std::to_string(v) + " out of range 1.." +
                                        std::to_string(n));
        }
        if (seen[v]) {
            throw std::invalid_argument("duplicate value " + std::to_string(v));
        }
        seen[v] = true;
    }
}

Permutation::Permutation(std::initializer_list<int> values)
    : Permutation(std::vector<int>(values)) {}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v), Unchecked{});
}

Permutation Permutation::decreasing(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.rbegin(), v.rend(), 1);
    return Permutation(std::move(v), Unchecked{});
}

Permutation Permutation::pattern_of(std::span<const int> sequence) {
    std::vector<int> order(sequence.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return sequence[a] < sequence[b]; });
    std::vector<int> ranks(sequence.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
        if (r > 0 && sequence[order[r]] == sequence[order[r - 1]]) {
            throw std::invalid_argument("pattern_of: repeated value");
        }
        ranks[order[r]] = static_cast<int>(r) + 1;
    }
    return Permutation(std::move(ranks), Unchecked{});
}

std::vector<int> Permutation::positions() const {
    std::vector<int> pos(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) pos[values_[i] - 1] = static_cast<int>(i);
    return pos;
}

Permutation Permutation::reverse() const {
    return Permutation(std::vector<int>(values_.rbegin(), values_.rend()), Unchecked{});
}

Permutation Permutation::complement() const {
    std::vector<int> v(values_);
    for (int& x : v) x = size() + 1 - x;
    return Permutation(std::move(v), Unchecked{});
}

Permutation Permutation::inverse() const {
    std::vector<int> v(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) v[values_[i] - 1] = static_cast<int>(i) + 1;
    return Permutation(std::move(v), Unchecked{});
}

Permutation Permutation::with_max_inserted(int gap) const {
    if (gap < 0 || gap > size()) throw std::out_of_range("with_max_inserted: bad gap");
    std::vector<int> v;
    v.reserve(values_.size() + 1);
    v.insert(v.end(), values_.begin(), values_.begin() + gap);
    v.push_back(size() + 1);
    v.insert(v.end(), values_.begin() + gap, values_.end());
    return Permutation(std::move(v), Unchecked{});
}

std::string Permutation::to_string() const {
    std::string out;
    if (size() <= 9) {
        for (int v : values_) out.push_back(static_cast<char>('0' + v));
        return out;
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(values_[i]);
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool is_separator(char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); }

}  // namespace

Permutation parse_permutation(std::string_view text) {
    text = trim(text);
    if (text.empty()) return Permutation{};

    const bool list_form =
        std::any_of(text.begin(), text.end(), [](char c) { return is_separator(c); });
    std::vector<int> values;

    if (!list_form) {
        if (text.size() >= 10) {
            throw std::invalid_argument("digit form is limited to n <= 9; use a comma list");
        }
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                throw std::invalid_argument(std::string("unexpected character '") + c + "'");
            }
            values.push_back(c - '0');
        }
        return Permutation(std::move(values));
    }

    auto read_token = [&values](std::string_view token) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw std::invalid_argument("bad token '" + std::string(token) + "'");
        }
        values.push_back(v);
    };

    // Commas separate tokens strictly (an empty piece is an error); whitespace
    // inside a piece separates further tokens.
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t stop = text.find(',', start);
        if (stop == std::string_view::npos) stop = text.size();
        std::string_view piece = trim(text.substr(start, stop - start));
        if (piece.empty()) throw std::invalid_argument("empty token");
        std::size_t i = 0;
        while (i < piece.size()) {
            std::size_t j = i;
            while (j < piece.size() && !is_separator(piece[j])) ++j;
            read_token(piece.substr(i, j - i));
            while (j < piece.size() && is_separator(piece[j])) ++j;
            i = j;
        }
        start = stop + 1;
    }
    return Permutation(std::move(values));
}

std::vector<Permutation> parse_basis(std::string_view text) {
    const char sep = text.find(';') != std::string_view::npos ? ';' : ',';
    std::vector<Permutation> basis;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t stop = text.find(sep, start);
        if (stop == std::string_view::npos) stop = text.size();
        std::string_view item = trim(text.substr(start, stop - start));
        if (item.empty()) throw std::invalid_argument("empty basis entry");
        basis.push_back(parse_permutation(item));
        start = stop + 1;
    }
    return basis;
}

std::string basis_to_string(std::span<const Permutation> basis) {
    const bool long_entry = std::any_of(basis.begin(), basis.end(),
                                        [](const Permutation& p) { return p.size() > 9; });
    std::string out;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (i) out += long_entry ? ";" : ",";
        out += basis[i].to_string();
    }
    return out;
}

Permutation apply_symmetry(const Permutation& p, Symmetry which) {
    switch (which) {
        case Symmetry::reverse: return p.reverse();
        case Symmetry::complement: return p.complement();
        case Symmetry::inverse: return p.inverse();
    }
    return p;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace permclass
