#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace permclass {

/// Raised when an operation is called outside its documented domain
/// (e.g. a structural query on a permutation that is not a class member).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A permutation of {1..n} in one-line notation.
///
/// Positions are 0-based (`p[0]` is the first entry); values are 1-based.
/// The empty permutation is a valid value and is distinct from `1`.
class Permutation {
public:
    Permutation() = default;

    /// Throws std::invalid_argument unless `values` is a bijection onto {1..n}.
    explicit Permutation(std::vector<int> values);
    Permutation(std::initializer_list<int> values);

    static Permutation identity(int n);
    static Permutation decreasing(int n);

    /// Rank-reduces a sequence of distinct integers to the permutation it is
    /// order isomorphic to.
    static Permutation pattern_of(std::span<const int> sequence);

    int size() const { return static_cast<int>(values_.size()); }
    bool empty() const { return values_.empty(); }
    int operator[](std::size_t position) const { return values_[position]; }
    std::span<const int> values() const { return values_; }
    auto begin() const { return values_.begin(); }
    auto end() const { return values_.end(); }

    /// `positions()[v - 1]` is the position holding value v.
    std::vector<int> positions() const;

    Permutation reverse() const;
    Permutation complement() const;
    Permutation inverse() const;

    /// Inserts the new maximum n+1 before position `gap` (0..n).
    Permutation with_max_inserted(int gap) const;

    /// Digit form for n <= 9, comma-separated list otherwise.
    std::string to_string() const;

    friend auto operator<=>(const Permutation&, const Permutation&) = default;
    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    struct Unchecked {};
    Permutation(std::vector<int> values, Unchecked) : values_(std::move(values)) {}

    std::vector<int> values_;
};

/// Parses either a bare digit string ("2341", n <= 9 only) or an integer list
/// separated by commas and/or whitespace ("10,1,2" or "10 1 2").
/// Blank text yields the empty permutation.
Permutation parse_permutation(std::string_view text);

/// Parses a set of permutations separated by ';', or by ',' when no ';' is
/// present ("2341,4123"). With ',' as the separator, list-form entries must use
/// whitespace between their values.
std::vector<Permutation> parse_basis(std::string_view text);

std::string basis_to_string(std::span<const Permutation> basis);

enum class Symmetry { reverse, complement, inverse };

Permutation apply_symmetry(const Permutation& p, Symmetry which);

/// Every permutation of length n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

}  // namespace permclass
