#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ncprob {

/// A word over the alphabet {1..d}; indexes noncommutative monomials x_u.
///
/// Letters are stored 1-based, as they are written. The empty word is the
/// index of the constant monomial.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(int alphabet);
    MultiIndex(int alphabet, std::vector<int> letters);
    MultiIndex(int alphabet, std::initializer_list<int> letters);

    static MultiIndex repeated(int alphabet, int letter, std::size_t count);

    int alphabet() const noexcept { return alphabet_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    std::span<const int> letters() const noexcept { return letters_; }

    /// Letter at 0-based position `pos`.
    int operator[](std::size_t pos) const { return letters_[pos]; }
    int front() const { return letters_.front(); }
    int back() const { return letters_.back(); }

    MultiIndex concat(const MultiIndex& other) const;
    MultiIndex reversed() const;
    MultiIndex slice(std::size_t begin, std::size_t end) const;
    MultiIndex prefix(std::size_t length) const { return slice(0, length); }
    MultiIndex suffix(std::size_t begin) const { return slice(begin, size()); }
    MultiIndex prepended(int letter) const;
    MultiIndex appended(int letter) const;

    /// Same letters over a larger alphabet (letters optionally shifted).
    MultiIndex relabeled(int alphabet, int shift = 0) const;

    /// Comma-separated letters, "" for the empty word.
    std::string to_string() const;
    static MultiIndex parse(int alphabet, std::string_view text);

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    /// Graded lexicographic: alphabet, then length, then letters.
    friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);

private:
    int alphabet_ = 1;
    std::vector<int> letters_;
};

inline MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) { return a.concat(b); }

/// Dense numbering of all words of length <= max_length, shortest first and
/// lexicographic within a length.
class WordIndexer {
public:
    WordIndexer(int alphabet, int max_length);

    int alphabet() const noexcept { return alphabet_; }
    int max_length() const noexcept { return max_length_; }
    std::size_t size() const noexcept { return offset(max_length_ + 1); }

    std::size_t offset(int length) const;
    std::size_t count(int length) const;  // alphabet^length
    std::size_t index(const MultiIndex& word) const;
    MultiIndex word(std::size_t flat) const;
    int length_of(std::size_t flat) const;

private:
    int alphabet_;
    int max_length_;
    std::vector<std::size_t> powers_;
};

/// All words of exactly `length` letters in lexicographic order.
std::vector<MultiIndex> words_of_length(int alphabet, int length);
/// All words of length <= max_length, graded lexicographic order.
std::vector<MultiIndex> words_up_to(int alphabet, int max_length);

enum class PartitionFamily { All, NonCrossing, Interval };

std::string_view to_string(PartitionFamily family);

/// A partition of {1..n}, stored canonically as a restricted growth string:
/// label[i] is the block of element i+1 and blocks are numbered in order of
/// their minimum element.
class SetPartition {
public:
    static constexpr int kMaxSize = 16;
    /// Largest n accepted by enumerate_partitions.
    static constexpr int kEnumerationCap = 12;

    static SetPartition from_blocks(int n, const std::vector<std::vector<int>>& blocks);
    static SetPartition from_labels(std::span<const int> labels);
    static SetPartition one(int n);   // single block
    static SetPartition zero(int n);  // singletons

    int size() const noexcept { return n_; }
    int block_count() const noexcept { return blocks_; }
    /// 0-based block of the 1-based element.
    int block_of(int element) const { return labels_[static_cast<std::size_t>(element - 1)]; }
    bool same_block(int i, int j) const { return block_of(i) == block_of(j); }
    /// Canonical blocks: sorted by minimum, elements ascending.
    std::vector<std::vector<int>> blocks() const;

    /// "{1,3|2,4}".
    std::string to_string() const;

    friend bool operator==(const SetPartition& a, const SetPartition& b) {
        return a.n_ == b.n_ && a.labels_ == b.labels_;
    }
    friend std::strong_ordering operator<=>(const SetPartition& a, const SetPartition& b);

private:
    SetPartition() = default;
    int n_ = 0;
    int blocks_ = 0;
    std::array<std::uint8_t, kMaxSize> labels_{};
};

bool is_noncrossing(const SetPartition& partition);
bool is_interval(const SetPartition& partition);
bool in_family(const SetPartition& partition, PartitionFamily family);

/// Visits the partitions of {1..n} in the family in canonical order.
void for_each_partition(int n, PartitionFamily family,
                        const std::function<void(const SetPartition&)>& visit);

/// Partitions of {1..n} in the family, sorted by canonical encoding.
/// Throws SizeError unless 1 <= n <= SetPartition::kEnumerationCap.
std::vector<SetPartition> enumerate_partitions(int n, PartitionFamily family);

}  // namespace ncprob
