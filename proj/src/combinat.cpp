#include "ncprob/combinat.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "ncprob/error.hpp"

namespace ncprob {
namespace {

void check_alphabet(int alphabet) {
    if (alphabet < 1) throw SizeError("alphabet size must be at least 1");
}

void check_letter(int alphabet, int letter) {
    if (letter < 1 || letter > alphabet) {
        throw ShapeError("letter " + std::to_string(letter) + " out of range for d=" +
                         std::to_string(alphabet));
    }
}

}  // namespace

MultiIndex::MultiIndex(int alphabet) : alphabet_(alphabet) { check_alphabet(alphabet); }

MultiIndex::MultiIndex(int alphabet, std::vector<int> letters)
    : alphabet_(alphabet), letters_(std::move(letters)) {
    check_alphabet(alphabet);
    for (int letter : letters_) check_letter(alphabet, letter);
}

MultiIndex::MultiIndex(int alphabet, std::initializer_list<int> letters)
    : MultiIndex(alphabet, std::vector<int>(letters)) {}

MultiIndex MultiIndex::repeated(int alphabet, int letter, std::size_t count) {
    return MultiIndex(alphabet, std::vector<int>(count, letter));
}

MultiIndex MultiIndex::concat(const MultiIndex& other) const {
    if (other.alphabet_ != alphabet_) throw ShapeError("concatenating words over different alphabets");
    MultiIndex out = *this;
    out.letters_.insert(out.letters_.end(), other.letters_.begin(), other.letters_.end());
    return out;
}

MultiIndex MultiIndex::reversed() const {
    MultiIndex out = *this;
    std::reverse(out.letters_.begin(), out.letters_.end());
    return out;
}

MultiIndex MultiIndex::slice(std::size_t begin, std::size_t end) const {
    MultiIndex out(alphabet_);
    end = std::min(end, letters_.size());
    if (begin < end) out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(begin),
                                         letters_.begin() + static_cast<std::ptrdiff_t>(end));
    return out;
}

MultiIndex MultiIndex::prepended(int letter) const {
    check_letter(alphabet_, letter);
    MultiIndex out(alphabet_);
    out.letters_.reserve(letters_.size() + 1);
    out.letters_.push_back(letter);
    out.letters_.insert(out.letters_.end(), letters_.begin(), letters_.end());
    return out;
}

MultiIndex MultiIndex::appended(int letter) const {
    check_letter(alphabet_, letter);
    MultiIndex out = *this;
    out.letters_.push_back(letter);
    return out;
}

MultiIndex MultiIndex::relabeled(int alphabet, int shift) const {
    std::vector<int> letters = letters_;
    for (int& letter : letters) letter += shift;
    return MultiIndex(alphabet, std::move(letters));
}

std::string MultiIndex::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i != 0) out += ',';
        out += std::to_string(letters_[i]);
    }
    return out;
}

MultiIndex MultiIndex::parse(int alphabet, std::string_view text) {
    check_alphabet(alphabet);
    std::vector<int> letters;
    if (text.empty()) return MultiIndex(alphabet);
    std::size_t pos = 0;
    while (true) {
        const auto comma = text.find(',', pos);
        const auto token = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        int letter = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), letter);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() ||
            token.front() == '0') {
            throw ParseError("malformed multi-index \"" + std::string(text) + "\"");
        }
        if (letter < 1 || letter > alphabet) {
            throw ParseError("multi-index \"" + std::string(text) + "\": letter " +
                             std::to_string(letter) + " out of range for d=" + std::to_string(alphabet));
        }
        letters.push_back(letter);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return MultiIndex(alphabet, std::move(letters));
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
    if (auto c = a.alphabet_ <=> b.alphabet_; c != 0) return c;
    if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
    return a.letters_ <=> b.letters_;
}

WordIndexer::WordIndexer(int alphabet, int max_length) : alphabet_(alphabet), max_length_(max_length) {
    check_alphabet(alphabet);
    if (max_length < 0) throw SizeError("negative maximal word length");
    constexpr std::size_t limit = std::size_t{1} << 26;
    powers_.push_back(1);
    std::size_t total = 1;
    for (int k = 1; k <= max_length + 1; ++k) {
        powers_.push_back(powers_.back() * static_cast<std::size_t>(alphabet));
        if (k <= max_length) total += powers_.back();
        if (powers_.back() > limit || total > limit) {
            throw SizeError("too many words: d=" + std::to_string(alphabet) +
                            ", degree=" + std::to_string(max_length));
        }
    }
}

std::size_t WordIndexer::count(int length) const { return powers_[static_cast<std::size_t>(length)]; }

std::size_t WordIndexer::offset(int length) const {
    if (alphabet_ == 1) return static_cast<std::size_t>(length);
    return (powers_[static_cast<std::size_t>(length)] - 1) / static_cast<std::size_t>(alphabet_ - 1);
}

std::size_t WordIndexer::index(const MultiIndex& word) const {
    if (word.alphabet() != alphabet_) throw ShapeError("word alphabet does not match indexer");
    if (static_cast<int>(word.size()) > max_length_) throw ShapeError("word longer than the degree cap");
    std::size_t rank = 0;
    for (int letter : word.letters()) rank = rank * static_cast<std::size_t>(alphabet_) + static_cast<std::size_t>(letter - 1);
    return offset(static_cast<int>(word.size())) + rank;
}

int WordIndexer::length_of(std::size_t flat) const {
    int length = 0;
    while (offset(length + 1) <= flat) ++length;
    return length;
}

MultiIndex WordIndexer::word(std::size_t flat) const {
    const int length = length_of(flat);
    std::size_t rank = flat - offset(length);
    std::vector<int> letters(static_cast<std::size_t>(length));
    for (int pos = length - 1; pos >= 0; --pos) {
        letters[static_cast<std::size_t>(pos)] = static_cast<int>(rank % static_cast<std::size_t>(alphabet_)) + 1;
        rank /= static_cast<std::size_t>(alphabet_);
    }
    return MultiIndex(alphabet_, std::move(letters));
}

std::vector<MultiIndex> words_of_length(int alphabet, int length) {
    const WordIndexer indexer(alphabet, length);
    std::vector<MultiIndex> out;
    out.reserve(indexer.count(length));
    for (std::size_t i = indexer.offset(length); i < indexer.size(); ++i) out.push_back(indexer.word(i));
    return out;
}

std::vector<MultiIndex> words_up_to(int alphabet, int max_length) {
    const WordIndexer indexer(alphabet, max_length);
    std::vector<MultiIndex> out;
    out.reserve(indexer.size());
    for (std::size_t i = 0; i < indexer.size(); ++i) out.push_back(indexer.word(i));
    return out;
}

std::string_view to_string(PartitionFamily family) {
    switch (family) {
        case PartitionFamily::All: return "ALL";
        case PartitionFamily::NonCrossing: return "NC";
        case PartitionFamily::Interval: return "INT";
    }
    return "?";
}

SetPartition SetPartition::from_labels(std::span<const int> labels) {
    const auto n = static_cast<int>(labels.size());
    if (n < 1 || n > kMaxSize) throw SizeError("partition size out of range: " + std::to_string(n));
    // Relabel blocks in order of first appearance.
    std::array<int, kMaxSize> relabel;
    relabel.fill(-1);
    SetPartition p;
    p.n_ = n;
    for (int i = 0; i < n; ++i) {
        const int label = labels[static_cast<std::size_t>(i)];
        if (label < 0 || label >= kMaxSize) throw ShapeError("block label out of range");
        if (relabel[static_cast<std::size_t>(label)] < 0) relabel[static_cast<std::size_t>(label)] = p.blocks_++;
        p.labels_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(relabel[static_cast<std::size_t>(label)]);
    }
    return p;
}

SetPartition SetPartition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
    if (n < 1 || n > kMaxSize) throw SizeError("partition size out of range: " + std::to_string(n));
    std::vector<int> labels(static_cast<std::size_t>(n), -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw ShapeError("empty block in partition");
        for (int element : blocks[b]) {
            if (element < 1 || element > n) throw ShapeError("partition element out of range");
            auto& slot = labels[static_cast<std::size_t>(element - 1)];
            if (slot >= 0) throw ShapeError("blocks are not disjoint");
            slot = static_cast<int>(b);
        }
    }
    if (std::find(labels.begin(), labels.end(), -1) != labels.end()) {
        throw ShapeError("blocks do not cover {1..n}");
    }
    return from_labels(labels);
}

SetPartition SetPartition::one(int n) { return from_labels(std::vector<int>(static_cast<std::size_t>(n), 0)); }

SetPartition SetPartition::zero(int n) {
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = i;
    return from_labels(labels);
}

std::vector<std::vector<int>> SetPartition::blocks() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(blocks_));
    for (int i = 0; i < n_; ++i) out[labels_[static_cast<std::size_t>(i)]].push_back(i + 1);
    return out;
}

std::string SetPartition::to_string() const {
    std::string out = "{";
    bool first_block = true;
    for (const auto& block : blocks()) {
        if (!first_block) out += '|';
        first_block = false;
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i != 0) out += ',';
            out += std::to_string(block[i]);
        }
    }
    return out + "}";
}

std::strong_ordering operator<=>(const SetPartition& a, const SetPartition& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.labels_ <=> b.labels_;
}

bool is_noncrossing(const SetPartition& partition) {
    // A block may only be revisited when every block opened after it is closed.
    const int n = partition.size();
    std::vector<int> last(static_cast<std::size_t>(partition.block_count()), 0);
    for (int i = 1; i <= n; ++i) last[static_cast<std::size_t>(partition.block_of(i))] = i;
    std::vector<int> open;
    std::vector<bool> seen(static_cast<std::size_t>(partition.block_count()), false);
    for (int i = 1; i <= n; ++i) {
        const int block = partition.block_of(i);
        if (seen[static_cast<std::size_t>(block)]) {
            if (open.empty() || open.back() != block) return false;
        } else {
            seen[static_cast<std::size_t>(block)] = true;
            open.push_back(block);
        }
        if (last[static_cast<std::size_t>(block)] == i) open.pop_back();
    }
    return true;
}

bool is_interval(const SetPartition& partition) {
    for (int i = 2; i <= partition.size(); ++i) {
        // Labels are assigned in order of first appearance, so a contiguous
        // partition never returns to an older label.
        if (partition.block_of(i) != partition.block_of(i - 1) &&
            partition.block_of(i) != partition.block_of(i - 1) + 1) {
            return false;
        }
    }
    return true;
}

bool in_family(const SetPartition& partition, PartitionFamily family) {
    switch (family) {
        case PartitionFamily::All: return true;
        case PartitionFamily::NonCrossing: return is_noncrossing(partition);
        case PartitionFamily::Interval: return is_interval(partition);
    }
    return false;
}

void for_each_partition(int n, PartitionFamily family, const std::function<void(const SetPartition&)>& visit) {
    if (n < 1 || n > SetPartition::kEnumerationCap) {
        throw SizeError("partition enumeration supports 1 <= n <= " +
                        std::to_string(SetPartition::kEnumerationCap) + ", got " + std::to_string(n));
    }
    // Restricted growth strings in lexicographic order: labels[0] = 0 and
    // labels[i] <= 1 + max(labels[0..i)).
    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);
    while (true) {
        const SetPartition p = SetPartition::from_labels(labels);
        if (in_family(p, family)) visit(p);
        int i = n - 1;
        while (i > 0 && labels[static_cast<std::size_t>(i)] > prefix_max[static_cast<std::size_t>(i - 1)]) --i;
        if (i == 0) return;
        ++labels[static_cast<std::size_t>(i)];
        prefix_max[static_cast<std::size_t>(i)] =
            std::max(prefix_max[static_cast<std::size_t>(i - 1)], labels[static_cast<std::size_t>(i)]);
        for (int j = i + 1; j < n; ++j) {
            labels[static_cast<std::size_t>(j)] = 0;
            prefix_max[static_cast<std::size_t>(j)] = prefix_max[static_cast<std::size_t>(i)];
        }
    }
}

std::vector<SetPartition> enumerate_partitions(int n, PartitionFamily family) {
    std::vector<SetPartition> out;
    for_each_partition(n, family, [&](const SetPartition& p) { out.push_back(p); });
    return out;
}

}  // namespace ncprob
