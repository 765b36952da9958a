#include <bit>

#include "ncprob/appell.hpp"
#include "ncprob/error.hpp"

namespace ncprob::kailath_segall {
namespace {

constexpr int kMaxN = 12;

void add(Expansion& e, const Term& term, long long coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = e.try_emplace(term, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) e.erase(it);
    }
}

void add_all(Expansion& e, const Expansion& other, long long scale) {
    for (const auto& [term, c] : other) add(e, term, scale * c);
}

Expansion times_symbol(Subset symbol, const Expansion& e) {
    Expansion out;
    for (const auto& [term, c] : e) {
        Term t = term;
        t.symbols.insert(t.symbols.begin(), symbol);
        add(out, t, c);
    }
    return out;
}

Expansion wick_memo(const std::vector<Subset>& args, std::map<std::vector<Subset>, Expansion>& memo) {
    if (auto it = memo.find(args); it != memo.end()) return it->second;
    Expansion out;
    if (args.size() == 1) {
        add(out, Term{{args[0]}, 0}, 1);
    } else {
        const std::vector<Subset> rest(args.begin() + 1, args.end());
        out = times_symbol(args[0], wick_memo(rest, memo));
        std::vector<Subset> merged(args.begin() + 1, args.end());
        merged[0] |= args[0];
        add_all(out, wick_memo(merged, memo), -1);
        if (args.size() == 2) add(out, Term{{}, args[0] | args[1]}, -1);
    }
    memo.emplace(args, out);
    return out;
}

void check_n(int n) {
    if (n < 1 || n > kMaxN) throw SizeError("Kailath-Segall expansion supports 1 <= n <= " + std::to_string(kMaxN));
}

Subset interval(int first, int last) {  // {first..last}, 1-based inclusive
    Subset s = 0;
    for (int i = first; i <= last; ++i) s |= Subset{1} << (i - 1);
    return s;
}

std::string subset_name(Subset s) {
    std::string out;
    for (int i = 0; i < 32; ++i) {
        if (s & (Subset{1} << i)) out += (out.empty() ? "" : ",") + std::to_string(i + 1);
    }
    return out;
}

}  // namespace

Expansion wick(const std::vector<Subset>& arguments) {
    if (arguments.empty()) throw ShapeError("W needs at least one argument");
    for (Subset s : arguments) {
        if (s == 0) throw ShapeError("W arguments must be nonempty subsets");
    }
    std::map<std::vector<Subset>, Expansion> memo;
    return wick_memo(arguments, memo);
}

Expansion appell_via_wick(int n) {
    check_n(n);
    std::map<std::vector<Subset>, Expansion> memo;
    Expansion out;
    for (const SetPartition& pi : enumerate_partitions(n, PartitionFamily::Interval)) {
        std::vector<Subset> blocks;
        for (const auto& block : pi.blocks()) blocks.push_back(interval(block.front(), block.back()));
        add_all(out, wick_memo(blocks, memo), 1);
    }
    return out;
}

Expansion appell_via_cumulants(int n) {
    check_n(n);
    Expansion out;
    SymbolWord all;
    for (int i = 1; i <= n; ++i) all.push_back(interval(i, i));
    add(out, Term{all, 0}, 1);
    for (int i = 0; i + 2 <= n; ++i) {
        add(out, Term{SymbolWord(all.begin(), all.begin() + i), interval(i + 1, n)}, -1);
    }
    return out;
}

bool has_product_symbols(const Expansion& e) {
    for (const auto& [term, c] : e) {
        for (Subset s : term.symbols) {
            if (std::popcount(s) >= 2) return true;
        }
    }
    return false;
}

std::string to_string(const Expansion& e) {
    if (e.empty()) return "0";
    std::string out;
    for (const auto& [term, c] : e) {
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        const long long magnitude = c < 0 ? -c : c;
        std::string body;
        if (term.psi) body += "psi[" + subset_name(term.psi) + "]";
        for (Subset s : term.symbols) body += (body.empty() ? "" : "*") + std::string("X(") + subset_name(s) + ")";
        if (body.empty()) body = "1";
        out += (magnitude != 1 ? std::to_string(magnitude) + "*" : "") + body;
    }
    return out;
}

}  // namespace ncprob::kailath_segall
