#include "pslab/core.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

namespace pslab {

bool Rgf::is_valid(std::span<const std::uint8_t> letters) {
    if (letters.empty()) return true;
    if (letters[0] != 1) return false;
    std::uint8_t runmax = 1;
    for (std::size_t i = 1; i < letters.size(); ++i) {
        if (letters[i] < 1 || letters[i] > runmax + 1) return false;
        runmax = std::max(runmax, letters[i]);
    }
    return true;
}

Rgf::Rgf(Letters letters) {
    if (letters.size() > kMaxN)
        throw std::invalid_argument("Rgf: word longer than " + std::to_string(kMaxN));
    if (!is_valid(letters)) throw std::invalid_argument("Rgf: restricted growth condition violated");
    word_ = std::move(letters);
}

Rgf Rgf::unchecked(Letters letters) {
    Rgf w;
    w.word_ = std::move(letters);
    return w;
}

int max_value(std::span<const std::uint8_t> word) {
    int m = 0;
    for (auto a : word) m = std::max(m, static_cast<int>(a));
    return m;
}

int initial_run_length(std::span<const std::uint8_t> word) {
    int p = 0;
    while (p < static_cast<int>(word.size()) && word[static_cast<std::size_t>(p)] == p + 1) ++p;
    return p;
}

int Rgf::max_value() const { return pslab::max_value(word_); }
int Rgf::initial_run_length() const { return pslab::initial_run_length(word_); }

SetPartition SetPartition::of(int n, std::vector<std::vector<int>> blocks) {
    if (n < 0 || n > kMaxN) throw std::invalid_argument("SetPartition: n out of range");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    int count = 0;
    for (auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("SetPartition: empty block");
        std::sort(b.begin(), b.end());
        for (int x : b) {
            if (x < 1 || x > n) throw std::invalid_argument("SetPartition: element outside [n]");
            if (seen[static_cast<std::size_t>(x)])
                throw std::invalid_argument("SetPartition: repeated element");
            seen[static_cast<std::size_t>(x)] = true;
            ++count;
        }
    }
    if (count != n) throw std::invalid_argument("SetPartition: blocks do not cover [n]");
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    SetPartition sigma;
    sigma.n_ = n;
    sigma.blocks_ = std::move(blocks);
    return sigma;
}

Rgf to_rgf(const SetPartition& sigma) {
    Letters word(static_cast<std::size_t>(sigma.n()));
    int j = 0;
    for (const auto& block : sigma.blocks()) {
        ++j;
        for (int x : block) word[static_cast<std::size_t>(x - 1)] = static_cast<std::uint8_t>(j);
    }
    return Rgf::unchecked(std::move(word));
}

SetPartition from_rgf(const Rgf& w) {
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(w.max_value()));
    for (int i = 0; i < w.size(); ++i) blocks[static_cast<std::size_t>(w[i] - 1)].push_back(i + 1);
    return SetPartition::of(w.size(), std::move(blocks));
}

SetPartition standardize_partition(const GenericPartition& p) {
    if (p.blocks.empty()) throw std::invalid_argument("standardize_partition: empty partition");
    std::vector<int> elems;
    for (const auto& b : p.blocks) elems.insert(elems.end(), b.begin(), b.end());
    std::sort(elems.begin(), elems.end());
    std::map<int, int> rank;
    for (std::size_t i = 0; i < elems.size(); ++i) rank[elems[i]] = static_cast<int>(i) + 1;
    std::vector<std::vector<int>> blocks;
    blocks.reserve(p.blocks.size());
    for (const auto& b : p.blocks) {
        std::vector<int> nb;
        nb.reserve(b.size());
        for (int x : b) nb.push_back(rank.at(x));
        blocks.push_back(std::move(nb));
    }
    return SetPartition::of(static_cast<int>(elems.size()), std::move(blocks));
}

GenericPartition restrict_to(const SetPartition& sigma, const std::vector<int>& s) {
    std::set<int> subset;
    for (int x : s) {
        if (x < 1 || x > sigma.n())
            throw std::invalid_argument("restrict_to: element outside [n]");
        subset.insert(x);
    }
    GenericPartition out;
    for (const auto& block : sigma.blocks()) {
        std::vector<int> kept;
        for (int x : block)
            if (subset.count(x)) kept.push_back(x);
        if (!kept.empty()) out.blocks.push_back(std::move(kept));
    }
    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

std::vector<int> standardize_sequence(const std::vector<int>& s) {
    if (s.empty()) throw std::invalid_argument("standardize_sequence: empty sequence");
    std::vector<int> sorted(s);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::map<int, int> rank;
    for (std::size_t i = 0; i < sorted.size(); ++i) rank[sorted[i]] = static_cast<int>(i) + 1;
    std::vector<int> out;
    out.reserve(s.size());
    for (int x : s) out.push_back(rank.at(x));
    return out;
}

std::vector<Rgf> enumerate_rgfs(int n, int limit) {
    std::vector<Rgf> out;
    for_each_rgf(
        n, [&](std::span<const std::uint8_t> w) { out.push_back(Rgf::unchecked(Letters(w.begin(), w.end()))); },
        limit);
    return out;
}

std::vector<SetPartition> enumerate_partitions(int n, int limit) {
    std::vector<SetPartition> out;
    for (const auto& w : enumerate_rgfs(n, limit)) out.push_back(from_rgf(w));
    return out;
}

std::string to_string(const Rgf& w) {
    std::string out;
    bool commas = w.max_value() >= 10;
    for (int i = 0; i < w.size(); ++i) {
        if (commas && i > 0) out += ',';
        out += std::to_string(static_cast<int>(w[i]));
    }
    return out;
}

namespace {

std::string render_blocks(const std::vector<std::vector<int>>& blocks) {
    bool commas = false;
    for (const auto& b : blocks)
        for (int x : b)
            if (x >= 10) commas = true;
    std::string out;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i > 0) out += '/';
        for (std::size_t j = 0; j < blocks[i].size(); ++j) {
            if (commas && j > 0) out += ',';
            out += std::to_string(blocks[i][j]);
        }
    }
    return out;
}

// Comma-less tokens are digit strings ("236" = {2,3,6}) in the common form;
// wide_elements reads them as one decimal element instead, which is how a
// singleton block of an element >= 10 prints.  The two readings never both
// yield a valid partition, so parse_partition may try them in turn.
std::vector<int> parse_block(std::string_view text, bool wide_elements) {
    std::vector<int> elems;
    if (text.find(',') != std::string_view::npos || wide_elements) {
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t comma = text.find(',', start);
            std::string_view item = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
            int value = 0;
            auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
            if (ec != std::errc{} || ptr != item.data() + item.size())
                throw std::invalid_argument("parse_partition: bad element '" + std::string(item) + "'");
            elems.push_back(value);
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9')
                throw std::invalid_argument("parse_partition: bad digit '" + std::string(1, c) + "'");
            elems.push_back(c - '0');
        }
    }
    if (elems.empty()) throw std::invalid_argument("parse_partition: empty block");
    return elems;
}

}  // namespace

std::string to_string(const SetPartition& sigma) { return render_blocks(sigma.blocks()); }
std::string to_string(const GenericPartition& p) { return render_blocks(p.blocks); }

Rgf parse_rgf(std::string_view text) {
    Letters word;
    if (text.empty()) return Rgf{};
    if (text.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t comma = text.find(',', start);
            std::string_view item = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
            int value = 0;
            auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
            if (ec != std::errc{} || ptr != item.data() + item.size() || value < 1 || value > kMaxN)
                throw std::invalid_argument("parse_rgf: bad letter '" + std::string(item) + "'");
            word.push_back(static_cast<std::uint8_t>(value));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9') throw std::invalid_argument("parse_rgf: bad letter '" + std::string(1, c) + "'");
            word.push_back(static_cast<std::uint8_t>(c - '0'));
        }
    }
    return Rgf(std::move(word));
}

SetPartition parse_partition(std::string_view text) {
    if (text.empty()) return SetPartition{};
    auto build = [&text](bool wide_elements) {
        std::vector<std::vector<int>> blocks;
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t slash = text.find('/', start);
            std::string_view part =
                text.substr(start, slash == std::string_view::npos ? slash : slash - start);
            blocks.push_back(parse_block(part, wide_elements));
            if (slash == std::string_view::npos) break;
            start = slash + 1;
        }
        int n = 0;
        for (const auto& b : blocks)
            for (int x : b) n = std::max(n, x);
        return SetPartition::of(n, std::move(blocks));
    };
    bool multi_char_token = false;
    std::size_t run = 0;
    for (char c : text) {
        if (c == '/' || c == ',') run = 0;
        else if (++run >= 2) multi_char_token = true;
    }
    if (!multi_char_token) return build(false);
    try {
        return build(false);
    } catch (const std::invalid_argument&) {
        return build(true);
    }
}

}  // namespace pslab
