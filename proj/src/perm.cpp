#include "annular/perm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace annular {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Pull the comma separated integers out of a group like "1,3,5".
std::vector<int> parse_ints(std::string_view body, std::string_view what)
{
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < body.size()) {
        while (pos < body.size() && (body[pos] == ' ' || body[pos] == ','))
            ++pos;
        if (pos >= body.size())
            break;
        if (body[pos] < '0' || body[pos] > '9')
            throw std::invalid_argument(std::string("bad character in ") + std::string(what));
        int v = 0;
        while (pos < body.size() && body[pos] >= '0' && body[pos] <= '9') {
            v = v * 10 + (body[pos] - '0');
            ++pos;
        }
        if (v < 1)
            throw std::invalid_argument(std::string(what) + " elements are 1-based");
        out.push_back(v);
    }
    return out;
}

} // namespace

Permutation::Permutation(std::vector<int> images) : img_(std::move(images))
{
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
        if (v < 0 || v >= size() || seen[v])
            throw std::invalid_argument("images do not form a bijection");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n)
{
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles)
{
    std::vector<int> img(n, -1);
    for (const auto& c : cycles) {
        for (std::size_t k = 0; k < c.size(); ++k) {
            int a = c[k] - 1;
            int b = c[(k + 1) % c.size()] - 1;
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw std::invalid_argument("cycle element out of range");
            if (img[a] != -1)
                throw std::invalid_argument("element repeated in cycle notation");
            img[a] = b;
        }
    }
    for (int i = 0; i < n; ++i)
        if (img[i] == -1)
            img[i] = i;
    return Permutation(std::move(img));
}

Permutation Permutation::parse(std::string_view text, int n)
{
    std::vector<std::vector<int>> cyc;
    int top = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        char c = text[pos];
        if (c == ' ') {
            ++pos;
            continue;
        }
        if (c != '(')
            throw std::invalid_argument("permutation must be written in cycle notation");
        auto close = text.find(')', pos);
        if (close == std::string_view::npos)
            throw std::invalid_argument("unbalanced parenthesis in permutation");
        auto vals = parse_ints(text.substr(pos + 1, close - pos - 1), "permutation");
        if (vals.empty())
            throw std::invalid_argument("empty cycle");
        for (int v : vals)
            top = std::max(top, v);
        cyc.push_back(std::move(vals));
        pos = close + 1;
    }
    if (n == 0)
        n = top;
    if (top > n)
        throw std::invalid_argument("cycle element exceeds n");
    return from_cycles(n, cyc);
}

Permutation Permutation::inverse() const
{
    std::vector<int> inv(img_.size());
    for (int i = 0; i < size(); ++i)
        inv[img_[i]] = i;
    return Permutation(std::move(inv));
}

int Permutation::cycle_count() const
{
    std::vector<char> seen(img_.size(), 0);
    int c = 0;
    for (int i = 0; i < size(); ++i) {
        if (seen[i])
            continue;
        ++c;
        for (int j = i; !seen[j]; j = img_[j])
            seen[j] = 1;
    }
    return c;
}

bool Permutation::is_pairing() const
{
    for (int i = 0; i < size(); ++i)
        if (img_[i] == i || img_[img_[i]] != i)
            return false;
    return true;
}

std::vector<std::vector<int>> Permutation::cycles() const
{
    std::vector<std::vector<int>> out;
    std::vector<char> seen(img_.size(), 0);
    for (int i = 0; i < size(); ++i) {
        if (seen[i])
            continue;
        out.emplace_back();
        for (int j = i; !seen[j]; j = img_[j]) {
            seen[j] = 1;
            out.back().push_back(j);
        }
    }
    return out;
}

std::string Permutation::str() const
{
    std::string s;
    for (const auto& c : cycles()) {
        s += '(';
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (k)
                s += ',';
            s += std::to_string(c[k] + 1);
        }
        s += ')';
    }
    return s;
}

SetPartition SetPartition::from_labels(const std::vector<int>& labels)
{
    SetPartition p;
    p.label_.resize(labels.size());
    std::map<int, int> rank;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto [it, fresh] = rank.try_emplace(labels[i], static_cast<int>(rank.size()));
        if (fresh)
            p.blocks_.emplace_back();
        p.label_[i] = it->second;
        p.blocks_[it->second].push_back(static_cast<int>(i));
    }
    return p;
}

SetPartition SetPartition::from_blocks(int n, const std::vector<std::vector<int>>& blocks)
{
    std::vector<int> lab(n, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty())
            throw std::invalid_argument("empty block");
        for (int e : blocks[b]) {
            if (e < 0 || e >= n)
                throw std::invalid_argument("block element out of range");
            if (lab[e] != -1)
                throw std::invalid_argument("blocks are not disjoint");
            lab[e] = static_cast<int>(b);
        }
    }
    for (int v : lab)
        if (v == -1)
            throw std::invalid_argument("blocks do not cover the ground set");
    return from_labels(lab);
}

SetPartition SetPartition::parse(std::string_view text, int n)
{
    auto open = text.find('{');
    auto close = text.rfind('}');
    if (open == std::string_view::npos || close == std::string_view::npos || close < open)
        throw std::invalid_argument("partition must look like {1,3|2}");
    auto body = text.substr(open + 1, close - open - 1);
    std::vector<std::vector<int>> blocks;
    int top = 0;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        auto bar = body.find('|', pos);
        if (bar == std::string_view::npos)
            bar = body.size();
        auto vals = parse_ints(body.substr(pos, bar - pos), "partition");
        if (vals.empty())
            throw std::invalid_argument("empty block");
        for (int& v : vals) {
            top = std::max(top, v);
            v -= 1;
        }
        blocks.push_back(std::move(vals));
        pos = bar + 1;
    }
    if (n == 0)
        n = top;
    return from_blocks(n, blocks);
}

SetPartition SetPartition::zero(int n)
{
    std::vector<int> lab(n);
    std::iota(lab.begin(), lab.end(), 0);
    return from_labels(lab);
}

SetPartition SetPartition::one(int n)
{
    return from_labels(std::vector<int>(n, 0));
}

std::string SetPartition::str() const
{
    std::string s = "{";
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (b)
            s += '|';
        for (std::size_t k = 0; k < blocks_[b].size(); ++k) {
            if (k)
                s += ',';
            s += std::to_string(blocks_[b][k] + 1);
        }
    }
    return s + "}";
}

Shape::Shape(std::vector<int> parts) : parts_(std::move(parts))
{
    if (parts_.empty())
        throw std::invalid_argument("shape needs at least one part");
    for (int p : parts_) {
        if (p < 1)
            throw std::invalid_argument("shape parts must be positive");
        start_.push_back(m_);
        for (int k = 0; k < p; ++k)
            circle_.push_back(static_cast<int>(start_.size()) - 1);
        m_ += p;
    }
}

Shape Shape::parse(std::string_view text)
{
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string_view::npos)
            comma = text.size();
        auto tok = text.substr(pos, comma - pos);
        while (!tok.empty() && tok.front() == ' ')
            tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ')
            tok.remove_suffix(1);
        if (tok.empty())
            throw std::invalid_argument("empty shape part");
        int v = 0;
        for (char c : tok) {
            if (c < '0' || c > '9')
                throw std::invalid_argument("shape parts must be integers");
            v = v * 10 + (c - '0');
        }
        parts.push_back(v);
        pos = comma + 1;
    }
    return Shape(std::move(parts));
}

Permutation Shape::gamma() const
{
    std::vector<int> img(m_);
    for (int j = 0; j < r(); ++j)
        for (int k = 0; k < parts_[j]; ++k)
            img[start_[j] + k] = start_[j] + (k + 1) % parts_[j];
    return Permutation(std::move(img));
}

std::string Shape::str() const
{
    std::string s;
    for (std::size_t j = 0; j < parts_.size(); ++j) {
        if (j)
            s += ',';
        s += std::to_string(parts_[j]);
    }
    return s;
}

Permutation compose(const Permutation& p, const Permutation& q)
{
    if (p.size() != q.size())
        throw std::invalid_argument("compose: size mismatch");
    std::vector<int> img(p.size());
    for (int i = 0; i < p.size(); ++i)
        img[i] = p(q(i));
    return Permutation(std::move(img));
}

SetPartition cycles(const Permutation& p)
{
    std::vector<int> lab(p.size(), -1);
    int c = 0;
    for (int i = 0; i < p.size(); ++i) {
        if (lab[i] != -1)
            continue;
        for (int j = i; lab[j] == -1; j = p(j))
            lab[j] = c;
        ++c;
    }
    return SetPartition::from_labels(lab);
}

SetPartition join(const SetPartition& a, const SetPartition& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("join: size mismatch");
    Dsu d(a.size());
    for (const auto* part : {&a, &b})
        for (const auto& blk : part->blocks())
            for (std::size_t k = 1; k < blk.size(); ++k)
                d.unite(blk[0], blk[k]);
    std::vector<int> lab(a.size());
    for (int i = 0; i < a.size(); ++i)
        lab[i] = d.find(i);
    return SetPartition::from_labels(lab);
}

SetPartition kernel(const std::vector<std::int64_t>& values)
{
    std::map<std::int64_t, int> key;
    std::vector<int> lab(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        lab[i] = key.try_emplace(values[i], static_cast<int>(key.size())).first->second;
    return SetPartition::from_labels(lab);
}

bool leq(const SetPartition& a, const SetPartition& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("leq: size mismatch");
    for (const auto& blk : a.blocks())
        for (int e : blk)
            if (b.block_of(e) != b.block_of(blk[0]))
                return false;
    return true;
}

bool leq_perm_part(const Permutation& p, const SetPartition& b)
{
    if (p.size() != b.size())
        throw std::invalid_argument("leq_perm_part: size mismatch");
    for (int i = 0; i < p.size(); ++i)
        if (b.block_of(i) != b.block_of(p(i)))
            return false;
    return true;
}

int join_block_count(const Permutation& p, const Permutation& q)
{
    Dsu d(p.size());
    int comps = p.size();
    for (int i = 0; i < p.size(); ++i) {
        for (int j : {p(i), q(i)}) {
            int a = d.find(i), b = d.find(j);
            if (a != b) {
                d.parent[a] = b;
                --comps;
            }
        }
    }
    return comps;
}

} // namespace annular
