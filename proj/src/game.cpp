/*
 * Copyright 2026 The nsi Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "nsi/game.hpp"

#include "nsi/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace nsi {

ParityGame::ParityGame(std::vector<Player> owner, std::vector<int> color, std::vector<std::vector<NodeId>> successors,
                       std::vector<std::string> names)
    : owner_(std::move(owner)), color_(std::move(color)), names_(std::move(names))
{
    const std::size_t n = owner_.size();
    if (color_.size() != n || successors.size() != n) throw FormatError("game arrays have inconsistent sizes");
    if (names_.empty()) names_.resize(n);
    if (names_.size() != n) throw FormatError("game arrays have inconsistent sizes");

    successors_.resize(n);
    std::vector<bool> seen(n, false);
    for (std::size_t v = 0; v < n; ++v) {
        if (color_[v] < 0) throw FormatError("node " + std::to_string(v) + " has a negative priority");
        colors_ = std::max(colors_, color_[v] + 1);
        if (successors[v].empty()) throw FormatError("node " + std::to_string(v) + " has no successors");
        for (NodeId w : successors[v]) {
            if (w < 0 || static_cast<std::size_t>(w) >= n) {
                throw FormatError("node " + std::to_string(v) + " has dangling successor " + std::to_string(w));
            }
            if (seen[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = true;
            successors_[v].push_back(w);
        }
        for (NodeId w : successors_[v]) seen[static_cast<std::size_t>(w)] = false;
    }
}

std::size_t ParityGame::player0_count() const
{
    return static_cast<std::size_t>(std::count(owner_.begin(), owner_.end(), Player::Even));
}

std::size_t ParityGame::edge_count() const
{
    std::size_t m = 0;
    for (const auto& s : successors_) m += s.size();
    return m;
}

std::size_t ParityGame::max_out_degree(Player owner) const
{
    std::size_t best = 0;
    for (std::size_t v = 0; v < size(); ++v) {
        if (owner_[v] == owner) best = std::max(best, successors_[v].size());
    }
    return best;
}

GraphView ParityGame::view() const
{
    return GraphView{owner_, color_, successors_};
}

namespace {

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_end()
    {
        skip_space();
        return pos_ >= text_.size();
    }

    bool peek(char c)
    {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    void expect(char c)
    {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool accept_word(std::string_view word)
    {
        skip_space();
        if (text_.substr(pos_, word.size()) != word) return false;
        const std::size_t end = pos_ + word.size();
        if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) return false;
        pos_ = end;
        return true;
    }

    long long integer()
    {
        skip_space();
        long long value = 0;
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr == first) fail("expected integer");
        pos_ += static_cast<std::size_t>(ptr - first);
        return value;
    }

    std::string quoted()
    {
        expect('"');
        const std::size_t end = text_.find('"', pos_);
        if (end == std::string_view::npos) fail("unterminated name");
        std::string out(text_.substr(pos_, end - pos_));
        pos_ = end + 1;
        return out;
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        std::size_t line = 1 + static_cast<std::size_t>(std::count(text_.begin(), text_.begin() + static_cast<std::ptrdiff_t>(pos_), '\n'));
        throw FormatError("line " + std::to_string(line) + ": " + what);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

struct NodeLine {
    long long id;
    int priority;
    Player owner;
    std::vector<NodeId> successors;
    std::string name;
};

constexpr long long kMaxNodes = 1LL << 30;

} // namespace

ParityGame parse_pgsolver(std::string_view text)
{
    Scanner in(text);
    if (in.accept_word("parity")) {
        const long long declared_max = in.integer();
        if (declared_max < -1 || declared_max >= kMaxNodes) in.fail("invalid maximal node id");
        in.expect(';');
    }

    std::vector<NodeLine> lines;
    while (!in.at_end()) {
        NodeLine line;
        line.id = in.integer();
        if (line.id < 0 || line.id >= kMaxNodes) in.fail("invalid node id");
        const long long priority = in.integer();
        if (priority < 0 || priority > (1 << 24)) in.fail("invalid priority");
        line.priority = static_cast<int>(priority);
        const long long owner = in.integer();
        if (owner != 0 && owner != 1) in.fail("owner must be 0 or 1");
        line.owner = owner == 0 ? Player::Even : Player::Odd;
        if (in.peek(';') || in.peek('"')) in.fail("node " + std::to_string(line.id) + " has no successors");
        for (;;) {
            const long long succ = in.integer();
            if (succ < 0 || succ >= kMaxNodes) in.fail("invalid successor id");
            line.successors.push_back(static_cast<NodeId>(succ));
            if (!in.peek(',')) break;
            in.expect(',');
        }
        if (in.peek('"')) line.name = in.quoted();
        in.expect(';');
        lines.push_back(std::move(line));
    }

    // The header's maximal id is only a size hint; the node lines are authoritative.
    const std::size_t n = lines.size();

    std::vector<Player> owner(n);
    std::vector<int> color(n);
    std::vector<std::vector<NodeId>> successors(n);
    std::vector<std::string> names(n);
    std::vector<bool> defined(n, false);
    for (auto& line : lines) {
        if (line.id >= static_cast<long long>(n)) {
            throw FormatError("node ids must be 0.." + std::to_string(n) + "-1, got " + std::to_string(line.id));
        }
        const auto v = static_cast<std::size_t>(line.id);
        if (defined[v]) throw FormatError("duplicate node id " + std::to_string(line.id));
        defined[v] = true;
        owner[v] = line.owner;
        color[v] = line.priority;
        successors[v] = std::move(line.successors);
        names[v] = std::move(line.name);
    }
    return ParityGame(std::move(owner), std::move(color), std::move(successors), std::move(names));
}

std::string serialize_pgsolver(const ParityGame& game)
{
    std::ostringstream out;
    out << "parity " << static_cast<long long>(game.size()) - 1 << ";\n";
    for (std::size_t i = 0; i < game.size(); ++i) {
        const auto v = static_cast<NodeId>(i);
        out << v << ' ' << game.color(v) << ' ' << index_of(game.owner(v)) << ' ';
        const auto& succ = game.successors(v);
        for (std::size_t k = 0; k < succ.size(); ++k) {
            if (k) out << ',';
            out << succ[k];
        }
        if (!game.name(v).empty()) out << " \"" << game.name(v) << '"';
        out << ";\n";
    }
    return out.str();
}

} // namespace nsi
