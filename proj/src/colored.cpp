#include "coinv/colored.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace coinv {

int compare_letters(const ColoredLetter& a, const ColoredLetter& b, LetterOrder order) {
    if (order == LetterOrder::ColorMajor) {
        // higher colors come first (are smaller)
        if (a.color != b.color) return a.color > b.color ? -1 : 1;
        if (a.value != b.value) return a.value < b.value ? -1 : 1;
        return 0;
    }
    if (a.value != b.value) return a.value < b.value ? -1 : 1;
    if (a.color != b.color) return a.color > b.color ? -1 : 1;
    return 0;
}

int ColoredWord::color_sum() const {
    int s = 0;
    for (const auto& l : letters) s += l.color;
    return s;
}

bool ColoredWord::valid() const {
    for (const auto& l : letters)
        if (l.value < 1 || l.color < 0 || l.color >= r) return false;
    return true;
}

bool ColoredWord::is_permutation() const {
    if (!valid()) return false;
    std::vector<bool> seen(letters.size(), false);
    for (const auto& l : letters) {
        if (l.value > static_cast<int>(letters.size()) || seen[l.value - 1]) return false;
        seen[l.value - 1] = true;
    }
    return true;
}

std::vector<int> descent_set(const ColoredWord& w) {
    std::vector<int> des;
    for (int i = 0; i + 1 < w.size(); ++i)
        if (compare_letters(w.letters[i], w.letters[i + 1], LetterOrder::ColorMajor) > 0) des.push_back(i + 1);
    return des;
}

std::vector<int> ascent_set(const ColoredWord& w) {
    std::vector<int> asc;
    for (int i = 0; i + 1 < w.size(); ++i)
        if (compare_letters(w.letters[i], w.letters[i + 1], LetterOrder::ColorMajor) < 0) asc.push_back(i + 1);
    return asc;
}

long maj(const ColoredWord& w) {
    long s = w.color_sum();
    for (int i : descent_set(w)) s += static_cast<long>(w.r) * i;
    return s;
}

int OrderedSetPartition::color_sum() const {
    int s = 0;
    for (const auto& b : blocks)
        for (const auto& l : b) s += l.color;
    return s;
}

bool OrderedSetPartition::valid() const {
    if (k != static_cast<int>(blocks.size()) || k < 1) return false;
    std::vector<bool> seen(n, false);
    int total = 0;
    for (const auto& b : blocks) {
        if (b.empty()) return false;
        for (const auto& l : b) {
            if (l.value < 1 || l.value > n || seen[l.value - 1]) return false;
            if (l.color < 0 || l.color >= r) return false;
            seen[l.value - 1] = true;
            ++total;
        }
    }
    return total == n;
}

int OrderedMultisetPartition::size() const {
    int s = 0;
    for (const auto& b : blocks) s += static_cast<int>(b.size());
    return s;
}

int OrderedMultisetPartition::color_sum() const {
    int s = 0;
    for (const auto& b : blocks)
        for (const auto& l : b) s += l.color;
    return s;
}

bool OrderedMultisetPartition::valid() const {
    for (const auto& b : blocks) {
        if (b.empty()) return false;
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (b[i].value < 1 || b[i].color < 0 || b[i].color >= r) return false;
            for (std::size_t j = i + 1; j < b.size(); ++j)
                if (b[i] == b[j]) return false;
        }
    }
    return true;
}

bool GFace::valid() const {
    if (k != static_cast<int>(blocks.size())) return false;
    std::vector<bool> seen(n, false);
    int total = 0;
    for (int v : zero_block) {
        if (v < 1 || v > n || seen[v - 1]) return false;
        seen[v - 1] = true;
        ++total;
    }
    for (const auto& b : blocks) {
        if (b.empty()) return false;
        for (const auto& l : b) {
            if (l.value < 1 || l.value > n || seen[l.value - 1]) return false;
            if (l.color < 0 || l.color >= r) return false;
            seen[l.value - 1] = true;
            ++total;
        }
    }
    return total == n;
}

std::pair<ColoredWord, std::vector<int>> starred_form(const OrderedSetPartition& osp) {
    ColoredWord g;
    g.r = osp.r;
    std::vector<int> stars;
    for (const auto& block : osp.blocks) {
        auto sorted = block;
        std::sort(sorted.begin(), sorted.end(), [](const ColoredLetter& a, const ColoredLetter& b) {
            return compare_letters(a, b, LetterOrder::ColorMajor) > 0;  // decreasing
        });
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            g.letters.push_back(sorted[i]);
            if (i + 1 < sorted.size()) stars.push_back(static_cast<int>(g.letters.size()));
        }
    }
    return {g, stars};
}

long maj_starred(const ColoredWord& g, const std::vector<int>& S) {
    auto des = descent_set(g);
    std::set<int> des_set(des.begin(), des.end());
    for (int i : S)
        if (!des_set.count(i)) throw std::invalid_argument("maj_starred: starred position is not a descent");
    long sum_des = std::accumulate(des.begin(), des.end(), 0L);
    long sub = 0;
    int n = g.size();
    for (int i : S) {
        long count = 0;
        for (int d : des)
            if (d >= i && d <= n) ++count;
        sub += count;
    }
    return g.color_sum() + static_cast<long>(g.r) * (sum_des - sub);
}

long maj(const OrderedSetPartition& osp) {
    auto [g, S] = starred_form(osp);
    return maj_starred(g, S);
}

long maj(const OrderedMultisetPartition& omp) {
    OrderedSetPartition fake;
    fake.r = omp.r;
    fake.blocks = omp.blocks;
    auto [g, S] = starred_form(fake);
    return maj_starred(g, S);
}

namespace {

// Coinversion pairs between occurrences in different blocks, blocks sorted
// ascending in ValueMajor so the block minimum sits at index 0.  For a pair
// with the left-block letter L and right-block letter R:
//   L strictly before R in ValueMajor, or equal: pair counts iff L or R is
//   minimal in its block;
//   R strictly before L: pair counts iff L is minimal and R is not.
long coinv_pairs(const std::vector<std::vector<ColoredLetter>>& blocks) {
    long pairs = 0;
    for (std::size_t bl = 0; bl < blocks.size(); ++bl)
        for (std::size_t br = bl + 1; br < blocks.size(); ++br)
            for (std::size_t i = 0; i < blocks[bl].size(); ++i)
                for (std::size_t j = 0; j < blocks[br].size(); ++j) {
                    int cmp = compare_letters(blocks[bl][i], blocks[br][j], LetterOrder::ValueMajor);
                    bool min_l = i == 0, min_r = j == 0;
                    if (cmp <= 0)
                        pairs += (min_l || min_r) ? 1 : 0;
                    else
                        pairs += (min_l && !min_r) ? 1 : 0;
                }
    return pairs;
}

std::vector<std::vector<ColoredLetter>> value_major_sorted(std::vector<std::vector<ColoredLetter>> blocks) {
    for (auto& b : blocks)
        std::sort(b.begin(), b.end(), [](const ColoredLetter& a, const ColoredLetter& c) {
            return compare_letters(a, c, LetterOrder::ValueMajor) < 0;
        });
    return blocks;
}

}  // namespace

long coinversion(const OrderedSetPartition& osp) {
    auto blocks = value_major_sorted(osp.blocks);
    return static_cast<long>(osp.n) * (osp.r - 1) - osp.color_sum() + static_cast<long>(osp.r) * coinv_pairs(blocks);
}

long coinversion(const OrderedMultisetPartition& omp) {
    auto blocks = value_major_sorted(omp.blocks);
    return static_cast<long>(omp.size()) * (omp.r - 1) - omp.color_sum() +
           static_cast<long>(omp.r) * coinv_pairs(blocks);
}

OrderedSetPartition standardize(const GFace& face) {
    std::vector<int> remaining;
    for (const auto& b : face.blocks)
        for (const auto& l : b) remaining.push_back(l.value);
    std::sort(remaining.begin(), remaining.end());
    std::vector<int> rank(face.n + 1, 0);
    for (std::size_t i = 0; i < remaining.size(); ++i) rank[remaining[i]] = static_cast<int>(i) + 1;
    OrderedSetPartition osp;
    osp.n = static_cast<int>(remaining.size());
    osp.k = face.k;
    osp.r = face.r;
    osp.blocks.resize(face.k);
    for (int b = 0; b < face.k; ++b)
        for (const auto& l : face.blocks[b]) osp.blocks[b].push_back({rank[l.value], l.color});
    osp.blocks = value_major_sorted(osp.blocks);
    return osp;
}

long coinversion(const GFace& face) {
    long z = static_cast<long>(face.zero_block.size());
    return static_cast<long>(face.k) * face.r * z + coinversion(standardize(face));
}

GFace insert_letter(const GFace& face, const InsertMove& move) {
    GFace out = face;
    out.n = face.n + 1;
    int v = out.n;
    switch (move.kind) {
        case InsertMove::Star: {
            if (face.k == 0) throw std::invalid_argument("insert_letter: star insertion into empty face");
            if (move.j < 1 || move.j > face.k) throw std::invalid_argument("insert_letter: star index out of range");
            if (move.c < 0 || move.c >= face.r) throw std::invalid_argument("insert_letter: bad color");
            out.blocks[face.k - move.j].push_back({v, move.c});
            break;
        }
        case InsertMove::Zero: {
            out.zero_block.push_back(v);
            break;
        }
        case InsertMove::Bar: {
            if (move.j < 0 || move.j > face.k) throw std::invalid_argument("insert_letter: bar index out of range");
            if (move.c < 0 || move.c >= face.r) throw std::invalid_argument("insert_letter: bad color");
            out.blocks.insert(out.blocks.begin() + (face.k - move.j), {{v, move.c}});
            out.k = face.k + 1;
            break;
        }
    }
    return out;
}

GFace act_permutation(const GFace& face, const std::vector<int>& pi) {
    if (static_cast<int>(pi.size()) != face.n) throw std::invalid_argument("act_permutation: wrong length");
    GFace out = face;
    for (auto& v : out.zero_block) v = pi[v - 1];
    std::sort(out.zero_block.begin(), out.zero_block.end());
    for (auto& b : out.blocks) {
        for (auto& l : b) l.value = pi[l.value - 1];
        std::sort(b.begin(), b.end(), [](const ColoredLetter& a, const ColoredLetter& c) {
            return compare_letters(a, c, LetterOrder::ValueMajor) < 0;
        });
    }
    return out;
}

GFace act_diagonal(const GFace& face, const std::vector<int>& shifts) {
    if (static_cast<int>(shifts.size()) != face.n) throw std::invalid_argument("act_diagonal: wrong length");
    GFace out = face;
    for (auto& b : out.blocks) {
        for (auto& l : b) l.color = ((l.color + shifts[l.value - 1]) % face.r + face.r) % face.r;
        std::sort(b.begin(), b.end(), [](const ColoredLetter& a, const ColoredLetter& c) {
            return compare_letters(a, c, LetterOrder::ValueMajor) < 0;
        });
    }
    return out;
}

std::string to_string(const ColoredLetter& l) {
    return std::to_string(l.value) + "^" + std::to_string(l.color);
}

std::string to_string(const ColoredWord& w) {
    std::string s;
    for (const auto& l : w.letters) {
        if (!s.empty()) s += " ";
        s += to_string(l);
    }
    return s;
}

namespace {

std::string blocks_to_string(const std::vector<int>& zero,
                             const std::vector<std::vector<ColoredLetter>>& blocks) {
    std::ostringstream os;
    os << "(";
    bool first = true;
    if (!zero.empty()) {
        os << " ";
        for (std::size_t i = 0; i < zero.size(); ++i) os << (i ? " " : "") << zero[i];
        first = false;
    }
    for (const auto& b : blocks) {
        os << (first ? " " : " | ");
        first = false;
        auto sorted = b;
        std::sort(sorted.begin(), sorted.end(), [](const ColoredLetter& a, const ColoredLetter& c) {
            return compare_letters(a, c, LetterOrder::ValueMajor) < 0;
        });
        for (std::size_t i = 0; i < sorted.size(); ++i) os << (i ? " " : "") << to_string(sorted[i]);
    }
    os << " )";
    return os.str();
}

}  // namespace

std::string to_string(const OrderedSetPartition& osp) { return blocks_to_string({}, osp.blocks); }

std::string to_string(const GFace& face) { return blocks_to_string(face.zero_block, face.blocks); }

GFace parse_face(const std::string& text, int r) {
    std::string s = text;
    // strip outer parentheses
    auto l = s.find('(');
    auto rp = s.rfind(')');
    if (l == std::string::npos || rp == std::string::npos || rp < l)
        throw std::invalid_argument("parse_face: expected parentheses");
    s = s.substr(l + 1, rp - l - 1);

    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == '|') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);

    GFace face;
    face.r = r;
    bool first = true;
    int maxval = 0;
    for (const auto& part : parts) {
        std::istringstream is(part);
        std::string tok;
        std::vector<ColoredLetter> block;
        std::vector<int> bare;
        bool any_colored = false, any_bare = false;
        while (is >> tok) {
            auto caret = tok.find('^');
            if (caret == std::string::npos) {
                bare.push_back(std::stoi(tok));
                any_bare = true;
            } else {
                int v = std::stoi(tok.substr(0, caret));
                int c = std::stoi(tok.substr(caret + 1));
                if (c < 0 || c >= r) throw std::invalid_argument("parse_face: color out of range");
                block.push_back({v, c});
                any_colored = true;
            }
        }
        if (any_bare && any_colored) throw std::invalid_argument("parse_face: mixed colored and uncolored letters");
        if (any_bare) {
            if (!first) throw std::invalid_argument("parse_face: uncolored letters outside the first block");
            face.zero_block = bare;
            std::sort(face.zero_block.begin(), face.zero_block.end());
            for (int v : face.zero_block) maxval = std::max(maxval, v);
        } else if (any_colored) {
            std::sort(block.begin(), block.end(), [](const ColoredLetter& a, const ColoredLetter& c) {
                return compare_letters(a, c, LetterOrder::ValueMajor) < 0;
            });
            face.blocks.push_back(block);
            for (const auto& le : block) maxval = std::max(maxval, le.value);
        } else if (!first || parts.size() > 1) {
            throw std::invalid_argument("parse_face: empty block");
        }
        first = false;
    }
    face.k = static_cast<int>(face.blocks.size());
    face.n = maxval;
    if (!face.valid()) throw std::invalid_argument("parse_face: letters do not partition {1..n}");
    return face;
}

}  // namespace coinv
