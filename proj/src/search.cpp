#include "mofs/search.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "json.hpp"
#include "mofs/errors.hpp"
#include "mofs/io.hpp"
#include "mofs/isomorphism.hpp"

namespace mofs {

namespace {

std::vector<int> balanced_masks(int n) {
    std::vector<int> out;
    int lam = n / 2;
    for (int m = 0; m < (1 << n); ++m)
        if (__builtin_popcount(static_cast<unsigned>(m)) == lam) out.push_back(m);
    return out;
}

std::uint64_t pack_square(const FrequencySquare& f) {
    std::uint64_t p = 0;
    for (int r = f.n - 1; r >= 0; --r)
        p = (p << f.n) | static_cast<std::uint64_t>(f.rows[r] & row_mask(f.n));
    return p;
}

FrequencySquare unpack_square(std::uint64_t p, int n) {
    FrequencySquare f;
    f.n = n;
    f.rows.reserve(n);
    std::uint64_t m = (n == 64) ? ~0ull : (1ull << n) - 1;
    for (int r = 0; r < n; ++r) {
        f.rows.push_back(static_cast<Row>(p & m));
        p >>= n;
    }
    return f;
}

FrequencySquare decode_canonical(unsigned __int128 enc, int n) {
    FrequencySquare f;
    f.n = n;
    f.rows.assign(n, 0);
    for (int r = 0; r < n; ++r) {
        auto chunk = static_cast<unsigned>((enc >> ((n - 1 - r) * n)) &
                                           static_cast<unsigned>((1 << n) - 1));
        for (int c = 0; c < n; ++c)
            if (chunk >> (n - 1 - c) & 1) f.rows[r] |= col_bit(c);
    }
    return f;
}

MofsSet decode_canonical_set(const std::vector<unsigned __int128>& enc, int n) {
    MofsSet s;
    s.n = n;
    for (auto e : enc) s.squares.push_back(decode_canonical(e, n));
    return s;
}

// Row-major backtracking over balanced rows with column-count pruning.
// visit is called once per finished square; returning false stops the scan.
template <typename Visit>
void scan_balanced(int n, const Visit& visit) {
    int lam = n / 2;
    std::vector<int> cand = balanced_masks(n);
    std::vector<int> colcnt(n, 0);
    std::vector<int> rows(n, 0);
    bool stop = false;

    auto rec = [&](auto&& self, int r) -> void {
        if (stop) return;
        if (r == n) {
            if (!visit(rows)) stop = true;
            return;
        }
        int left = n - r;
        for (int m : cand) {
            bool ok = true;
            for (int c = 0; c < n && ok; ++c) {
                if (m >> c & 1) {
                    if (colcnt[c] == lam) ok = false;
                } else if (colcnt[c] + left - 1 < lam) {
                    ok = false;
                }
            }
            if (!ok) continue;
            rows[r] = m;
            for (int c = 0; c < n; ++c) colcnt[c] += m >> c & 1;
            self(self, r + 1);
            for (int c = 0; c < n; ++c) colcnt[c] -= m >> c & 1;
            if (stop) return;
        }
    };
    rec(rec, 0);
}

FrequencySquare square_from_masks(const std::vector<int>& rows, int n) {
    FrequencySquare f;
    f.n = n;
    f.rows.reserve(n);
    for (int m : rows) f.rows.push_back(static_cast<Row>(static_cast<unsigned>(m)));
    return f;
}

std::vector<FrequencySquare> enumerate_raw(int n) {
    std::vector<FrequencySquare> out;
    scan_balanced(n, [&](const std::vector<int>& rows) {
        out.push_back(square_from_masks(rows, n));
        return true;
    });
    return out;
}

std::vector<FrequencySquare> enumerate_classes(int n) {
    std::set<std::uint64_t> pool;
    scan_balanced(n, [&](const std::vector<int>& rows) {
        pool.insert(pack_square(square_from_masks(rows, n)));
        return true;
    });

    std::uint64_t full = (n * n == 64) ? ~0ull : (1ull << (n * n)) - 1;
    std::vector<std::pair<std::vector<unsigned __int128>, FrequencySquare>> reps;
    std::vector<int> perm(n);
    std::vector<int> base(n), permuted(n);

    while (!pool.empty()) {
        FrequencySquare seed = unpack_square(*pool.begin(), n);
        MofsSet single;
        single.n = n;
        single.squares.push_back(seed);
        std::vector<unsigned __int128> canon = canonical_encoding(single);
        reps.push_back({canon, decode_canonical(canon[0], n)});

        for (int t = 0; t < 2; ++t) {
            FrequencySquare cur = t ? transpose(seed) : seed;
            for (int r = 0; r < n; ++r) base[r] = static_cast<int>(cur.rows[r]);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                for (int r = 0; r < n; ++r) permuted[r] = base[perm[r]];
                std::vector<int> cperm(n);
                std::iota(cperm.begin(), cperm.end(), 0);
                do {
                    std::uint64_t p = 0;
                    for (int r = n - 1; r >= 0; --r) {
                        unsigned v = 0;
                        int m = permuted[r];
                        for (int c = n - 1; c >= 0; --c) v |= (m >> cperm[c] & 1) << c;
                        p = (p << n) | v;
                    }
                    pool.erase(p);
                    pool.erase(p ^ full);
                } while (std::next_permutation(cperm.begin(), cperm.end()));
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }

    std::sort(reps.begin(), reps.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<FrequencySquare> out;
    out.reserve(reps.size());
    for (auto& r : reps) out.push_back(r.second);
    return out;
}

// Backtracking mate search against fixed base squares. limit = 0 means all.
std::vector<FrequencySquare> mates_range(const MofsSet& s,
                                         const std::vector<int>& cand,
                                         std::size_t first_lo, std::size_t first_hi,
                                         std::size_t limit) {
    int n = s.n, k = s.k(), lam = n / 2;
    long long target = static_cast<long long>(n) * n / 4;
    std::vector<std::vector<int>> base(k, std::vector<int>(n));
    for (int i = 0; i < k; ++i)
        for (int r = 0; r < n; ++r) base[i][r] = static_cast<int>(s.squares[i].rows[r]);

    std::vector<int> colcnt(n, 0), rows(n, 0);
    std::vector<long long> ov(k, 0);
    std::vector<FrequencySquare> out;
    bool stop = false;

    auto rec = [&](auto&& self, int r) -> void {
        if (stop) return;
        if (r == n) {
            out.push_back(square_from_masks(rows, n));
            if (limit && out.size() >= limit) stop = true;
            return;
        }
        int left = n - r;
        std::size_t lo = (r == 0) ? first_lo : 0;
        std::size_t hi = (r == 0) ? first_hi : cand.size();
        for (std::size_t ci = lo; ci < hi; ++ci) {
            int m = cand[ci];
            bool ok = true;
            for (int c = 0; c < n && ok; ++c) {
                if (m >> c & 1) {
                    if (colcnt[c] == lam) ok = false;
                } else if (colcnt[c] + left - 1 < lam) {
                    ok = false;
                }
            }
            for (int i = 0; i < k && ok; ++i) {
                long long o = ov[i] + __builtin_popcount(static_cast<unsigned>(m & base[i][r]));
                if (o > target || target - o > static_cast<long long>(left - 1) * lam)
                    ok = false;
            }
            if (!ok) continue;
            rows[r] = m;
            for (int c = 0; c < n; ++c) colcnt[c] += m >> c & 1;
            for (int i = 0; i < k; ++i)
                ov[i] += __builtin_popcount(static_cast<unsigned>(m & base[i][r]));
            self(self, r + 1);
            for (int c = 0; c < n; ++c) colcnt[c] -= m >> c & 1;
            for (int i = 0; i < k; ++i)
                ov[i] -= __builtin_popcount(static_cast<unsigned>(m & base[i][r]));
            if (stop) return;
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<FrequencySquare> mates_impl(const MofsSet& s, int threads,
                                        std::size_t limit) {
    int n = s.n;
    if (n <= 0 || n % 2) throw OddOrder("mate search needs a positive even order");
    if (n > 14) throw OrderTooLarge("mate search bounded at order 14");
    std::vector<int> cand = balanced_masks(n);

    if (threads <= 1 || limit) return mates_range(s, cand, 0, cand.size(), limit);

    int t = std::min<int>(threads, static_cast<int>(cand.size()));
    std::vector<std::vector<FrequencySquare>> parts(t);
    std::vector<std::thread> pool;
    std::size_t per = (cand.size() + t - 1) / t;
    for (int i = 0; i < t; ++i) {
        std::size_t lo = i * per, hi = std::min(cand.size(), lo + per);
        pool.emplace_back([&, i, lo, hi] { parts[i] = mates_range(s, cand, lo, hi, 0); });
    }
    for (auto& th : pool) th.join();
    std::vector<FrequencySquare> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

struct Bitset {
    std::vector<std::uint64_t> w;

    explicit Bitset(int words = 0) : w(words, 0) {}
    void set(int i) { w[i >> 6] |= 1ull << (i & 63); }
    void clear(int i) { w[i >> 6] &= ~(1ull << (i & 63)); }
    bool test(int i) const { return w[i >> 6] >> (i & 63) & 1; }
    bool empty() const {
        for (auto x : w)
            if (x) return false;
        return true;
    }
    int count() const {
        int c = 0;
        for (auto x : w) c += __builtin_popcountll(x);
        return c;
    }
    int first() const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i]) return static_cast<int>(i * 64 + __builtin_ctzll(w[i]));
        return -1;
    }
};

// Bron-Kerbosch over one root neighborhood, reindexed to a dense local
// vertex range so the bitset rows stay short and cache-resident. The root
// vertex is an implicit member of every clique below it.
struct CliqueCtx {
    int t = 0, words = 0, root = 0;
    std::uint64_t budget = 0, nodes = 0;
    bool stopped = false;
    std::vector<std::vector<std::uint64_t>> local;  // local adjacency
    std::vector<int> ids;                           // local -> graph vertex
    std::vector<std::vector<int>> found;

    int count_and(const Bitset& a, const std::vector<std::uint64_t>& b) const {
        int c = 0;
        for (int i = 0; i < words; ++i) c += __builtin_popcountll(a.w[i] & b[i]);
        return c;
    }

    int color_bound(const Bitset& p) const {
        Bitset u = p;
        int colors = 0;
        while (!u.empty()) {
            ++colors;
            Bitset c = u;
            while (true) {
                int v = c.first();
                if (v < 0) break;
                u.clear(v);
                c.clear(v);
                for (int i = 0; i < words; ++i) c.w[i] &= ~local[v][i];
            }
        }
        return colors;
    }

    void expand(std::vector<int>& r, Bitset p, Bitset x) {
        ++nodes;
        if (budget && nodes > budget) {
            stopped = true;
            return;
        }
        if (p.empty()) {
            if (x.empty() && static_cast<int>(r.size()) + 1 >= t) {
                std::vector<int> clique;
                clique.reserve(r.size() + 1);
                clique.push_back(root);
                for (int v : r) clique.push_back(ids[v]);
                std::sort(clique.begin(), clique.end());
                found.push_back(std::move(clique));
            }
            return;
        }
        int need = t - 1 - static_cast<int>(r.size());
        if (need > 0) {
            if (p.count() < need) return;
            if (need > 1 && color_bound(p) < need) return;
        }

        int pivot = -1, best = -1;
        for (int i = 0; i < words; ++i) {
            std::uint64_t m = p.w[i] | x.w[i];
            while (m) {
                int v = static_cast<int>(i * 64 + __builtin_ctzll(m));
                m &= m - 1;
                int sc = count_and(p, local[v]);
                if (sc > best) {
                    best = sc;
                    pivot = v;
                }
            }
        }
        Bitset ext = p;
        for (int i = 0; i < words; ++i) ext.w[i] &= ~local[pivot][i];
        while (true) {
            int v = ext.first();
            if (v < 0) break;
            ext.clear(v);
            Bitset np(words), nx(words);
            for (int i = 0; i < words; ++i) {
                np.w[i] = p.w[i] & local[v][i];
                nx.w[i] = x.w[i] & local[v][i];
            }
            r.push_back(v);
            expand(r, std::move(np), std::move(nx));
            r.pop_back();
            if (stopped) return;
            p.clear(v);
            x.set(v);
        }
    }
};

std::vector<int> degeneracy_order(const MateGraph& g) {
    int v_count = static_cast<int>(g.vertices.size());
    std::vector<int> deg(v_count), order;
    std::vector<bool> removed(v_count, false);
    for (int v = 0; v < v_count; ++v) deg[v] = g.degree(v);
    order.reserve(v_count);
    for (int step = 0; step < v_count; ++step) {
        int pick = -1;
        for (int v = 0; v < v_count; ++v)
            if (!removed[v] && (pick < 0 || deg[v] < deg[pick])) pick = v;
        removed[pick] = true;
        order.push_back(pick);
        for (int i = 0; i < static_cast<int>(g.adj[pick].size()); ++i) {
            std::uint64_t m = g.adj[pick][i];
            while (m) {
                int u = static_cast<int>(i * 64 + __builtin_ctzll(m));
                m &= m - 1;
                if (!removed[u]) --deg[u];
            }
        }
    }
    return order;
}

using Packed100 = unsigned __int128;

Packed100 pack_order10(const FrequencySquare& f) {
    Packed100 p = 0;
    for (int r = 9; r >= 0; --r)
        p = (p << 10) | static_cast<unsigned>(f.rows[r] & row_mask(10));
    return p;
}

int popcount128(Packed100 x) {
    return __builtin_popcountll(static_cast<std::uint64_t>(x)) +
           __builtin_popcountll(static_cast<std::uint64_t>(x >> 64));
}

FrequencySquare circulant_from_tops(unsigned a, unsigned b) {
    FrequencySquare f;
    f.n = 10;
    f.rows.assign(10, 0);
    for (int band = 0; band < 2; ++band) {
        unsigned top = band ? b : a;
        for (int r = 0; r < 5; ++r)
            for (int blk = 0; blk < 2; ++blk)
                for (int c = 0; c < 5; ++c)
                    if (top >> (blk * 5 + (c - r + 5) % 5) & 1)
                        f.rows[band * 5 + r] |= col_bit(blk * 5 + c);
    }
    return f;
}

std::string census_classes_hash(const std::vector<MofsSet>& classes,
                                std::vector<std::string>* canon_out) {
    std::string joined;
    for (const auto& s : classes) {
        std::string c = canonical_form(s);
        joined += c;
        joined += '\n';
        if (canon_out) canon_out->push_back(std::move(c));
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(joined)));
    return buf;
}

}  // namespace

std::vector<FrequencySquare> enumerate_squares(int n, bool up_to_equivalence) {
    if (n <= 0 || n % 2) throw OddOrder("enumeration needs a positive even order");
    if (n > 6) throw OrderTooLarge("square enumeration bounded at order 6");
    return up_to_equivalence ? enumerate_classes(n) : enumerate_raw(n);
}

std::vector<FrequencySquare> mates(const MofsSet& s, int threads) {
    for (const auto& f : s.squares)
        if (f.n != s.n) throw OrderMismatch("set members disagree on order");
    return mates_impl(s, threads, 0);
}

int MateGraph::degree(int v) const {
    int c = 0;
    for (auto w : adj[v]) c += __builtin_popcountll(w);
    return c;
}

bool MateGraph::edge_in_triangle(int u, int v) const {
    for (std::size_t i = 0; i < adj[u].size(); ++i)
        if (adj[u][i] & adj[v][i]) return true;
    return false;
}

MateGraph mate_graph(const MofsSet& pair, int threads) {
    if (pair.n != 6) throw BadOrder("mate graphs are defined for order 6");
    if (pair.k() != 2) throw WrongShape("mate graphs start from a pair of squares");
    ValidationReport rep = verify_mofs(pair);
    if (!rep.valid) throw PreconditionFailed(rep.failures.front());

    MateGraph g;
    for (const auto& f : mates(pair, threads))
        if (f.at(0, 0) == 0) g.vertices.push_back(f);

    int v_count = static_cast<int>(g.vertices.size());
    int words = (v_count + 63) / 64;
    std::vector<std::uint64_t> packed(v_count);
    for (int v = 0; v < v_count; ++v) packed[v] = pack_square(g.vertices[v]);
    g.adj.assign(v_count, std::vector<std::uint64_t>(words, 0));
    for (int u = 0; u < v_count; ++u)
        for (int v = u + 1; v < v_count; ++v)
            if (__builtin_popcountll(packed[u] & packed[v]) == 9) {
                g.adj[u][v >> 6] |= 1ull << (v & 63);
                g.adj[v][u >> 6] |= 1ull << (u & 63);
            }
    return g;
}

CliqueResult cliques_at_least(const MateGraph& g, int t, std::uint64_t budget) {
    if (t < 1) throw OutOfRange("clique threshold must be positive");
    int v_count = static_cast<int>(g.vertices.size());
    int gwords = (v_count + 63) / 64;

    std::vector<int> order = degeneracy_order(g);
    std::vector<int> pos(v_count);
    for (int i = 0; i < v_count; ++i) pos[order[i]] = i;

    std::vector<int> g2l(v_count, -1);
    std::vector<std::vector<int>> found;
    std::uint64_t nodes = 0;
    bool stopped = false;

    for (int i = 0; i < v_count && !stopped; ++i) {
        int v = order[i];
        std::vector<int> ids;
        int later = 0;
        for (int w = 0; w < gwords; ++w) {
            std::uint64_t m = g.adj[v][w];
            while (m) {
                int u = static_cast<int>(w * 64 + __builtin_ctzll(m));
                m &= m - 1;
                ids.push_back(u);
                later += pos[u] > i;
            }
        }
        if (1 + later < t) continue;

        int m_count = static_cast<int>(ids.size());
        CliqueCtx ctx;
        ctx.t = t;
        ctx.words = (m_count + 63) / 64;
        ctx.root = v;
        ctx.budget = budget;
        ctx.nodes = nodes;
        ctx.ids = std::move(ids);
        for (int a = 0; a < m_count; ++a) g2l[ctx.ids[a]] = a;
        ctx.local.assign(m_count, std::vector<std::uint64_t>(ctx.words, 0));
        for (int a = 0; a < m_count; ++a) {
            int ga = ctx.ids[a];
            for (int w = 0; w < gwords; ++w) {
                std::uint64_t m = g.adj[ga][w] & g.adj[v][w];
                while (m) {
                    int u = static_cast<int>(w * 64 + __builtin_ctzll(m));
                    m &= m - 1;
                    int b = g2l[u];
                    ctx.local[a][b >> 6] |= 1ull << (b & 63);
                }
            }
        }

        Bitset p(ctx.words), x(ctx.words);
        for (int a = 0; a < m_count; ++a)
            (pos[ctx.ids[a]] > i ? p : x).set(a);
        std::vector<int> r;
        ctx.expand(r, std::move(p), std::move(x));

        nodes = ctx.nodes;
        stopped = ctx.stopped;
        for (int a = 0; a < m_count; ++a) g2l[ctx.ids[a]] = -1;
        for (auto& c : ctx.found) found.push_back(std::move(c));
    }

    CliqueResult res;
    res.complete = !stopped;
    res.nodes = nodes;
    res.cliques = std::move(found);
    std::sort(res.cliques.begin(), res.cliques.end());
    return res;
}

bool is_maximal(const MofsSet& s) {
    return mates_impl(s, 1, 1).empty();
}

MofsSet reconstruct_block_circulant(
    int n, const std::vector<std::vector<unsigned long long>>& row_pair, int k) {
    if (n != 10) throw UnsupportedOrder("block-circulant layout is defined for order 10");
    if (k < 1 || k > 63) throw OutOfRange("superposition width must be in 1..63");
    if (row_pair.size() != 2 || row_pair[0].size() != 10 || row_pair[1].size() != 10)
        throw ShapeMismatch("expected two rows of ten entries");
    for (const auto& row : row_pair)
        for (auto e : row)
            if (e >> k) throw EntryOutOfRange("entry does not fit the superposition width");

    std::vector<std::vector<unsigned long long>> ent(10,
                                                     std::vector<unsigned long long>(10));
    for (int band = 0; band < 2; ++band)
        for (int r = 0; r < 5; ++r)
            for (int b = 0; b < 2; ++b)
                for (int c = 0; c < 5; ++c)
                    ent[band * 5 + r][b * 5 + c] = row_pair[band][b * 5 + (c - r + 5) % 5];
    return decode_superposition(ent, k);
}

BlockCirculantResult block_circulant_search(int n, int k, bool relation_55,
                                            std::uint64_t budget,
                                            std::size_t max_sets) {
    if (n != 10) throw UnsupportedOrder("block-circulant search is defined for order 10");
    if (k < 1) throw OutOfRange("set size must be positive");

    std::vector<FrequencySquare> cand;
    std::vector<Packed100> packed;
    for (unsigned a = 0; a < 1024; ++a) {
        if (__builtin_popcount(a) != 5) continue;
        for (unsigned b = 0; b < 1024; ++b) {
            if (__builtin_popcount(b) != 5) continue;
            if (__builtin_popcount(a & 31u) + __builtin_popcount(b & 31u) != 5) continue;
            cand.push_back(circulant_from_tops(a, b));
            packed.push_back(pack_order10(cand.back()));
        }
    }

    Packed100 pattern = 0;
    for (int r = 0; r < 10; ++r)
        for (int c = 0; c < 10; ++c)
            if ((r < 5) != (c < 5)) pattern |= Packed100{1} << (r * 10 + c);

    BlockCirculantResult res;
    std::vector<std::size_t> chosen;
    bool stop = false;

    auto rec = [&](auto&& self, std::size_t start, Packed100 z2) -> void {
        if (static_cast<int>(chosen.size()) == k) {
            if (!relation_55 || z2 == pattern) {
                MofsSet out;
                out.n = 10;
                for (std::size_t ci : chosen) out.squares.push_back(cand[ci]);
                res.sets.push_back(std::move(out));
                if (res.sets.size() >= max_sets) {
                    stop = true;
                    res.complete = false;
                }
            }
            return;
        }
        std::size_t need = k - chosen.size();
        for (std::size_t ci = start; ci + need <= cand.size() && !stop; ++ci) {
            bool ok = true;
            for (std::size_t prev : chosen)
                if (popcount128(packed[prev] & packed[ci]) != 25) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            ++res.nodes;
            if (budget && res.nodes > budget) {
                stop = true;
                res.complete = false;
                return;
            }
            chosen.push_back(ci);
            self(self, ci + 1, z2 ^ packed[ci]);
            chosen.pop_back();
        }
    };
    rec(rec, 0, 0);
    return res;
}

namespace {

// Cell relabeling for packed order-6 squares: output bit i reads input bit
// map[i], then the complement flag is resolved separately.
using CellMap = std::array<std::uint8_t, 36>;

std::uint64_t apply_cell_map(std::uint64_t p, const CellMap& map) {
    std::uint64_t out = 0;
    for (int i = 0; i < 36; ++i) out |= (p >> map[i] & 1) << i;
    return out;
}

// Every pair {rep, g} is isomorphic to {rep, h} when h is the image of g
// under a symmetry fixing rep up to complement, so mates can be thinned to
// one orbit representative before the expensive canonical form runs.
std::vector<MofsSet> pair_classes_impl(int threads) {
    std::vector<FrequencySquare> reps = enumerate_squares(6, true);

    std::vector<std::array<int, 6>> perms;
    std::array<int, 6> p{0, 1, 2, 3, 4, 5};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    constexpr std::uint64_t kFull36 = (1ull << 36) - 1;
    std::map<std::string, MofsSet> classes;

    for (const auto& rep : reps) {
        std::uint64_t packed_rep = pack_square(rep);

        std::vector<CellMap> stab;
        CellMap map;
        for (int t = 0; t < 2; ++t)
            for (const auto& rp : perms)
                for (const auto& cp : perms) {
                    for (int r = 0; r < 6; ++r)
                        for (int c = 0; c < 6; ++c)
                            map[r * 6 + c] = static_cast<std::uint8_t>(
                                t ? cp[c] * 6 + rp[r] : rp[r] * 6 + cp[c]);
                    std::uint64_t img = apply_cell_map(packed_rep, map);
                    if (img == packed_rep || img == (packed_rep ^ kFull36))
                        stab.push_back(map);
                }

        MofsSet single;
        single.n = 6;
        single.squares.push_back(rep);
        std::set<std::uint64_t> reduced;
        for (const auto& g : mates(single, threads)) {
            std::uint64_t pg = pack_square(g);
            std::uint64_t best = ~0ull;
            for (const auto& m : stab) {
                std::uint64_t img = apply_cell_map(pg, m);
                best = std::min({best, img, img ^ kFull36});
            }
            reduced.insert(best);
        }

        for (std::uint64_t key : reduced) {
            MofsSet pair;
            pair.n = 6;
            pair.squares = {rep, unpack_square(key, 6)};
            MofsSet canon_set = decode_canonical_set(canonical_encoding(pair), 6);
            classes.emplace(canonical_form(canon_set), std::move(canon_set));
        }
    }

    std::vector<MofsSet> out;
    out.reserve(classes.size());
    for (auto& [key, s] : classes) {
        (void)key;
        out.push_back(std::move(s));
    }
    return out;
}

const std::vector<MofsSet>& pair_classes_cached(int threads) {
    static const std::vector<MofsSet> cache = pair_classes_impl(threads);
    return cache;
}

}  // namespace

std::vector<MofsSet> pair_classes_order6(int threads) {
    return pair_classes_cached(threads);
}

std::vector<CensusRow> run_census(const std::string& checkpoint_path, int batch,
                                  std::uint64_t clique_budget, int threads,
                                  const std::function<void(const CensusRow&)>& progress) {
    const std::vector<MofsSet>& classes = pair_classes_cached(threads);
    std::vector<std::string> canon;
    std::string hash = census_classes_hash(classes, &canon);
    int total = static_cast<int>(classes.size());

    std::map<int, CensusRow> done;
    {
        std::ifstream in(checkpoint_path);
        if (in) {
            nlohmann::json j;
            try {
                in >> j;
            } catch (const std::exception& e) {
                throw CheckpointCorrupt(std::string("unreadable checkpoint: ") + e.what());
            }
            if (!j.is_object() || j.value("kind", "") != "mofs-pair-census" ||
                j.value("version", 0) != 1)
                throw CheckpointCorrupt("checkpoint header does not match");
            if (j.value("classes_hash", "") != hash ||
                j.value("class_count", -1) != total)
                throw CheckpointCorrupt("checkpoint was built for a different class list");
            if (!j.contains("rows") || !j["rows"].is_array())
                throw CheckpointCorrupt("checkpoint rows missing");
            for (const auto& row : j["rows"]) {
                CensusRow r;
                try {
                    r.index = row.at("index").get<int>();
                    r.canon = row.at("canon").get<std::string>();
                    r.vertex_count = row.at("vertices").get<int>();
                    r.min_degree = row.at("min_degree").get<int>();
                    r.cliques15 = row.at("cliques15").get<std::uint64_t>();
                    r.complete = row.at("complete").get<bool>();
                } catch (const std::exception& e) {
                    throw CheckpointCorrupt(std::string("malformed row: ") + e.what());
                }
                if (r.index < 0 || r.index >= total || canon[r.index] != r.canon)
                    throw CheckpointCorrupt("row does not match its class");
                done[r.index] = std::move(r);
            }
        }
    }

    auto save = [&] {
        nlohmann::json j;
        j["kind"] = "mofs-pair-census";
        j["version"] = 1;
        j["order"] = 6;
        j["class_count"] = total;
        j["classes_hash"] = hash;
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& [idx, r] : done) {
            (void)idx;
            rows.push_back({{"index", r.index},
                            {"canon", r.canon},
                            {"vertices", r.vertex_count},
                            {"min_degree", r.min_degree},
                            {"cliques15", r.cliques15},
                            {"complete", r.complete}});
        }
        j["rows"] = std::move(rows);
        std::string tmp = checkpoint_path + ".tmp";
        std::ofstream out(tmp);
        out << j.dump(1) << '\n';
        out.close();
        if (!out || std::rename(tmp.c_str(), checkpoint_path.c_str()) != 0)
            throw ParseError("cannot write checkpoint at " + checkpoint_path);
    };

    int fresh = 0;
    for (int idx = 0; idx < total && fresh < batch; ++idx) {
        if (done.count(idx)) continue;
        MateGraph g = mate_graph(classes[idx], threads);
        CliqueResult cl = cliques_at_least(g, 15, clique_budget);
        CensusRow r;
        r.index = idx;
        r.canon = canon[idx];
        r.vertex_count = static_cast<int>(g.vertices.size());
        int mind = r.vertex_count ? g.degree(0) : 0;
        for (int v = 1; v < r.vertex_count; ++v) mind = std::min(mind, g.degree(v));
        r.min_degree = mind;
        r.cliques15 = cl.cliques.size();
        r.complete = cl.complete;
        done[idx] = r;
        ++fresh;
        save();
        if (progress) progress(r);
    }

    std::vector<CensusRow> out;
    out.reserve(done.size());
    for (auto& [idx, r] : done) {
        (void)idx;
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace mofs
