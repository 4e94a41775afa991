/*
   Copyright 2026 The ellf2 Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "ellf2/lattice.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <numeric>

#include "json.hpp"

namespace ellf2 {

namespace {
__extension__ using Wide = __int128;
}  // namespace

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(std::string_view text) {
    std::size_t pos = 0;
    const auto read_int = [&](bool allow_sign) -> std::int64_t {
        bool negative = false;
        if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) negative = text[pos++] == '-';
        const std::size_t start = pos;
        std::int64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            if (v > (INT64_MAX - 9) / 10) throw ParseError("rational out of range", pos);
            v = v * 10 + (text[pos++] - '0');
        }
        if (pos == start) throw ParseError("expected digits in rational '" + std::string(text) + "'", pos);
        return negative ? -v : v;
    };
    const std::int64_t num = read_int(true);
    std::int64_t den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = read_int(false);
        if (den == 0) throw ParseError("zero denominator", pos - 1);
    }
    if (pos != text.size()) throw ParseError("trailing characters in rational '" + std::string(text) + "'", pos);
    return Rational(num, den);
}

int DualGraph::add_vertex(std::string name) {
    if (std::find(names_.begin(), names_.end(), name) != names_.end())
        throw std::invalid_argument("DualGraph: duplicate vertex '" + name + "'");
    names_.push_back(std::move(name));
    return size() - 1;
}

void DualGraph::add_edge(int u, int v, int label) {
    if (u < 0 || v < 0 || u >= size() || v >= size()) throw std::invalid_argument("DualGraph: unknown vertex index");
    if (u == v) throw std::invalid_argument("DualGraph: loops are not allowed");
    if (label < 1) throw std::invalid_argument("DualGraph: edge labels must be positive");
    edges_.push_back({u, v, label});
}

void DualGraph::add_edge(std::string_view u, std::string_view v, int label) { add_edge(index(u), index(v), label); }

int DualGraph::index(std::string_view name) const {
    const auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw std::out_of_range("DualGraph: unknown vertex '" + std::string(name) + "'");
    return static_cast<int>(it - names_.begin());
}

std::vector<std::vector<std::int64_t>> DualGraph::matrix() const {
    const auto n = static_cast<std::size_t>(size());
    std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = -2;
    for (const Edge& e : edges_) {
        m[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] += e.label;
        m[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] += e.label;
    }
    return m;
}

DualGraph DualGraph::subgraph(const std::vector<int>& vertices) const {
    DualGraph g;
    std::vector<int> where(names_.size(), -1);
    for (const int v : vertices) {
        if (v < 0 || v >= size()) throw std::invalid_argument("DualGraph::subgraph: unknown vertex index");
        where[static_cast<std::size_t>(v)] = g.add_vertex(names_[static_cast<std::size_t>(v)]);
    }
    for (const Edge& e : edges_) {
        const int a = where[static_cast<std::size_t>(e.u)];
        const int b = where[static_cast<std::size_t>(e.v)];
        if (a >= 0 && b >= 0) g.add_edge(a, b, e.label);
    }
    return g;
}

DualGraph DualGraph::from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("graph JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
    }
    DualGraph g;
    try {
        for (const auto& v : doc.at("vertices")) g.add_vertex(v.get<std::string>());
        for (const auto& e : doc.at("edges")) {
            if (!e.is_array() || e.size() < 2 || e.size() > 3) throw ParseError("graph JSON: edge must be [u, v] or [u, v, label]", 0);
            const int label = e.size() == 3 ? e[2].get<int>() : 1;
            g.add_edge(e[0].get<std::string>(), e[1].get<std::string>(), label);
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("graph JSON: ") + e.what(), 0);
    } catch (const std::out_of_range& e) {
        throw ParseError(std::string("graph JSON: ") + e.what(), 0);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("graph JSON: ") + e.what(), 0);
    }
    return g;
}

std::string DualGraph::to_json() const {
    nlohmann::json doc;
    doc["vertices"] = names_;
    doc["edges"] = nlohmann::json::array();
    for (const Edge& e : edges_)
        doc["edges"].push_back({names_[static_cast<std::size_t>(e.u)], names_[static_cast<std::size_t>(e.v)], e.label});
    return doc.dump();
}

namespace {

KodairaGraph chain_graph(const KodairaSymbol& s, const std::vector<int>& mult, const std::vector<std::pair<int, int>>& edges) {
    KodairaGraph k{s, {}, mult};
    for (std::size_t i = 0; i < mult.size(); ++i) k.graph.add_vertex("C" + std::to_string(i));
    for (const auto& [u, v] : edges) k.graph.add_edge(u, v);
    return k;
}

}  // namespace

KodairaGraph kodaira_graph(const KodairaSymbol& s) {
    switch (s.family) {
        case KodairaFamily::I: {
            const int n = std::max(s.n, 1);
            if (n == 1) return chain_graph(s, {1}, {});
            if (n == 2) {
                KodairaGraph k = chain_graph(s, {1, 1}, {});
                k.graph.add_edge(0, 1, 2);
                return k;
            }
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
            return chain_graph(s, std::vector<int>(static_cast<std::size_t>(n), 1), edges);
        }
        case KodairaFamily::Istar: {
            const int n = s.n;
            std::vector<int> mult{1, 1};
            for (int i = 0; i <= n; ++i) mult.push_back(2);
            mult.push_back(1);
            mult.push_back(1);
            std::vector<std::pair<int, int>> edges{{0, 2}, {1, 2}};
            for (int i = 2; i < n + 2; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(n + 2, n + 3);
            edges.emplace_back(n + 2, n + 4);
            return chain_graph(s, mult, edges);
        }
        case KodairaFamily::II: return chain_graph(s, {1}, {});
        case KodairaFamily::III: {
            KodairaGraph k = chain_graph(s, {1, 1}, {});
            k.graph.add_edge(0, 1, 2);
            return k;
        }
        case KodairaFamily::IV: return chain_graph(s, {1, 1, 1}, {{0, 1}, {1, 2}, {2, 0}});
        case KodairaFamily::IVstar:
            return chain_graph(s, {1, 2, 3, 2, 1, 2, 1}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6}});
        case KodairaFamily::IIIstar:
            return chain_graph(s, {1, 2, 3, 4, 3, 2, 1, 2}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 7}});
        case KodairaFamily::IIstar:
            return chain_graph(s, {1, 2, 3, 4, 5, 6, 4, 2, 3},
                               {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 8}});
    }
    throw std::logic_error("kodaira_graph: unknown family");
}

std::int64_t bareiss_det(std::vector<std::vector<std::int64_t>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("bareiss_det: matrix is not square");
    if (n == 0) return 1;
    int sign = 1;
    std::int64_t prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m[swap][k] == 0) ++swap;
            if (swap == n) return 0;
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                const Wide v = static_cast<Wide>(m[i][j]) * m[k][k] - static_cast<Wide>(m[i][k]) * m[k][j];
                const Wide q = v / prev;
                if (q > INT64_MAX || q < INT64_MIN) throw std::overflow_error("bareiss_det: intermediate overflow");
                m[i][j] = static_cast<std::int64_t>(q);
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

std::int64_t gram_det(const DualGraph& g) { return bareiss_det(g.matrix()); }

KodairaSymbol identify_affine(const DualGraph& g) {
    const int n = g.size();
    const auto bad = [&]() { throw std::invalid_argument("identify_affine: not an extended Dynkin diagram"); };
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const auto& e : g.edges()) {
        if (n == 2 && e.label == 2 && g.edges().size() == 1) return KodairaSymbol::I(2);
        if (e.label != 1) bad();
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    const auto edge_count = g.edges().size();
    if (n >= 3 && edge_count == static_cast<std::size_t>(n)) {
        for (const auto& a : adj)
            if (a.size() != 2) bad();
        return KodairaSymbol::I(n);
    }
    if (edge_count + 1 != static_cast<std::size_t>(n)) bad();
    std::vector<int> branch;
    for (int v = 0; v < n; ++v) {
        const std::size_t d = adj[static_cast<std::size_t>(v)].size();
        if (d > 4) bad();
        if (d >= 3) branch.push_back(v);
    }
    if (branch.size() == 1 && adj[static_cast<std::size_t>(branch[0])].size() == 4) {
        if (n != 5) bad();
        return KodairaSymbol::Istar(0);
    }
    if (branch.size() == 2) {
        for (const int b : branch)
            if (adj[static_cast<std::size_t>(b)].size() != 3) bad();
        if (n < 6) bad();
        return KodairaSymbol::Istar(n - 5);
    }
    if (branch.size() != 1) bad();
    const int center = branch[0];
    std::vector<int> arms;
    for (const int start : adj[static_cast<std::size_t>(center)]) {
        int length = 1;
        int prev = center;
        int cur = start;
        while (adj[static_cast<std::size_t>(cur)].size() == 2) {
            const auto& a = adj[static_cast<std::size_t>(cur)];
            const int next = a[0] == prev ? a[1] : a[0];
            prev = cur;
            cur = next;
            ++length;
        }
        arms.push_back(length);
    }
    std::sort(arms.begin(), arms.end());
    if (arms == std::vector<int>{2, 2, 2}) return KodairaSymbol::of(KodairaFamily::IVstar);
    if (arms == std::vector<int>{1, 3, 3}) return KodairaSymbol::of(KodairaFamily::IIIstar);
    if (arms == std::vector<int>{1, 2, 5}) return KodairaSymbol::of(KodairaFamily::IIstar);
    bad();
    return {};
}

namespace {

std::vector<std::vector<std::int64_t>> restrict(const std::vector<std::vector<std::int64_t>>& m, const std::vector<int>& rows,
                                                const std::vector<int>& cols) {
    std::vector<std::vector<std::int64_t>> out(rows.size(), std::vector<std::int64_t>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            out[i][j] = m[static_cast<std::size_t>(rows[i])][static_cast<std::size_t>(cols[j])];
    return out;
}

std::vector<int> members(std::uint32_t mask) {
    std::vector<int> out;
    for (int v = 0; mask != 0; ++v, mask >>= 1)
        if (mask & 1u) out.push_back(v);
    return out;
}

bool connected(std::uint32_t mask, const std::vector<std::uint32_t>& neighbours) {
    std::uint32_t seen = mask & (~mask + 1);
    std::uint32_t frontier = seen;
    while (frontier != 0) {
        const int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        const std::uint32_t next = neighbours[static_cast<std::size_t>(v)] & mask & ~seen;
        seen |= next;
        frontier |= next;
    }
    return seen == mask;
}

}  // namespace

std::vector<CanonicalCurve> canonical_type_subcurves(const DualGraph& g) {
    const int n = g.size();
    if (n > kMaxCanonicalSearchVertices)
        throw std::invalid_argument("canonical_type_subcurves: at most 16 vertices are supported");
    auto neg = g.matrix();
    for (auto& row : neg)
        for (auto& x : row) x = -x;
    std::vector<std::uint32_t> neighbours(static_cast<std::size_t>(n), 0);
    for (const auto& e : g.edges()) {
        neighbours[static_cast<std::size_t>(e.u)] |= 1u << e.v;
        neighbours[static_cast<std::size_t>(e.v)] |= 1u << e.u;
    }
    const std::uint32_t count = std::uint32_t{1} << n;
    // Sylvester along the nested chain obtained by dropping the highest vertex.
    std::vector<std::int8_t> definite(count, 0);
    std::vector<std::int64_t> det(count, 1);
    definite[0] = 1;
    std::vector<CanonicalCurve> out;
    for (std::uint32_t mask = 1; mask < count; ++mask) {
        const std::vector<int> vs = members(mask);
        det[mask] = bareiss_det(restrict(neg, vs, vs));
        const std::uint32_t parent = mask & ~(std::uint32_t{1} << (31 - std::countl_zero(mask)));
        definite[mask] = definite[parent] && det[mask] > 0;
        if (det[mask] != 0 || !connected(mask, neighbours)) continue;
        bool affine = true;
        for (const int v : vs)
            if (!definite[mask & ~(std::uint32_t{1} << v)]) affine = false;
        if (!affine) continue;
        std::vector<std::int64_t> kernel(vs.size());
        for (std::size_t i = 0; i < vs.size(); ++i) {
            std::vector<int> rows;
            std::vector<int> cols;
            for (std::size_t j = 1; j < vs.size(); ++j) rows.push_back(vs[j]);
            for (std::size_t j = 0; j < vs.size(); ++j)
                if (j != i) cols.push_back(vs[j]);
            const std::int64_t minor = vs.size() == 1 ? 1 : bareiss_det(restrict(neg, rows, cols));
            kernel[i] = (i % 2 == 0) ? minor : -minor;
        }
        std::int64_t g_all = 0;
        for (const std::int64_t x : kernel) g_all = std::gcd(g_all, x);
        if (g_all == 0) throw std::logic_error("canonical_type_subcurves: vanishing adjugate column");
        if (kernel[0] < 0) g_all = -g_all;
        CanonicalCurve c;
        c.vertices = vs;
        for (const std::int64_t x : kernel) {
            if (x / g_all <= 0) throw std::logic_error("canonical_type_subcurves: radical generator not positive");
            c.multiplicity.push_back(static_cast<int>(x / g_all));
        }
        c.symbol = identify_affine(g.subgraph(vs));
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<int> simple_components(const KodairaSymbol& s) {
    switch (s.family) {
        case KodairaFamily::I: {
            std::vector<int> out(static_cast<std::size_t>(std::max(s.n, 1)));
            std::iota(out.begin(), out.end(), 0);
            return out;
        }
        case KodairaFamily::Istar: return {0, 1, s.n + 3, s.n + 4};
        case KodairaFamily::II: return {0};
        case KodairaFamily::III: return {0, 1};
        case KodairaFamily::IV: return {0, 1, 2};
        case KodairaFamily::IVstar: return {0, 4, 6};
        case KodairaFamily::IIIstar: return {0, 6};
        case KodairaFamily::IIstar: return {0};
    }
    return {0};
}

namespace {

void require_simple(const KodairaSymbol& s, int component) {
    const auto simple = simple_components(s);
    if (std::find(simple.begin(), simple.end(), component) == simple.end())
        throw std::invalid_argument("component " + std::to_string(component) + " of " + to_string(s) +
                                    " is not a simple component");
}

}  // namespace

Rational local_contribution(const KodairaSymbol& s, int component) {
    require_simple(s, component);
    if (component == 0) return Rational(0);
    switch (s.family) {
        case KodairaFamily::I: return Rational(static_cast<std::int64_t>(component) * (s.n - component), s.n);
        case KodairaFamily::Istar: return component == 1 ? Rational(1) : Rational(s.n + 4, 4);
        case KodairaFamily::III: return Rational(1, 2);
        case KodairaFamily::IV: return Rational(2, 3);
        case KodairaFamily::IVstar: return Rational(4, 3);
        case KodairaFamily::IIIstar: return Rational(3, 2);
        default: break;
    }
    throw std::logic_error("local_contribution: unreachable");
}

int component_order(const KodairaSymbol& s, int component) {
    require_simple(s, component);
    if (component == 0) return 1;
    switch (s.family) {
        case KodairaFamily::I: return s.n / std::gcd(s.n, component);
        case KodairaFamily::Istar: return (component == 1 || s.n % 2 == 0) ? 2 : 4;
        case KodairaFamily::III:
        case KodairaFamily::IIIstar: return 2;
        case KodairaFamily::IV:
        case KodairaFamily::IVstar: return 3;
        default: break;
    }
    throw std::logic_error("component_order: unreachable");
}

std::vector<HeightSolution> height_solve(const HeightProblem& p) {
    if (p.po_min < 0 || p.po_max < p.po_min) throw std::invalid_argument("height_solve: bad (P.O) range");
    struct Option {
        Rational contribution;
        int order;
    };
    std::vector<std::vector<Option>> options;
    for (const HeightFiber& f : p.fibers) {
        std::vector<Option> opts;
        for (const int c : simple_components(f.symbol)) {
            const Rational v = local_contribution(f.symbol, c);
            if (!f.allowed.empty() && std::find(f.allowed.begin(), f.allowed.end(), v) == f.allowed.end()) continue;
            opts.push_back({v, component_order(f.symbol, c)});
        }
        std::sort(opts.begin(), opts.end(), [](const Option& a, const Option& b) {
            return a.contribution != b.contribution ? a.contribution < b.contribution : a.order < b.order;
        });
        options.push_back(std::move(opts));
    }
    std::vector<Rational> max_rest(options.size() + 1, Rational(0));
    for (std::size_t i = options.size(); i-- > 0;) {
        Rational best(0);
        for (const Option& o : options[i]) best = std::max(best, o.contribution);
        max_rest[i] = max_rest[i + 1] + best;
    }

    std::vector<HeightSolution> out;
    std::vector<Rational> chosen;
    for (int po = p.po_min; po <= p.po_max; ++po) {
        const Rational need = Rational(2 + 2 * po) - p.target;
        const auto search = [&](auto&& self, std::size_t i, Rational remaining, int order) -> void {
            if (remaining < Rational(0) || remaining > max_rest[i]) return;
            if (i == options.size()) {
                if (remaining != Rational(0)) return;
                if (p.torsion_order && order != *p.torsion_order) return;
                HeightSolution s{po, chosen};
                if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
                return;
            }
            for (const Option& o : options[i]) {
                chosen.push_back(o.contribution);
                self(self, i + 1, remaining - o.contribution, std::lcm(order, o.order));
                chosen.pop_back();
            }
        };
        search(search, 0, need, 1);
    }
    std::sort(out.begin(), out.end(), [](const HeightSolution& a, const HeightSolution& b) {
        return a.po != b.po ? a.po < b.po : a.contributions < b.contributions;
    });
    return out;
}

bool shioda_tate_check(const FiberConfiguration& config, int mw_rank) {
    int sum = mw_rank + 2;
    for (const LocalReduction& r : config.reductions) sum += r.place.degree() * (r.r_geom - 1);
    return sum == 10;
}

std::string root_lattice(const KodairaSymbol& s) {
    switch (s.family) {
        case KodairaFamily::I: return s.n >= 2 ? "A" + std::to_string(s.n - 1) : "";
        case KodairaFamily::Istar: return "D" + std::to_string(s.n + 4);
        case KodairaFamily::II: return "";
        case KodairaFamily::III: return "A1";
        case KodairaFamily::IV: return "A2";
        case KodairaFamily::IVstar: return "E6";
        case KodairaFamily::IIIstar: return "E7";
        case KodairaFamily::IIstar: return "E8";
    }
    return "";
}

namespace {

std::string normalize_lattice(std::string_view text) {
    std::vector<std::pair<char, int>> parts;
    std::string current;
    const auto flush = [&]() {
        std::string token;
        for (const char ch : current)
            if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '_') token += ch;
        current.clear();
        if (token.empty()) return;
        const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(token[0])));
        if ((letter != 'A' && letter != 'D' && letter != 'E') || token.size() < 2) throw NotEmbedded(std::string(text));
        int rank = 0;
        for (std::size_t i = 1; i < token.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(token[i])) || rank > 100) throw NotEmbedded(std::string(text));
            rank = rank * 10 + (token[i] - '0');
        }
        parts.emplace_back(letter, rank);
    };
    const std::string_view oplus = "\xE2\x8A\x95";
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '+') {
            flush();
        } else if (text.substr(i, oplus.size()) == oplus) {
            flush();
            i += oplus.size() - 1;
        } else {
            current += text[i];
        }
    }
    flush();
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (const auto& [letter, rank] : parts) {
        if (!out.empty()) out += '+';
        out += letter + std::to_string(rank);
    }
    return out;
}

}  // namespace

std::string trivial_lattice(const FiberConfiguration& config) {
    std::string joined;
    for (const LocalReduction& r : config.reductions) {
        const std::string name = root_lattice(r.symbol);
        if (name.empty()) continue;
        for (int i = 0; i < r.place.degree(); ++i) joined += (joined.empty() ? "" : "+") + name;
    }
    return joined.empty() ? "" : normalize_lattice(joined);
}

const std::vector<MWTableRow>& mw_table() {
    static const std::vector<MWTableRow> rows{
        {"A2+D5", "<1/12>", 1, 1},     {"A2+E6", "Z/3", 0, 3},  {"A1+E6", "<1/6>", 1, 1}, {"A3+D5", "Z/4", 0, 4},
        {"A1+D6", "A1*+Z/2", 1, 2}, {"D7", "<1/4>", 1, 1},   {"D8", "Z/2", 0, 2},
    };
    return rows;
}

MWTableRow mw_lookup(std::string_view trivial_lattice) {
    const std::string key = normalize_lattice(trivial_lattice);
    for (const MWTableRow& row : mw_table())
        if (row.trivial_lattice == key) return row;
    throw NotEmbedded(key.empty() ? std::string(trivial_lattice) : key);
}

}  // namespace ellf2
