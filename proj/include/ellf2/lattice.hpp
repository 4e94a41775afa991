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

#ifndef ELLF2_LATTICE_HPP
#define ELLF2_LATTICE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "ellf2/kodaira.hpp"
#include "ellf2/tate.hpp"

namespace ellf2 {

using Rational = boost::rational<std::int64_t>;

/// "p/q" in lowest terms, or "p" when q = 1.
std::string to_string(const Rational& r);
/// Accepts "p", "-p", "p/q". Throws ParseError.
Rational parse_rational(std::string_view text);

/// Configuration of (-2)-curves: every vertex has self-intersection -2 and
/// an edge label is the intersection number of its two ends.
class DualGraph {
   public:
    struct Edge {
        int u = 0;
        int v = 0;
        int label = 1;
    };

    int add_vertex(std::string name);
    /// Throws std::invalid_argument on a loop, an unknown vertex or label < 1.
    /// Repeated edges between the same pair add up.
    void add_edge(int u, int v, int label = 1);
    void add_edge(std::string_view u, std::string_view v, int label = 1);

    int size() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<Edge>& edges() const { return edges_; }
    /// Throws std::out_of_range for an unknown name.
    int index(std::string_view name) const;

    /// Symmetric intersection matrix with -2 on the diagonal.
    std::vector<std::vector<std::int64_t>> matrix() const;

    /// Induced subgraph on `vertices`, in the given order.
    DualGraph subgraph(const std::vector<int>& vertices) const;

    /// {"vertices": [names], "edges": [[u, v, label], ...]}; the label may be
    /// omitted. Throws ParseError.
    static DualGraph from_json(std::string_view text);
    std::string to_json() const;

   private:
    std::vector<std::string> names_;
    std::vector<Edge> edges_;
};

/// Dual graph of a Kodaira fiber with the multiplicities of its components.
/// Vertex 0 is the identity component. I_n^* uses C0, C1 (near), the chain
/// C2..C(n+2) and C(n+3), C(n+4) (far).
struct KodairaGraph {
    KodairaSymbol symbol;
    DualGraph graph;
    std::vector<int> multiplicity;
};

KodairaGraph kodaira_graph(const KodairaSymbol& s);

/// Exact determinant by fraction-free elimination. Throws
/// std::overflow_error if an intermediate leaves the 64-bit range.
std::int64_t bareiss_det(std::vector<std::vector<std::int64_t>> m);
std::int64_t gram_det(const DualGraph& g);

struct CanonicalCurve {
    /// Ascending vertex indices.
    std::vector<int> vertices;
    /// Primitive positive radical generator, aligned with `vertices`.
    std::vector<int> multiplicity;
    KodairaSymbol symbol;
};

inline constexpr int kMaxCanonicalSearchVertices = 16;

/// All connected vertex subsets whose intersection form is negative
/// semidefinite with one-dimensional radical, ordered by subset bitmask.
/// Throws std::invalid_argument for graphs with more than 16 vertices.
std::vector<CanonicalCurve> canonical_type_subcurves(const DualGraph& g);

/// Fiber type recognized from the shape of an affine subgraph. Throws
/// std::invalid_argument if the shape is not an extended Dynkin diagram.
KodairaSymbol identify_affine(const DualGraph& g);

/// Simple (multiplicity one) components of kodaira_graph(s), identity first.
std::vector<int> simple_components(const KodairaSymbol& s);

/// Correction term of the height pairing for a section meeting `component`
/// of kodaira_graph(s). Throws std::invalid_argument unless the component
/// is simple.
Rational local_contribution(const KodairaSymbol& s, int component);

/// Order of the component in the component group of the fiber.
int component_order(const KodairaSymbol& s, int component);

struct HeightFiber {
    KodairaSymbol symbol;
    /// Restricts the contributions; empty means every simple component.
    std::vector<Rational> allowed;
};

struct HeightProblem {
    Rational target;
    std::vector<HeightFiber> fibers;
    int po_min = 0;
    int po_max = 3;
    /// If set, the section is torsion of this order: the lcm of the
    /// component orders met must equal it.
    std::optional<int> torsion_order;
};

struct HeightSolution {
    int po = 0;
    std::vector<Rational> contributions;
    friend bool operator==(const HeightSolution&, const HeightSolution&) = default;
};

/// Every distinct (P.O, contributions) with target = 2 + 2(P.O) - sum.
/// Sorted by P.O, then contributions.
std::vector<HeightSolution> height_solve(const HeightProblem& p);

/// rank + 2 + sum over places of deg * (components - 1) == 10.
bool shioda_tate_check(const FiberConfiguration& config, int mw_rank);

/// "A_{n-1}", "D_{n+4}", "A1", "A2", "E6", "E7", "E8"; empty for irreducible fibers.
std::string root_lattice(const KodairaSymbol& s);

/// Sum of root lattices of the reducible fibers, e.g. "A2+D5".
std::string trivial_lattice(const FiberConfiguration& config);

class NotEmbedded : public std::out_of_range {
   public:
    explicit NotEmbedded(const std::string& name) : std::out_of_range("lattice " + name + " is not embedded") {}
};

struct MWTableRow {
    std::string trivial_lattice;
    std::string mw;
    int rank = 0;
    int torsion = 1;
};

/// Accepts summands in any order, separated by '+' or "⊕". Throws NotEmbedded.
MWTableRow mw_lookup(std::string_view trivial_lattice);
const std::vector<MWTableRow>& mw_table();

}  // namespace ellf2

#endif  // ELLF2_LATTICE_HPP
