//! Weighted dual graphs, the depth-1 pattern graphs and embedding search,
//! and the neighbour graph of an external code.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::binomial::{parse_binomial, Binomial};
use crate::code::{Code, Codeword};
use crate::error::{Error, Result};
use crate::monomial::ExponentVector;
use crate::toric::code_matrix;

/// Graph on all codewords (the zero word always included) with an edge
/// between words at Hamming distance one; vertex weight = codeword weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedDualGraph {
    vertices: Vec<Codeword>,
    adjacency: Vec<Vec<usize>>,
}

impl WeightedDualGraph {
    pub fn vertices(&self) -> &[Codeword] {
        &self.vertices
    }

    pub fn weight(&self, v: usize) -> usize {
        self.vertices[v].weight()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, ns) in self.adjacency.iter().enumerate() {
            out.extend(ns.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        out
    }

    pub fn vertex_of(&self, w: &Codeword) -> Option<usize> {
        self.vertices.iter().position(|x| x == w)
    }

    fn from_vertices(vertices: Vec<Codeword>) -> Self {
        let adjacency = (0..vertices.len())
            .map(|u| (0..vertices.len()).filter(|&v| vertices[u].distance(&vertices[v]) == 1).collect())
            .collect();
        WeightedDualGraph { vertices, adjacency }
    }
}

pub fn dual_graph(code: &Code) -> WeightedDualGraph {
    let mut vertices = vec![Codeword::zero(code.n())];
    vertices.extend_from_slice(code.zones());
    WeightedDualGraph::from_vertices(vertices)
}

/// The six pattern graphs of 1-inductively pierced diagrams of depth at most
/// one, each with the indispensable binomial it induces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternGraph {
    pub id: u8,
    pub name: String,
    /// The local code whose dual graph is the pattern.
    pub code: Code,
    pub graph: WeightedDualGraph,
    /// Binomial over the zones of `code`.
    pub template: Binomial,
    /// Types 4 to 6 are listed with one and the same binomial text.
    pub shared_binomial_text: bool,
}

impl PatternGraph {
    /// Builds a pattern from its local code and binomial text.
    pub fn new(id: u8, name: &str, words: &[&str], template: &str, shared_binomial_text: bool) -> Result<Self> {
        let code = Code::parse_lines(words)?;
        let template = parse_binomial(&code, template)?;
        code_matrix(&code)?.validate(&template)?;
        let graph = dual_graph(&code);
        Ok(PatternGraph { id, name: name.into(), code, graph, template, shared_binomial_text })
    }
}

/// Local codes of the six pattern types.
///
/// Type 1: two crossing curves. Type 2: curve 2 crossing 1, curve 3 inside 1
/// crossing 2. Type 3: curves 2 and 3 inside 1, crossing each other. Type 4:
/// a chain 2, 3, 4 of crossing curves inside curve 1. Types 5 and 6 share
/// the binomial of type 4; every weight-5 indispensable binomial of a
/// depth-1 code sits in the type-4 configuration, so they share its local
/// code as well.
pub const PATTERN_SOURCES: [(u8, &str, &[&str], &str); 6] = [
    (1, "lozenge", &["00", "10", "01", "11"], "t{1} t{2} - t{1,2}"),
    (2, "domino", &["000", "100", "010", "110", "101", "111"], "t{2} t{1,3} - t{1,2,3}"),
    (3, "lollipop", &["000", "100", "110", "101", "111"], "t{1,2} t{1,3} - t{1} t{1,2,3}"),
    (
        4,
        "flower",
        &["0000", "1000", "1100", "1010", "1001", "1110", "1011"],
        "t{1,2,3} t{1,4} - t{1,2} t{1,3,4}",
    ),
    (
        5,
        "flower",
        &["0000", "1000", "1100", "1010", "1001", "1110", "1011"],
        "t{1,2,3} t{1,4} - t{1,2} t{1,3,4}",
    ),
    (
        6,
        "flower",
        &["0000", "1000", "1100", "1010", "1001", "1110", "1011"],
        "t{1,2,3} t{1,4} - t{1,2} t{1,3,4}",
    ),
];

/// The built-in pattern library.
pub fn patterns() -> Vec<PatternGraph> {
    PATTERN_SOURCES
        .iter()
        .map(|&(id, name, words, template)| {
            PatternGraph::new(id, name, words, template, id >= 4).expect("built-in pattern is consistent")
        })
        .collect()
}

/// All injective maps from pattern vertices to graph vertices that keep
/// weights and send edges to edges. `map[p]` is the image of pattern vertex `p`.
pub fn find_embeddings(pattern: &WeightedDualGraph, g: &WeightedDualGraph) -> Vec<Vec<usize>> {
    let k = pattern.vertices.len();
    if k > g.vertices.len() {
        return Vec::new();
    }
    // visit pattern vertices so that each one after the first has a mapped neighbour when possible
    let mut order = Vec::with_capacity(k);
    let mut seen = vec![false; k];
    for start in 0..k {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        order.push(start);
        let mut i = order.len() - 1;
        while i < order.len() {
            for &v in pattern.neighbors(order[i]) {
                if !seen[v] {
                    seen[v] = true;
                    order.push(v);
                }
            }
            i += 1;
        }
    }
    let mut buckets: Vec<Vec<usize>> = Vec::new();
    for (v, w) in g.vertices.iter().enumerate() {
        let wt = w.weight();
        if buckets.len() <= wt {
            buckets.resize(wt + 1, Vec::new());
        }
        buckets[wt].push(v);
    }
    let mut out = Vec::new();
    let mut map = vec![usize::MAX; k];
    let mut used = vec![false; g.vertices.len()];
    extend(pattern, g, &order, 0, &buckets, &mut map, &mut used, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn extend(
    p: &WeightedDualGraph,
    g: &WeightedDualGraph,
    order: &[usize],
    depth: usize,
    buckets: &[Vec<usize>],
    map: &mut [usize],
    used: &mut [bool],
    out: &mut Vec<Vec<usize>>,
) {
    if depth == order.len() {
        out.push(map.to_vec());
        return;
    }
    let v = order[depth];
    let Some(cands) = buckets.get(p.weight(v)) else {
        return;
    };
    for &c in cands {
        if used[c] {
            continue;
        }
        let fits = p.neighbors(v).iter().all(|&u| map[u] == usize::MAX || g.has_edge(map[u], c));
        if !fits {
            continue;
        }
        map[v] = c;
        used[c] = true;
        extend(p, g, order, depth + 1, buckets, map, used, out);
        used[c] = false;
        map[v] = usize::MAX;
    }
}

/// The pattern's binomial with each local zone replaced by its image zone.
pub fn induced_binomial(pattern: &PatternGraph, embedding: &[usize], g: &WeightedDualGraph, code: &Code) -> Result<Binomial> {
    let m = code.num_vars();
    let image_var = |local: usize| -> Result<usize> {
        let w = pattern.code.zones()[local];
        let pv = pattern.graph.vertex_of(&w).expect("zone is a pattern vertex");
        let target = g.vertices()[embedding[pv]];
        code.var_index(&target)
            .ok_or_else(|| Error::Inconsistent(alloc::format!("pattern zone {w} maps to {target}, not a zone")))
    };
    let term = |t: &ExponentVector| -> Result<ExponentVector> {
        let mut e = vec![0u32; m];
        for (i, x) in t.iter_nonzero() {
            e[image_var(i)?] += x;
        }
        Ok(ExponentVector::from_exponents(e))
    };
    let plus = term(pattern.template.plus())?;
    let minus = term(pattern.template.minus())?;
    let b = Binomial::new(plus, minus).map_err(|_| Error::Inconsistent("induced binomial is degenerate".into()))?;
    if !b.in_kernel(code_matrix(code)?.matrix()) {
        return Err(Error::Inconsistent(alloc::format!("pattern type {} induces a binomial outside the ideal", pattern.id)));
    }
    Ok(b)
}

/// The image of an embedding spans a sub-cube of neurons; the embedding is
/// local when the code has no other words inside that sub-cube.
pub fn embedding_is_local(embedding: &[usize], g: &WeightedDualGraph, code: &Code) -> bool {
    let image: BTreeSet<u64> = embedding.iter().map(|&v| g.vertices()[v].bits()).collect();
    let mask = image.iter().fold(0, |acc, b| acc | b);
    code.restricted_to(mask).iter().all(|w| image.contains(&w.bits()))
}

/// Indispensable binomials predicted by pattern embeddings, sign-normalized
/// and sorted. Only local embeddings (see [`embedding_is_local`]) count.
pub fn depth1_indispensables(code: &Code) -> Result<Vec<Binomial>> {
    let g = dual_graph(code);
    let mut out = BTreeSet::new();
    if code.num_vars() == 0 {
        return Ok(Vec::new());
    }
    for p in patterns() {
        for e in find_embeddings(&p.graph, &g) {
            if embedding_is_local(&e, &g, code) {
                out.insert(induced_binomial(&p, &e, &g, code)?.normalized());
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// One step of an inductive piercing construction, neurons 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Piercing {
    /// `curve` is added inside the zone `zone` without crossing any curve.
    Zero { curve: usize, zone: u64 },
    /// `curve` crosses `crossed` only, inside zones `zone` and `zone + e_crossed`.
    One { curve: usize, crossed: usize, zone: u64 },
}

impl Piercing {
    pub fn curve(&self) -> usize {
        match *self {
            Piercing::Zero { curve, .. } | Piercing::One { curve, .. } => curve,
        }
    }
}

/// A sequence of 0- and 1-piercings, each added inside a zone of weight at
/// most `max_depth`, that builds exactly `code`; `None` if there is none.
/// With `allow_one = false` only 0-piercings are used.
pub fn piercing_sequence(code: &Code, max_depth: usize, allow_one: bool) -> Option<Vec<Piercing>> {
    let n = code.n();
    if !code.contains_zero() || n > 20 {
        return None;
    }
    let words: Vec<u64> = code.words().iter().map(Codeword::bits).collect();
    let mut memo: Vec<Option<Option<Piercing>>> = vec![None; 1 << n];
    let full = (1u64 << n) - 1;
    if !buildable(full, &words, max_depth, allow_one, &mut memo) {
        return None;
    }
    let mut seq = Vec::new();
    let mut r = full;
    while r != 0 {
        let step = memo[r as usize].flatten().expect("buildable state has a step");
        seq.push(step);
        r &= !(1 << step.curve());
    }
    seq.reverse();
    Some(seq)
}

fn buildable(r: u64, words: &[u64], max_depth: usize, allow_one: bool, memo: &mut [Option<Option<Piercing>>]) -> bool {
    if r == 0 {
        return true;
    }
    if let Some(done) = memo[r as usize] {
        return done.is_some();
    }
    let inside = |w: u64| w & !r == 0;
    let present = |w: u64| words.contains(&w);
    let mut found = None;
    for k in (0..64).filter(|&k| r >> k & 1 == 1) {
        let bit = 1u64 << k;
        let with_k: Vec<u64> = words.iter().copied().filter(|&w| inside(w) && w & bit != 0).map(|w| w & !bit).collect();
        let step = match with_k[..] {
            [w] if present(w) && (w.count_ones() as usize) <= max_depth => Some(Piercing::Zero { curve: k, zone: w }),
            [a, b] if allow_one => {
                let (w, wj) = if a.count_ones() < b.count_ones() { (a, b) } else { (b, a) };
                let j = wj & !w;
                let ok = wj & w == w
                    && j.count_ones() == 1
                    && present(w)
                    && present(wj)
                    && (w.count_ones() as usize) <= max_depth;
                ok.then(|| Piercing::One { curve: k, crossed: j.trailing_zeros() as usize, zone: w })
            }
            _ => None,
        };
        if let Some(step) = step {
            if buildable(r & !bit, words, max_depth, allow_one, memo) {
                found = Some(step);
                break;
            }
        }
    }
    memo[r as usize] = Some(found);
    found.is_some()
}

/// Every code on `n` neurons built by 0- and 1-piercings inside zones of
/// weight at most `max_depth` (curves added in the order `0, 1, ..., n-1`),
/// sorted and deduplicated.
pub fn pierced_codes(n: usize, max_depth: usize, allow_one: bool) -> Vec<Code> {
    let mut out = BTreeSet::new();
    grow(vec![0u64], 0, n, max_depth, allow_one, &mut out);
    out.into_iter()
        .map(|ws: Vec<u64>| Code::new(n, ws.into_iter().map(|b| Codeword::from_bits(n, b))).expect("valid words"))
        .collect()
}

fn grow(words: Vec<u64>, k: usize, n: usize, max_depth: usize, allow_one: bool, out: &mut BTreeSet<Vec<u64>>) {
    if k == n {
        let mut ws = words;
        ws.sort_unstable();
        out.insert(ws);
        return;
    }
    let bit = 1u64 << k;
    for &w in &words {
        if w.count_ones() as usize > max_depth {
            continue;
        }
        let mut next = words.clone();
        next.push(w | bit);
        grow(next, k + 1, n, max_depth, allow_one, out);
        if !allow_one {
            continue;
        }
        for j in (0..k).filter(|&j| w >> j & 1 == 0) {
            if words.contains(&(w | 1 << j)) {
                let mut next = words.clone();
                next.push(w | bit);
                next.push(w | bit | 1 << j);
                grow(next, k + 1, n, max_depth, allow_one, out);
            }
        }
    }
}

/// Graph on the neurons with an edge `{i, j}` whenever `e_i + e_j` is a codeword.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    degrees: Vec<usize>,
}

impl DeltaGraph {
    /// Builds the graph from 0-based edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut set = BTreeSet::new();
        for &(a, b) in edges {
            if a == b || a >= n || b >= n {
                return Err(Error::domain(alloc::format!("bad edge ({a}, {b}) on {n} vertices")));
            }
            set.insert((a.min(b), a.max(b)));
        }
        let mut degrees = vec![0; n];
        for &(a, b) in &set {
            degrees[a] += 1;
            degrees[b] += 1;
        }
        Ok(DeltaGraph { n, edges: set, degrees })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for (u, s) in seen.iter_mut().enumerate() {
                if !*s && self.has_edge(u, v) {
                    *s = true;
                    stack.push(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// `Ok` for trees; otherwise the failed property.
    pub fn check_tree(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::domain("graph has no vertices"));
        }
        if self.edges.len() + 1 != self.n {
            return Err(Error::domain(alloc::format!(
                "not a tree: {} edges on {} vertices",
                self.edges.len(),
                self.n
            )));
        }
        if !self.is_connected() {
            return Err(Error::domain("not a tree: graph is disconnected"));
        }
        Ok(())
    }
}

pub fn delta_graph(code: &Code) -> DeltaGraph {
    let n = code.n();
    let edges: Vec<(usize, usize)> =
        code.zones().iter().filter(|w| w.weight() == 2).map(|w| (w.support()[0], w.support()[1])).collect();
    DeltaGraph::from_edges(n, &edges).expect("weight-two words give valid edges")
}

/// `Σ_v C(d(v), 2)` for a tree.
pub fn expected_quadratic_count(dg: &DeltaGraph) -> Result<u64> {
    dg.check_tree()?;
    Ok(dg.degrees().iter().map(|&d| (d * d.saturating_sub(1) / 2) as u64).sum())
}

/// Triples `(i, k, j)` with `i < j` and `k` adjacent to both, sorted.
pub fn distance_two_partners(dg: &DeltaGraph) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..dg.n {
        for j in i + 1..dg.n {
            for k in 0..dg.n {
                if k != i && k != j && dg.has_edge(i, k) && dg.has_edge(j, k) {
                    out.push((i, k, j));
                }
            }
        }
    }
    out
}

/// External code with one weight-two word per edge of a graph on `n` vertices
/// (0-based edges).
pub fn external_graph_code(n: usize, edges: &[(usize, usize)]) -> Result<Code> {
    let mut words = vec![Codeword::zero(n)];
    words.extend((0..n).map(|i| Codeword::unit(n, i)));
    for &(a, b) in edges {
        if a == b || a >= n || b >= n {
            return Err(Error::domain(alloc::format!("bad edge ({a}, {b}) on {n} vertices")));
        }
        words.push(Codeword::from_support(n, &[a, b]));
    }
    Code::new(n, words)
}
