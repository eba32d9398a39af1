//! Edge-list export of dual graphs.

use std::fmt::Write as _;

use toric_codes_core::graph::WeightedDualGraph;

/// `# vertex <word> <weight>` comment lines, then one `<word> <word> <weight>`
/// line per edge, where the weight is the larger of the two endpoint
/// weights (the layer the edge climbs into).
pub fn edge_list(g: &WeightedDualGraph) -> String {
    let mut s = String::new();
    let edges = g.edges();
    writeln!(s, "# dual graph: {} vertices, {} edges", g.vertices().len(), edges.len()).unwrap();
    for (v, w) in g.vertices().iter().enumerate() {
        writeln!(s, "# vertex {w} {}", g.weight(v)).unwrap();
    }
    writeln!(s, "# source target weight").unwrap();
    for (u, v) in edges {
        let (a, b) = (g.vertices()[u], g.vertices()[v]);
        writeln!(s, "{a} {b} {}", g.weight(u).max(g.weight(v))).unwrap();
    }
    s
}
