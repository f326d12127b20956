//! Figures for chains and equal-edge cycles.
//!
//! DOT output is byte-stable: nodes appear in the structure's own order
//! (canonical order for cycles), edges follow consecutive vertices and, for
//! cycles, close back to the first one. TikZ output is a convenience with no
//! stability guarantee.

use std::f64::consts::PI;
use std::fmt::Write;

use crate::explorer::{Chain, EqualEdgeCycle};

fn render_dot(name: &str, vertices: &[u64], edge_value: u64, closed: bool) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "graph {name} {{");
    let _ = writeln!(s, "  node [shape=circle];");
    for v in vertices {
        let _ = writeln!(s, "  n{v} [label=\"{v}\"];");
    }
    let n = vertices.len();
    let edges = if closed { n } else { n.saturating_sub(1) };
    for i in 0..edges {
        let (a, b) = (vertices[i], vertices[(i + 1) % n]);
        let _ = writeln!(s, "  n{a} -- n{b} [label=\"{edge_value}\"];");
    }
    s.push_str("}\n");
    s
}

pub fn chain_to_dot(chain: &Chain) -> String {
    render_dot("chain", &chain.values(), chain.edge_value.get(), false)
}

pub fn cycle_to_dot(cycle: &EqualEdgeCycle) -> String {
    render_dot("cycle", &cycle.values(), cycle.edge_value.get(), true)
}

/// One `graph` block per cycle, in list order.
pub fn cycles_to_dot(cycles: &[EqualEdgeCycle]) -> String {
    cycles.iter().map(cycle_to_dot).collect()
}

fn render_tikz(vertices: &[u64], edge_value: u64, closed: bool) -> String {
    let n = vertices.len();
    let mut s = String::from("\\begin{tikzpicture}[auto,thick]\n");
    for (i, v) in vertices.iter().enumerate() {
        let (x, y) = if closed {
            let angle = PI / 2.0 - 2.0 * PI * i as f64 / n as f64;
            (2.5 * angle.cos(), 2.5 * angle.sin())
        } else {
            (2.5 * i as f64, 0.0)
        };
        let _ = writeln!(
            s,
            "  \\node[draw,circle] (n{v}) at ({x:.3},{y:.3}) {{${v}$}};"
        );
    }
    s.push_str("  \\path[-]\n");
    let edges = if closed { n } else { n.saturating_sub(1) };
    for i in 0..edges {
        let (a, b) = (vertices[i], vertices[(i + 1) % n]);
        let _ = writeln!(s, "    (n{a}) edge node {{{edge_value}}} (n{b})");
    }
    s.push_str("  ;\n\\end{tikzpicture}\n");
    s
}

pub fn chain_to_tikz(chain: &Chain) -> String {
    render_tikz(&chain.values(), chain.edge_value.get(), false)
}

pub fn cycle_to_tikz(cycle: &EqualEdgeCycle) -> String {
    render_tikz(&cycle.values(), cycle.edge_value.get(), true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carrier::PrimeLoop;

    #[test]
    fn rhombus() {
        let lp = PrimeLoop::new();
        let c = EqualEdgeCycle::from_vertices(&lp, &[101, 7, 103, 11]).unwrap();
        assert_eq!(
            cycle_to_dot(&c),
            "graph cycle {\n  node [shape=circle];\n  n7 [label=\"7\"];\n  n101 [label=\"101\"];\n  \
             n11 [label=\"11\"];\n  n103 [label=\"103\"];\n  n7 -- n101 [label=\"97\"];\n  \
             n101 -- n11 [label=\"97\"];\n  n11 -- n103 [label=\"97\"];\n  n103 -- n7 [label=\"97\"];\n}\n"
        );
    }

    #[test]
    fn paths() {
        let lp = PrimeLoop::new();
        let c = Chain::from_elements(&lp, &[41, 47, 53, 59]).unwrap();
        let dot = chain_to_dot(&c);
        assert_eq!(dot.matches(" -- ").count(), 3);
        assert_eq!(dot.matches("[label=\"7\"]").count(), 3);
        let c = Chain::from_elements(&lp, &[3, 5]).unwrap();
        assert_eq!(
            chain_to_dot(&c),
            "graph chain {\n  node [shape=circle];\n  n3 [label=\"3\"];\n  n5 [label=\"5\"];\n  n3 -- n5 [label=\"3\"];\n}\n"
        );
        let tikz = chain_to_tikz(&c);
        assert!(tikz.starts_with("\\begin{tikzpicture}"));
        assert!(tikz.contains("(n3) edge node {3} (n5)"));
    }
}
