//! Checkerboard (Tait) graphs of a link diagram, their simplifications,
//! and the graph statistics entering the extreme-coefficient formulas.
//!
//! The faces of a connected diagram two-color with the unbounded face
//! unshaded; `G` is the shaded-class graph and `Ḡ` the unshaded one.
//! Each crossing contributes one edge to each graph. An edge is an
//! A-edge when the shaded corners at its crossing are the regions swept
//! by rotating the under-strand counterclockwise onto the over-strand,
//! which at the PD slot level are the corners (slot 0, slot 1) and
//! (slot 2, slot 3).

use std::fmt::Write as _;

use serde::Serialize;

use crate::diagram::{checkerboard_colors, FaceSet, LinkDiagram};
use crate::error::Error;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum EdgeKind {
    A,
    B,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaitEdge {
    pub v1: usize,
    pub v2: usize,
    pub crossing: usize,
    pub kind: EdgeKind,
}

/// One checkerboard graph: vertices are the faces of one shading class,
/// edges are the crossings.
#[derive(Clone, Debug)]
pub struct TaitGraph {
    /// face index backing each vertex, increasing.
    pub vertices: Vec<usize>,
    /// one edge per crossing, in crossing order.
    pub edges: Vec<TaitEdge>,
    pub dealternator_edge: Option<usize>,
}

impl TaitGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_loop(&self) -> bool {
        self.edges.iter().any(|e| e.v1 == e.v2)
    }

    /// All edges carry one label, ignoring a marked dealternator.
    pub fn is_monochrome(&self, kind: EdgeKind) -> bool {
        self.edges
            .iter()
            .filter(|e| Some(e.crossing) != self.dealternator_edge)
            .all(|e| e.kind == kind)
    }

    /// Endpoints of the edge for a crossing id.
    pub fn edge_for_crossing(&self, crossing: usize) -> Option<&TaitEdge> {
        self.edges.iter().find(|e| e.crossing == crossing)
    }

    pub fn with_dealternator(mut self, crossing: usize) -> Self {
        debug_assert!(self.edge_for_crossing(crossing).is_some());
        self.dealternator_edge = Some(crossing);
        self
    }

    /// Deterministic adjacency-list dump used by golden tests: one line
    /// per vertex, incident edges sorted by crossing id, `*` marking the
    /// dealternator.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for v in 0..self.vertices.len() {
            let _ = write!(out, "v{v}:");
            let mut incident: Vec<&TaitEdge> = self
                .edges
                .iter()
                .filter(|e| e.v1 == v || e.v2 == v)
                .collect();
            incident.sort_by_key(|e| e.crossing);
            for e in incident {
                let other = if e.v1 == v { e.v2 } else { e.v1 };
                let star = if Some(e.crossing) == self.dealternator_edge { "*" } else { "" };
                let kind = match e.kind {
                    EdgeKind::A => "A",
                    EdgeKind::B => "B",
                };
                if e.v1 == e.v2 {
                    let _ = write!(out, " v{other}[c{} {kind}{star} loop]", e.crossing);
                } else {
                    let _ = write!(out, " v{other}[c{} {kind}{star}]", e.crossing);
                }
            }
            out.push('\n');
        }
        out
    }
}

/// Loop-free simple graph with parallel-edge multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplifiedGraph {
    pub vertex_count: usize,
    pub edges: Vec<SimpleEdge>,
    pub loops_removed: usize,
    /// index into `edges` of the edge carrying a marked dealternator.
    pub dealternator: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleEdge {
    pub v1: usize,
    pub v2: usize,
    pub multiplicity: usize,
    pub crossings: Vec<usize>,
}

/// Vertex/edge counts of a simplification together with the multiplicity,
/// triangle and circuit-rank statistics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GraphStats {
    pub v: i64,
    pub e: i64,
    pub mu: i64,
    pub tau: i64,
    pub beta1: i64,
}

/// Counts of short paths and K4 subgraphs relative to a marked vertex
/// pair, computed on the simplification (each simple edge counts once).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[allow(non_snake_case)]
pub struct AAPathStats {
    pub P: i64,
    pub P0: i64,
    pub P1: i64,
    pub P2: i64,
    pub Q: i64,
    pub S: i64,
}

/// The two checkerboard graphs `(G, Ḡ)`: `G` is the shaded class (the
/// unbounded face is unshaded).
pub fn tait_graphs(d: &LinkDiagram) -> Result<(TaitGraph, TaitGraph), Error> {
    if d.crossing_count() == 0 {
        return Err(Error::NotApplicable("checkerboard graphs need at least one crossing".into()));
    }
    let faces = d.faces()?;
    let colors = checkerboard_colors(d, &faces);
    Ok((build_class(d, &faces, &colors, true), build_class(d, &faces, &colors, false)))
}

fn build_class(d: &LinkDiagram, faces: &FaceSet, colors: &[bool], class: bool) -> TaitGraph {
    let mut vid = vec![usize::MAX; colors.len()];
    let mut vertices = Vec::new();
    for (f, &c) in colors.iter().enumerate() {
        if c == class {
            vid[f] = vertices.len();
            vertices.push(f);
        }
    }
    let mut edges = Vec::with_capacity(d.crossing_count());
    for x in 0..d.crossing_count() {
        // corners (0,2) are the A-pair; whichever pair is in this class
        // gives the edge and its label
        let (k1, k2, kind) = if colors[faces.corner_face(x, 0)] == class {
            (0, 2, EdgeKind::A)
        } else {
            (1, 3, EdgeKind::B)
        };
        debug_assert_eq!(colors[faces.corner_face(x, k2)], class);
        edges.push(TaitEdge {
            v1: vid[faces.corner_face(x, k1)],
            v2: vid[faces.corner_face(x, k2)],
            crossing: x,
            kind,
        });
    }
    TaitGraph { vertices, edges, dealternator_edge: None }
}

/// Deletes loops and merges parallel edges, recording multiplicities.
pub fn simplify(g: &TaitGraph) -> SimplifiedGraph {
    let mut edges: Vec<SimpleEdge> = Vec::new();
    let mut loops_removed = 0;
    for e in &g.edges {
        if e.v1 == e.v2 {
            loops_removed += 1;
            continue;
        }
        let (a, b) = if e.v1 < e.v2 { (e.v1, e.v2) } else { (e.v2, e.v1) };
        match edges.iter_mut().find(|s| s.v1 == a && s.v2 == b) {
            Some(s) => {
                s.multiplicity += 1;
                s.crossings.push(e.crossing);
            }
            None => edges.push(SimpleEdge { v1: a, v2: b, multiplicity: 1, crossings: vec![e.crossing] }),
        }
    }
    edges.sort_by_key(|e| (e.v1, e.v2));
    let dealternator = g.dealternator_edge.and_then(|x| {
        edges.iter().position(|e| e.crossings.contains(&x))
    });
    SimplifiedGraph { vertex_count: g.vertex_count(), edges, loops_removed, dealternator }
}

impl SimplifiedGraph {
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn multiplicity(&self, a: usize, b: usize) -> usize {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        self.edges
            .iter()
            .find(|e| e.v1 == a && e.v2 == b)
            .map(|e| e.multiplicity)
            .unwrap_or(0)
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.multiplicity(a, b) > 0
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|e| {
                if e.v1 == v {
                    Some(e.v2)
                } else if e.v2 == v {
                    Some(e.v1)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|b| b)
    }
}

/// v, e, μ, τ and β₁ of a connected simplification. Triangles are counted
/// by exhaustive enumeration of vertex triples.
pub fn graph_stats(g: &SimplifiedGraph) -> Result<GraphStats, Error> {
    if !g.is_connected() {
        return Err(Error::Split);
    }
    let v = g.vertex_count as i64;
    let e = g.edges.len() as i64;
    let mu = g.edges.iter().filter(|s| s.multiplicity >= 2).count() as i64;
    let mut tau = 0i64;
    for i in 0..g.vertex_count {
        for j in i + 1..g.vertex_count {
            if !g.adjacent(i, j) {
                continue;
            }
            for k in j + 1..g.vertex_count {
                if g.adjacent(i, k) && g.adjacent(j, k) {
                    tau += 1;
                }
            }
        }
    }
    Ok(GraphStats { v, e, mu, tau, beta1: e - v + 1 })
}

/// Path and K4 statistics relative to a marked pair, on the
/// simplification including any dealternator edge.
pub fn aa_path_stats(g: &SimplifiedGraph, x1: usize, x2: usize) -> Result<AAPathStats, Error> {
    if x1 == x2 || x1 >= g.vertex_count || x2 >= g.vertex_count {
        return Err(Error::IndexOutOfRange { index: x1.max(x2), len: g.vertex_count });
    }
    let mut p = [0i64; 3];
    let mut q = 0i64;
    let mut s = 0i64;
    let others: Vec<usize> = (0..g.vertex_count).filter(|&v| v != x1 && v != x2).collect();

    // paths of length two, refined by how many edges are multiple
    for &m in &others {
        let m1 = g.multiplicity(x1, m);
        let m2 = g.multiplicity(m, x2);
        if m1 > 0 && m2 > 0 {
            let i = (m1 >= 2) as usize + (m2 >= 2) as usize;
            p[i] += 1;
        }
    }

    // paths of length three with no interior vertex adjacent to both marks
    for &a in &others {
        if !g.adjacent(x1, a) || g.adjacent(a, x2) {
            continue;
        }
        for &b in &others {
            if b == a || !g.adjacent(a, b) || !g.adjacent(b, x2) || g.adjacent(b, x1) {
                continue;
            }
            q += 1;
        }
    }

    // K4 subgraphs on {x1, x2, a, b}
    if g.adjacent(x1, x2) {
        for (i, &a) in others.iter().enumerate() {
            if !g.adjacent(x1, a) || !g.adjacent(x2, a) {
                continue;
            }
            for &b in &others[i + 1..] {
                if g.adjacent(x1, b) && g.adjacent(x2, b) && g.adjacent(a, b) {
                    s += 1;
                }
            }
        }
    }

    Ok(AAPathStats { P: p[0] + p[1] + p[2], P0: p[0], P1: p[1], P2: p[2], Q: q, S: s })
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";

    fn pd(s: &str) -> LinkDiagram {
        LinkDiagram::parse_pd(s).unwrap()
    }

    #[test]
    fn trefoil_tait_graphs() {
        let d = pd(TREFOIL);
        let (g, gbar) = tait_graphs(&d).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(gbar.edge_count(), 3);
        assert_eq!(g.vertex_count() + gbar.vertex_count(), 5);
        // one side is a 3-cycle, the other two vertices with 3 parallel edges
        let (tri, par) = if g.vertex_count() == 3 { (&g, &gbar) } else { (&gbar, &g) };
        assert_eq!(tri.vertex_count(), 3);
        assert_eq!(par.vertex_count(), 2);
        let tri_s = simplify(tri);
        let par_s = simplify(par);
        assert_eq!(graph_stats(&tri_s).unwrap(), GraphStats { v: 3, e: 3, mu: 0, tau: 1, beta1: 1 });
        assert_eq!(graph_stats(&par_s).unwrap(), GraphStats { v: 2, e: 1, mu: 1, tau: 0, beta1: 0 });
        // alternating: one graph all A-edges, the other all B-edges
        let a_side = if tri.is_monochrome(EdgeKind::A) { tri } else { par };
        let b_side = if std::ptr::eq(a_side, tri) { par } else { tri };
        assert!(a_side.is_monochrome(EdgeKind::A));
        assert!(b_side.is_monochrome(EdgeKind::B));
        // the all-A side of this trefoil is the triangle (s_A = 3 loops)
        assert_eq!(a_side.vertex_count(), 3);
    }

    #[test]
    fn vertex_counts_satisfy_euler() {
        for s in [TREFOIL, "X[1,1,2,2]"] {
            let d = pd(s);
            let (g, gbar) = tait_graphs(&d).unwrap();
            assert_eq!(g.vertex_count() + gbar.vertex_count(), d.crossing_count() + 2);
        }
    }

    #[test]
    fn kink_has_loop_edge() {
        let (g, gbar) = tait_graphs(&pd("X[1,1,2,2]")).unwrap();
        assert!(g.has_loop() || gbar.has_loop());
        let looped = if g.has_loop() { &g } else { &gbar };
        let s = simplify(looped);
        assert_eq!(s.loops_removed, 1);
        assert!(s.edges.is_empty());
    }

    #[test]
    fn simplify_merges_parallel_edges() {
        let g = TaitGraph {
            vertices: vec![0, 1],
            edges: (0..3)
                .map(|x| TaitEdge { v1: 0, v2: 1, crossing: x, kind: EdgeKind::A })
                .collect(),
            dealternator_edge: None,
        };
        let s = simplify(&g);
        assert_eq!(s.edges.len(), 1);
        assert_eq!(s.edges[0].multiplicity, 3);
        assert_eq!(s.loops_removed, 0);
        let stats = graph_stats(&s).unwrap();
        assert_eq!(stats, GraphStats { v: 2, e: 1, mu: 1, tau: 0, beta1: 0 });
    }

    #[test]
    fn simplify_is_identity_on_simple_graphs() {
        let d = pd(TREFOIL);
        let (g, gbar) = tait_graphs(&d).unwrap();
        let tri = if g.vertex_count() == 3 { g } else { gbar };
        let s = simplify(&tri);
        assert_eq!(s.loops_removed, 0);
        assert!(s.edges.iter().all(|e| e.multiplicity == 1));
    }

    #[test]
    fn path_stats_on_bare_edge() {
        // two vertices joined by one edge: all six counts vanish
        let g = TaitGraph {
            vertices: vec![0, 1],
            edges: vec![TaitEdge { v1: 0, v2: 1, crossing: 0, kind: EdgeKind::A }],
            dealternator_edge: None,
        };
        let s = simplify(&g);
        let st = aa_path_stats(&s, 0, 1).unwrap();
        assert_eq!(st, AAPathStats { P: 0, P0: 0, P1: 0, P2: 0, Q: 0, S: 0 });
        assert!(matches!(aa_path_stats(&s, 0, 0), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn dump_is_deterministic() {
        let d = pd(TREFOIL);
        let (g, _) = tait_graphs(&d).unwrap();
        let dump = g.dump();
        assert_eq!(dump.lines().count(), g.vertex_count());
        let (g2, _) = tait_graphs(&pd(TREFOIL)).unwrap();
        assert_eq!(g2.dump(), dump);
    }
}
