//! Plane multigraphs with explicit rotation systems, and the medial
//! construction that turns one into an alternating link diagram.
//!
//! The medial places one crossing on every edge. Walking counterclockwise
//! around a vertex, consecutive darts contribute the connecting arcs, so
//! the diagram's shaded regions of one class are exactly the graph's
//! vertices and every crossing is an A-edge of that class. Flipping
//! chosen crossings afterwards yields almost alternating (or arbitrary)
//! diagrams with prescribed checkerboard graphs.
//!
//! Random growth by edge subdivision, parallel doubling and face chords
//! preserves connectivity, looplessness and bridgelessness, so the
//! resulting medials are reduced alternating diagrams.

use rand::Rng;

use crate::diagram::{Crossing, LinkDiagram};
use crate::error::Error;

/// A dart is one end of an edge: (edge id, end 0|1).
pub type Dart = (usize, u8);

#[derive(Clone, Debug)]
pub struct PlaneGraph {
    /// vertex -> counterclockwise cyclic list of incident darts.
    rotations: Vec<Vec<Dart>>,
    /// edge -> endpoint vertices of (end 0, end 1).
    endpoints: Vec<(usize, usize)>,
}

impl PlaneGraph {
    /// A cycle on `n ≥ 2` vertices (for `n = 2`, a doubled edge).
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 2);
        let endpoints = (0..n).map(|i| (i, (i + 1) % n)).collect();
        let rotations = (0..n)
            .map(|i| vec![(i, 0u8), ((i + n - 1) % n, 1u8)])
            .collect();
        let g = Self { rotations, endpoints };
        g.assert_planar();
        g
    }

    /// Builds from explicit rotations; endpoints are inferred.
    pub fn from_rotations(rotations: Vec<Vec<Dart>>) -> Result<Self, Error> {
        let mut ends: Vec<[Option<usize>; 2]> = Vec::new();
        for (v, rot) in rotations.iter().enumerate() {
            for &(e, end) in rot {
                if ends.len() <= e {
                    ends.resize(e + 1, [None, None]);
                }
                if ends[e][end as usize].is_some() {
                    return Err(Error::Param(format!("dart ({e},{end}) listed twice")));
                }
                ends[e][end as usize] = Some(v);
            }
        }
        let mut endpoints = Vec::with_capacity(ends.len());
        for (e, pair) in ends.iter().enumerate() {
            match (pair[0], pair[1]) {
                (Some(a), Some(b)) => endpoints.push((a, b)),
                _ => return Err(Error::Param(format!("edge {e} is missing an end"))),
            }
        }
        let g = Self { rotations, endpoints };
        g.assert_planar();
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.endpoints.len()
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.endpoints[e]
    }

    fn dart_vertex(&self, d: Dart) -> usize {
        let (a, b) = self.endpoints[d.0];
        if d.1 == 0 {
            a
        } else {
            b
        }
    }

    fn dart_position(&self, d: Dart) -> usize {
        let v = self.dart_vertex(d);
        self.rotations[v]
            .iter()
            .position(|&x| x == d)
            .expect("dart present in its vertex rotation")
    }

    /// Faces as dart orbits: from a dart arriving at a vertex, leave along
    /// the next dart counterclockwise.
    pub fn faces(&self) -> Vec<Vec<Dart>> {
        let mut seen: Vec<[bool; 2]> = vec![[false; 2]; self.edge_count()];
        let mut faces = Vec::new();
        for e in 0..self.edge_count() {
            for end in 0..2u8 {
                if seen[e][end as usize] {
                    continue;
                }
                let start = (e, end);
                let mut orbit = Vec::new();
                let mut d = start;
                loop {
                    seen[d.0][d.1 as usize] = true;
                    orbit.push(d);
                    // move to the head of d, then rotate counterclockwise
                    let head = (d.0, 1 - d.1);
                    let v = self.dart_vertex(head);
                    let p = self.dart_position(head);
                    let rot = &self.rotations[v];
                    d = rot[(p + 1) % rot.len()];
                    if d == start {
                        break;
                    }
                }
                faces.push(orbit);
            }
        }
        faces
    }

    fn assert_planar(&self) {
        let f = self.faces().len();
        let euler = self.vertex_count() as i64 - self.edge_count() as i64 + f as i64;
        assert_eq!(euler, 2, "rotation system is not planar");
    }

    pub fn is_loopless(&self) -> bool {
        self.endpoints.iter().all(|&(a, b)| a != b)
    }

    pub fn has_bridge(&self) -> bool {
        // an edge is a bridge iff both its darts lie on the same face
        let faces = self.faces();
        let mut face_of: Vec<[usize; 2]> = vec![[0; 2]; self.edge_count()];
        for (i, orbit) in faces.iter().enumerate() {
            for &(e, end) in orbit {
                face_of[e][end as usize] = i;
            }
        }
        face_of.iter().any(|f| f[0] == f[1])
    }

    /// Splits edge `e` with a new degree-2 vertex.
    pub fn subdivide(&mut self, e: usize) {
        let (_, v) = self.endpoints[e];
        let w = self.rotations.len();
        let f = self.endpoints.len();
        // e keeps end 0; its end 1 moves to w; new edge f runs w -> v
        let p = self.dart_position((e, 1));
        self.rotations[v][p] = (f, 1);
        self.rotations.push(vec![(e, 1), (f, 0)]);
        self.endpoints[e].1 = w;
        self.endpoints.push((w, v));
        self.assert_planar();
    }

    /// Adds an edge parallel to `e`, bounding a bigon with it.
    pub fn add_parallel(&mut self, e: usize) {
        let (u, v) = self.endpoints[e];
        let f = self.endpoints.len();
        let pu = self.dart_position((e, 0));
        self.rotations[u].insert(pu + 1, (f, 0));
        let pv = self.dart_position((e, 1));
        self.rotations[v].insert(pv, (f, 1));
        self.endpoints.push((u, v));
        self.assert_planar();
    }

    /// Corners of every face: (face, list of (vertex, position)) where the
    /// corner sits after the rotation slot `position` of that vertex.
    pub fn face_corners(&self) -> Vec<Vec<(usize, usize)>> {
        self.faces()
            .iter()
            .map(|orbit| {
                orbit
                    .iter()
                    .map(|&d| {
                        let head = (d.0, 1 - d.1);
                        let v = self.dart_vertex(head);
                        (v, self.dart_position(head))
                    })
                    .collect()
            })
            .collect()
    }

    /// Adds a chord between two corners of one face. The corners must sit
    /// at distinct vertices.
    pub fn add_chord(&mut self, c1: (usize, usize), c2: (usize, usize)) {
        assert_ne!(c1.0, c2.0, "chord endpoints must be distinct vertices");
        let f = self.endpoints.len();
        self.rotations[c1.0].insert(c1.1 + 1, (f, 0));
        self.rotations[c2.0].insert(c2.1 + 1, (f, 1));
        self.endpoints.push((c1.0, c2.0));
        self.assert_planar();
    }

    /// The medial link diagram: one crossing per edge, every edge an
    /// A-edge of the vertex class. Crossing `i` sits on edge `i`.
    pub fn medial(&self) -> LinkDiagram {
        // corner ids double as arc ids
        let mut corner_id = Vec::with_capacity(self.vertex_count());
        let mut next = 0;
        for rot in &self.rotations {
            let ids: Vec<usize> = (0..rot.len()).map(|i| next + i).collect();
            next += rot.len();
            corner_id.push(ids);
        }
        let corner_after = |d: Dart| -> usize {
            let v = self.dart_vertex(d);
            let p = self.dart_position(d);
            corner_id[v][p]
        };
        let corner_before = |d: Dart| -> usize {
            let v = self.dart_vertex(d);
            let p = self.dart_position(d);
            let deg = self.rotations[v].len();
            corner_id[v][(p + deg - 1) % deg]
        };
        let crossings: Vec<Crossing> = (0..self.edge_count())
            .map(|e| {
                let d0 = (e, 0u8);
                let d1 = (e, 1u8);
                // slots [NE, NW, SW, SE] seen with end 0 south, end 1 north
                [corner_after(d1), corner_before(d1), corner_after(d0), corner_before(d0)]
            })
            .collect();
        LinkDiagram::from_tuples(crossings, 0).expect("medial of a plane graph is planar")
    }
}

/// Grows a random connected loopless bridgeless plane multigraph with
/// exactly `target_edges` edges. Its medial is a reduced alternating
/// connected diagram with that many crossings.
pub fn random_plane_graph<R: Rng>(rng: &mut R, target_edges: usize) -> PlaneGraph {
    assert!(target_edges >= 2);
    let seed = if target_edges >= 3 && rng.gen_bool(0.5) { 3 } else { 2 };
    let seed = seed.min(target_edges);
    let mut g = PlaneGraph::cycle(seed);
    while g.edge_count() < target_edges {
        match rng.gen_range(0..3) {
            0 => {
                let e = rng.gen_range(0..g.edge_count());
                g.subdivide(e);
            }
            1 => {
                let e = rng.gen_range(0..g.edge_count());
                g.add_parallel(e);
            }
            _ => {
                // chord across a random face, needs corners at two
                // distinct vertices
                let corners = g.face_corners();
                let f = rng.gen_range(0..corners.len());
                let face = &corners[f];
                let mut picks = Vec::new();
                for _ in 0..8 {
                    let i = rng.gen_range(0..face.len());
                    let j = rng.gen_range(0..face.len());
                    if face[i].0 != face[j].0 {
                        picks.push((face[i], face[j]));
                        break;
                    }
                }
                match picks.pop() {
                    Some((c1, c2)) => g.add_chord(c1, c2),
                    None => {
                        let e = rng.gen_range(0..g.edge_count());
                        g.add_parallel(e);
                    }
                }
            }
        }
    }
    debug_assert!(g.is_loopless());
    debug_assert!(!g.has_bridge());
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn cycle_medial_is_the_expected_small_diagram() {
        // the 2-cycle's medial is the standard 2-crossing Hopf diagram
        let g = PlaneGraph::cycle(2);
        let d = g.medial();
        assert_eq!(d.crossing_count(), 2);
        assert_eq!(d.component_count(), 2);
        assert!(d.is_alternating());
        assert!(d.is_reduced().unwrap());
        // the 3-cycle's medial is an alternating trefoil
        let t = PlaneGraph::cycle(3).medial();
        assert_eq!(t.crossing_count(), 3);
        assert_eq!(t.component_count(), 1);
        assert!(t.is_alternating());
        assert!(t.is_reduced().unwrap());
    }

    #[test]
    fn moves_preserve_the_growth_invariants() {
        let mut g = PlaneGraph::cycle(3);
        g.subdivide(0);
        g.add_parallel(2);
        let corners = g.face_corners();
        let face = corners
            .iter()
            .find(|f| {
                f.iter().any(|&(v, _)| f.iter().any(|&(w, _)| v != w))
            })
            .unwrap()
            .clone();
        let c1 = face[0];
        let c2 = *face.iter().find(|&&(v, _)| v != c1.0).unwrap();
        g.add_chord(c1, c2);
        assert!(g.is_loopless());
        assert!(!g.has_bridge());
        assert_eq!(g.edge_count(), 6);
        let d = g.medial();
        assert!(d.is_alternating());
        assert!(d.is_reduced().unwrap());
        assert_eq!(d.crossing_count(), 6);
    }

    #[test]
    fn random_graphs_give_reduced_alternating_diagrams() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..30 {
            let c = rng.gen_range(3..=12);
            let g = random_plane_graph(&mut rng, c);
            assert_eq!(g.edge_count(), c);
            let d = g.medial();
            assert_eq!(d.crossing_count(), c);
            assert!(d.is_connected());
            assert!(d.is_alternating());
            assert!(d.is_reduced().unwrap());
            assert_eq!(d.faces().unwrap().len(), c + 2);
        }
    }
}
