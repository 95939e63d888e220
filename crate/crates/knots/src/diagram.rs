//! Planar link diagrams given by PD codes.
//!
//! A crossing is a 4-tuple of arc identifiers listed counterclockwise
//! starting at the incoming under-strand (slot 0). Slot 2 is the outgoing
//! under-strand; slots 1 and 3 carry the over-strand. The cyclic slot
//! order is a rotation system, so faces, checkerboard colorings and state
//! loops are all derived combinatorially, with planarity enforced through
//! the Euler formula `|faces| = c + 2` on every connected piece.
//!
//! Component orientations are forced by the slot-0 convention wherever a
//! component passes under a crossing; components that only pass over are
//! oriented along increasing arc labels. Both can be overridden with the
//! `reverse=` header.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::Error;

pub type ArcId = usize;

/// One crossing: arc ids at slots 0..3, counterclockwise from the
/// incoming under-strand.
pub type Crossing = [ArcId; 4];

#[derive(Clone, Debug)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    arc_count: usize,
    unknotted_loops: usize,
    /// arc -> its two (crossing, slot) incidences, in scan order.
    incidences: Vec<[(usize, usize); 2]>,
    /// arc -> which incidence is its head under the current orientation.
    arc_head: Vec<u8>,
    /// Oriented arc cycles, ordered by smallest member arc.
    components: Vec<Vec<ArcId>>,
    comp_of: Vec<usize>,
}

impl PartialEq for LinkDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.crossings == other.crossings
            && self.unknotted_loops == other.unknotted_loops
            && self.arc_head == other.arc_head
    }
}

impl Eq for LinkDiagram {}

/// Faces of the diagram's 4-valent graph, as orbits of the rotation
/// system. Each face is a cyclic list of (arc, side) incidences; every
/// arc has exactly two sides.
#[derive(Clone, Debug)]
pub struct FaceSet {
    pub faces: Vec<Vec<(ArcId, u8)>>,
    pub unbounded_face_index: usize,
    /// (crossing, corner k) -> face index, where corner k lies between
    /// slots k and k+1.
    corner_face: Vec<[usize; 4]>,
    /// dart id (2*arc + side) -> face index.
    dart_face: Vec<usize>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn corner_face(&self, crossing: usize, corner: usize) -> usize {
        self.corner_face[crossing][corner]
    }

    pub fn dart_face(&self, arc: ArcId, side: u8) -> usize {
        self.dart_face[2 * arc + side as usize]
    }
}

/// Signs of the crossings of an oriented diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingSigns {
    pub signs: Vec<i8>,
    /// true where the two strands at the crossing belong to one component.
    pub self_crossing: Vec<bool>,
}

impl LinkDiagram {
    /// Parses the PD text format: whitespace-separated `X[a,b,c,d]`
    /// tokens with positive integer arcs, an optional `loops=N` header
    /// for crossingless unknot components and an optional `reverse=i,j`
    /// header listing component indices to reverse.
    pub fn parse_pd(text: &str) -> Result<Self, Error> {
        let mut tuples: Vec<[u64; 4]> = Vec::new();
        let mut loops = 0usize;
        let mut reversals: Vec<usize> = Vec::new();
        for token in text.split_whitespace() {
            if let Some(rest) = token.strip_prefix("loops=") {
                loops = rest
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad loops header: {token}")))?;
            } else if let Some(rest) = token.strip_prefix("reverse=") {
                for part in rest.split(',').filter(|s| !s.is_empty()) {
                    let i = part
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad reverse header: {token}")))?;
                    reversals.push(i);
                }
            } else if let Some(body) = token.strip_prefix("X[").and_then(|t| t.strip_suffix(']')) {
                let parts: Vec<&str> = body.split(',').collect();
                if parts.len() != 4 {
                    return Err(Error::Parse(format!("crossing needs 4 arcs: {token}")));
                }
                let mut arcs = [0u64; 4];
                for (i, p) in parts.iter().enumerate() {
                    arcs[i] = p
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad arc id in {token}")))?;
                    if arcs[i] == 0 {
                        return Err(Error::Parse(format!("arc ids are positive: {token}")));
                    }
                }
                tuples.push(arcs);
            } else {
                return Err(Error::Parse(format!("unrecognized token: {token}")));
            }
        }
        if tuples.is_empty() && loops == 0 {
            return Err(Error::Parse("empty diagram: give crossings or loops=N".into()));
        }

        // compact arc ids, preserving label order
        let mut labels: Vec<u64> = tuples.iter().flatten().copied().collect();
        labels.sort_unstable();
        labels.dedup();
        let index: BTreeMap<u64, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let crossings: Vec<Crossing> = tuples
            .iter()
            .map(|t| [index[&t[0]], index[&t[1]], index[&t[2]], index[&t[3]]])
            .collect();

        let mut d = Self::from_tuples(crossings, loops)?;
        for i in reversals {
            if i >= d.components.len() {
                return Err(Error::Validation(format!(
                    "reverse={i} but diagram has {} components with crossings",
                    d.components.len()
                )));
            }
            d.reverse_component(i);
        }
        Ok(d)
    }

    /// Builds a diagram from compact 0-based crossing tuples.
    pub fn from_tuples(crossings: Vec<Crossing>, unknotted_loops: usize) -> Result<Self, Error> {
        // each arc id must occur exactly twice
        let mut count: BTreeMap<ArcId, usize> = BTreeMap::new();
        for t in &crossings {
            for &a in t {
                *count.entry(a).or_insert(0) += 1;
            }
        }
        let arc_count = count.len();
        if !count.keys().copied().eq(0..arc_count) {
            return Err(Error::Validation("arc ids must be contiguous".into()));
        }
        for (&a, &n) in &count {
            if n != 2 {
                return Err(Error::Validation(format!("arc {} occurs {} times, expected 2", a + 1, n)));
            }
        }

        let mut incidences = vec![[(usize::MAX, usize::MAX); 2]; arc_count];
        let mut seen = vec![0usize; arc_count];
        for (x, t) in crossings.iter().enumerate() {
            for (s, &a) in t.iter().enumerate() {
                incidences[a][seen[a]] = (x, s);
                seen[a] += 1;
            }
        }

        let mut d = Self {
            crossings,
            arc_count,
            unknotted_loops,
            incidences,
            arc_head: vec![0; arc_count],
            components: Vec::new(),
            comp_of: vec![usize::MAX; arc_count],
        };
        d.orient_components()?;
        d.validate_planarity()?;
        Ok(d)
    }

    /// Walks one step along a strand: the dart `(arc, end)` moves toward
    /// incidence `end`; the strand continues out of the opposite slot.
    fn next_dart(&self, arc: ArcId, end: u8) -> (ArcId, u8) {
        let (x, s) = self.incidences[arc][end as usize];
        let out = (s + 2) % 4;
        let b = self.crossings[x][out];
        let i = self.incidence_index(b, x, out);
        (b, 1 - i)
    }

    fn incidence_index(&self, arc: ArcId, x: usize, slot: usize) -> u8 {
        if self.incidences[arc][0] == (x, slot) {
            0
        } else {
            debug_assert_eq!(self.incidences[arc][1], (x, slot));
            1
        }
    }

    /// Entry slots along the cycle starting with dart `(arc, end)`;
    /// returns (arcs in order, valid), where valid means no under-strand
    /// is traversed backwards (entered at slot 2).
    fn walk_cycle(&self, arc: ArcId, end: u8) -> (Vec<ArcId>, Vec<u8>, bool) {
        let mut arcs = Vec::new();
        let mut ends = Vec::new();
        let mut valid = true;
        let (mut a, mut e) = (arc, end);
        loop {
            arcs.push(a);
            ends.push(e);
            let (_, s) = self.incidences[a][e as usize];
            if s == 2 {
                valid = false;
            }
            let (b, f) = self.next_dart(a, e);
            if (b, f) == (arc, end) {
                break;
            }
            (a, e) = (b, f);
        }
        (arcs, ends, valid)
    }

    fn orient_components(&mut self) -> Result<(), Error> {
        self.components.clear();
        let mut assigned = vec![false; self.arc_count];
        for a in 0..self.arc_count {
            if assigned[a] {
                continue;
            }
            let fwd = self.walk_cycle(a, 0);
            let bwd = self.walk_cycle(a, 1);
            let (arcs, ends) = match (fwd.2, bwd.2) {
                (true, false) => (fwd.0, fwd.1),
                (false, true) => (bwd.0, bwd.1),
                (true, true) => {
                    // over-only component: orient along increasing labels
                    if fwd.0 <= bwd.0 {
                        (fwd.0, fwd.1)
                    } else {
                        (bwd.0, bwd.1)
                    }
                }
                (false, false) => {
                    return Err(Error::Validation(format!(
                        "inconsistent under-strand orientations on the component of arc {}",
                        a + 1
                    )))
                }
            };
            let comp = self.components.len();
            for (&b, &e) in arcs.iter().zip(&ends) {
                assigned[b] = true;
                self.comp_of[b] = comp;
                self.arc_head[b] = e;
            }
            self.components.push(arcs);
        }
        Ok(())
    }

    fn validate_planarity(&self) -> Result<(), Error> {
        if self.crossings.is_empty() {
            return Ok(());
        }
        // faces per connected piece must satisfy Euler's formula
        let piece = self.crossing_pieces();
        let face = self.face_orbits();
        let piece_count = piece.iter().max().map(|&m| m + 1).unwrap_or(0);
        let mut faces_of = vec![0usize; piece_count];
        let mut crossings_of = vec![0usize; piece_count];
        let mut seen_face = vec![false; face.face_count];
        for a in 0..self.arc_count {
            for side in 0..2u8 {
                let f = face.dart_face[2 * a + side as usize];
                if !seen_face[f] {
                    seen_face[f] = true;
                    faces_of[piece[self.incidences[a][0].0]] += 1;
                }
            }
        }
        for (x, &p) in piece.iter().enumerate() {
            let _ = x;
            crossings_of[p] += 1;
        }
        for p in 0..piece_count {
            if faces_of[p] != crossings_of[p] + 2 {
                return Err(Error::Validation(format!(
                    "non-planar incidence structure: piece with {} crossings has {} faces, expected {}",
                    crossings_of[p],
                    faces_of[p],
                    crossings_of[p] + 2
                )));
            }
        }
        Ok(())
    }

    /// Connected pieces of the 4-valent graph: crossing -> piece index.
    fn crossing_pieces(&self) -> Vec<usize> {
        let n = self.crossings.len();
        let mut piece = vec![usize::MAX; n];
        let mut next = 0;
        for start in 0..n {
            if piece[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            piece[start] = next;
            while let Some(x) = stack.pop() {
                for s in 0..4 {
                    let a = self.crossings[x][s];
                    for &(y, _) in &self.incidences[a] {
                        if piece[y] == usize::MAX {
                            piece[y] = next;
                            stack.push(y);
                        }
                    }
                }
            }
            next += 1;
        }
        piece
    }

    /// Orbits of the rotation system: each dart `(arc, side)` belongs to
    /// one face.
    pub(crate) fn face_orbits(&self) -> FaceOrbits {
        let darts = 2 * self.arc_count;
        let mut dart_face = vec![usize::MAX; darts];
        let mut orbit_darts = Vec::new();
        for start in 0..darts {
            if dart_face[start] != usize::MAX {
                continue;
            }
            let f = orbit_darts.len();
            let mut orbit = Vec::new();
            let mut d = start;
            loop {
                dart_face[d] = f;
                orbit.push(d);
                let (a, e) = (d / 2, d % 2);
                let (x, s) = self.incidences[a][e];
                let j = (s + 1) % 4;
                let b = self.crossings[x][j];
                let i = self.incidence_index(b, x, j);
                d = 2 * b + (1 - i) as usize;
                if d == start {
                    break;
                }
            }
            orbit_darts.push(orbit);
        }
        FaceOrbits { face_count: orbit_darts.len(), dart_face, orbit_darts }
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn unknotted_loops(&self) -> usize {
        self.unknotted_loops
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    /// Oriented arc cycles of the components that carry crossings.
    pub fn components(&self) -> &[Vec<ArcId>] {
        &self.components
    }

    /// Total component count including crossingless loops.
    pub fn component_count(&self) -> usize {
        self.components.len() + self.unknotted_loops
    }

    pub fn component_of_arc(&self, arc: ArcId) -> usize {
        self.comp_of[arc]
    }

    pub fn is_connected(&self) -> bool {
        let pieces = self.crossing_pieces();
        let p = pieces.iter().max().map(|&m| m + 1).unwrap_or(0);
        match (p, self.unknotted_loops, self.crossings.is_empty()) {
            (0, n, _) => n <= 1,
            (1, 0, _) => true,
            _ => false,
        }
    }

    pub fn is_split(&self) -> bool {
        !self.is_connected()
    }

    /// Head incidence (crossing, slot) of an arc under the current
    /// orientation.
    pub fn arc_head_incidence(&self, arc: ArcId) -> (usize, usize) {
        self.incidences[arc][self.arc_head[arc] as usize]
    }

    pub fn arc_tail_incidence(&self, arc: ArcId) -> (usize, usize) {
        self.incidences[arc][1 - self.arc_head[arc] as usize]
    }

    /// The over-strand's incoming slot at a crossing: 1 or 3.
    pub fn over_in_slot(&self, x: usize) -> usize {
        let b = self.crossings[x][1];
        if self.arc_head_incidence(b) == (x, 1) {
            1
        } else {
            debug_assert_eq!(self.arc_head_incidence(self.crossings[x][3]), (x, 3));
            3
        }
    }

    pub fn crossing_signs(&self) -> CrossingSigns {
        let mut signs = Vec::with_capacity(self.crossings.len());
        let mut self_crossing = Vec::with_capacity(self.crossings.len());
        for (x, t) in self.crossings.iter().enumerate() {
            signs.push(if self.over_in_slot(x) == 3 { 1 } else { -1 });
            self_crossing.push(self.comp_of[t[0]] == self.comp_of[t[1]]);
        }
        CrossingSigns { signs, self_crossing }
    }

    /// Sum of crossing signs of the oriented diagram.
    pub fn writhe(&self) -> i64 {
        self.crossing_signs().signs.iter().map(|&s| s as i64).sum()
    }

    /// Reverses the orientation of one crossing-carrying component
    /// (indices follow `components()` order).
    pub fn reverse_component(&mut self, comp: usize) {
        assert!(comp < self.components.len());
        // rotate tuples at crossings whose under-strand lies on the component
        for x in 0..self.crossings.len() {
            if self.comp_of[self.crossings[x][0]] == comp {
                self.rotate_crossing(x, 2);
            }
        }
        for &a in &self.components[comp] {
            self.arc_head[a] = 1 - self.arc_head[a];
        }
        self.components[comp].reverse();
    }

    fn rotate_crossing(&mut self, x: usize, by: usize) {
        let old = self.crossings[x];
        let mut new = [0; 4];
        for (j, slot) in new.iter_mut().enumerate() {
            *slot = old[(j + by) % 4];
        }
        for (s, &a) in new.iter().enumerate() {
            let from = (s + by) % 4;
            let i = self.incidence_index(a, x, from);
            self.incidences[a][i as usize] = (x, s);
        }
        self.crossings[x] = new;
    }

    /// Swaps over and under at crossing `i`, preserving all component
    /// orientations. Involution.
    pub fn flip_crossing(&self, i: usize) -> Result<Self, Error> {
        if i >= self.crossings.len() {
            return Err(Error::IndexOutOfRange { index: i, len: self.crossings.len() });
        }
        let mut d = self.clone();
        let k = d.over_in_slot(i);
        d.rotate_crossing(i, k);
        // the former under-strand keeps its direction; recompute heads so
        // over-only components stay deterministic
        d.orient_components().map_err(|e| Error::Internal(format!("flip broke orientation: {e}")))?;
        Ok(d)
    }

    /// Mirror image: reflects the plane by reversing every rotation,
    /// keeping over/under data. The bracket of the mirror is the original
    /// bracket with `A` and `A⁻¹` exchanged.
    pub fn mirror(&self) -> Self {
        let crossings = self.crossings.iter().map(|t| [t[0], t[3], t[2], t[1]]).collect();
        Self::from_tuples(crossings, self.unknotted_loops).expect("mirror preserves validity")
    }

    /// True iff every component alternates over/under along its traversal.
    pub fn is_alternating(&self) -> bool {
        for comp in &self.components {
            let kinds: Vec<bool> = comp
                .iter()
                .map(|&a| {
                    let (_, s) = self.arc_head_incidence(a);
                    s == 0 // entering as under-strand
                })
                .collect();
            if kinds.len() > 1 {
                for i in 0..kinds.len() {
                    if kinds[i] == kinds[(i + 1) % kinds.len()] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Faces of a connected diagram with at least one crossing.
    pub fn faces(&self) -> Result<FaceSet, Error> {
        if self.crossings.is_empty() {
            return Err(Error::NotApplicable("faces need at least one crossing".into()));
        }
        if self.is_split() {
            return Err(Error::Split);
        }
        let orbits = self.face_orbits();
        let mut faces = vec![Vec::new(); orbits.face_count];
        for (f, darts) in orbits.orbit_darts.iter().enumerate() {
            for &d in darts {
                faces[f].push(((d / 2) as ArcId, (d % 2) as u8));
            }
        }
        // unbounded face: the one containing the smallest (arc, side)
        let unbounded = orbits.dart_face[0];
        let mut corner_face = vec![[0usize; 4]; self.crossings.len()];
        for (x, t) in self.crossings.iter().enumerate() {
            for k in 0..4 {
                let j = (k + 1) % 4;
                let b = t[j];
                let i = self.incidence_index(b, x, j);
                corner_face[x][k] = orbits.dart_face[2 * b + (1 - i) as usize];
            }
        }
        Ok(FaceSet {
            faces,
            unbounded_face_index: unbounded,
            corner_face,
            dart_face: orbits.dart_face,
        })
    }

    /// No checkerboard-graph loops: at every crossing the opposite
    /// corner regions are distinct faces.
    pub fn is_reduced(&self) -> Result<bool, Error> {
        if self.crossings.is_empty() {
            return Ok(true);
        }
        let faces = self.faces()?;
        Ok((0..self.crossings.len()).all(|x| {
            faces.corner_face(x, 0) != faces.corner_face(x, 2)
                && faces.corner_face(x, 1) != faces.corner_face(x, 3)
        }))
    }

    /// Prime diagram: both checkerboard graphs are two-connected (no
    /// loops, no cut vertices).
    pub fn is_prime(&self) -> Result<bool, Error> {
        if self.crossings.is_empty() {
            return Err(Error::NotApplicable("primeness needs at least one crossing".into()));
        }
        if !self.is_reduced()? {
            return Ok(false);
        }
        let faces = self.faces()?;
        let colors = checkerboard_colors(self, &faces);
        for class in [false, true] {
            if tait_class_has_cut_vertex(self, &faces, &colors, class) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Canonical PD text: minimal arc relabeling along each component,
    /// crossings sorted, `loops=` header when needed.
    pub fn serialize(&self) -> String {
        let renumbered = self.renumber_canonical();
        let mut tuples: Vec<Crossing> = renumbered.crossings.clone();
        tuples.sort_unstable();
        let mut out = String::new();
        if renumbered.unknotted_loops > 0 {
            let _ = write!(out, "loops={}", renumbered.unknotted_loops);
        }
        for t in &tuples {
            if !out.is_empty() {
                out.push(' ');
            }
            let _ = write!(out, "X[{},{},{},{}]", t[0] + 1, t[1] + 1, t[2] + 1, t[3] + 1);
        }
        out
    }

    /// Relabels arcs sequentially along each oriented component,
    /// components ordered by their smallest current arc.
    pub fn renumber_canonical(&self) -> Self {
        let mut map = vec![usize::MAX; self.arc_count];
        let mut next = 0;
        for comp in &self.components {
            // start at the smallest arc in the component
            let start = comp
                .iter()
                .enumerate()
                .min_by_key(|&(_, &a)| a)
                .map(|(i, _)| i)
                .unwrap_or(0);
            for i in 0..comp.len() {
                map[comp[(start + i) % comp.len()]] = next;
                next += 1;
            }
        }
        let crossings = self
            .crossings
            .iter()
            .map(|t| [map[t[0]], map[t[1]], map[t[2]], map[t[3]]])
            .collect();
        Self::from_tuples(crossings, self.unknotted_loops)
            .expect("relabeling preserves validity")
    }
}

/// Face orbit data used both for validation and for `faces()`.
pub(crate) struct FaceOrbits {
    pub face_count: usize,
    pub dart_face: Vec<usize>,
    pub orbit_darts: Vec<Vec<usize>>,
}

/// Checkerboard 2-coloring of faces: `true` = shaded. The unbounded face
/// is unshaded.
pub(crate) fn checkerboard_colors(d: &LinkDiagram, faces: &FaceSet) -> Vec<bool> {
    let n = faces.faces.len();
    let mut color = vec![None; n];
    color[faces.unbounded_face_index] = Some(false);
    let mut stack = vec![faces.unbounded_face_index];
    while let Some(f) = stack.pop() {
        let c = color[f].unwrap();
        for &(a, side) in &faces.faces[f] {
            let g = faces.dart_face(a, 1 - side);
            match color[g] {
                None => {
                    color[g] = Some(!c);
                    stack.push(g);
                }
                Some(cg) => {
                    debug_assert_ne!(cg, c, "faces across an arc must two-color");
                }
            }
        }
    }
    let _ = d;
    color.into_iter().map(|c| c.expect("diagram connected")).collect()
}

/// Cut-vertex scan of one checkerboard class via block DFS over the
/// face-class multigraph (vertices: faces of the class, edges: crossings).
fn tait_class_has_cut_vertex(
    d: &LinkDiagram,
    faces: &FaceSet,
    colors: &[bool],
    class: bool,
) -> bool {
    // collect vertices of this class and the edge list
    let mut vid = vec![usize::MAX; faces.faces.len()];
    let mut verts = Vec::new();
    for (f, &c) in colors.iter().enumerate() {
        if c == class {
            vid[f] = verts.len();
            verts.push(f);
        }
    }
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); verts.len()];
    for x in 0..d.crossing_count() {
        let (k1, k2) = if colors[faces.corner_face(x, 0)] == class { (0, 2) } else { (1, 3) };
        let u = vid[faces.corner_face(x, k1)];
        let v = vid[faces.corner_face(x, k2)];
        adj[u].push((v, x));
        if u != v {
            adj[v].push((u, x));
        }
    }
    if verts.is_empty() {
        return false;
    }
    // standard lowpoint DFS; parallel edges are distinguished by edge id
    let n = verts.len();
    let mut num = vec![0usize; n];
    let mut low = vec![0usize; n];
    let mut counter = 0usize;
    let mut cut = false;
    struct Frame {
        v: usize,
        parent_edge: Option<usize>,
        next: usize,
        children: usize,
    }
    let root = 0;
    let mut stack = vec![Frame { v: root, parent_edge: None, next: 0, children: 0 }];
    counter += 1;
    num[root] = counter;
    low[root] = counter;
    while let Some(top) = stack.last_mut() {
        let v = top.v;
        if top.next < adj[v].len() {
            let (w, e) = adj[v][top.next];
            top.next += 1;
            if Some(e) == top.parent_edge {
                continue;
            }
            if num[w] == 0 {
                counter += 1;
                num[w] = counter;
                low[w] = counter;
                top.children += 1;
                stack.push(Frame { v: w, parent_edge: Some(e), next: 0, children: 0 });
            } else {
                low[v] = low[v].min(num[w]);
            }
        } else {
            let frame = stack.pop().unwrap();
            if let Some(parent) = stack.last_mut() {
                let p = parent.v;
                low[p] = low[p].min(low[frame.v]);
                if parent.parent_edge.is_some() && low[frame.v] >= num[p] {
                    cut = true;
                }
                if parent.parent_edge.is_none() && parent.children > 1 {
                    cut = true;
                }
            }
        }
    }
    // disconnected class cannot happen for a connected diagram
    debug_assert!(num.iter().all(|&x| x > 0));
    cut
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
    pub(crate) const KINK: &str = "X[1,1,2,2]";

    #[test]
    fn parse_trefoil() {
        let d = LinkDiagram::parse_pd(TREFOIL).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.arc_count(), 6);
        assert!(d.is_connected());
        assert_eq!(d.faces().unwrap().len(), 5);
    }

    #[test]
    fn parse_zero_crossing_unknot() {
        let d = LinkDiagram::parse_pd("loops=1").unwrap();
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.component_count(), 1);
        assert!(d.is_connected());
        assert_eq!(d.writhe(), 0);
        assert!(d.is_alternating());
    }

    #[test]
    fn parse_kink() {
        let d = LinkDiagram::parse_pd(KINK).unwrap();
        assert_eq!(d.crossing_count(), 1);
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.faces().unwrap().len(), 3);
        assert!(d.is_alternating());
        assert!(!d.is_reduced().unwrap());
        assert_eq!(d.writhe(), 1); // positive curl
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(LinkDiagram::parse_pd(""), Err(Error::Parse(_))));
        assert!(matches!(LinkDiagram::parse_pd("X[1,2,3]"), Err(Error::Parse(_))));
        assert!(matches!(LinkDiagram::parse_pd("X[1,1,1,2] X[2,3,3,4]"), Err(Error::Validation(_))));
        // arc appearing once
        assert!(matches!(LinkDiagram::parse_pd("X[1,2,3,4]"), Err(Error::Validation(_))));
    }

    #[test]
    fn trefoil_writhe_is_minus_three() {
        let d = LinkDiagram::parse_pd(TREFOIL).unwrap();
        assert_eq!(d.writhe(), -3);
        let signs = d.crossing_signs();
        assert!(signs.signs.iter().all(|&s| s == -1));
        assert!(signs.self_crossing.iter().all(|&b| b));
    }

    #[test]
    fn writhe_invariant_under_full_reversal() {
        let mut d = LinkDiagram::parse_pd(TREFOIL).unwrap();
        let w = d.writhe();
        d.reverse_component(0);
        assert_eq!(d.writhe(), w);
    }

    #[test]
    fn alternation() {
        assert!(LinkDiagram::parse_pd(TREFOIL).unwrap().is_alternating());
        let flipped = LinkDiagram::parse_pd(TREFOIL).unwrap().flip_crossing(0).unwrap();
        assert!(!flipped.is_alternating());
    }

    #[test]
    fn flip_is_involution() {
        let d = LinkDiagram::parse_pd(TREFOIL).unwrap();
        for i in 0..3 {
            let twice = d.flip_crossing(i).unwrap().flip_crossing(i).unwrap();
            assert_eq!(twice, d);
        }
        assert!(matches!(d.flip_crossing(7), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn trefoil_is_reduced_and_prime() {
        let d = LinkDiagram::parse_pd(TREFOIL).unwrap();
        assert!(d.is_reduced().unwrap());
        assert!(d.is_prime().unwrap());
    }

    #[test]
    fn kink_is_not_prime() {
        let d = LinkDiagram::parse_pd(KINK).unwrap();
        assert!(!d.is_prime().unwrap());
    }

    #[test]
    fn split_detection() {
        let d = LinkDiagram::parse_pd("loops=1 X[1,1,2,2]").unwrap();
        assert!(d.is_split());
        assert!(matches!(d.faces(), Err(Error::Split)));
        let two = LinkDiagram::parse_pd("X[1,1,2,2] X[3,3,4,4]").unwrap();
        assert!(two.is_split());
        assert_eq!(two.component_count(), 2);
    }

    #[test]
    fn serialize_round_trip() {
        for s in [TREFOIL, KINK, "loops=2", "loops=1 X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"] {
            let d = LinkDiagram::parse_pd(s).unwrap();
            let text = d.serialize();
            let d2 = LinkDiagram::parse_pd(&text).unwrap();
            assert_eq!(d2.serialize(), text, "canonical form must be stable for {s}");
            assert_eq!(d2.renumber_canonical(), d.renumber_canonical());
        }
    }

    #[test]
    fn reverse_header() {
        let d = LinkDiagram::parse_pd("reverse=0 X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap();
        assert_eq!(d.writhe(), -3);
        assert!(matches!(
            LinkDiagram::parse_pd("reverse=5 X[1,1,2,2]"),
            Err(Error::Validation(_))
        ));
    }
}
