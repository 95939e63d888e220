//! Almost-alternating analytics: dealternator certification, the
//! closed-form extreme coefficients of brackets of reduced alternating
//! and strongly reduced almost alternating diagrams, the crossing
//! minimality classifier, the sign and unlink obstructions, and the
//! seven reference families of marked checkerboard graphs.

use serde::Serialize;

use crate::checkerboard::{
    aa_path_stats, graph_stats, simplify, tait_graphs, AAPathStats, EdgeKind, GraphStats,
    SimpleEdge, SimplifiedGraph, TaitGraph,
};
use crate::diagram::LinkDiagram;
use crate::error::Error;
use crate::kauffman::jones_with_cap;
use crate::laurent::{Coeff, ExpUnit, LaurentPoly};

/// Certificate for one crossing whose flip makes the diagram alternating.
#[derive(Clone, Debug, Serialize)]
pub struct DealternatorCert {
    pub crossing_id: usize,
    /// marked faces on the side whose other edges are all A-edges
    pub u1: usize,
    pub u2: usize,
    /// marked faces on the all-B side
    pub v1: usize,
    pub v2: usize,
    pub strongly_reduced: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Minimality {
    Minimal,
    WithinOneCrossing,
    ReducibleByTwo,
    Inconclusive,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum SignVerdict {
    Consistent,
    Obstructed,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Nontriviality {
    NontrivialJones,
    Violation,
}

/// Combined per-side statistics as exposed in reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[allow(non_snake_case)]
pub struct SideStats {
    pub v: i64,
    pub e: i64,
    pub mu: i64,
    pub tau: i64,
    pub beta1: i64,
    pub P: i64,
    pub P0: i64,
    pub P1: i64,
    pub P2: i64,
    pub Q: i64,
    pub S: i64,
}

impl SideStats {
    fn new(g: GraphStats, p: AAPathStats) -> Self {
        Self {
            v: g.v,
            e: g.e,
            mu: g.mu,
            tau: g.tau,
            beta1: g.beta1,
            P: p.P,
            P0: p.P0,
            P1: p.P1,
            P2: p.P2,
            Q: p.Q,
            S: p.S,
        }
    }
}

/// The four potential extreme bracket coefficients of a strongly reduced
/// almost alternating diagram, with the exponent window they anchor to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AACoefficients {
    pub alpha0: i64,
    pub alpha1: i64,
    pub alpha_cm4: i64,
    pub alpha_cm3: i64,
    /// exponent of the alpha0 term: c + 2v - 8
    pub top_exp: i64,
    /// exponent of the alpha_{c-3} term: -c - 2v̄ + 8
    pub low_exp: i64,
    pub stats: SideStats,
    pub stats_bar: SideStats,
}

/// Full report bundle for one strongly reduced almost alternating
/// diagram.
#[derive(Clone, Debug, Serialize)]
pub struct AAReport {
    pub alpha0: i64,
    pub alpha1: i64,
    pub alpha_cm4: i64,
    pub alpha_cm3: i64,
    pub stats: SideStats,
    pub stats_bar: SideStats,
    pub minimality: Minimality,
    pub sign_verdict: SignVerdict,
    pub nontriviality: Nontriviality,
}

fn neg_one_pow(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn choose2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// The checkerboard graphs in the paper's roles for a candidate
/// dealternator: first the side whose non-dealternator edges are all
/// A-edges, then the all-B side. Both carry the dealternator marker.
pub fn marked_tait_graphs(d: &LinkDiagram, crossing: usize) -> Result<(TaitGraph, TaitGraph), Error> {
    let (g, gbar) = tait_graphs(d)?;
    let g = g.with_dealternator(crossing);
    let gbar = gbar.with_dealternator(crossing);
    if g.is_monochrome(EdgeKind::A) && gbar.is_monochrome(EdgeKind::B) {
        Ok((g, gbar))
    } else if gbar.is_monochrome(EdgeKind::A) && g.is_monochrome(EdgeKind::B) {
        Ok((gbar, g))
    } else {
        Err(Error::NotApplicable(format!(
            "crossing {crossing} is not a dealternator: mixed edge labels remain"
        )))
    }
}

/// Every crossing whose flip alternates the diagram, with marked faces
/// and a strong-reducedness certificate. Empty means the diagram is not
/// almost alternating.
pub fn find_dealternators(d: &LinkDiagram) -> Result<Vec<DealternatorCert>, Error> {
    if d.is_alternating() {
        return Err(Error::AlreadyAlternating);
    }
    if d.is_split() {
        return Err(Error::Split);
    }
    let mut certs = Vec::new();
    for i in 0..d.crossing_count() {
        let flipped = d.flip_crossing(i)?;
        if !flipped.is_alternating() {
            continue;
        }
        let (g, gbar) = marked_tait_graphs(d, i)?;
        let ge = g.edge_for_crossing(i).expect("dealternator edge in G");
        let be = gbar.edge_for_crossing(i).expect("dealternator edge in Gbar");
        let (u1, u2) = (ge.v1.min(ge.v2), ge.v1.max(ge.v2));
        let (v1, v2) = (be.v1.min(be.v2), be.v1.max(be.v2));
        let mut failure = None;
        if u1 == u2 {
            failure = Some("dealternator is a loop in G".into());
        } else if v1 == v2 {
            failure = Some("dealternator is a loop in Gbar".into());
        } else if g.has_loop() {
            failure = Some("G has a loop".into());
        } else if gbar.has_loop() {
            failure = Some("Gbar has a loop".into());
        } else if g.edges.iter().any(|e| {
            e.crossing != i && ((e.v1, e.v2) == (u1, u2) || (e.v2, e.v1) == (u1, u2))
        }) {
            failure = Some("a second G-edge joins the marked pair".into());
        } else if gbar.edges.iter().any(|e| {
            e.crossing != i && ((e.v1, e.v2) == (v1, v2) || (e.v2, e.v1) == (v1, v2))
        }) {
            failure = Some("a second Gbar-edge joins the marked pair".into());
        }
        certs.push(DealternatorCert {
            crossing_id: i,
            u1,
            u2,
            v1,
            v2,
            strongly_reduced: failure.is_none(),
            failure,
        });
    }
    Ok(certs)
}

/// Closed-form extreme coefficients of the bracket of a reduced
/// alternating connected diagram, anchored at `A^{c+2v-2-4i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DasbachLinCoeffs {
    pub gamma0: i64,
    pub gamma1: i64,
    pub gamma2: i64,
    pub gamma_cm2: i64,
    pub gamma_cm1: i64,
    pub gamma_c: i64,
    /// exponent of the gamma0 term: c + 2v - 2
    pub top_exp: i64,
    pub stats: GraphStats,
    pub stats_bar: GraphStats,
}

pub fn dasbach_lin_coeffs(d: &LinkDiagram) -> Result<DasbachLinCoeffs, Error> {
    if d.is_split() {
        return Err(Error::NotApplicable("diagram is split".into()));
    }
    if d.crossing_count() == 0 {
        return Err(Error::NotApplicable("no crossings".into()));
    }
    if !d.is_alternating() {
        return Err(Error::NotApplicable("diagram is not alternating".into()));
    }
    if !d.is_reduced()? {
        return Err(Error::NotApplicable("diagram is not reduced".into()));
    }
    let (g, gbar) = tait_graphs(d)?;
    // G is the side with only A-edges
    let (g, gbar) = if g.is_monochrome(EdgeKind::A) { (g, gbar) } else { (gbar, g) };
    debug_assert!(g.is_monochrome(EdgeKind::A) && gbar.is_monochrome(EdgeKind::B));
    let s = graph_stats(&simplify(&g))?;
    let sb = graph_stats(&simplify(&gbar))?;
    let c = d.crossing_count() as i64;
    let (v, e, mu, tau) = (s.v, s.e, s.mu, s.tau);
    let (vb, eb, mub, taub) = (sb.v, sb.e, sb.mu, sb.tau);
    Ok(DasbachLinCoeffs {
        gamma0: neg_one_pow(v - 1),
        gamma1: neg_one_pow(v - 2) * (e - v + 1),
        gamma2: neg_one_pow(v - 3) * (choose2(v - 1) - e * (v - 2) + mu + choose2(e) - tau),
        gamma_cm2: neg_one_pow(vb - 3) * (choose2(vb - 1) - eb * (vb - 2) + mub + choose2(eb) - taub),
        gamma_cm1: neg_one_pow(vb - 2) * (eb - vb + 1),
        gamma_c: neg_one_pow(vb - 1),
        top_exp: c + 2 * v - 2,
        stats: s,
        stats_bar: sb,
    })
}

/// The four alpha formulas for a strongly reduced certificate.
pub fn aa_coefficients(d: &LinkDiagram, cert: &DealternatorCert) -> Result<AACoefficients, Error> {
    if !cert.strongly_reduced {
        return Err(Error::NotApplicable(format!(
            "diagram is not strongly reduced: {}",
            cert.failure.as_deref().unwrap_or("unknown reason")
        )));
    }
    let (g, gbar) = marked_tait_graphs(d, cert.crossing_id)?;
    let gs = simplify(&g);
    let gbs = simplify(&gbar);
    let s = graph_stats(&gs)?;
    let sb = graph_stats(&gbs)?;
    let p = aa_path_stats(&gs, cert.u1, cert.u2)?;
    let pb = aa_path_stats(&gbs, cert.v1, cert.v2)?;
    let c = d.crossing_count() as i64;
    let (v, vb) = (s.v, sb.v);
    let alpha0 = neg_one_pow(v) * (p.P - 1);
    let alpha1 = neg_one_pow(v - 1)
        * (s.beta1 * (p.P - 1) - choose2(p.P) + p.P2 - p.P0 + p.Q - p.S);
    let alpha_cm4 = neg_one_pow(vb - 1)
        * (sb.beta1 * (pb.P - 1) - choose2(pb.P) + pb.P2 - pb.P0 + pb.Q - pb.S);
    let alpha_cm3 = neg_one_pow(vb) * (pb.P - 1);
    Ok(AACoefficients {
        alpha0,
        alpha1,
        alpha_cm4,
        alpha_cm3,
        top_exp: c + 2 * v - 8,
        low_exp: -c - 2 * vb + 8,
        stats: SideStats::new(s, p),
        stats_bar: SideStats::new(sb, pb),
    })
}

/// Four-way case split on crossing minimality.
pub fn crossing_minimality(coeffs: &AACoefficients) -> Minimality {
    let p = coeffs.stats.P;
    let pb = coeffs.stats_bar.P;
    let d = coeffs.stats.P2 - coeffs.stats.P0 + coeffs.stats.Q - coeffs.stats.S;
    let db = coeffs.stats_bar.P2 - coeffs.stats_bar.P0 + coeffs.stats_bar.Q - coeffs.stats_bar.S;
    match (p == 1, pb == 1) {
        (false, false) => Minimality::Minimal,
        (true, true) => Minimality::ReducibleByTwo,
        (true, false) if d != 0 => Minimality::WithinOneCrossing,
        (false, true) if db != 0 => Minimality::WithinOneCrossing,
        _ => Minimality::Inconclusive,
    }
}

/// Sign test on a Jones polynomial: consistent when the first two or the
/// last two coefficients have a unit lead and a non-positive product.
/// Consecutive means one full t-step; absent coefficients count as zero.
pub fn sign_obstruction<C: Coeff>(v: &LaurentPoly<C>) -> Result<SignVerdict, Error> {
    let (min, max) = match (v.min_exp(), v.max_exp()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::EmptyPoly),
    };
    if min == max {
        // monomial: both second coefficients are taken as zero
        return Ok(SignVerdict::Consistent);
    }
    let a0 = v.coeff(min);
    let a1 = v.coeff(min + 2);
    let an = v.coeff(max);
    let an1 = v.coeff(max - 2);
    let nonpos = |x: &C, y: &C| !((x.is_positive() && y.is_positive()) || (x.is_negative() && y.is_negative()));
    let head = a0.abs().is_one() && nonpos(&a0, &a1);
    let tail = an.abs().is_one() && nonpos(&an1, &an);
    Ok(if head || tail { SignVerdict::Consistent } else { SignVerdict::Obstructed })
}

/// `(-t^{1/2} - t^{-1/2})^{l-1}`, the Jones polynomial of the l-component
/// unlink.
pub fn unlink_jones<C: Coeff>(l: usize) -> Result<LaurentPoly<C>, Error> {
    if l == 0 {
        return Err(Error::Param("an unlink has at least one component".into()));
    }
    let factor = LaurentPoly::from_terms(
        ExpUnit::HalfT,
        [(1i64, -C::one()), (-1i64, -C::one())],
    );
    Ok(factor.pow((l - 1) as u32))
}

/// Tests `v == t^k (-t^{1/2}-t^{-1/2})^{l-1}` for some integer k.
pub fn is_unit_times_unlink<C: Coeff>(v: &LaurentPoly<C>, l: usize) -> Result<bool, Error> {
    let u = unlink_jones::<C>(l)?;
    let (vmin, umin) = match (v.min_exp(), u.min_exp()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Ok(false),
    };
    let shift = vmin - umin;
    if shift % 2 != 0 {
        return Ok(false);
    }
    Ok(*v == u.monomial_shift(C::one(), shift))
}

/// Both clauses of the duality lemma for minimal strongly reduced
/// diagrams: membership of P or P̄ in {0, 2}, and the circuit-rank
/// bounds P+Q ≤ β₁, P̄+Q̄ ≤ β̄₁.
pub fn lemma_dual_check(stats: &SideStats, stats_bar: &SideStats) -> (bool, bool) {
    let membership = matches!(stats.P, 0 | 2) || matches!(stats_bar.P, 0 | 2);
    let bounds = stats.P + stats.Q <= stats.beta1 && stats_bar.P + stats_bar.Q <= stats_bar.beta1;
    (membership, bounds)
}

/// Runs the full pipeline for one certificate: coefficients, minimality,
/// sign test and unlink test.
pub fn aa_report<C: Coeff>(d: &LinkDiagram, cert: &DealternatorCert, cap: usize) -> Result<AAReport, Error> {
    let coeffs = aa_coefficients(d, cert)?;
    let v: LaurentPoly<C> = jones_with_cap(d, cap)?;
    let minimality = crossing_minimality(&coeffs);
    let sign_verdict = sign_obstruction(&v)?;
    let nontrivial = !is_unit_times_unlink(&v, d.component_count())?;
    Ok(AAReport {
        alpha0: coeffs.alpha0,
        alpha1: coeffs.alpha1,
        alpha_cm4: coeffs.alpha_cm4,
        alpha_cm3: coeffs.alpha_cm3,
        stats: coeffs.stats,
        stats_bar: coeffs.stats_bar,
        minimality,
        sign_verdict,
        nontriviality: if nontrivial { Nontriviality::NontrivialJones } else { Nontriviality::Violation },
    })
}

/// One of the seven reference families of marked checkerboard graphs,
/// built as a simplification with multiplicities and a marked pair.
#[derive(Clone, Debug)]
pub struct FamilyGraph {
    pub family_id: u8,
    pub graph: SimplifiedGraph,
    pub v1: usize,
    pub v2: usize,
}

/// Parameters for the family constructors. Families 1-3 take the rung
/// label vectors and a scalar; families 4-7 take the labels shown in
/// their figures, where `a`/`b` on an edge that must stay multiple means
/// multiplicity `a+1`.
#[derive(Clone, Debug)]
pub enum FamilyParams {
    /// Families 1-3: rung labels (a_i, b_i) and the scalar c.
    Rungs { a: Vec<usize>, b: Vec<usize>, c: usize },
    /// Family 4: multiplicity a+1 on the marked cycle edge.
    Scalar { a: usize },
    /// Family 5: chain labels, at least two entries.
    Chain { a: Vec<usize> },
    /// Family 6: diagonal label a, multiplicity b+1 on the cycle edge.
    TwoScalars { a: usize, b: usize },
    /// Family 7: diagonal label a and chain labels (at least two).
    ScalarChain { a: usize, b: Vec<usize> },
}

struct GraphBuilder {
    vertex_count: usize,
    edges: Vec<SimpleEdge>,
    next_crossing: usize,
}

impl GraphBuilder {
    fn new(vertex_count: usize) -> Self {
        Self { vertex_count, edges: Vec::new(), next_crossing: 0 }
    }

    fn vertex(&mut self) -> usize {
        self.vertex_count += 1;
        self.vertex_count - 1
    }

    fn edge(&mut self, a: usize, b: usize, multiplicity: usize) -> usize {
        assert!(a != b && multiplicity >= 1);
        let crossings = (0..multiplicity).map(|i| self.next_crossing + i).collect();
        self.next_crossing += multiplicity;
        let (v1, v2) = (a.min(b), a.max(b));
        self.edges.push(SimpleEdge { v1, v2, multiplicity, crossings });
        self.edges.len() - 1
    }

    fn finish(mut self, dealternator: usize) -> SimplifiedGraph {
        let marker = self.edges[dealternator].crossings.clone();
        self.edges.sort_by_key(|e| (e.v1, e.v2));
        let idx = self.edges.iter().position(|e| e.crossings == marker).unwrap();
        SimplifiedGraph {
            vertex_count: self.vertex_count,
            edges: self.edges,
            loops_removed: 0,
            dealternator: Some(idx),
        }
    }
}

fn positive(name: &str, v: usize) -> Result<(), Error> {
    if v == 0 {
        Err(Error::Param(format!("{name} must be at least 1")))
    } else {
        Ok(())
    }
}

/// Builds the marked graph of one family. The marked pair is (0, 1) and
/// the dealternator is the single edge joining it.
pub fn family_graph(id: u8, params: &FamilyParams) -> Result<FamilyGraph, Error> {
    let graph = match (id, params) {
        (1..=3, FamilyParams::Rungs { a, b, c }) => {
            if a.is_empty() || a.len() != b.len() {
                return Err(Error::Param("rung vectors must be nonempty and equal length".into()));
            }
            for &x in a.iter().chain(b) {
                positive("rung label", x)?;
            }
            positive("c", *c)?;
            let mut g = GraphBuilder::new(2); // 0 = v1, 1 = v2
            let dealt = g.edge(0, 1, 1);
            let hub = g.vertex();
            match id {
                1 => {
                    g.edge(0, hub, 1);
                    for (&ai, &bi) in a.iter().zip(b) {
                        let m = g.vertex();
                        g.edge(hub, m, ai);
                        g.edge(m, 1, bi);
                    }
                    let w1 = g.vertex();
                    let w2 = g.vertex();
                    g.edge(0, w1, 1);
                    g.edge(w1, w2, 1);
                    g.edge(w2, 1, *c);
                }
                2 => {
                    g.edge(0, hub, *c);
                    for (&ai, &bi) in a.iter().zip(b) {
                        let m = g.vertex();
                        g.edge(hub, m, ai);
                        g.edge(m, 1, bi);
                    }
                }
                _ => {
                    g.edge(0, hub, 1);
                    let mut last_mid = 0;
                    for (&ai, &bi) in a.iter().zip(b) {
                        let m = g.vertex();
                        g.edge(hub, m, ai);
                        g.edge(m, 1, bi);
                        last_mid = m;
                    }
                    let w = g.vertex();
                    g.edge(0, w, 1);
                    g.edge(w, last_mid, *c);
                }
            }
            g.finish(dealt)
        }
        (4, FamilyParams::Scalar { a }) => {
            positive("a", *a)?;
            let mut g = GraphBuilder::new(2);
            let dealt = g.edge(0, 1, 1);
            let x = g.vertex();
            let y = g.vertex();
            g.edge(0, x, 1);
            g.edge(x, 1, 1);
            g.edge(1, y, a + 1);
            g.edge(y, 0, 1);
            g.finish(dealt)
        }
        (5, FamilyParams::Chain { a }) => {
            if a.len() < 2 {
                return Err(Error::Param("family 5 chain needs at least two labels".into()));
            }
            for &x in a {
                positive("chain label", x)?;
            }
            let mut g = GraphBuilder::new(2);
            let dealt = g.edge(0, 1, 1);
            let x = g.vertex();
            let y = g.vertex();
            g.edge(0, x, 1);
            g.edge(x, 1, 1);
            g.edge(1, y, 1);
            g.edge(y, 0, 1);
            // chain from x to v2 through fresh interior vertices
            let mut prev = x;
            for (i, &label) in a.iter().enumerate() {
                let next = if i + 1 == a.len() { 1 } else { g.vertex() };
                g.edge(prev, next, label);
                prev = next;
            }
            g.finish(dealt)
        }
        (6, FamilyParams::TwoScalars { a, b }) => {
            positive("a", *a)?;
            positive("b", *b)?;
            let mut g = GraphBuilder::new(2);
            let dealt = g.edge(0, 1, 1);
            let x = g.vertex();
            let y = g.vertex();
            g.edge(0, x, 1);
            g.edge(x, 1, 1);
            g.edge(1, y, b + 1);
            g.edge(y, 0, 1);
            g.edge(x, y, *a);
            g.finish(dealt)
        }
        (7, FamilyParams::ScalarChain { a, b }) => {
            positive("a", *a)?;
            if b.len() < 2 {
                return Err(Error::Param("family 7 chain needs at least two labels".into()));
            }
            for &x in b {
                positive("chain label", x)?;
            }
            let mut g = GraphBuilder::new(2);
            let dealt = g.edge(0, 1, 1);
            let x = g.vertex();
            let y = g.vertex();
            g.edge(0, x, 1);
            g.edge(x, 1, 1);
            g.edge(1, y, 1);
            g.edge(y, 0, 1);
            g.edge(x, y, *a);
            let mut prev = x;
            for (i, &label) in b.iter().enumerate() {
                let next = if i + 1 == b.len() { 1 } else { g.vertex() };
                g.edge(prev, next, label);
                prev = next;
            }
            g.finish(dealt)
        }
        _ => return Err(Error::Param(format!("family {id} does not take these parameters"))),
    };
    Ok(FamilyGraph { family_id: id, graph, v1: 0, v2: 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";

    fn pd(s: &str) -> LinkDiagram {
        LinkDiagram::parse_pd(s).unwrap()
    }

    #[test]
    fn dealternators_of_flipped_trefoil() {
        let d = pd(TREFOIL).flip_crossing(1).unwrap();
        let certs = find_dealternators(&d).unwrap();
        assert!(certs.iter().any(|c| c.crossing_id == 1));
        assert!(matches!(find_dealternators(&pd(TREFOIL)), Err(Error::AlreadyAlternating)));
    }

    #[test]
    fn trefoil_dasbach_lin() {
        let got = dasbach_lin_coeffs(&pd(TREFOIL)).unwrap();
        assert_eq!(
            (got.gamma0, got.gamma1, got.gamma2, got.gamma_cm2, got.gamma_cm1, got.gamma_c),
            (1, -1, 0, 0, -1, -1)
        );
        assert_eq!(got.top_exp, 7);
        assert!(matches!(dasbach_lin_coeffs(&pd("X[1,1,2,2]")), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn minimality_cases() {
        let mk = |p: i64, pb: i64, d: i64, db: i64| {
            let side = |p: i64, d: i64| SideStats {
                v: 4,
                e: 5,
                mu: 0,
                tau: 0,
                beta1: 2,
                P: p,
                P0: 0,
                P1: 0,
                P2: d,
                Q: 0,
                S: 0,
            };
            AACoefficients {
                alpha0: 0,
                alpha1: 0,
                alpha_cm4: 0,
                alpha_cm3: 0,
                top_exp: 0,
                low_exp: 0,
                stats: side(p, d),
                stats_bar: side(pb, db),
            }
        };
        assert_eq!(crossing_minimality(&mk(0, 3, 0, 0)), Minimality::Minimal);
        assert_eq!(crossing_minimality(&mk(1, 1, 0, 0)), Minimality::ReducibleByTwo);
        assert_eq!(crossing_minimality(&mk(1, 0, 1, 0)), Minimality::WithinOneCrossing);
        assert_eq!(crossing_minimality(&mk(0, 1, 0, 2)), Minimality::WithinOneCrossing);
        assert_eq!(crossing_minimality(&mk(1, 0, 0, 0)), Minimality::Inconclusive);
    }

    #[test]
    fn sign_obstruction_cases() {
        type P = LaurentPoly<i64>;
        // t^4 + t^5 - 3t^6 ... - 2t^14 fails both ends
        let bad = P::from_terms(
            ExpUnit::HalfT,
            [(8, 1), (10, 1), (12, -3), (28, -2), (26, 6)],
        );
        assert_eq!(sign_obstruction(&bad).unwrap(), SignVerdict::Obstructed);
        // alternating-style head passes
        let good = P::from_terms(ExpUnit::HalfT, [(0, 1), (2, -2), (4, 4)]);
        assert_eq!(sign_obstruction(&good).unwrap(), SignVerdict::Consistent);
        // monomial is treated permissively
        let mono = P::from_terms(ExpUnit::HalfT, [(6, 5)]);
        assert_eq!(sign_obstruction(&mono).unwrap(), SignVerdict::Consistent);
        assert!(matches!(sign_obstruction(&P::zero(ExpUnit::HalfT)), Err(Error::EmptyPoly)));
    }

    #[test]
    fn unlink_predicates() {
        type P = LaurentPoly<i64>;
        let u1: P = unlink_jones(1).unwrap();
        assert_eq!(u1, P::one(ExpUnit::HalfT));
        let u2: P = unlink_jones(2).unwrap();
        assert_eq!(u2.to_string(), "-t^(-1/2) - t^(1/2)");
        // monomials with coefficient +1 and integer exponent match l = 1
        assert!(is_unit_times_unlink(&P::from_terms(ExpUnit::HalfT, [(6, 1)]), 1).unwrap());
        assert!(!is_unit_times_unlink(&P::from_terms(ExpUnit::HalfT, [(6, -1)]), 1).unwrap());
        assert!(!is_unit_times_unlink(&P::from_terms(ExpUnit::HalfT, [(5, 1)]), 1).unwrap());
        // shifted unlink matches l = 2
        let shifted = u2.monomial_shift(1, 4);
        assert!(is_unit_times_unlink(&shifted, 2).unwrap());
        assert!(!is_unit_times_unlink(&u2.monomial_shift(1, 3), 2).unwrap());
        assert!(!is_unit_times_unlink(&u2.monomial_shift(-1, 4), 2).unwrap());
    }

    #[test]
    fn lemma_dual_clauses() {
        let side = |p: i64, q: i64, b1: i64| SideStats {
            v: 0,
            e: 0,
            mu: 0,
            tau: 0,
            beta1: b1,
            P: p,
            P0: 0,
            P1: 0,
            P2: 0,
            Q: q,
            S: 0,
        };
        assert_eq!(lemma_dual_check(&side(0, 1, 4), &side(3, 0, 4)), (true, true));
        assert_eq!(lemma_dual_check(&side(1, 0, 2), &side(1, 0, 2)), (false, true));
        assert_eq!(lemma_dual_check(&side(2, 0, 2), &side(1, 3, 2)), (true, false));
    }

    #[test]
    fn family_four_matches_its_caption() {
        let fam = family_graph(4, &FamilyParams::Scalar { a: 1 }).unwrap();
        let s = graph_stats(&fam.graph).unwrap();
        let p = aa_path_stats(&fam.graph, fam.v1, fam.v2).unwrap();
        assert_eq!((p.P, p.P0, p.S, s.beta1, p.Q), (2, 1, 0, 2, 0));
    }

    #[test]
    fn family_six_matches_its_caption() {
        let fam = family_graph(6, &FamilyParams::TwoScalars { a: 1, b: 1 }).unwrap();
        let s = graph_stats(&fam.graph).unwrap();
        let p = aa_path_stats(&fam.graph, fam.v1, fam.v2).unwrap();
        assert_eq!((p.S, p.P0, s.beta1), (1, 1, 3));
    }

    #[test]
    fn families_one_to_three_satisfy_lemma_equations() {
        let params = FamilyParams::Rungs { a: vec![1, 2], b: vec![3, 1], c: 2 };
        for id in 1..=3u8 {
            let fam = family_graph(id, &params).unwrap();
            let s = graph_stats(&fam.graph).unwrap();
            let p = aa_path_stats(&fam.graph, fam.v1, fam.v2).unwrap();
            assert_eq!(p.P, 0, "family {id}");
            assert_eq!(p.Q, s.beta1, "family {id}");
        }
    }

    #[test]
    fn family_parameter_validation() {
        assert!(matches!(
            family_graph(5, &FamilyParams::Chain { a: vec![2] }),
            Err(Error::Param(_))
        ));
        assert!(matches!(
            family_graph(1, &FamilyParams::Rungs { a: vec![], b: vec![], c: 1 }),
            Err(Error::Param(_))
        ));
        assert!(matches!(
            family_graph(9, &FamilyParams::Scalar { a: 1 }),
            Err(Error::Param(_))
        ));
        assert!(matches!(
            family_graph(4, &FamilyParams::Scalar { a: 0 }),
            Err(Error::Param(_))
        ));
    }
}
