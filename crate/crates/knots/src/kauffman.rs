//! Kauffman states, the bracket state sum, the Jones polynomial, and
//! all-A/all-B state analysis.
//!
//! The bracket is the full `2^c` state enumeration
//! `⟨D⟩ = Σ_S A^{a(S)-b(S)} (-A²-A⁻²)^{|S|-1}`, grouped by
//! `(b(S), |S|)` so polynomial arithmetic happens once per group rather
//! than once per state. Loop counts come from walking the closed curves
//! of each resolved diagram at the slot level. Crossingless unknot
//! components contribute one loop factor each.

use crate::diagram::LinkDiagram;
use crate::error::Error;
use crate::laurent::{Coeff, ExpUnit, LaurentPoly};

/// Default cap on the crossing count for state enumeration.
pub const DEFAULT_CAP: usize = 24;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Resolution {
    A,
    B,
}

/// One Kauffman state: a resolution per crossing and the loop count of
/// the resulting collection of closed curves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KauffmanState {
    pub resolutions: Vec<Resolution>,
    pub loop_count: usize,
    pub a_count: usize,
    pub b_count: usize,
}

/// Loop membership of every crossing slot, plus the pair of loops each
/// crossing's trace touches.
#[derive(Clone, Debug)]
pub struct StateLoops {
    /// slot incidence (4*crossing + slot) -> loop id.
    pub loop_of_slot: Vec<usize>,
    pub loop_count: usize,
    /// per crossing: the loops containing the two resolved strands.
    pub trace_endpoints: Vec<(usize, usize)>,
}

/// Pairing of slots inside one crossing under a resolution: the
/// A-smoothing joins slots (0,1) and (2,3), the B-smoothing (0,3), (1,2).
fn smoothing_partner(slot: usize, r: Resolution) -> usize {
    match r {
        Resolution::A => slot ^ 1,         // 0<->1, 2<->3
        Resolution::B => [3, 2, 1, 0][slot], // 0<->3, 1<->2
    }
}

/// arc-partner table: slot incidence -> the same arc's other incidence.
fn arc_partner_table(d: &LinkDiagram) -> Vec<usize> {
    let c = d.crossing_count();
    let mut partner = vec![usize::MAX; 4 * c];
    let mut first: Vec<Option<usize>> = vec![None; d.arc_count()];
    for (x, t) in d.crossings().iter().enumerate() {
        for (s, &a) in t.iter().enumerate() {
            let id = 4 * x + s;
            match first[a] {
                None => first[a] = Some(id),
                Some(other) => {
                    partner[id] = other;
                    partner[other] = id;
                }
            }
        }
    }
    partner
}

fn count_loops(partner: &[usize], resolutions: impl Fn(usize) -> Resolution, visited: &mut [u32], stamp: u32) -> usize {
    let mut loops = 0;
    for start in 0..partner.len() {
        if visited[start] == stamp {
            continue;
        }
        loops += 1;
        let mut v = start;
        loop {
            visited[v] = stamp;
            let w = 4 * (v / 4) + smoothing_partner(v % 4, resolutions(v / 4));
            visited[w] = stamp;
            v = partner[w];
            if v == start {
                break;
            }
        }
    }
    loops
}

/// Resolves every crossing and returns the state with its loop count.
/// Crossingless unknot components are counted as loops.
pub fn resolve(d: &LinkDiagram, resolutions: &[Resolution]) -> KauffmanState {
    assert_eq!(resolutions.len(), d.crossing_count(), "one resolution per crossing");
    let loops = state_loops(d, resolutions);
    let a_count = resolutions.iter().filter(|&&r| r == Resolution::A).count();
    KauffmanState {
        resolutions: resolutions.to_vec(),
        loop_count: loops.loop_count + d.unknotted_loops(),
        a_count,
        b_count: resolutions.len() - a_count,
    }
}

/// Full loop bookkeeping for a state, with trace endpoints per crossing.
pub fn state_loops(d: &LinkDiagram, resolutions: &[Resolution]) -> StateLoops {
    let partner = arc_partner_table(d);
    let n = partner.len();
    let mut loop_of_slot = vec![usize::MAX; n];
    let mut loop_count = 0;
    for start in 0..n {
        if loop_of_slot[start] != usize::MAX {
            continue;
        }
        let id = loop_count;
        loop_count += 1;
        let mut v = start;
        loop {
            loop_of_slot[v] = id;
            let w = 4 * (v / 4) + smoothing_partner(v % 4, resolutions[v / 4]);
            loop_of_slot[w] = id;
            v = partner[w];
            if v == start {
                break;
            }
        }
    }
    let trace_endpoints = (0..d.crossing_count())
        .map(|x| match resolutions[x] {
            // A-smoothing strands are {0,1} and {2,3}; B: {0,3} and {1,2}
            Resolution::A => (loop_of_slot[4 * x], loop_of_slot[4 * x + 2]),
            Resolution::B => (loop_of_slot[4 * x], loop_of_slot[4 * x + 1]),
        })
        .collect();
    StateLoops { loop_of_slot, loop_count, trace_endpoints }
}

/// Loop counts of the all-A and all-B states.
pub fn state_counts(d: &LinkDiagram) -> (usize, usize) {
    let all_a = vec![Resolution::A; d.crossing_count()];
    let all_b = vec![Resolution::B; d.crossing_count()];
    let extra = d.unknotted_loops();
    (
        state_loops(d, &all_a).loop_count + extra,
        state_loops(d, &all_b).loop_count + extra,
    )
}

/// Genus of the Turaev surface of a connected diagram:
/// `(2 + c - s_A - s_B) / 2`.
pub fn turaev_genus(d: &LinkDiagram) -> Result<usize, Error> {
    if d.is_split() {
        return Err(Error::Split);
    }
    let (sa, sb) = state_counts(d);
    let val = 2 + d.crossing_count() as i64 - sa as i64 - sb as i64;
    if val < 0 || val % 2 != 0 {
        return Err(Error::Internal(format!("Turaev genus formula gave {val}/2")));
    }
    Ok((val / 2) as usize)
}

/// No trace of the all-A state has both endpoints on one loop.
pub fn is_a_adequate(d: &LinkDiagram) -> bool {
    let loops = state_loops(d, &vec![Resolution::A; d.crossing_count()]);
    loops.trace_endpoints.iter().all(|&(p, q)| p != q)
}

/// No trace of the all-B state has both endpoints on one loop.
pub fn is_b_adequate(d: &LinkDiagram) -> bool {
    let loops = state_loops(d, &vec![Resolution::B; d.crossing_count()]);
    loops.trace_endpoints.iter().all(|&(p, q)| p != q)
}

pub fn bracket<C: Coeff>(d: &LinkDiagram) -> Result<LaurentPoly<C>, Error> {
    bracket_with_cap(d, DEFAULT_CAP)
}

/// Exact bracket by state enumeration, grouped by `(b(S), |S|)`.
pub fn bracket_with_cap<C: Coeff>(d: &LinkDiagram, cap: usize) -> Result<LaurentPoly<C>, Error> {
    let c = d.crossing_count();
    if c > cap {
        return Err(Error::CapExceeded { crossings: c, cap });
    }
    let partner = arc_partner_table(d);
    // counts[b][loops] over all 2^c states
    let max_loops = c + 1;
    let mut counts = vec![0u64; (c + 1) * (max_loops + 1)];
    let mut visited = vec![0u32; 4 * c];
    let mut stamp = 0u32;
    for mask in 0u64..(1u64 << c) {
        stamp += 1;
        let loops = count_loops(
            &partner,
            |x| if mask >> x & 1 == 1 { Resolution::B } else { Resolution::A },
            &mut visited,
            stamp,
        );
        let b = mask.count_ones() as usize;
        counts[b * (max_loops + 1) + loops] += 1;
    }

    let unit = ExpUnit::QuarterA;
    // delta = -A^2 - A^{-2}
    let delta = LaurentPoly::from_terms(
        unit,
        [(2i64, C::from_i64(-1).unwrap()), (-2i64, C::from_i64(-1).unwrap())],
    );
    let extra = d.unknotted_loops() as i64;
    let mut delta_pows: Vec<LaurentPoly<C>> = vec![LaurentPoly::one(unit)];
    let mut out = LaurentPoly::zero(unit);
    for b in 0..=c {
        for loops in 0..=max_loops {
            let n = counts[b * (max_loops + 1) + loops];
            if n == 0 {
                continue;
            }
            let total_loops = loops as i64 + extra;
            debug_assert!(total_loops >= 1);
            let pow = (total_loops - 1) as usize;
            while delta_pows.len() <= pow {
                let next = delta_pows.last().unwrap().mul(&delta).expect("same unit");
                delta_pows.push(next);
            }
            let coeff = C::from_u64(n).ok_or_else(|| Error::Internal("state count out of range".into()))?;
            // A^{a-b} with a = c - b
            let exp = c as i64 - 2 * b as i64;
            let term = delta_pows[pow].monomial_shift(coeff, exp);
            out = out.add(&term)?;
        }
    }
    // a c = 0 diagram has the single empty state; loops came only from
    // unknotted components, handled by the `extra` shift above
    if c == 0 {
        debug_assert!(d.unknotted_loops() >= 1);
    }
    Ok(out)
}

pub fn jones<C: Coeff>(d: &LinkDiagram) -> Result<LaurentPoly<C>, Error> {
    jones_with_cap(d, DEFAULT_CAP)
}

/// `V(t) = (-A³)^{-w(D)} ⟨D⟩` evaluated at `A = t^{-1/4}`.
pub fn jones_with_cap<C: Coeff>(d: &LinkDiagram, cap: usize) -> Result<LaurentPoly<C>, Error> {
    let br = bracket_with_cap::<C>(d, cap)?;
    let w = d.writhe();
    // (-A^3)^{-w} = (-1)^w A^{-3w}
    let sign = if w.rem_euclid(2) == 0 { C::one() } else { -C::one() };
    let shifted = br.monomial_shift(sign, -3 * w);
    shifted.substitute_a_to_t()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentPoly;

    type P = LaurentPoly<i64>;

    fn pd(s: &str) -> LinkDiagram {
        LinkDiagram::parse_pd(s).unwrap()
    }

    fn a_poly(terms: &[(i64, i64)]) -> P {
        P::from_terms(ExpUnit::QuarterA, terms.iter().copied())
    }

    fn t_poly(terms: &[(i64, i64)]) -> P {
        P::from_terms(ExpUnit::HalfT, terms.iter().copied())
    }

    const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";

    #[test]
    fn unknot_bracket_is_one() {
        assert_eq!(bracket::<i64>(&pd("loops=1")).unwrap(), P::one(ExpUnit::QuarterA));
    }

    #[test]
    fn kink_brackets() {
        // positive curl contributes -A^3, negative curl -A^{-3}
        assert_eq!(bracket::<i64>(&pd("X[1,1,2,2]")).unwrap(), a_poly(&[(3, -1)]));
        assert_eq!(bracket::<i64>(&pd("X[1,2,2,1]")).unwrap(), a_poly(&[(-3, -1)]));
    }

    #[test]
    fn trefoil_state_data() {
        let d = pd(TREFOIL);
        let all_a = resolve(&d, &[Resolution::A; 3]);
        assert_eq!(all_a.loop_count, 3);
        assert_eq!((all_a.a_count, all_a.b_count), (3, 0));
        assert_eq!(state_counts(&d), (3, 2));
    }

    #[test]
    fn resolve_zero_crossing() {
        let d = pd("loops=1");
        assert_eq!(resolve(&d, &[]).loop_count, 1);
    }

    #[test]
    fn flipping_one_resolution_changes_loops_by_one() {
        let d = pd(TREFOIL);
        for mask in 0..8u32 {
            let res: Vec<Resolution> = (0..3)
                .map(|i| if mask >> i & 1 == 1 { Resolution::B } else { Resolution::A })
                .collect();
            let base = resolve(&d, &res).loop_count as i64;
            for i in 0..3 {
                let mut flipped = res.clone();
                flipped[i] = if flipped[i] == Resolution::A { Resolution::B } else { Resolution::A };
                let after = resolve(&d, &flipped).loop_count as i64;
                assert_eq!((after - base).abs(), 1);
            }
        }
    }

    #[test]
    fn trefoil_bracket_and_jones() {
        let d = pd(TREFOIL);
        // frozen from the 8-state brute force (see tests/oracle.rs)
        assert_eq!(bracket::<i64>(&d).unwrap(), a_poly(&[(7, 1), (3, -1), (-5, -1)]));
        // w = -3, so V = -t^{-4} + t^{-3} + t^{-1}
        assert_eq!(
            jones::<i64>(&d).unwrap(),
            t_poly(&[(-8, -1), (-6, 1), (-2, 1)])
        );
    }

    #[test]
    fn unlink_bracket_uses_loop_rule() {
        let d = pd("loops=3");
        let delta = a_poly(&[(2, -1), (-2, -1)]);
        assert_eq!(bracket::<i64>(&d).unwrap(), delta.pow(2));
    }

    #[test]
    fn split_union_multiplies_with_loop_factor() {
        // split union of two positive kinks: delta * (-A^3)^2
        let d = pd("X[1,1,2,2] X[3,3,4,4]");
        let delta = a_poly(&[(2, -1), (-2, -1)]);
        let expect = delta.mul(&a_poly(&[(6, 1)])).unwrap();
        assert_eq!(bracket::<i64>(&d).unwrap(), expect);
    }

    #[test]
    fn cap_is_enforced() {
        let d = pd(TREFOIL);
        assert!(matches!(bracket_with_cap::<i64>(&d, 2), Err(Error::CapExceeded { crossings: 3, cap: 2 })));
        assert!(bracket_with_cap::<i64>(&d, 3).is_ok());
    }

    #[test]
    fn turaev_genus_small_cases() {
        assert_eq!(turaev_genus(&pd("loops=1")).unwrap(), 0);
        assert_eq!(turaev_genus(&pd("X[1,1,2,2]")).unwrap(), 0);
        assert_eq!(turaev_genus(&pd(TREFOIL)).unwrap(), 0);
        // one crossing change on an alternating diagram raises the genus
        let flipped = pd(TREFOIL).flip_crossing(0).unwrap();
        assert_eq!(turaev_genus(&flipped).unwrap(), 1);
    }

    #[test]
    fn adequacy_flags() {
        let d = pd(TREFOIL);
        assert!(is_a_adequate(&d));
        assert!(is_b_adequate(&d));
        let kink = pd("X[1,1,2,2]");
        assert_eq!(is_a_adequate(&kink), !is_b_adequate(&kink));
    }

    #[test]
    fn jones_of_unlinks() {
        // V of the l-component unlink is (-t^{1/2} - t^{-1/2})^{l-1}
        let factor = t_poly(&[(1, -1), (-1, -1)]);
        for l in 1..=4u32 {
            let d = pd(&format!("loops={l}"));
            assert_eq!(jones::<i64>(&d).unwrap(), factor.pow(l - 1));
        }
    }

    #[test]
    fn mirror_conjugates_bracket() {
        let d = pd(TREFOIL);
        let m = d.mirror();
        let b = bracket::<i64>(&d).unwrap();
        let bm = bracket::<i64>(&m).unwrap();
        let conj = P::from_terms(ExpUnit::QuarterA, b.terms().map(|(k, &c)| (-k, c)));
        assert_eq!(bm, conj);
    }
}
