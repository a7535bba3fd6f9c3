//! Bounded brute-force oracles.
//!
//! Everything here exists to cross-check the constructive routines at desk
//! scale: enumerate all splines with entries in `[0, bound)`, look for
//! flow-up classes below a candidate, and confirm that every enumerated
//! spline decomposes exactly against the greedy basis.
//!
//! The search is a depth-first walk in vertex order. At each vertex the
//! already-assigned neighbor with the largest label fixes the candidate
//! values (a residue class stepped through `[0, bound)`), and the other
//! assigned edges filter them, so the walk only ever touches labelings
//! whose assigned prefix is congruence-consistent. Every candidate
//! examined, kept or pruned, costs one unit of the work budget; exceeding
//! the budget aborts with [`Error::BudgetExceeded`] rather than running
//! unbounded.

use std::ops::ControlFlow;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::cycle::{self, FlowUpClass};
use crate::error::Error;
use crate::graph::EdgeLabeledGraph;
use crate::spline::Spline;

/// Default work budget: one hundred million candidate values.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Bounds above this would overflow the fixed-width search arithmetic.
const MAX_BOUND: u64 = 1 << 62;

/// Every spline with entries in `[0, bound)`, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationReport {
    pub bound: u64,
    pub splines: Vec<Spline>,
}

impl EnumerationReport {
    pub fn count(&self) -> usize {
        self.splines.len()
    }
}

/// Outcome of scanning for flow-up classes below a candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinimalityVerdict {
    /// No valid class within the bound sits at or below the candidate in
    /// every entry while differing somewhere.
    MinimalWithinBound,
    /// A valid class that is entry-wise at most the candidate and strictly
    /// smaller in at least one entry.
    Counterexample(Spline),
}

/// Outcome of decomposing every enumerated spline against the basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpanVerdict {
    /// Every enumerated spline decomposed exactly and recombined to itself.
    Spanned { count: usize },
    /// A spline the basis failed to reproduce, with the reason.
    Failure { spline: Spline, detail: String },
}

/// Enumerates every spline on `graph` with all entries in `[0, bound)`.
///
/// Results come out in lexicographic order and the walk is deterministic,
/// so identical inputs produce identical reports.
pub fn enumerate_splines(
    graph: &EdgeLabeledGraph,
    bound: u64,
    budget: u64,
) -> Result<EnumerationReport, Error> {
    let caps = check_bound(bound, graph.vertex_count())?;
    let mut splines = Vec::new();
    let lows = vec![0i64; graph.vertex_count()];
    search(graph, &lows, &caps, budget, |values| {
        splines.push(Spline::new(values.iter().map(|&v| BigInt::from(v)).collect()));
        ControlFlow::Continue(())
    })?;
    Ok(EnumerationReport { bound, splines })
}

/// Looks for a valid flow-up class with the candidate's leading-zero count
/// that fits under the candidate entry-wise (within `[0, bound)`) without
/// equaling it. The first such class in lexicographic order is returned as
/// the counterexample.
///
/// For zero leading zeros the classes are the constant labelings, so the
/// scan walks the constant splines below the candidate.
pub fn minimality_scan(
    labels: &[BigInt],
    k: usize,
    candidate: &FlowUpClass,
    bound: u64,
    budget: u64,
) -> Result<MinimalityVerdict, Error> {
    cycle::check_cycle(labels)?;
    let n = labels.len();
    if candidate.spline().len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            actual: candidate.spline().len(),
        });
    }
    if candidate.leading_zeros() != k {
        return Err(Error::OutOfRange(format!(
            "candidate has {} leading zeros, expected {k}",
            candidate.leading_zeros()
        )));
    }
    check_bound(bound, n)?;
    let cand = &candidate.spline().values;

    if k == 0 {
        // Classes without leading zeros are the constant splines.
        let mut remaining = budget;
        let limit = cand
            .iter()
            .map(|v| clip_to(v, bound - 1))
            .min()
            .unwrap_or(0);
        for t in 1..=limit {
            if remaining == 0 {
                return Err(Error::BudgetExceeded { budget });
            }
            remaining -= 1;
            if cand.iter().any(|v| v != &BigInt::from(t)) {
                let constant = Spline::new(vec![BigInt::from(t); n]);
                return Ok(MinimalityVerdict::Counterexample(constant));
            }
        }
        return Ok(MinimalityVerdict::MinimalWithinBound);
    }

    let graph = EdgeLabeledGraph::cycle(labels.to_vec())?;
    let mut lows = vec![0i64; n];
    let mut highs = vec![0i64; n];
    for i in 0..n {
        highs[i] = if i < k {
            0
        } else {
            clip_to(&cand[i], bound - 1)
        };
    }
    // Exactly k leading zeros: the leading entry may not drop to zero.
    lows[k] = 1;

    let mut witness: Option<Spline> = None;
    search(&graph, &lows, &highs, budget, |values| {
        let matches_candidate = values
            .iter()
            .zip(cand)
            .all(|(&v, c)| BigInt::from(v) == *c);
        if matches_candidate {
            ControlFlow::Continue(())
        } else {
            witness = Some(Spline::new(values.iter().map(|&v| BigInt::from(v)).collect()));
            ControlFlow::Break(())
        }
    })?;
    Ok(match witness {
        Some(spline) => MinimalityVerdict::Counterexample(spline),
        None => MinimalityVerdict::MinimalWithinBound,
    })
}

/// Enumerates every spline on the cycle within `[0, bound)` and decomposes
/// each against the greedy basis, requiring exact divisions, a zero final
/// residual, and recombination back to the original.
pub fn span_check(labels: &[BigInt], bound: u64, budget: u64) -> Result<SpanVerdict, Error> {
    cycle::check_cycle(labels)?;
    let graph = EdgeLabeledGraph::cycle(labels.to_vec())?;
    let report = enumerate_splines(&graph, bound, budget)?;
    let basis = cycle::flow_up_basis(labels)?;
    for spline in &report.splines {
        let coefficients = match basis.decompose(spline) {
            Ok(c) => c,
            Err(err) => {
                return Ok(SpanVerdict::Failure {
                    spline: spline.clone(),
                    detail: err.to_string(),
                })
            }
        };
        match basis.recombine(&coefficients) {
            Ok(back) if &back == spline => {}
            Ok(back) => {
                return Ok(SpanVerdict::Failure {
                    spline: spline.clone(),
                    detail: format!("recombination produced {:?} instead", back.values),
                })
            }
            Err(err) => {
                return Ok(SpanVerdict::Failure {
                    spline: spline.clone(),
                    detail: err.to_string(),
                })
            }
        }
    }
    Ok(SpanVerdict::Spanned {
        count: report.count(),
    })
}

fn check_bound(bound: u64, vertex_count: usize) -> Result<Vec<i64>, Error> {
    if bound == 0 {
        return Err(Error::NonPositive {
            what: "bound",
            value: BigInt::zero(),
        });
    }
    if bound > MAX_BOUND {
        return Err(Error::OutOfRange(format!(
            "bound {bound} exceeds the supported search range"
        )));
    }
    Ok(vec![(bound - 1) as i64; vertex_count])
}

/// `min(value, cap)` for a nonnegative big integer, as a search value.
fn clip_to(value: &BigInt, cap: u64) -> i64 {
    match u64::try_from(value) {
        Ok(v) => v.min(cap) as i64,
        Err(_) => cap as i64, // negative entries never reach here; huge ones clip
    }
}

/// A label as seen by the fixed-width search: either a stride that fits
/// in the machine range, or so large that the congruence collapses to
/// equality for any two values below the bound.
#[derive(Clone, Copy)]
enum Stride {
    Fits(i64),
    Equality,
}

fn search(
    graph: &EdgeLabeledGraph,
    lows: &[i64],
    highs: &[i64],
    budget: u64,
    on_spline: impl FnMut(&[i64]) -> ControlFlow<()>,
) -> Result<(), Error> {
    let n = graph.vertex_count();
    // Edges become checkable at their higher endpoint.
    let mut lower_edges: Vec<Vec<(usize, Stride)>> = vec![Vec::new(); n];
    for edge in graph.edges() {
        let (lo, hi) = (edge.u.min(edge.v), edge.u.max(edge.v));
        let stride = match i64::try_from(&edge.label) {
            Ok(l) => Stride::Fits(l),
            Err(_) => Stride::Equality,
        };
        lower_edges[hi - 1].push((lo - 1, stride));
    }
    // Try the coarsest stride first; the rest of the edges only filter.
    for edges in &mut lower_edges {
        edges.sort_by_key(|&(_, stride)| match stride {
            Stride::Equality => i64::MIN,
            Stride::Fits(l) => -l,
        });
    }
    let mut walk = Walk {
        lower_edges,
        lows,
        highs,
        values: Vec::with_capacity(n),
        remaining: budget,
        initial_budget: budget,
        on_spline,
    };
    // A break here means the caller stopped early; both ways we are done.
    let _ = walk.descend()?;
    Ok(())
}

struct Walk<'a, F: FnMut(&[i64]) -> ControlFlow<()>> {
    lower_edges: Vec<Vec<(usize, Stride)>>,
    lows: &'a [i64],
    highs: &'a [i64],
    values: Vec<i64>,
    remaining: u64,
    initial_budget: u64,
    on_spline: F,
}

impl<F: FnMut(&[i64]) -> ControlFlow<()>> Walk<'_, F> {
    fn descend(&mut self) -> Result<ControlFlow<()>, Error> {
        let depth = self.values.len();
        if depth == self.lows.len() {
            return Ok((self.on_spline)(&self.values));
        }
        let (lo, hi) = (self.lows[depth], self.highs[depth]);
        match self.lower_edges[depth].first().copied() {
            // First vertex of a component: every value in range.
            None => {
                let mut candidate = lo;
                while candidate <= hi {
                    if let ControlFlow::Break(()) = self.offer(depth, candidate, 0)? {
                        return Ok(ControlFlow::Break(()));
                    }
                    candidate += 1;
                }
            }
            Some((neighbor, Stride::Equality)) => {
                let candidate = self.values[neighbor];
                if lo <= candidate && candidate <= hi {
                    if let ControlFlow::Break(()) = self.offer(depth, candidate, 1)? {
                        return Ok(ControlFlow::Break(()));
                    }
                }
            }
            Some((neighbor, Stride::Fits(step))) => {
                let base = self.values[neighbor].rem_euclid(step);
                let mut candidate = if base >= lo {
                    base
                } else {
                    // Smallest value `>= lo` in the residue class of `base`.
                    base + (lo - base + step - 1) / step * step
                };
                while candidate <= hi {
                    if let ControlFlow::Break(()) = self.offer(depth, candidate, 1)? {
                        return Ok(ControlFlow::Break(()));
                    }
                    match candidate.checked_add(step) {
                        Some(next) => candidate = next,
                        None => break,
                    }
                }
            }
        }
        Ok(ControlFlow::Continue(()))
    }

    /// Charges the budget, filters against the remaining assigned edges,
    /// and recurses when the candidate survives.
    fn offer(&mut self, depth: usize, candidate: i64, skip: usize) -> Result<ControlFlow<()>, Error> {
        if self.remaining == 0 {
            return Err(Error::BudgetExceeded {
                budget: self.initial_budget,
            });
        }
        self.remaining -= 1;
        let consistent = self.lower_edges[depth][skip..].iter().all(|&(j, stride)| {
            let assigned = self.values[j];
            match stride {
                Stride::Equality => candidate == assigned,
                Stride::Fits(l) => (candidate - assigned).rem_euclid(l) == 0,
            }
        });
        if !consistent {
            return Ok(ControlFlow::Continue(()));
        }
        self.values.push(candidate);
        let flow = self.descend()?;
        self.values.pop();
        Ok(flow)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spline::verify;
    use proptest::prelude::*;

    fn bigs(ns: &[i64]) -> Vec<BigInt> {
        ns.iter().copied().map(BigInt::from).collect()
    }

    fn triangle() -> EdgeLabeledGraph {
        EdgeLabeledGraph::cycle(bigs(&[2, 3, 5])).unwrap()
    }

    /// Ground truth for the oracle itself: filter the full `bound^n` grid
    /// through the generic verifier.
    fn naive_enumerate(graph: &EdgeLabeledGraph, bound: u64) -> Vec<Spline> {
        let n = graph.vertex_count();
        let bound = bound as i64;
        let mut digits = vec![0i64; n];
        let mut out = Vec::new();
        loop {
            let spline = Spline::from_i64(&digits);
            if verify(graph, &spline).unwrap().is_valid() {
                out.push(spline);
            }
            let mut pos = n;
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < bound {
                    break;
                }
                digits[pos] = 0;
            }
        }
    }

    #[test]
    fn triangle_enumeration_count_is_frozen() {
        // 30 choices for the free first entry, 15 survivors across the
        // first edge, 2 per prefix across the rest: 900.
        let report = enumerate_splines(&triangle(), 30, DEFAULT_BUDGET).unwrap();
        assert_eq!(report.count(), 900);
        assert_eq!(report.splines, naive_enumerate(&triangle(), 30));
    }

    #[test]
    fn tight_bounds_leave_only_constants() {
        let report = enumerate_splines(&triangle(), 2, DEFAULT_BUDGET).unwrap();
        let values: Vec<Vec<i64>> = report
            .splines
            .iter()
            .map(|s| s.values.iter().map(|v| v.try_into().unwrap()).collect())
            .collect();
        assert_eq!(values, vec![vec![0, 0, 0], vec![1, 1, 1]]);

        let report = enumerate_splines(&triangle(), 1, DEFAULT_BUDGET).unwrap();
        assert_eq!(report.count(), 1);
    }

    #[test]
    fn enumeration_rejects_zero_bound_and_exhausted_budget() {
        assert!(matches!(
            enumerate_splines(&triangle(), 0, DEFAULT_BUDGET),
            Err(Error::NonPositive { .. })
        ));
        assert!(matches!(
            enumerate_splines(&triangle(), 30, 10),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn enumeration_handles_huge_labels_as_equality() {
        // A label beyond the machine range forces equal endpoint values.
        let huge = BigInt::from(2).pow(100);
        let g = EdgeLabeledGraph::general(2, vec![(1, 2, huge)]).unwrap();
        let report = enumerate_splines(&g, 5, DEFAULT_BUDGET).unwrap();
        let constants: Vec<bool> = report
            .splines
            .iter()
            .map(|s| s.values[0] == s.values[1])
            .collect();
        assert_eq!(report.count(), 5);
        assert!(constants.iter().all(|&c| c));
    }

    #[test]
    fn scan_confirms_greedy_triangle_classes() {
        let labels = bigs(&[2, 3, 5]);
        for k in [1, 2] {
            let class = cycle::smallest_flow_up(&labels, k).unwrap();
            let verdict = minimality_scan(&labels, k, &class, 30, DEFAULT_BUDGET).unwrap();
            assert_eq!(verdict, MinimalityVerdict::MinimalWithinBound);
        }
    }

    #[test]
    fn scan_finds_class_below_inflated_candidate() {
        let labels = bigs(&[2, 3, 5]);
        let candidate =
            FlowUpClass::new(&labels, Spline::from_i64(&[0, 4, 10])).unwrap();
        let verdict = minimality_scan(&labels, 1, &candidate, 30, DEFAULT_BUDGET).unwrap();
        assert_eq!(
            verdict,
            MinimalityVerdict::Counterexample(Spline::from_i64(&[0, 2, 5]))
        );
    }

    #[test]
    fn scan_handles_constant_classes() {
        let labels = bigs(&[2, 3, 5]);
        let ones = cycle::smallest_flow_up(&labels, 0).unwrap();
        assert_eq!(
            minimality_scan(&labels, 0, &ones, 30, DEFAULT_BUDGET).unwrap(),
            MinimalityVerdict::MinimalWithinBound
        );
        let tripled = FlowUpClass::new(&labels, Spline::from_i64(&[3, 3, 3])).unwrap();
        assert_eq!(
            minimality_scan(&labels, 0, &tripled, 30, DEFAULT_BUDGET).unwrap(),
            MinimalityVerdict::Counterexample(Spline::from_i64(&[1, 1, 1]))
        );
    }

    #[test]
    fn scan_rejects_mismatched_leading_zero_count() {
        let labels = bigs(&[2, 3, 5]);
        let class = cycle::smallest_flow_up(&labels, 1).unwrap();
        assert!(matches!(
            minimality_scan(&labels, 2, &class, 30, DEFAULT_BUDGET),
            Err(Error::OutOfRange(_))
        ));
    }

    #[test]
    fn span_check_covers_triangle_and_all_ones() {
        assert_eq!(
            span_check(&bigs(&[2, 3, 5]), 30, DEFAULT_BUDGET).unwrap(),
            SpanVerdict::Spanned { count: 900 }
        );
        // Every labeling is a spline when all labels are 1.
        assert_eq!(
            span_check(&bigs(&[1, 1, 1]), 3, DEFAULT_BUDGET).unwrap(),
            SpanVerdict::Spanned { count: 27 }
        );
    }

    #[test]
    fn span_check_covers_square_within_lcm() {
        let verdict = span_check(&bigs(&[5, 2, 4, 8]), 40, DEFAULT_BUDGET).unwrap();
        let report =
            enumerate_splines(&EdgeLabeledGraph::cycle(bigs(&[5, 2, 4, 8])).unwrap(), 40, DEFAULT_BUDGET)
                .unwrap();
        assert_eq!(
            verdict,
            SpanVerdict::Spanned {
                count: report.count()
            }
        );
    }

    proptest! {
        #[test]
        fn pruned_walk_equals_naive_filter(
            labels in proptest::collection::vec(1i64..=6, 3..=4),
            bound in 1u64..=6,
        ) {
            let g = EdgeLabeledGraph::cycle(bigs(&labels)).unwrap();
            let pruned = enumerate_splines(&g, bound, DEFAULT_BUDGET).unwrap();
            prop_assert_eq!(pruned.splines, naive_enumerate(&g, bound));
        }

        #[test]
        fn enumerated_splines_are_valid_sorted_and_in_range(
            labels in proptest::collection::vec(1i64..=10, 3..=5),
            bound in 1u64..=12,
        ) {
            let g = EdgeLabeledGraph::cycle(bigs(&labels)).unwrap();
            let report = enumerate_splines(&g, bound, DEFAULT_BUDGET).unwrap();
            let top = BigInt::from(bound);
            for s in &report.splines {
                prop_assert!(verify(&g, s).unwrap().is_valid());
                prop_assert!(s.values.iter().all(|v| v >= &BigInt::zero() && v < &top));
            }
            let mut sorted = report.splines.clone();
            sorted.sort_by(|a, b| a.values.cmp(&b.values));
            sorted.dedup();
            prop_assert_eq!(&report.splines, &sorted);
        }

        #[test]
        fn greedy_classes_pass_the_scan_on_small_cycles(
            labels in proptest::collection::vec(1i64..=12, 3..=5),
        ) {
            let label_vec = bigs(&labels);
            let bound = crate::arith::lcm_all(&label_vec).unwrap();
            let bound = u64::try_from(&bound).unwrap();
            for k in 0..labels.len() {
                let class = cycle::smallest_flow_up(&label_vec, k).unwrap();
                let verdict =
                    minimality_scan(&label_vec, k, &class, bound.max(2), DEFAULT_BUDGET).unwrap();
                prop_assert_eq!(verdict, MinimalityVerdict::MinimalWithinBound);
            }
        }
    }
}
