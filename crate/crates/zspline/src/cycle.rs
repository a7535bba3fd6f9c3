//! The flow-up basis for splines on cycles.
//!
//! Fix a cycle `C_n` with labels `l_1 ... l_n` (edge `i` joins `v_i` and
//! `v_{i+1}`, edge `n` closes back to `v_1`). A *flow-up class* with `k`
//! leading zeros is a spline whose first `k` entries are zero and whose
//! entry `k+1` is not. For `k = 0` the classes are the constant splines,
//! generated by the all-ones labeling.
//!
//! Two facts drive everything here. First, any spline with `k` leading
//! zeros has entry `k+1` divisible by both `l_k` (the edge into the last
//! zero) and `gcd(l_{k+1}, ..., l_n)` (pushing the closing congruence back
//! around the rest of the cycle), so
//! `lcm(l_k, gcd(l_{k+1}, ..., l_n))` is the smallest value entry `k+1`
//! can take. Second, a partial labeling `0, ..., 0, g_{k+1}, ..., g_i` can
//! be completed to a full spline exactly when `g_i` is divisible by
//! `gcd(l_i, ..., l_n)`, so choosing each next entry as the least
//! nonnegative solution of
//!
//! ```text
//! g ≡ g_{i-1}  (mod l_{i-1})      stay a spline across edge i-1
//! g ≡ 0        (mod gcd(l_i ... l_n))   stay completable
//! ```
//!
//! never reaches a dead end. That greedy walk yields one distinguished
//! class per leading-zero count; stacked together they are triangular with
//! positive leading entries, and every spline peels off against them with
//! exact integer divisions. A failed division or a nonzero final residual
//! therefore signals a bug and is reported as [`Error::Internal`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{crt_pair, Congruence};
use crate::error::Error;
use crate::spline::Spline;

/// A spline on a cycle together with its leading-zero count.
///
/// Invariants: exactly `leading_zeros` zeros before a positive leading
/// entry, and the values satisfy every cycle congruence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowUpClass {
    leading_zeros: usize,
    spline: Spline,
}

impl FlowUpClass {
    /// Wraps an arbitrary spline as a flow-up class, counting its leading
    /// zeros. The values must satisfy every cycle congruence, contain no
    /// negative entries, and not be identically zero.
    pub fn new(labels: &[BigInt], spline: Spline) -> Result<Self, Error> {
        check_cycle(labels)?;
        if spline.len() != labels.len() {
            return Err(Error::LengthMismatch {
                expected: labels.len(),
                actual: spline.len(),
            });
        }
        if let Some(edge) = first_violation(labels, &spline.values) {
            return Err(Error::InvalidSpline(format!(
                "edge {edge} congruence fails; not a spline on this cycle"
            )));
        }
        if spline.values.iter().any(|v| v < &BigInt::zero()) {
            return Err(Error::InvalidSpline(
                "flow-up classes have nonnegative entries".to_string(),
            ));
        }
        let leading_zeros = spline.leading_zeros();
        if leading_zeros == spline.len() {
            return Err(Error::InvalidSpline(
                "the zero labeling is not a flow-up class".to_string(),
            ));
        }
        Ok(FlowUpClass {
            leading_zeros,
            spline,
        })
    }

    pub fn leading_zeros(&self) -> usize {
        self.leading_zeros
    }

    pub fn spline(&self) -> &Spline {
        &self.spline
    }

    pub fn into_spline(self) -> Spline {
        self.spline
    }

    /// The first nonzero entry.
    pub fn leading_entry(&self) -> &BigInt {
        &self.spline.values[self.leading_zeros]
    }
}

/// The `n` greedy flow-up classes on a cycle, ordered by leading-zero
/// count. Computing the stack once and reusing it is the cheap way to
/// decompose many splines against the same labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowUpBasis {
    labels: Vec<BigInt>,
    classes: Vec<FlowUpClass>,
}

impl FlowUpBasis {
    pub fn labels(&self) -> &[BigInt] {
        &self.labels
    }

    pub fn classes(&self) -> &[FlowUpClass] {
        &self.classes
    }

    /// Writes `spline` as an integer combination of the basis classes.
    ///
    /// Peels top-down: the coefficient of class `k` is the residual's entry
    /// `k+1` divided by the class's leading entry. Valid splines always
    /// divide exactly; anything else is reported as an internal failure.
    pub fn decompose(&self, spline: &Spline) -> Result<Vec<BigInt>, Error> {
        let n = self.labels.len();
        if spline.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                actual: spline.len(),
            });
        }
        if let Some(edge) = first_violation(&self.labels, &spline.values) {
            return Err(Error::InvalidSpline(format!(
                "edge {edge} congruence fails; only valid splines decompose"
            )));
        }
        let mut residual = spline.clone();
        let mut coefficients = Vec::with_capacity(n);
        for (k, class) in self.classes.iter().enumerate() {
            let entry = residual.values[k].clone();
            let (coefficient, remainder) = entry.div_rem(class.leading_entry());
            if !remainder.is_zero() {
                return Err(Error::Internal(format!(
                    "peel step {k}: residual entry {entry} is not a multiple of the leading entry {}",
                    class.leading_entry()
                )));
            }
            residual = residual.add(&class.spline().scale(&-&coefficient))?;
            coefficients.push(coefficient);
        }
        if residual.values.iter().any(|v| !v.is_zero()) {
            return Err(Error::Internal(
                "nonzero residual after peeling every class".to_string(),
            ));
        }
        Ok(coefficients)
    }

    /// The integer combination `sum(coefficients[k] * class_k)`.
    pub fn recombine(&self, coefficients: &[BigInt]) -> Result<Spline, Error> {
        let n = self.labels.len();
        if coefficients.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                actual: coefficients.len(),
            });
        }
        let mut acc = Spline::new(vec![BigInt::zero(); n]);
        for (coefficient, class) in coefficients.iter().zip(&self.classes) {
            acc = acc.add(&class.spline().scale(coefficient))?;
        }
        Ok(acc)
    }
}

/// The smallest possible leading entry of a flow-up class with `k >= 1`
/// leading zeros: `lcm(l_k, gcd(l_{k+1}, ..., l_n))`. For `k = n-1` the
/// gcd degenerates to the single closing label, giving `lcm(l_{n-1}, l_n)`.
pub fn smallest_leading_entry(labels: &[BigInt], k: usize) -> Result<BigInt, Error> {
    check_cycle(labels)?;
    let n = labels.len();
    if k < 1 || k > n - 1 {
        return Err(Error::OutOfRange(format!(
            "the leading-entry formula applies for 1 <= k <= {}, got {k}",
            n - 1
        )));
    }
    let suffix = labels[k..]
        .iter()
        .fold(BigInt::zero(), |acc, l| acc.gcd(l));
    Ok(labels[k - 1].lcm(&suffix))
}

/// The greedy flow-up class with `k` leading zeros: smallest admissible
/// leading entry, then each later entry chosen as the least nonnegative
/// value that keeps the chain congruent and completable.
pub fn smallest_flow_up(labels: &[BigInt], k: usize) -> Result<FlowUpClass, Error> {
    check_cycle(labels)?;
    let n = labels.len();
    if k > n - 1 {
        return Err(Error::OutOfRange(format!(
            "a flow-up class on {n} vertices has at most {} leading zeros, got {k}",
            n - 1
        )));
    }
    let suffix = suffix_gcds(labels);
    greedy_class(labels, &suffix, k)
}

/// All `n` greedy classes, from the all-ones class up to `n-1` zeros.
pub fn flow_up_basis(labels: &[BigInt]) -> Result<FlowUpBasis, Error> {
    check_cycle(labels)?;
    let suffix = suffix_gcds(labels);
    let classes = (0..labels.len())
        .map(|k| greedy_class(labels, &suffix, k))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FlowUpBasis {
        labels: labels.to_vec(),
        classes,
    })
}

/// Convenience for one-off decompositions; reuse a [`FlowUpBasis`] when
/// decomposing many splines on the same cycle.
pub fn decompose(labels: &[BigInt], spline: &Spline) -> Result<Vec<BigInt>, Error> {
    flow_up_basis(labels)?.decompose(spline)
}

/// Convenience for one-off recombinations.
pub fn recombine(labels: &[BigInt], coefficients: &[BigInt]) -> Result<Spline, Error> {
    flow_up_basis(labels)?.recombine(coefficients)
}

/// Collapses the first edge of a cycle under a spline whose first two
/// entries are zero, yielding the shorter cycle `(l_2, ..., l_n)` and the
/// spline with its first entry dropped. Requires `n >= 4`: contracting a
/// triangle would leave a two-edge cycle, which the model does not
/// support.
pub fn contract_first_edge(
    labels: &[BigInt],
    spline: &Spline,
) -> Result<(Vec<BigInt>, Spline), Error> {
    check_cycle(labels)?;
    let n = labels.len();
    if n < 4 {
        return Err(Error::OutOfRange(
            "contracting a 3-cycle would leave only two edges".to_string(),
        ));
    }
    if spline.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            actual: spline.len(),
        });
    }
    if let Some(edge) = first_violation(labels, &spline.values) {
        return Err(Error::InvalidSpline(format!(
            "edge {edge} congruence fails; contraction needs a valid spline"
        )));
    }
    if !spline.values[0].is_zero() || !spline.values[1].is_zero() {
        return Err(Error::InvalidSpline(
            "contraction merges the endpoints of the first edge; both must carry zero".to_string(),
        ));
    }
    let shorter_labels = labels[1..].to_vec();
    let shorter = Spline::new(spline.values[1..].to_vec());
    Ok((shorter_labels, shorter))
}

/// Inverse of [`contract_first_edge`]: splits a new first edge off a spline
/// whose first entry is zero, producing the longer cycle
/// `(new_label, l_1, ..., l_n)` and the spline with an extra leading zero.
pub fn add_leading_zero(
    labels: &[BigInt],
    spline: &Spline,
    new_label: &BigInt,
) -> Result<(Vec<BigInt>, Spline), Error> {
    check_cycle(labels)?;
    if new_label < &BigInt::one() {
        return Err(Error::NonPositive {
            what: "edge label",
            value: new_label.clone(),
        });
    }
    let n = labels.len();
    if spline.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            actual: spline.len(),
        });
    }
    if let Some(edge) = first_violation(labels, &spline.values) {
        return Err(Error::InvalidSpline(format!(
            "edge {edge} congruence fails; edge addition needs a valid spline"
        )));
    }
    if !spline.values[0].is_zero() {
        return Err(Error::InvalidSpline(
            "the split vertex duplicates a zero; the first entry must be zero".to_string(),
        ));
    }
    let mut longer_labels = Vec::with_capacity(n + 1);
    longer_labels.push(new_label.clone());
    longer_labels.extend_from_slice(labels);
    let mut values = Vec::with_capacity(n + 1);
    values.push(BigInt::zero());
    values.extend_from_slice(&spline.values);
    Ok((longer_labels, Spline::new(values)))
}

/// First violated edge (1-based) of the cycle congruences, if any.
pub(crate) fn first_violation(labels: &[BigInt], values: &[BigInt]) -> Option<usize> {
    let n = labels.len();
    for (i, label) in labels.iter().enumerate() {
        let (a, b) = if i + 1 < n {
            (&values[i], &values[i + 1])
        } else {
            (&values[0], &values[n - 1])
        };
        if !(a - b).mod_floor(label).is_zero() {
            return Some(i + 1);
        }
    }
    None
}

pub(crate) fn check_cycle(labels: &[BigInt]) -> Result<(), Error> {
    if labels.len() < 3 {
        return Err(Error::InvalidGraph(format!(
            "a cycle needs at least 3 edges, got {}",
            labels.len()
        )));
    }
    for label in labels {
        if label < &BigInt::one() {
            return Err(Error::NonPositive {
                what: "edge label",
                value: label.clone(),
            });
        }
    }
    Ok(())
}

/// `suffix[i] = gcd(labels[i], ..., labels[n-1])`.
fn suffix_gcds(labels: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); labels.len()];
    let mut acc = BigInt::zero();
    for i in (0..labels.len()).rev() {
        acc = acc.gcd(&labels[i]);
        out[i] = acc.clone();
    }
    out
}

fn greedy_class(labels: &[BigInt], suffix: &[BigInt], k: usize) -> Result<FlowUpClass, Error> {
    let n = labels.len();
    if k == 0 {
        return Ok(FlowUpClass {
            leading_zeros: 0,
            spline: Spline::new(vec![BigInt::one(); n]),
        });
    }
    let mut values = vec![BigInt::zero(); n];
    values[k] = labels[k - 1].lcm(&suffix[k]);
    for i in k + 1..n {
        let chain = Congruence::new(values[i - 1].clone(), labels[i - 1].clone())?;
        let completable = Congruence::new(BigInt::zero(), suffix[i].clone())?;
        match crt_pair(&chain, &completable) {
            Some(solution) => values[i] = solution.value,
            // The previous entry divides by gcd(l_{i-1}, l_i, ..., l_n) by
            // construction, which is exactly the compatibility condition.
            None => {
                return Err(Error::Internal(format!(
                    "greedy walk hit an incompatible step at vertex {}",
                    i + 1
                )))
            }
        }
    }
    debug_assert!(first_violation(labels, &values).is_none());
    Ok(FlowUpClass {
        leading_zeros: k,
        spline: Spline::new(values),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::EdgeLabeledGraph;
    use crate::spline::verify;
    use proptest::prelude::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn bigs(ns: &[i64]) -> Vec<BigInt> {
        ns.iter().copied().map(BigInt::from).collect()
    }

    fn class_values(c: &FlowUpClass) -> Vec<i64> {
        c.spline().values.iter().map(|v| v.try_into().unwrap()).collect()
    }

    #[test]
    fn leading_entry_formula_frozen_cases() {
        assert_eq!(smallest_leading_entry(&bigs(&[2, 3, 5]), 1).unwrap(), big(2));
        assert_eq!(smallest_leading_entry(&bigs(&[2, 3, 5]), 2).unwrap(), big(15));
        assert_eq!(smallest_leading_entry(&bigs(&[5, 4, 6]), 2).unwrap(), big(12));
        assert_eq!(smallest_leading_entry(&bigs(&[5, 2, 4, 8]), 1).unwrap(), big(10));
    }

    #[test]
    fn leading_entry_rejects_out_of_range_class_numbers() {
        let labels = bigs(&[2, 3, 5]);
        assert!(matches!(
            smallest_leading_entry(&labels, 0),
            Err(Error::OutOfRange(_))
        ));
        assert!(matches!(
            smallest_leading_entry(&labels, 3),
            Err(Error::OutOfRange(_))
        ));
    }

    #[test]
    fn greedy_classes_match_worked_triangles() {
        assert_eq!(
            class_values(&smallest_flow_up(&bigs(&[5, 4, 6]), 2).unwrap()),
            vec![0, 0, 12]
        );
        assert_eq!(
            class_values(&smallest_flow_up(&bigs(&[6, 10, 15]), 2).unwrap()),
            vec![0, 0, 30]
        );
        assert_eq!(
            class_values(&smallest_flow_up(&bigs(&[2, 3, 5]), 1).unwrap()),
            vec![0, 2, 5]
        );
    }

    #[test]
    fn greedy_square_class_takes_zero_when_allowed() {
        // After the forced leading 10, every later entry may drop to 0.
        assert_eq!(
            class_values(&smallest_flow_up(&bigs(&[5, 2, 4, 8]), 1).unwrap()),
            vec![0, 10, 0, 0]
        );
    }

    #[test]
    fn triangle_basis_matches_worked_example() {
        let basis = flow_up_basis(&bigs(&[2, 3, 5])).unwrap();
        let rows: Vec<Vec<i64>> = basis.classes().iter().map(class_values).collect();
        assert_eq!(rows, vec![vec![1, 1, 1], vec![0, 2, 5], vec![0, 0, 15]]);
    }

    #[test]
    fn square_basis_matches_worked_example() {
        let basis = flow_up_basis(&bigs(&[5, 2, 4, 8])).unwrap();
        let rows: Vec<Vec<i64>> = basis.classes().iter().map(class_values).collect();
        assert_eq!(
            rows,
            vec![
                vec![1, 1, 1, 1],
                vec![0, 10, 0, 0],
                vec![0, 0, 4, 0],
                vec![0, 0, 0, 8]
            ]
        );
    }

    #[test]
    fn decompose_square_spline_recovers_known_coefficients() {
        let labels = bigs(&[5, 2, 4, 8]);
        let spline = Spline::from_i64(&[1, 11, 13, 17]);
        let coefficients = decompose(&labels, &spline).unwrap();
        assert_eq!(coefficients, bigs(&[1, 1, 3, 2]));
        assert_eq!(recombine(&labels, &coefficients).unwrap(), spline);
    }

    #[test]
    fn decompose_rejects_non_splines() {
        let err = decompose(&bigs(&[2, 3, 5]), &Spline::from_i64(&[0, 1, 5])).unwrap_err();
        assert!(matches!(err, Error::InvalidSpline(_)));
    }

    #[test]
    fn decompose_handles_negative_entries() {
        let labels = bigs(&[2, 3, 5]);
        let spline = Spline::from_i64(&[-3, -3, 12]);
        let coefficients = decompose(&labels, &spline).unwrap();
        assert_eq!(recombine(&labels, &coefficients).unwrap(), spline);
        assert_eq!(coefficients[0], big(-3));
    }

    #[test]
    fn recombine_rejects_wrong_coefficient_count() {
        let err = recombine(&bigs(&[2, 3, 5]), &bigs(&[1, 2])).unwrap_err();
        assert!(matches!(err, Error::LengthMismatch { .. }));
    }

    #[test]
    fn contraction_drops_the_merged_zero() {
        let (labels, spline) =
            contract_first_edge(&bigs(&[5, 2, 4, 8]), &Spline::from_i64(&[0, 0, 4, 0])).unwrap();
        assert_eq!(labels, bigs(&[2, 4, 8]));
        assert_eq!(spline, Spline::from_i64(&[0, 4, 0]));
        // The result is a genuine spline on the shorter cycle.
        let g = EdgeLabeledGraph::cycle(labels).unwrap();
        assert!(verify(&g, &spline).unwrap().is_valid());
    }

    #[test]
    fn contraction_refuses_triangles() {
        let err =
            contract_first_edge(&bigs(&[2, 3, 5]), &Spline::from_i64(&[0, 0, 15])).unwrap_err();
        assert!(matches!(err, Error::OutOfRange(_)));
    }

    #[test]
    fn contraction_requires_two_leading_zeros() {
        let err =
            contract_first_edge(&bigs(&[5, 2, 4, 8]), &Spline::from_i64(&[0, 10, 0, 0]))
                .unwrap_err();
        assert!(matches!(err, Error::InvalidSpline(_)));
    }

    #[test]
    fn edge_addition_inverts_contraction() {
        let (labels, spline) =
            add_leading_zero(&bigs(&[2, 4, 8]), &Spline::from_i64(&[0, 4, 0]), &big(5)).unwrap();
        assert_eq!(labels, bigs(&[5, 2, 4, 8]));
        assert_eq!(spline, Spline::from_i64(&[0, 0, 4, 0]));
    }

    #[test]
    fn edge_addition_requires_zero_first_entry() {
        let err =
            add_leading_zero(&bigs(&[2, 3, 5]), &Spline::from_i64(&[1, 1, 1]), &big(7)).unwrap_err();
        assert!(matches!(err, Error::InvalidSpline(_)));
    }

    fn label_vec() -> impl Strategy<Value = Vec<BigInt>> {
        proptest::collection::vec(1i64..=30, 3..=8).prop_map(|v| bigs(&v))
    }

    proptest! {
        #[test]
        fn greedy_classes_are_valid_triangular_and_nonnegative(labels in label_vec()) {
            let n = labels.len();
            let g = EdgeLabeledGraph::cycle(labels.clone()).unwrap();
            let basis = flow_up_basis(&labels).unwrap();
            for (k, class) in basis.classes().iter().enumerate() {
                prop_assert_eq!(class.leading_zeros(), k);
                prop_assert_eq!(class.spline().leading_zeros(), k);
                prop_assert!(class.leading_entry() > &BigInt::zero());
                prop_assert!(class.spline().values.iter().all(|v| v >= &BigInt::zero()));
                prop_assert_eq!(class.spline().len(), n);
                prop_assert!(verify(&g, class.spline()).unwrap().is_valid());
            }
        }

        #[test]
        fn greedy_leading_entries_match_the_formula(labels in label_vec()) {
            for k in 1..labels.len() {
                let class = smallest_flow_up(&labels, k).unwrap();
                prop_assert_eq!(
                    class.leading_entry().clone(),
                    smallest_leading_entry(&labels, k).unwrap()
                );
            }
        }

        /// Every entry of a flow-up class is constrained from both sides of
        /// the zero prefix: entry i divides by the gcd of the labels from
        /// the last zero up to edge i-1, and by the gcd of the labels from
        /// edge i to the closing edge.
        #[test]
        fn class_entries_carry_prefix_and_suffix_divisibility(labels in label_vec()) {
            let n = labels.len();
            for k in 1..n {
                let class = smallest_flow_up(&labels, k).unwrap();
                let values = &class.spline().values;
                for i in k..n {
                    let suffix = labels[i..].iter().fold(BigInt::zero(), |a, l| a.gcd(l));
                    prop_assert!(values[i].mod_floor(&suffix).is_zero());
                    let prefix = labels[k - 1..i].iter().fold(BigInt::zero(), |a, l| a.gcd(l));
                    prop_assert!(values[i].mod_floor(&prefix).is_zero());
                }
            }
        }

        #[test]
        fn decompose_then_recombine_is_identity(
            labels in label_vec(),
            raw in proptest::collection::vec(-9i64..=9, 8),
        ) {
            let n = labels.len();
            let basis = flow_up_basis(&labels).unwrap();
            let coefficients = bigs(&raw[..n]);
            let spline = basis.recombine(&coefficients).unwrap();
            let recovered = basis.decompose(&spline).unwrap();
            prop_assert_eq!(recovered, coefficients);
        }

        #[test]
        fn contraction_and_addition_are_mutually_inverse(
            labels in proptest::collection::vec(1i64..=30, 4..=8).prop_map(|v| bigs(&v)),
            k_seed in 0usize..6,
        ) {
            let n = labels.len();
            let k = 2 + k_seed % (n - 2);
            let class = smallest_flow_up(&labels, k).unwrap();
            let (short_labels, short) =
                contract_first_edge(&labels, class.spline()).unwrap();
            let g = EdgeLabeledGraph::cycle(short_labels.clone()).unwrap();
            prop_assert!(verify(&g, &short).unwrap().is_valid());
            let (back_labels, back) =
                add_leading_zero(&short_labels, &short, &labels[0]).unwrap();
            prop_assert_eq!(back_labels, labels);
            prop_assert_eq!(&back, class.spline());
        }
    }
}
