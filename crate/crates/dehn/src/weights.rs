//! Exact convex geometry on finite weight sets in `Q^d`.
//!
//! Convex-hull membership of the origin is decided by Fourier-Motzkin
//! elimination on the dual cone `{l : l(a) > 0 for all points a}`, with
//! multiplier tracking so both outcomes come with a checkable
//! certificate: convex coefficients writing 0, or a strictly separating
//! rational functional.

use crate::lie::{GradedLieAlgebra, Weight};
use crate::rat::{rat, Rational};
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WeightError {
    #[error("zero weight passed to quasi-opposite pairing")]
    ZeroWeightPresent,
}

/// Deduplicated weights of an algebra with principal marking and the
/// field components carrying each weight.
#[derive(Clone, Debug)]
pub struct WeightSet {
    pub weights: Vec<Weight>,
    pub principal: Vec<bool>,
    pub multiplicities: Vec<usize>,
    pub field_tags: Vec<Vec<String>>,
    /// Field tags restricted to the principal part of each weight.
    pub principal_field_tags: Vec<Vec<String>>,
}

impl WeightSet {
    pub fn from_algebra(alg: &GradedLieAlgebra) -> Self {
        let support = alg.weight_support();
        let principal_list = alg.principal_weights();
        let mut principal = Vec::new();
        let mut field_tags = Vec::new();
        let mut principal_field_tags = Vec::new();
        let mut multiplicities = Vec::new();
        for w in &support {
            let p = principal_list.iter().find(|p| &p.weight == w);
            principal.push(p.is_some());
            principal_field_tags.push(p.map(|p| p.fields.clone()).unwrap_or_default());
            field_tags.push(alg.fields_of_weight(w));
            multiplicities.push(alg.graded_component(w).len());
        }
        WeightSet {
            weights: support,
            principal,
            multiplicities,
            field_tags,
            principal_field_tags,
        }
    }

    pub fn principal_weights(&self) -> Vec<Weight> {
        self.weights
            .iter()
            .zip(&self.principal)
            .filter(|(_, &p)| p)
            .map(|(w, _)| w.clone())
            .collect()
    }

    pub fn nonzero_weights(&self) -> Vec<Weight> {
        self.weights
            .iter()
            .filter(|w| !w.is_zero())
            .cloned()
            .collect()
    }
}

/// Outcome of the exact membership test `0 in conv(points)`.
#[derive(Clone, Debug)]
pub enum HullCertificate {
    /// Convex coefficients: nonnegative, summing to one, with
    /// `sum_i c_i p_i = 0`.
    Inside(Vec<Rational>),
    /// Functional `l` with `l(p) > 0` for every point.
    Separated(Vec<Rational>),
}

impl HullCertificate {
    pub fn zero_in_hull(&self) -> bool {
        matches!(self, HullCertificate::Inside(_))
    }
}

/// Decides whether the origin lies in the convex hull of `points`.
pub fn zero_in_convex_hull(points: &[Weight]) -> HullCertificate {
    let dim = points.first().map(|p| p.dim()).unwrap_or(0);
    if points.is_empty() {
        return HullCertificate::Separated(vec![Rational::zero(); dim]);
    }
    // a zero point is its own convex certificate
    if let Some(i) = points.iter().position(|p| p.is_zero()) {
        let mut coeffs = vec![Rational::zero(); points.len()];
        coeffs[i] = rat(1);
        return HullCertificate::Inside(coeffs);
    }
    // Fourier-Motzkin on { l in Q^dim : <p_i, l> > 0 }
    // each inequality carries its multiplier vector over the original rows
    struct Ineq {
        coeffs: Vec<Rational>,
        mult: Vec<Rational>,
    }
    let n = points.len();
    let mut system: Vec<Ineq> = points
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let mut mult = vec![Rational::zero(); n];
            mult[i] = rat(1);
            Ineq {
                coeffs: p.0.clone(),
                mult,
            }
        })
        .collect();
    let mut eliminated: Vec<Vec<Ineq>> = Vec::new();
    for var in 0..dim {
        // check for an all-zero contradiction before eliminating
        if let Some(bad) = system
            .iter()
            .find(|q| q.coeffs[var..].iter().all(|c| c.is_zero()))
        {
            return inside_from_multipliers(points, &bad.mult);
        }
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        let mut zero = Vec::new();
        for q in system {
            if q.coeffs[var].is_zero() {
                zero.push(q);
            } else if q.coeffs[var] > Rational::zero() {
                pos.push(q);
            } else {
                neg.push(q);
            }
        }
        let mut next: Vec<Ineq> = Vec::new();
        for p in &pos {
            for ng in &neg {
                let a = p.coeffs[var].clone();
                let b = ng.coeffs[var].clone(); // negative
                                                // (-b) * p + a * ng eliminates the variable, both scales > 0
                let coeffs: Vec<Rational> = p
                    .coeffs
                    .iter()
                    .zip(&ng.coeffs)
                    .map(|(pc, nc)| -&b * pc + &a * nc)
                    .collect();
                let mult: Vec<Rational> = p
                    .mult
                    .iter()
                    .zip(&ng.mult)
                    .map(|(pm, nm)| -&b * pm + &a * nm)
                    .collect();
                if coeffs.iter().all(|c| c.is_zero()) {
                    return inside_from_multipliers(points, &mult);
                }
                next.push(Ineq { coeffs, mult });
            }
        }
        next.extend(zero);
        eliminated.push(pos.into_iter().chain(neg).collect::<Vec<_>>());
        system = next;
    }
    // all variables eliminated; any surviving inequality is 0 > 0
    if let Some(bad) = system.into_iter().next() {
        return inside_from_multipliers(points, &bad.mult);
    }
    // feasible: back-substitute a rational point of the open cone
    let mut l = vec![Rational::zero(); dim];
    for var in (0..dim).rev() {
        let mut lower: Option<Rational> = None;
        let mut upper: Option<Rational> = None;
        for q in &eliminated[var] {
            // sum_{j >= var} c_j l_j > 0 with l_{var+1..} known
            let rest: Rational = q.coeffs[var + 1..]
                .iter()
                .zip(&l[var + 1..])
                .map(|(c, x)| c * x)
                .fold(Rational::zero(), |a, b| a + b);
            let c = &q.coeffs[var];
            let bound = -rest / c;
            if c > &Rational::zero() {
                lower = Some(match lower {
                    None => bound,
                    Some(lo) if bound > lo => bound,
                    Some(lo) => lo,
                });
            } else {
                upper = Some(match upper {
                    None => bound,
                    Some(hi) if bound < hi => bound,
                    Some(hi) => hi,
                });
            }
        }
        l[var] = match (lower, upper) {
            (None, None) => Rational::zero(),
            (Some(lo), None) => lo + rat(1),
            (None, Some(hi)) => hi - rat(1),
            (Some(lo), Some(hi)) => (lo + hi) / rat(2),
        };
    }
    debug_assert!(points.iter().all(|p| dot(&p.0, &l) > Rational::zero()));
    HullCertificate::Separated(l)
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .map(|(x, y)| x * y)
        .fold(Rational::zero(), |s, t| s + t)
}

fn inside_from_multipliers(points: &[Weight], mult: &[Rational]) -> HullCertificate {
    let total: Rational = mult.iter().fold(Rational::zero(), |a, b| a + b);
    debug_assert!(total > Rational::zero());
    let coeffs: Vec<Rational> = mult.iter().map(|m| m / &total).collect();
    debug_assert!({
        let dim = points[0].dim();
        let mut s = vec![Rational::zero(); dim];
        for (c, p) in coeffs.iter().zip(points) {
            for (k, x) in p.0.iter().enumerate() {
                s[k] = &s[k] + &(c * x);
            }
        }
        s.iter().all(|c| c.is_zero())
    });
    HullCertificate::Inside(coeffs)
}

/// All unordered pairs `{a, b}` with `b = -t a` for some `t > 0`.
/// Errors when a zero weight is present.
pub fn quasi_opposite_pairs(points: &[Weight]) -> Result<Vec<(Weight, Weight)>, WeightError> {
    if points.iter().any(|p| p.is_zero()) {
        return Err(WeightError::ZeroWeightPresent);
    }
    let mut out = Vec::new();
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            if is_quasi_opposite(&points[i], &points[j]) {
                out.push((points[i].clone(), points[j].clone()));
            }
        }
    }
    Ok(out)
}

/// `b = -t a`, `t > 0`: collinear with strictly negative ratio.
fn is_quasi_opposite(a: &Weight, b: &Weight) -> bool {
    debug_assert_eq!(a.dim(), b.dim());
    // collinearity: all 2x2 minors vanish
    for i in 0..a.dim() {
        for j in (i + 1)..a.dim() {
            if (&a.0[i] * &b.0[j] - &a.0[j] * &b.0[i]) != Rational::zero() {
                return false;
            }
        }
    }
    // opposite direction: negative ratio on a common support coordinate
    dot(&a.0, &b.0) < Rational::zero()
}

/// The tameness hierarchy and SOL obstruction flags of a weight set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct TamenessFlags {
    pub tame: bool,
    pub two_tame: bool,
    pub stably_two_tame: bool,
    pub sol_obstruction: bool,
    pub non_archimedean_sol_obstruction: bool,
}

/// Computes the flags for a weight set extracted from a validated
/// algebra. Zero weights are excluded before any pairing test.
pub fn tameness_flags(ws: &WeightSet, non_archimedean_fields: &[String]) -> TamenessFlags {
    let tame = !zero_in_convex_hull(&ws.weights).zero_in_hull();
    let principal: Vec<Weight> = ws
        .principal_weights()
        .into_iter()
        .filter(|w| !w.is_zero())
        .collect();
    let two_tame = quasi_opposite_pairs(&principal)
        .expect("zero weights removed")
        .is_empty();
    let stably_two_tame = quasi_opposite_pairs(&ws.nonzero_weights())
        .expect("zero weights removed")
        .is_empty();
    // restrict to principal weights carried by non-archimedean components
    let na_principal: Vec<Weight> = ws
        .weights
        .iter()
        .zip(&ws.principal)
        .zip(&ws.principal_field_tags)
        .filter(|((w, &p), tags)| {
            p && !w.is_zero() && tags.iter().any(|t| non_archimedean_fields.contains(t))
        })
        .map(|((w, _), _)| w.clone())
        .collect();
    let non_archimedean_sol_obstruction = !quasi_opposite_pairs(&na_principal)
        .expect("zero weights removed")
        .is_empty();
    TamenessFlags {
        tame,
        two_tame,
        stably_two_tame,
        sol_obstruction: !two_tame,
        non_archimedean_sol_obstruction,
    }
}

/// When the set is tame, a rational functional positive on every weight.
pub fn compacting_functional(ws: &WeightSet) -> Option<Vec<Rational>> {
    match zero_in_convex_hull(&ws.weights) {
        HullCertificate::Separated(l) => Some(l),
        HullCertificate::Inside(_) => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::ratio;
    use rand::{Rng, SeedableRng};

    fn w(coords: &[i64]) -> Weight {
        Weight(coords.iter().map(|&c| rat(c)).collect())
    }

    fn verify_certificate(points: &[Weight], cert: &HullCertificate) {
        match cert {
            HullCertificate::Inside(coeffs) => {
                assert_eq!(coeffs.len(), points.len());
                assert!(coeffs.iter().all(|c| c >= &Rational::zero()));
                let total: Rational = coeffs.iter().fold(Rational::zero(), |a, b| a + b);
                assert_eq!(total, rat(1));
                let dim = points[0].dim();
                for k in 0..dim {
                    let s: Rational = coeffs
                        .iter()
                        .zip(points)
                        .map(|(c, p)| c * &p.0[k])
                        .fold(Rational::zero(), |a, b| a + b);
                    assert!(s.is_zero());
                }
            }
            HullCertificate::Separated(l) => {
                for p in points {
                    assert!(dot(&p.0, l) > Rational::zero(), "l not separating");
                }
            }
        }
    }

    #[test]
    fn hull_triangle_around_origin() {
        let pts = vec![w(&[1, 0]), w(&[0, 1]), w(&[-1, -1])];
        let cert = zero_in_convex_hull(&pts);
        assert!(cert.zero_in_hull());
        if let HullCertificate::Inside(c) = &cert {
            assert_eq!(c, &vec![ratio(1, 3), ratio(1, 3), ratio(1, 3)]);
        }
        verify_certificate(&pts, &cert);
    }

    #[test]
    fn hull_one_dimensional_cases() {
        let pts = vec![w(&[1]), w(&[2])];
        let cert = zero_in_convex_hull(&pts);
        assert!(!cert.zero_in_hull());
        verify_certificate(&pts, &cert);

        let pts = vec![w(&[1]), w(&[-1])];
        let cert = zero_in_convex_hull(&pts);
        assert!(cert.zero_in_hull());
        if let HullCertificate::Inside(c) = &cert {
            assert_eq!(c, &vec![ratio(1, 2), ratio(1, 2)]);
        }
        verify_certificate(&pts, &cert);
    }

    #[test]
    fn hull_duality_on_random_sets() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let dim = rng.gen_range(1..4);
            let n = rng.gen_range(1..7);
            let pts: Vec<Weight> = (0..n)
                .map(|_| {
                    Weight(
                        (0..dim)
                            .map(|_| ratio(rng.gen_range(-3..4), rng.gen_range(1..3)))
                            .collect(),
                    )
                })
                .collect();
            let cert = zero_in_convex_hull(&pts);
            verify_certificate(&pts, &cert);
        }
    }

    #[test]
    fn quasi_opposite_examples() {
        // SOL weights (1), (-lambda)
        let pairs = quasi_opposite_pairs(&[w(&[1]), Weight(vec![ratio(-3, 2)])]).unwrap();
        assert_eq!(pairs.len(), 1);
        // higher SOL triangle: every pair is non-collinear
        let pairs = quasi_opposite_pairs(&[w(&[1, 0]), w(&[0, 1]), w(&[-1, -1])]).unwrap();
        assert!(pairs.is_empty());
        // Abels A4 nonzero weights
        let a4 = vec![
            w(&[-1, 0]),
            w(&[0, -1]),
            w(&[1, -1]),
            w(&[1, 0]),
            w(&[0, 1]),
        ];
        let pairs = quasi_opposite_pairs(&a4).unwrap();
        assert_eq!(pairs.len(), 2);
        assert!(pairs.contains(&(w(&[-1, 0]), w(&[1, 0]))));
        assert!(pairs.contains(&(w(&[0, -1]), w(&[0, 1]))));
        // zero weight is rejected
        assert_eq!(
            quasi_opposite_pairs(&[w(&[0]), w(&[1])]),
            Err(WeightError::ZeroWeightPresent)
        );
    }

    #[test]
    fn flags_on_fixtures() {
        use crate::corpus;
        let sol = corpus::sol_real_padic(2);
        let ws = WeightSet::from_algebra(&sol);
        let na: Vec<String> = vec!["Q2".into()];
        let f = tameness_flags(&ws, &na);
        assert!(f.sol_obstruction);
        assert!(!f.non_archimedean_sol_obstruction);

        let hs = corpus::higher_sol();
        let f = tameness_flags(&WeightSet::from_algebra(&hs), &[]);
        assert!(!f.tame);
        assert!(f.stably_two_tame);

        let a4 = corpus::abels_a4();
        let f = tameness_flags(&WeightSet::from_algebra(&a4), &[]);
        assert!(f.two_tame);
        assert!(!f.stably_two_tame);
        assert!(!f.sol_obstruction);
    }

    #[test]
    fn hierarchy_and_monotonicity() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..100 {
            let dim = rng.gen_range(1..3);
            let n = rng.gen_range(1..6);
            let mut weights: Vec<Weight> = (0..n)
                .map(|_| Weight((0..dim).map(|_| rat(rng.gen_range(-2..3))).collect()))
                .collect();
            weights.sort();
            weights.dedup();
            let ws = WeightSet {
                principal: vec![true; weights.len()],
                multiplicities: vec![1; weights.len()],
                field_tags: vec![vec!["K".into()]; weights.len()],
                principal_field_tags: vec![vec!["K".into()]; weights.len()],
                weights: weights.clone(),
            };
            let f = tameness_flags(&ws, &[]);
            if f.tame {
                assert!(f.stably_two_tame);
            }
            if f.stably_two_tame {
                assert!(f.two_tame);
            }
            if dim == 1 {
                // in a 1-dimensional weight space the notions coincide
                // (up to the zero weight, which kills tameness only)
                if !weights.iter().any(|w| w.is_zero()) {
                    assert_eq!(f.tame, f.two_tame);
                }
            }
            // adding weights can only destroy tameness
            let mut bigger = weights.clone();
            let extra = Weight((0..dim).map(|_| rat(rng.gen_range(-2..3))).collect());
            if !bigger.contains(&extra) {
                bigger.push(extra);
                bigger.sort();
            }
            let ws2 = WeightSet {
                principal: vec![true; bigger.len()],
                multiplicities: vec![1; bigger.len()],
                field_tags: vec![vec!["K".into()]; bigger.len()],
                principal_field_tags: vec![vec!["K".into()]; bigger.len()],
                weights: bigger,
            };
            let f2 = tameness_flags(&ws2, &[]);
            if !f.tame {
                assert!(!f2.tame);
            }
            if !f.stably_two_tame {
                assert!(!f2.stably_two_tame);
            }
        }
    }

    #[test]
    fn compacting_functional_examples() {
        let ws = WeightSet {
            weights: vec![w(&[1]), w(&[2])],
            principal: vec![true, true],
            multiplicities: vec![1, 1],
            field_tags: vec![vec!["R".into()], vec!["R".into()]],
            principal_field_tags: vec![vec!["R".into()], vec!["R".into()]],
        };
        let l = compacting_functional(&ws).unwrap();
        assert!(dot(&w(&[1]).0, &l) > Rational::zero());

        let hs = WeightSet {
            weights: vec![w(&[1, 0]), w(&[0, 1]), w(&[-1, -1])],
            principal: vec![true; 3],
            multiplicities: vec![1; 3],
            field_tags: vec![vec!["R".into()]; 3],
            principal_field_tags: vec![vec!["R".into()]; 3],
        };
        assert!(compacting_functional(&hs).is_none());

        let ws = WeightSet {
            weights: vec![w(&[1, 0]), w(&[1, 1])],
            principal: vec![true, true],
            multiplicities: vec![1, 1],
            field_tags: vec![vec!["R".into()]; 2],
            principal_field_tags: vec![vec!["R".into()]; 2],
        };
        let l = compacting_functional(&ws).unwrap();
        for p in &ws.weights {
            assert!(dot(&p.0, &l) > Rational::zero());
        }
    }
}
