//! The nilpotent group law on a rational nilpotent Lie algebra.
//!
//! `bch_product` evaluates `log(exp x · exp y)` through the Dynkin form
//! of the Campbell-Baker-Hausdorff series, truncated by nilpotency, so
//! every coefficient is an exact rational. `unipotent_matrix_oracle`
//! provides an independent ground truth: for strictly upper triangular
//! matrices, `exp` and `log` are finite sums and can be computed exactly.

use crate::lie::{AlgebraError, GradedLieAlgebra};
use crate::linalg::RationalMatrix;
use crate::rat::{rat, Rational};
use num_traits::{One, Zero};

/// `log(exp x · exp y)` truncated at the algebra's nilpotency length.
/// Fails with [`AlgebraError::NotNilpotent`] when the descending central
/// series does not reach zero.
pub fn bch_product(
    alg: &GradedLieAlgebra,
    x: &[Rational],
    y: &[Rational],
) -> Result<Vec<Rational>, AlgebraError> {
    let series = alg.descending_central_series();
    let s = series
        .nilpotency_length
        .ok_or(AlgebraError::NotNilpotent(series.stable_term.dim()))?;
    Ok(bch_product_to_degree(alg, x, y, s.max(1)))
}

/// Same series with an explicit truncation degree (the degree at which
/// all iterated brackets vanish, or any bound above it).
pub fn bch_product_to_degree(
    alg: &GradedLieAlgebra,
    x: &[Rational],
    y: &[Rational],
    degree: usize,
) -> Vec<Rational> {
    let n = alg.dim();
    let mut acc = vec![Rational::zero(); n];
    let mut blocks: Vec<(u32, u32)> = Vec::new();
    enumerate_compositions(alg, x, y, degree, &mut blocks, &mut acc);
    acc
}

/// Walks all composition sequences `((p_1,q_1),...,(p_m,q_m))` with
/// `p_i + q_i >= 1` and total degree at most `degree`, accumulating each
/// Dynkin term into `acc`.
fn enumerate_compositions(
    alg: &GradedLieAlgebra,
    x: &[Rational],
    y: &[Rational],
    degree: usize,
    blocks: &mut Vec<(u32, u32)>,
    acc: &mut Vec<Rational>,
) {
    let used: u32 = blocks.iter().map(|(p, q)| p + q).sum();
    if !blocks.is_empty() {
        if let Some(term) = dynkin_term(alg, x, y, blocks) {
            let m = blocks.len() as i64;
            let weight = rat(used as i64);
            let mut denom = weight * rat(m);
            for (p, q) in blocks.iter() {
                denom = denom * rat(factorial(*p)) * rat(factorial(*q));
            }
            let sign = if m % 2 == 1 { rat(1) } else { rat(-1) };
            let coeff = sign / denom;
            for (k, v) in term.iter().enumerate() {
                if !v.is_zero() {
                    acc[k] = &acc[k] + &(&coeff * v);
                }
            }
        }
    }
    if (used as usize) >= degree {
        return;
    }
    let room = degree - used as usize;
    for total in 1..=room {
        for p in 0..=total {
            let q = total - p;
            blocks.push((p as u32, q as u32));
            enumerate_compositions(alg, x, y, degree, blocks, acc);
            blocks.pop();
        }
    }
}

fn factorial(n: u32) -> i64 {
    (1..=n as i64).product::<i64>().max(1)
}

/// The right-nested bracket of the word `x^{p_1} y^{q_1} ... x^{p_m}
/// y^{q_m}`: all letters act by `ad` on the final letter. Degenerate
/// words (ending in a repeated letter) return `None`.
fn dynkin_term(
    alg: &GradedLieAlgebra,
    x: &[Rational],
    y: &[Rational],
    blocks: &[(u32, u32)],
) -> Option<Vec<Rational>> {
    let (last_p, last_q) = *blocks.last().unwrap();
    // the final letter is Y when q_m >= 1 (zero if q_m >= 2), else X
    // (zero if p_m >= 2)
    let mut letters: Vec<bool> = Vec::new(); // true = x, false = y
    for (i, (p, q)) in blocks.iter().enumerate() {
        let is_last = i + 1 == blocks.len();
        let (p, q) = (*p, *q);
        letters.resize(letters.len() + p as usize, true);
        let q_count = if is_last && q >= 1 { q - 1 } else { q };
        if is_last && q == 0 {
            // final letter is x; drop one x from the tail
            letters.pop();
        }
        letters.resize(letters.len() + q_count as usize, false);
    }
    let tail = if last_q >= 1 {
        if last_q >= 2 {
            return None; // ad_y(y) = 0
        }
        y
    } else {
        if last_p >= 2 {
            return None; // ad_x(x) = 0
        }
        x
    };
    let mut v = tail.to_vec();
    for &is_x in letters.iter().rev() {
        let op = if is_x { x } else { y };
        v = alg.bracket_vectors(op, &v);
        if v.iter().all(|c| c.is_zero()) {
            return None;
        }
    }
    Some(v)
}

/// Group inverse in log coordinates.
pub fn bch_inverse(x: &[Rational]) -> Vec<Rational> {
    x.iter().map(|c| -c).collect()
}

/// `log((exp x)^{-1} (exp y)^{-1} (exp x)(exp y))` via repeated products.
pub fn group_commutator(
    alg: &GradedLieAlgebra,
    x: &[Rational],
    y: &[Rational],
) -> Result<Vec<Rational>, AlgebraError> {
    let xi = bch_inverse(x);
    let yi = bch_inverse(y);
    let a = bch_product(alg, &xi, &yi)?;
    let b = bch_product(alg, &a, x)?;
    bch_product(alg, &b, y)
}

/// Iterated group commutator `((x_1, ..., x_m)) = ((x_1, ((x_2, ...))))`.
pub fn iterated_group_commutator(
    alg: &GradedLieAlgebra,
    xs: &[Vec<Rational>],
) -> Result<Vec<Rational>, AlgebraError> {
    assert!(!xs.is_empty());
    let mut acc = xs.last().unwrap().clone();
    for x in xs.iter().rev().skip(1) {
        acc = group_commutator(alg, x, &acc)?;
    }
    Ok(acc)
}

/// Iterated Lie bracket `[x_1, [x_2, ...]]`.
pub fn iterated_bracket(alg: &GradedLieAlgebra, xs: &[Vec<Rational>]) -> Vec<Rational> {
    assert!(!xs.is_empty());
    let mut acc = xs.last().unwrap().clone();
    for x in xs.iter().rev().skip(1) {
        acc = alg.bracket_vectors(x, &acc);
    }
    acc
}

/// In an `s`-nilpotent algebra, the `s`-fold group commutator of
/// exponentials equals the exponential of the `s`-fold bracket; checks
/// that identity on the given tuple (whose length must be the nilpotency
/// length).
pub fn verify_multicom(alg: &GradedLieAlgebra, xs: &[Vec<Rational>]) -> Result<bool, AlgebraError> {
    let lhs = iterated_group_commutator(alg, xs)?;
    let rhs = iterated_bracket(alg, xs);
    Ok(lhs == rhs)
}

/// Exact `exp` of a strictly upper triangular matrix (finite sum).
pub fn unipotent_exp(m: &RationalMatrix) -> RationalMatrix {
    let n = m.rows;
    let mut acc = RationalMatrix::identity(n);
    let mut power = RationalMatrix::identity(n);
    let mut fact = Rational::one();
    for k in 1..n {
        power = power.mul(m);
        fact *= rat(k as i64);
        let inv = fact.clone().recip();
        for i in 0..n {
            for j in 0..n {
                let v = acc.get(i, j) + power.get(i, j) * &inv;
                acc.set(i, j, v);
            }
        }
    }
    acc
}

/// Exact `log` of a unipotent matrix (finite sum).
pub fn unipotent_log(u: &RationalMatrix) -> RationalMatrix {
    let n = u.rows;
    let mut delta = u.clone();
    for i in 0..n {
        let v = delta.get(i, i) - Rational::one();
        delta.set(i, i, v);
    }
    let mut acc = RationalMatrix::zero(n, n);
    let mut power = RationalMatrix::identity(n);
    for k in 1..n {
        power = power.mul(&delta);
        let sign = if k % 2 == 1 {
            Rational::one()
        } else {
            -Rational::one()
        };
        let coeff = sign / rat(k as i64);
        for i in 0..n {
            for j in 0..n {
                let v = acc.get(i, j) + power.get(i, j) * &coeff;
                acc.set(i, j, v);
            }
        }
    }
    acc
}

/// Ground truth for the group law: `log(exp(X) exp(Y))` for strictly
/// upper triangular rational matrices.
pub fn unipotent_matrix_oracle(x: &RationalMatrix, y: &RationalMatrix) -> RationalMatrix {
    assert_eq!(x.rows, x.cols);
    assert_eq!(y.rows, y.cols);
    assert_eq!(x.rows, y.rows);
    debug_assert!(is_strictly_upper(x) && is_strictly_upper(y));
    unipotent_log(&unipotent_exp(x).mul(&unipotent_exp(y)))
}

fn is_strictly_upper(m: &RationalMatrix) -> bool {
    (0..m.rows).all(|i| (0..=i).all(|j| m.get(i, j).is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::rat::ratio;
    use rand::{Rng, SeedableRng};

    fn e(n: usize, i: usize, j: usize) -> RationalMatrix {
        let mut m = RationalMatrix::zero(n, n);
        m.set(i, j, rat(1));
        m
    }

    #[test]
    fn oracle_basics() {
        let z = RationalMatrix::zero(3, 3);
        assert_eq!(unipotent_matrix_oracle(&z, &z), z);
        // n = 3: log(exp E12 exp E23) = E12 + E23 + 1/2 E13
        let out = unipotent_matrix_oracle(&e(3, 0, 1), &e(3, 1, 2));
        assert_eq!(out.get(0, 1), &rat(1));
        assert_eq!(out.get(1, 2), &rat(1));
        assert_eq!(out.get(0, 2), &ratio(1, 2));
        // n = 2: brackets vanish, product is the sum
        let a = e(2, 0, 1);
        let mut b = RationalMatrix::zero(2, 2);
        b.set(0, 1, ratio(5, 3));
        let out = unipotent_matrix_oracle(&a, &b);
        assert_eq!(out.get(0, 1), &ratio(8, 3));
    }

    #[test]
    fn bch_abelian_is_addition() {
        let alg = corpus::sol_lambda(&rat(2));
        let x = vec![rat(3), rat(-1)];
        let y = vec![ratio(1, 2), rat(4)];
        let z = bch_product(&alg, &x, &y).unwrap();
        assert_eq!(z, vec![ratio(7, 2), rat(3)]);
    }

    #[test]
    fn bch_heisenberg_matches_hand_value() {
        let h = corpus::heisenberg();
        let x = h.basis_vector(0);
        let y = h.basis_vector(1);
        let z = bch_product(&h, &x, &y).unwrap();
        assert_eq!(z, vec![rat(1), rat(1), ratio(1, 2)]);
        // inverse law
        let w = bch_product(&h, &z, &bch_inverse(&z)).unwrap();
        assert!(w.iter().all(|c| c.is_zero()));
    }

    #[test]
    fn bch_degree_three_coefficient() {
        // on the filiform algebra the cubic term of the series is visible:
        // e1 * e2 = e1 + e2 + 1/2 e3 + 1/12 e4
        let f = corpus::filiform_4();
        let z = bch_product(&f, &f.basis_vector(0), &f.basis_vector(1)).unwrap();
        assert_eq!(z, vec![rat(1), rat(1), ratio(1, 2), ratio(1, 12)]);
    }

    #[test]
    fn bch_inversion_symmetry() {
        // log(exp x exp y) = -log(exp(-y) exp(-x))
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(61);
        for alg in [corpus::filiform_4(), corpus::abels_2(), corpus::abels_a4()] {
            for _ in 0..10 {
                let x = random_vector(&alg, &mut rng);
                let y = random_vector(&alg, &mut rng);
                let lhs = bch_product(&alg, &x, &y).unwrap();
                let rhs = bch_inverse(
                    &bch_product(&alg, &bch_inverse(&y), &bch_inverse(&x)).unwrap(),
                );
                assert_eq!(lhs, rhs, "{}", alg.name);
            }
        }
    }

    #[test]
    fn group_commutator_heisenberg() {
        let h = corpus::heisenberg();
        let x = h.basis_vector(0);
        let y = h.basis_vector(1);
        let c = group_commutator(&h, &x, &y).unwrap();
        assert_eq!(c, h.basis_vector(2));
        // with itself: identity
        let c = group_commutator(&h, &x, &x).unwrap();
        assert!(c.iter().all(|v| v.is_zero()));
    }

    #[test]
    fn not_nilpotent_is_reported() {
        let g13 = corpus::example_13dim();
        let x = g13.basis_vector(0);
        assert!(matches!(
            bch_product(&g13, &x, &x),
            Err(AlgebraError::NotNilpotent(_))
        ));
    }

    fn random_vector(alg: &GradedLieAlgebra, rng: &mut rand_chacha::ChaCha8Rng) -> Vec<Rational> {
        (0..alg.dim())
            .map(|_| ratio(rng.gen_range(-3..4), rng.gen_range(1..4)))
            .collect()
    }

    #[test]
    fn associativity_on_nilpotent_fixtures() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        for alg in corpus::all_fixtures() {
            if alg.descending_central_series().nilpotency_length.is_none() {
                continue;
            }
            for _ in 0..10 {
                let x = random_vector(&alg, &mut rng);
                let y = random_vector(&alg, &mut rng);
                let z = random_vector(&alg, &mut rng);
                let left = bch_product(&alg, &bch_product(&alg, &x, &y).unwrap(), &z).unwrap();
                let right = bch_product(&alg, &x, &bch_product(&alg, &y, &z).unwrap()).unwrap();
                assert_eq!(left, right, "{}: associativity failed", alg.name);
            }
        }
    }

    #[test]
    fn oracle_agreement_on_matrix_realized_fixtures() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(43);
        for (alg, rho) in corpus::matrix_realizations() {
            // the realization is a homomorphism
            for i in 0..alg.dim() {
                for j in (i + 1)..alg.dim() {
                    let lhs = rho(&alg.bracket_vectors(&alg.basis_vector(i), &alg.basis_vector(j)));
                    let a = rho(&alg.basis_vector(i));
                    let b = rho(&alg.basis_vector(j));
                    let rhs_full = a.mul(&b);
                    let rhs_rev = b.mul(&a);
                    let mut rhs = RationalMatrix::zero(lhs.rows, lhs.cols);
                    for r in 0..lhs.rows {
                        for c in 0..lhs.cols {
                            rhs.set(r, c, rhs_full.get(r, c) - rhs_rev.get(r, c));
                        }
                    }
                    assert_eq!(lhs, rhs, "{}: realization is not a homomorphism", alg.name);
                }
            }
            for _ in 0..10 {
                let x = random_vector(&alg, &mut rng);
                let y = random_vector(&alg, &mut rng);
                let z = bch_product(&alg, &x, &y).unwrap();
                assert_eq!(
                    rho(&z),
                    unipotent_matrix_oracle(&rho(&x), &rho(&y)),
                    "{}: oracle mismatch",
                    alg.name
                );
            }
        }
    }

    #[test]
    fn multicom_examples_and_randomized() {
        let h = corpus::heisenberg();
        let x = h.basis_vector(0);
        let y = h.basis_vector(1);
        assert!(verify_multicom(&h, &[x, y]).unwrap());

        // abelian: commutator and bracket both vanish on any pair
        let ab = corpus::higher_sol();
        let pair = vec![ab.basis_vector(0), ab.basis_vector(2)];
        assert!(iterated_group_commutator(&ab, &pair)
            .unwrap()
            .iter()
            .all(|c| c.is_zero()));
        assert!(verify_multicom(&ab, &pair).unwrap());

        // 3-nilpotent filiform: ((e1, e1, e2)) = exp [e1,[e1,e2]] = exp e4
        let f = corpus::filiform_4();
        let triple = vec![f.basis_vector(0), f.basis_vector(0), f.basis_vector(1)];
        assert_eq!(
            iterated_group_commutator(&f, &triple).unwrap(),
            f.basis_vector(3)
        );
        assert!(verify_multicom(&f, &triple).unwrap());

        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(47);
        for alg in corpus::all_fixtures() {
            let Some(s) = alg.descending_central_series().nilpotency_length else {
                continue;
            };
            for _ in 0..5 {
                let tuple: Vec<Vec<Rational>> = (0..s.max(1))
                    .map(|_| random_vector(&alg, &mut rng))
                    .collect();
                assert!(
                    verify_multicom(&alg, &tuple).unwrap(),
                    "{}: multicom failed",
                    alg.name
                );
            }
        }
    }

    #[test]
    fn commutator_with_power_stays_in_generated_subalgebra() {
        // the log of ((x, y^i)) lies in the subalgebra generated by x, y
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(53);
        for alg in [
            corpus::heisenberg(),
            corpus::filiform_4(),
            corpus::abels_a4(),
        ] {
            for _ in 0..5 {
                let x = random_vector(&alg, &mut rng);
                let y = random_vector(&alg, &mut rng);
                let i = rng.gen_range(-3..4i64);
                let yi: Vec<Rational> = y.iter().map(|c| c * rat(i)).collect();
                let c = group_commutator(&alg, &x, &yi).unwrap();
                let sub = alg.subalgebra_generated(&[x.clone(), y.clone()]);
                assert!(sub.contains(&c), "{}: commutator escaped", alg.name);
            }
        }
    }
}
